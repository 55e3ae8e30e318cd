// berndt-forge: compute, verify, and tabulate the hyperbolic-series /
// Berndt-integral / Barnes-zeta identity family at arbitrary precision.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 table construction failure, 4 internal error, 5 I/O failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "berndt/barnes.hpp"
#include "berndt/closedform.hpp"
#include "berndt/elliptic.hpp"
#include "berndt/errors.hpp"
#include "berndt/hyperseries.hpp"
#include "berndt/jacobi.hpp"
#include "berndt/quadrature.hpp"
#include "berndt/verify.hpp"

namespace {

using namespace berndt;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitInternal = 4;
constexpr int kExitIo = 5;

struct GlobalOpts {
    long prec_bits = 256;
    std::string format = "text";
    unsigned long long seed = 0;
    long tolerance_digits = 40;
    bool timings = false;
};

int write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content << std::endl;
        return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return kExitIo;
    }
    out << content;
    if (!out.good()) {
        std::cerr << "write to " << path << " failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_coeffs(const GlobalOpts& g, const std::string& family, long max_index) {
    jacobi::CoefficientTable table;
    std::string rname;
    if (family == "S") table = jacobi::table_S(max_index);
    else if (family == "A") table = jacobi::table_A(max_index);
    else if (family == "P") table = jacobi::table_P(max_index);
    else if (family == "Q") table = jacobi::table_Q(max_index);
    else if (family == "R") {
        table.family = jacobi::Family::R;
        table.max_index = max_index - 1;
        table.entries.emplace(max_index - 1, jacobi::table_R(max_index));
        rname = "R_" + std::to_string(max_index - 1) + "(1-x)";
    } else {
        std::cerr << "unknown family '" << family << "' (expected S, A, P, Q, or R)\n";
        return kExitUsage;
    }
    if (g.format == "json") {
        std::cout << jacobi::table_to_json(table) << "\n";
    } else if (g.format == "latex") {
        for (const auto& [idx, poly] : table.entries)
            std::cout << family << "_{" << idx << "}(x) &= " << poly.to_string() << " \\\\\n";
    } else {
        for (const auto& [idx, poly] : table.entries) {
            std::string name = rname.empty() ? family + "_" + std::to_string(idx) : rname;
            std::cout << name << " = " << poly.to_string() << "\n";
        }
    }
    return kExitOk;
}

int cmd_series(const GlobalOpts& g, const std::string& family, long p, long m,
               const std::string& y_str) {
    hyper::SeriesFamily fam;
    if (!hyper::parse_series_family(family, fam)) {
        std::cerr << "unknown series family '" << family << "'\n";
        return kExitUsage;
    }
    BigReal y = y_str == "pi" ? BigReal::pi(g.prec_bits)
                              : BigReal::from_string(y_str, g.prec_bits);
    BigReal v = hyper::eval_series({fam, p, m, y}, g.prec_bits);
    if (g.format == "json")
        std::cout << "{\"family\": \"" << family << "\", \"p\": " << p << ", \"m\": " << m
                  << ", \"y\": \"" << y_str << "\", \"value\": \"" << v.to_string(50) << "\"}\n";
    else
        std::cout << v.to_string(50) << "\n";
    return kExitOk;
}

int cmd_closed_form(const GlobalOpts& g, const std::string& which, long m) {
    cf::ClosedForm form;
    if (which == "G2") form = cf::closed_form_at_pi(cf::SeriesClosedForm::G2, m);
    else if (which == "Gprime2") form = cf::closed_form_at_pi(cf::SeriesClosedForm::Gprime2, m);
    else if (which == "Gbar1") form = cf::closed_form_at_pi(cf::SeriesClosedForm::Gbar1, m);
    else if (which == "cosh3") form = cf::closed_form_cosh3(m);
    else if (which == "berndt") form = cf::berndt_closed_form(m);
    else if (which == "zeta4") form = barnes::zeta4_closed_form(m);
    else {
        std::cerr << "unknown closed form '" << which
                  << "' (expected G2, Gprime2, Gbar1, cosh3, berndt, or zeta4)\n";
        return kExitUsage;
    }
    if (g.format == "json") std::cout << form.to_json() << "\n";
    else if (g.format == "latex") std::cout << form.to_latex() << "\n";
    else {
        std::cout << form.to_latex() << "\n= " << form.eval(g.prec_bits).to_string(50) << "\n";
    }
    return kExitOk;
}

int cmd_integral(const GlobalOpts& g, long p, bool check) {
    BigReal q = quad::integrate_real(quad::IntegrandSpec::berndt(p), g.prec_bits);
    std::cout << q.to_string(50) << "\n";
    if (check) {
        if (p % 4 != 3) {
            std::cerr << "--check requires p = 3 (mod 4)\n";
            return kExitUsage;
        }
        long m = (p + 1) / 4;
        BigReal c = cf::berndt_closed_form(m).eval(g.prec_bits);
        BigReal rel = abs(q - c) / abs(c);
        std::cout << "closed form  " << c.to_string(50) << "\n"
                  << "rel residual " << rel.to_string(8) << "\n";
        BigReal tol = pow_si(BigReal(10, 64), -g.tolerance_digits);
        if (!(rel < tol)) return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, const std::string& out_path) {
    verify::Options opt;
    opt.prec_bits = g.prec_bits;
    opt.seed = g.seed;
    opt.tolerance_digits = g.tolerance_digits;
    verify::VerificationReport rep = verify::run_suite(suite, opt);
    std::string payload = g.format == "text" ? rep.to_text() : rep.to_json(g.timings);
    int rc = write_out(out_path, payload);
    if (rc != kExitOk) return rc;
    return rep.all_pass() ? kExitOk : kExitVerifyFail;
}

int cmd_barnes(const GlobalOpts& g, long s, const std::string& route) {
    auto spec = barnes::c4_sigma4_spec(s, g.prec_bits);
    auto print = [&](const char* label, const BigComplex& v) {
        std::cout << label << " " << v.real().to_string(50);
        if (!v.imag().is_zero()) std::cout << " + i*" << v.imag().to_string(8);
        std::cout << "\n";
    };
    if (route == "integral" || route == "both")
        print("integral:", barnes::barnes_integral(spec, g.prec_bits));
    if (route == "lattice" || route == "both") {
        mpfr_prec_t lp = std::min<mpfr_prec_t>(g.prec_bits, 96);
        print("lattice: ", barnes::barnes_lattice(barnes::c4_sigma4_spec(s, lp), lp));
    }
    if (s % 4 == 0 && s >= 4) {
        long m = s / 4;
        std::cout << "closed:   " << barnes::zeta4_closed_form(m).eval(g.prec_bits).to_string(50)
                  << "\n";
    }
    return kExitOk;
}

int cmd_report(const GlobalOpts& g, const std::string& out_path) {
    std::string doc = g.format == "latex" ? verify::report_document_latex(g.prec_bits)
                                          : verify::report_document_json(g.prec_bits);
    return write_out(out_path, doc);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"berndt-forge: hyperbolic-series and Berndt-integral identity toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--prec-bits", g.prec_bits, "working precision in bits")->capture_default_str();
    app.add_option("--format", g.format, "output format: text, json, latex")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized sweeps")->capture_default_str();
    app.add_option("--tolerance-digits", g.tolerance_digits, "pass tolerance, decimal digits")
        ->capture_default_str();
    app.add_flag("--timings", g.timings, "include wall times in reports (breaks byte-stability)");

    std::string coeffs_family;
    long coeffs_max = 0;
    auto* coeffs = app.add_subcommand("coeffs", "print a Maclaurin coefficient table");
    coeffs->add_option("family", coeffs_family, "S, A, P, Q, or R")->required();
    coeffs->add_option("max_index", coeffs_max, "largest index (for R: the odd order p)")
        ->required();

    std::string series_family, series_y;
    long series_p = 3, series_m = 1;
    auto* series = app.add_subcommand("series", "evaluate a hyperbolic series");
    series->add_option("family", series_family, "G, Gprime, Gbar, X, Xprime, DXprime, Y, DY, B, DB")
        ->required();
    series->add_option("p", series_p)->required();
    series->add_option("m", series_m)->required();
    series->add_option("y", series_y, "evaluation point (number or 'pi')")->required();

    std::string cfw;
    long cfm = 1;
    auto* closed = app.add_subcommand("closed-form", "print an exact closed form");
    closed->add_option("which", cfw, "G2, Gprime2, Gbar1, cosh3, berndt, zeta4")->required();
    closed->add_option("m", cfm)->required();

    long int_p = 3;
    bool int_check = false;
    auto* integral = app.add_subcommand("integral", "evaluate the Berndt integral of order p");
    integral->add_option("p", int_p)->required();
    integral->add_flag("--check", int_check, "compare against the closed form (p = 3 mod 4)");

    std::string verify_suite, verify_out;
    auto* ver = app.add_subcommand("verify", "run an identity verification suite");
    ver->add_option("suite", verify_suite,
                    "residues, transforms, elliptic, closedforms, integrals, barnes, all")
        ->required();
    ver->add_option("--out", verify_out, "write the report to a file");

    long barnes_s = 8;
    std::string barnes_route = "integral";
    auto* brn = app.add_subcommand("barnes", "evaluate zeta_4(s, 3 | c4; sigma4)");
    brn->add_option("s", barnes_s)->required();
    brn->add_option("--route", barnes_route, "integral, lattice, both")
        ->check(CLI::IsMember({"integral", "lattice", "both"}));

    std::string report_out;
    auto* rep = app.add_subcommand("report", "emit the example-reproduction document");
    rep->add_option("--out", report_out, "write the document to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*coeffs) return cmd_coeffs(g, coeffs_family, coeffs_max);
        if (*series) return cmd_series(g, series_family, series_p, series_m, series_y);
        if (*closed) return cmd_closed_form(g, cfw, cfm);
        if (*integral) return cmd_integral(g, int_p, int_check);
        if (*ver) return cmd_verify(g, verify_suite, verify_out);
        if (*brn) return cmd_barnes(g, barnes_s, barnes_route);
        if (*rep) return cmd_report(g, report_out);
        return kExitUsage;
    } catch (const CalibrationFailure& e) {
        std::cerr << "table construction failed: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const IntegralityViolation& e) {
        std::cerr << "table construction failed: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const NonPolynomialResult& e) {
        std::cerr << "table construction failed: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
