#ifndef BERNDT_VERIFY_HPP
#define BERNDT_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

namespace berndt::verify {

struct ReportItem {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs;
    std::string rhs;
    std::string abs_residual;
    std::string rel_residual;
    std::string status;  // "pass" | "fail" | "skipped"
};

struct VerificationReport {
    std::string suite;
    long precision_bits = 256;
    long tolerance_digits = 40;
    unsigned long long seed = 0;
    long wall_time_ms = 0;
    std::vector<ReportItem> items;

    bool all_pass() const;
    // schema "berndt-forge/1"; every number emitted as a decimal string.
    // wall_time_ms is zeroed unless with_timings, keeping reports byte-stable.
    std::string to_json(bool with_timings = false) const;
    std::string to_text() const;
};

struct Options {
    mpfr_prec_t prec_bits = 256;
    unsigned long long seed = 0;
    long tolerance_digits = 40;
};

// suite: residues | transforms | elliptic | closedforms | integrals | barnes | all
VerificationReport run_suite(const std::string& suite, const Options& opt);
bool is_known_suite(const std::string& suite);

// The example-reproduction document: every example identity with its computed
// closed form, a 50-digit value, and verification status; includes the
// Gamma^11/Gamma^12 print-discrepancy resolution and the Barnes factor-4 note.
std::string report_document_json(mpfr_prec_t prec_bits);
std::string report_document_latex(mpfr_prec_t prec_bits);

} // namespace berndt::verify

#endif
