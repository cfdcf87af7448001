#ifndef WITTFORGE_VERIFY_HPP
#define WITTFORGE_VERIFY_HPP

#include <string>
#include <vector>

#include "wittforge/symfunc.hpp"

namespace wittforge {

struct VerificationReport {
    std::string name;
    bool pass = false;
    std::vector<std::string> details;  // expected-vs-computed lines, witnesses
    double ms = 0;
};

struct VerifyOptions {
    bool slow = false;      // enables the degree-25 case of dp-iterates
    int max_degree = 0;     // 0 = per-check default; smaller than required fails
    unsigned seed = 24133;  // for the randomized law checks
};

VerificationReport verify_theta_table(const VerifyOptions& opts = {});
VerificationReport verify_generating_identity(const VerifyOptions& opts = {});
VerificationReport verify_non_models(const VerifyOptions& opts = {});
VerificationReport verify_schur_shadow(const VerifyOptions& opts = {});
VerificationReport verify_reutenauer(const VerifyOptions& opts = {});
VerificationReport verify_dp_iterates(const VerifyOptions& opts = {});
VerificationReport verify_drs(const VerifyOptions& opts = {});
VerificationReport verify_effectivity_lists(const VerifyOptions& opts = {});
VerificationReport verify_kschur_counterexample(const VerifyOptions& opts = {});
VerificationReport verify_intro_ring_laws(const VerifyOptions& opts = {});

// All registered check names, in report order.
std::vector<std::string> verify_check_names();
// Runs the named checks (all of them when names is empty), ordered by name.
std::vector<VerificationReport> run_paper_suite(std::vector<std::string> names,
                                                const VerifyOptions& opts = {});

// Persistent cache: characters and monomial transition rows, JSON, versioned.
// Loading a missing or unreadable file is a no-op returning false.
bool cache_load_file(const std::string& path);
bool cache_save_file(const std::string& path);

}  // namespace wittforge

#endif
