#ifndef STARLAB_SUITES_HPP
#define STARLAB_SUITES_HPP

#include "starlab/report.hpp"

namespace starlab {

// Tunables for a verification suite run; unset fields take the suite's
// documented defaults (the acceptance-scale parameters).
struct SuiteParams {
    int n_max = -1;
    std::uint64_t seed = 1;
    int trials = -1;
};

SuiteReport run_ekr_suite(int n_max);
SuiteReport run_fjt_suite(int n_max);
SuiteReport run_eq1_suite(int n_max);
SuiteReport run_lemma6_suite(std::uint64_t seed, int trials);
SuiteReport run_gamma_suite(std::uint64_t seed, int trials);
SuiteReport run_thm2_suite(std::uint64_t seed, int sampled_trials);

// Dispatch by suite name with defaulted parameters.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

// suite name -> the module invariant it exercises (for `verify --list`).
std::vector<std::pair<std::string, std::string>> suite_catalog();

} // namespace starlab

#endif
