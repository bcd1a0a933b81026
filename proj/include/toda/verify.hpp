#pragma once

// Verification suites behind both the acceptance test binary and the CLI
// `verify` subcommand.  Suites:
//
//   counts      level counts of the dominant cone
//   univariate  n=1 reductions against the 1F1 / Bessel-K oracles
//   pde         eigenvalue residuals, coefficient growth, W-invariance,
//               plane-wave asymptotics
//   dde         dual difference equations and the l=1 sum rule
//   residues    residue probes along 2xi_1 = m and xi_1+xi_2 = m
//               (extended precision)
//   confluence  strong-coupling limits of series, c-function, coefficients

#include <string>
#include <vector>

#include "toda/report.hpp"

namespace toda {

struct VerifyConfig {
    unsigned long long seed = 7;
    double eta = 1e-9;
    int n = 0;  // 0 = suite defaults; otherwise restricts randomized suites to this n
};

std::vector<CheckRecord> verify_counts(const VerifyConfig& cfg);
std::vector<CheckRecord> verify_univariate(const VerifyConfig& cfg);
std::vector<CheckRecord> verify_pde(const VerifyConfig& cfg);
std::vector<CheckRecord> verify_dde(const VerifyConfig& cfg);
std::vector<CheckRecord> verify_residues(const VerifyConfig& cfg);
std::vector<CheckRecord> verify_confluence(const VerifyConfig& cfg);

// suite in {counts, univariate, pde, dde, residues, confluence, all}
std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyConfig& cfg);
const std::vector<std::string>& suite_names();

}  // namespace toda
