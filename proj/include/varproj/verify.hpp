#pragma once

// Property suites behind `varproj verify`, also reused by the acceptance
// binary. Every suite is a deterministic function of its seed.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "varproj/oracle.hpp"
#include "varproj/vectors.hpp"

namespace varproj {

struct CaseResult {
  std::string id;
  /// Groups the cases drawn from one random instance.
  std::string instance;
  bool passed = true;
  bool inconclusive = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;  // sorted by id

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  std::size_t inconclusive() const;
  bool ok() const { return failed() == 0; }
};

/// decomp, ball-deriv, ball-coderiv, cone-rn, cone-l2, oracle-consistency, all
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

/// Relative residuals of the five decomposition identities for u, v
/// relative to xbar: inner product split, orthogonality, Pythagoras for
/// a(u)xbar + o(v), Pythagoras for u, and for u + v.
std::array<double, 5> decomposition_residuals(const DenseVector& xbar, const DenseVector& u,
                                              const DenseVector& v);

/// Oracle agreement for coderivative descriptors. Each random instance
/// contributes a shape case (the descriptor has the expected variant) and
/// one case per candidate z on which the descriptor gives a definite answer.
/// A case fails when the oracle returns the opposite definite verdict.
std::vector<CaseResult> ball_coderiv_cases(std::uint64_t seed, std::size_t per_family,
                                           const ProbeConfig& config);
std::vector<CaseResult> cone_coderiv_cases(std::uint64_t seed, std::size_t per_family,
                                           const ProbeConfig& config);
std::vector<CaseResult> l2_coderiv_cases(std::uint64_t seed, std::size_t per_family,
                                         const ProbeConfig& config);

}  // namespace varproj
