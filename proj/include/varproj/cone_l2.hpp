#pragma once

// Metric projection onto the nonnegative cone of l2, restricted to
// finite-support data, and its coderivative on Z_M.

#include "varproj/descriptor.hpp"
#include "varproj/support_set.hpp"
#include "varproj/vectors.hpp"

namespace varproj {

/// Componentwise positive part.
SparseVector l2_project(const SparseVector& x);

/// B(x; w): w kept where x_i > 0.
SparseVector B_map(const SparseVector& x, const SparseVector& w);

/// Coderivative descriptor at xbar in Z_M:
///   y = 0            -> {0} (for any xbar)
///   y in K_Mbar      -> order interval {z in K_Mbar : z <=_Mbar y}
///   otherwise        -> partial rule excluding z = y
/// Throws std::invalid_argument if y != 0 and xbar is not in Z_M.
CoderivDescriptor<SparseVector> l2_coderiv(const SparseVector& xbar, const SupportSet& m,
                                           const SparseVector& y);

/// Unique member of the coderivative for y supported in M.
/// Throws std::invalid_argument if xbar is not in Z_M or supp(y) is not in M.
SparseVector l2_coderiv_restricted_identity(const SparseVector& xbar, const SupportSet& m,
                                            const SparseVector& y);

}  // namespace varproj
