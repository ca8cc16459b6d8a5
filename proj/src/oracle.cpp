#include "varproj/oracle.hpp"

#include <set>

namespace varproj {

void ProbeConfig::validate() const {
  if (radii.empty()) throw std::invalid_argument("probe config needs at least one radius");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0)) throw std::invalid_argument("probe radii must be positive");
    if (k > 0 && !(radii[k] < radii[k - 1])) {
      throw std::invalid_argument("probe radii must be strictly decreasing");
    }
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (random_directions == 0 && !structured_probes) {
    throw std::invalid_argument("probe config generates no directions");
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Member:
      return "member";
    case Verdict::NonMember:
      return "non_member";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict classify_estimates(const std::vector<RadiusEstimate>& estimates, double tolerance) {
  if (estimates.empty()) return Verdict::Inconclusive;
  const double last = estimates.back().sup;
  if (last <= tolerance) {
    for (std::size_t k = 1; k < estimates.size(); ++k) {
      if (estimates[k].sup > estimates[k - 1].sup + tolerance) return Verdict::Inconclusive;
    }
    return Verdict::Member;
  }
  if (estimates.size() > 1 && last < 0.5 * estimates[estimates.size() - 2].sup) {
    return Verdict::Inconclusive;
  }
  return Verdict::NonMember;
}

std::vector<std::pair<std::size_t, DenseVector>> probe_basis(const DenseVector& xbar,
                                                             const DenseVector& y,
                                                             const DenseVector& z) {
  if (y.size() != xbar.size() || z.size() != xbar.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  std::vector<std::pair<std::size_t, DenseVector>> basis;
  for (std::size_t j = 0; j < xbar.size(); ++j) {
    basis.emplace_back(j + 1, DenseVector::unit(xbar.size(), j));
  }
  return basis;
}

std::vector<std::pair<std::size_t, SparseVector>> probe_basis(const SparseVector& xbar,
                                                              const SparseVector& y,
                                                              const SparseVector& z) {
  std::set<SparseVector::Index> active;
  for (const SparseVector* v : {&xbar, &y, &z}) {
    for (const auto& kv : v->values()) active.insert(kv.first);
  }
  // One untouched coordinate stands in for the infinite tail.
  active.insert(active.empty() ? 1 : *active.rbegin() + 1);
  std::vector<std::pair<std::size_t, SparseVector>> basis;
  for (const auto i : active) basis.emplace_back(i, SparseVector::unit(i));
  return basis;
}

Matrix jacobian_fd(const Projection<DenseVector>& f, const DenseVector& xbar, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("step must be positive");
  const std::size_t n = xbar.size();
  const std::size_t m = f(xbar).size();
  Matrix jac(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const DenseVector e = DenseVector::unit(n, j);
    const DenseVector col = (1.0 / (2.0 * h)) * (f(xbar + h * e) - f(xbar - h * e));
    for (std::size_t i = 0; i < m; ++i) jac(i, j) = col[i];
  }
  return jac;
}

}  // namespace varproj
