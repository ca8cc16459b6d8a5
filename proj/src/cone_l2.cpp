#include "varproj/cone_l2.hpp"

#include <stdexcept>

namespace varproj {

SupportSet::SupportSet(std::set<Index> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("support set must be nonempty");
  if (indices_.count(0) != 0) throw std::invalid_argument("support indices are 1-based");
}

SupportSet::SupportSet(std::initializer_list<Index> indices)
    : SupportSet(std::set<Index>(indices)) {}

bool in_Z_M(const SparseVector& x, const SupportSet& m) {
  if (x.support_size() != m.size()) return false;
  for (const auto& [i, v] : x.values()) {
    if (!m.contains(i) || !(v > 0.0)) return false;
  }
  return true;
}

bool in_K_Mbar(const SparseVector& y, const SupportSet& m) {
  for (const auto& [i, v] : y.values()) {
    if (!m.contains(i) && v < 0.0) return false;
  }
  return true;
}

bool in_boundary_K_Mbar(const SparseVector& y, const SupportSet& m) {
  for (const auto& kv : y.values()) {
    if (!m.contains(kv.first)) return false;
  }
  return true;
}

bool order_leq(const SparseVector& z, const SparseVector& y, const SupportSet& m) {
  // Only indices in supp(z) u supp(y) u M can violate either condition.
  std::set<SparseVector::Index> indices = m.indices();
  for (const auto& kv : z.values()) indices.insert(kv.first);
  for (const auto& kv : y.values()) indices.insert(kv.first);
  for (const auto i : indices) {
    const double zi = z.at(i);
    const double yi = y.at(i);
    if (m.contains(i) ? zi != yi : zi > yi) return false;
  }
  return true;
}

SparseVector l2_project(const SparseVector& x) {
  std::vector<SparseVector::Entry> out;
  for (const auto& [i, v] : x.values()) {
    if (v > 0.0) out.emplace_back(i, v);
  }
  return SparseVector(out);
}

SparseVector B_map(const SparseVector& x, const SparseVector& w) {
  std::vector<SparseVector::Entry> out;
  for (const auto& [i, v] : w.values()) {
    if (x.at(i) > 0.0) out.emplace_back(i, v);
  }
  return SparseVector(out);
}

CoderivDescriptor<SparseVector> l2_coderiv(const SparseVector& xbar, const SupportSet& m,
                                           const SparseVector& y) {
  using D = CoderivDescriptor<SparseVector>;
  if (y.is_zero()) return D::singleton(y);
  if (!in_Z_M(xbar, m)) {
    throw std::invalid_argument("xbar must be strictly positive exactly on M");
  }
  if (in_K_Mbar(y, m)) return D::order_interval(y, m);
  return D::partial(PartialRule::L2SelfExclusion, xbar, y);
}

SparseVector l2_coderiv_restricted_identity(const SparseVector& xbar, const SupportSet& m,
                                            const SparseVector& y) {
  if (!in_Z_M(xbar, m)) {
    throw std::invalid_argument("xbar must be strictly positive exactly on M");
  }
  if (!in_boundary_K_Mbar(y, m)) {
    throw std::invalid_argument("y must be supported in M");
  }
  return y;
}

}  // namespace varproj
