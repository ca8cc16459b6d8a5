#include "varproj/vectors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace varproj {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("vector entries must be finite");
  }
}

void require_same_size(const DenseVector& u, const DenseVector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
  }
}

template <class Op>
DenseVector zip(const DenseVector& u, const DenseVector& v, Op op) {
  require_same_size(u, v);
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = op(u[i], v[i]);
  return DenseVector(std::move(out));
}

template <class Op>
SparseVector merge(const SparseVector& u, const SparseVector& v, Op op) {
  std::vector<SparseVector::Entry> out;
  auto iu = u.values().begin();
  auto iv = v.values().begin();
  const auto eu = u.values().end();
  const auto ev = v.values().end();
  while (iu != eu || iv != ev) {
    if (iv == ev || (iu != eu && iu->first < iv->first)) {
      out.emplace_back(iu->first, op(iu->second, 0.0));
      ++iu;
    } else if (iu == eu || iv->first < iu->first) {
      out.emplace_back(iv->first, op(0.0, iv->second));
      ++iv;
    } else {
      out.emplace_back(iu->first, op(iu->second, iv->second));
      ++iu;
      ++iv;
    }
  }
  return SparseVector(out);
}

}  // namespace

DenseVector::DenseVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("dense vector needs dimension >= 1");
  }
  for (double v : entries_) require_finite(v);
}

DenseVector::DenseVector(std::initializer_list<double> entries)
    : DenseVector(std::vector<double>(entries)) {}

DenseVector DenseVector::zeros(std::size_t n) {
  return DenseVector(std::vector<double>(n, 0.0));
}

DenseVector DenseVector::unit(std::size_t n, std::size_t j) {
  std::vector<double> e(n, 0.0);
  e.at(j) = 1.0;
  return DenseVector(std::move(e));
}

bool DenseVector::is_zero() const {
  for (double v : entries_) {
    if (v != 0.0) return false;
  }
  return true;
}

SparseVector::SparseVector(const std::vector<Entry>& entries) {
  for (const auto& [index, value] : entries) {
    if (index == 0) {
      throw std::invalid_argument("sparse indices are 1-based");
    }
    require_finite(value);
    if (values_.count(index) != 0) {
      throw std::invalid_argument("repeated sparse index " +
                                  std::to_string(index));
    }
    if (value != 0.0) values_.emplace(index, value);
  }
}

SparseVector::SparseVector(std::initializer_list<Entry> entries)
    : SparseVector(std::vector<Entry>(entries)) {}

SparseVector SparseVector::unit(Index j) { return SparseVector({{j, 1.0}}); }

double SparseVector::at(Index i) const {
  const auto it = values_.find(i);
  return it == values_.end() ? 0.0 : it->second;
}

std::vector<SparseVector::Index> SparseVector::support() const {
  std::vector<Index> out;
  out.reserve(values_.size());
  for (const auto& kv : values_) out.push_back(kv.first);
  return out;
}

SparseVector::Index SparseVector::max_index() const {
  return values_.empty() ? 0 : values_.rbegin()->first;
}

DenseVector operator+(const DenseVector& u, const DenseVector& v) {
  return zip(u, v, [](double a, double b) { return a + b; });
}

DenseVector operator-(const DenseVector& u, const DenseVector& v) {
  return zip(u, v, [](double a, double b) { return a - b; });
}

DenseVector operator-(const DenseVector& u) { return -1.0 * u; }

DenseVector operator*(double s, const DenseVector& u) {
  std::vector<double> out(u.entries().begin(), u.entries().end());
  for (double& v : out) v *= s;
  return DenseVector(std::move(out));
}

SparseVector operator+(const SparseVector& u, const SparseVector& v) {
  return merge(u, v, [](double a, double b) { return a + b; });
}

SparseVector operator-(const SparseVector& u, const SparseVector& v) {
  return merge(u, v, [](double a, double b) { return a - b; });
}

SparseVector operator-(const SparseVector& u) { return -1.0 * u; }

SparseVector operator*(double s, const SparseVector& u) {
  std::vector<SparseVector::Entry> out;
  out.reserve(u.support_size());
  for (const auto& [i, v] : u.values()) out.emplace_back(i, s * v);
  return SparseVector(out);
}

double inner(const DenseVector& u, const DenseVector& v) {
  require_same_size(u, v);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

double inner(const SparseVector& u, const SparseVector& v) {
  const auto& small = u.support_size() <= v.support_size() ? u : v;
  const auto& large = u.support_size() <= v.support_size() ? v : u;
  double sum = 0.0;
  for (const auto& [i, value] : small.values()) sum += value * large.at(i);
  return sum;
}

double norm(const DenseVector& u) { return std::sqrt(inner(u, u)); }

double norm(const SparseVector& u) { return std::sqrt(inner(u, u)); }

DenseVector zero_like(const DenseVector& u) {
  return DenseVector::zeros(u.size());
}

SparseVector zero_like(const SparseVector&) { return SparseVector(); }

DenseVector rescale(const DenseVector& u, double r, double n) {
  std::vector<double> out(u.entries().begin(), u.entries().end());
  for (double& v : out) v = v * r / n;
  return DenseVector(std::move(out));
}

SparseVector rescale(const SparseVector& u, double r, double n) {
  std::vector<SparseVector::Entry> out;
  for (const auto& [i, v] : u.values()) out.emplace_back(i, v * r / n);
  return SparseVector(out);
}

void require_nonzero_anchor(double anchor_norm_sq) {
  if (!(anchor_norm_sq > 0.0)) {
    throw std::invalid_argument("orthogonal decomposition needs a nonzero anchor");
  }
}

}  // namespace varproj
