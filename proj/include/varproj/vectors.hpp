#pragma once

// Hilbert-space vectors: dense points of R^n and finite-support points of l2.

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace varproj {

/// Point of R^n with finite entries. Immutable after construction.
class DenseVector {
 public:
  /// Throws std::invalid_argument on an empty or non-finite entry list.
  explicit DenseVector(std::vector<double> entries);
  DenseVector(std::initializer_list<double> entries);

  static DenseVector zeros(std::size_t n);
  /// Standard basis vector e_j, j is 0-based.
  static DenseVector unit(std::size_t n, std::size_t j);

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const { return entries_; }

  bool is_zero() const;

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::vector<double> entries_;
};

/// Finite-support point of l2. Indices are 1-based; only nonzero values are
/// stored, so the support is exactly the key set.
class SparseVector {
 public:
  using Index = std::size_t;
  using Entry = std::pair<Index, double>;

  SparseVector() = default;
  /// Zero values are dropped. Throws std::invalid_argument on index 0, a
  /// repeated index or a non-finite value.
  explicit SparseVector(const std::vector<Entry>& entries);
  SparseVector(std::initializer_list<Entry> entries);

  static SparseVector unit(Index j);

  /// Value at index i (0 outside the support).
  double at(Index i) const;
  bool contains_index(Index i) const { return values_.count(i) != 0; }
  std::vector<Index> support() const;
  /// Largest index in the support, 0 for the origin.
  Index max_index() const;
  std::size_t support_size() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  const std::map<Index, double>& values() const { return values_; }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::map<Index, double> values_;
};

DenseVector operator+(const DenseVector& u, const DenseVector& v);
DenseVector operator-(const DenseVector& u, const DenseVector& v);
DenseVector operator-(const DenseVector& u);
DenseVector operator*(double s, const DenseVector& u);

SparseVector operator+(const SparseVector& u, const SparseVector& v);
SparseVector operator-(const SparseVector& u, const SparseVector& v);
SparseVector operator-(const SparseVector& u);
SparseVector operator*(double s, const SparseVector& u);

/// Throws std::invalid_argument on a dimension mismatch.
double inner(const DenseVector& u, const DenseVector& v);
double inner(const SparseVector& u, const SparseVector& v);

double norm(const DenseVector& u);
double norm(const SparseVector& u);

/// Origin of the same space (and dimension) as u.
DenseVector zero_like(const DenseVector& u);
SparseVector zero_like(const SparseVector& u);

/// Multiplies by r / n with the division applied last, so 3 * 1 / 5 rounds
/// to exactly 0.6.
DenseVector rescale(const DenseVector& u, double r, double n);
SparseVector rescale(const SparseVector& u, double r, double n);

template <class V>
concept HilbertVector = requires(const V& u, const V& v, double s) {
  { inner(u, v) } -> std::convertible_to<double>;
  { norm(u) } -> std::convertible_to<double>;
  { u + v } -> std::same_as<V>;
  { u - v } -> std::same_as<V>;
  { s * u } -> std::same_as<V>;
  { zero_like(u) } -> std::same_as<V>;
  { u.is_zero() } -> std::convertible_to<bool>;
};

/// ||u - v|| <= rel * max(1, ||v||).
template <HilbertVector V>
bool approx_equal(const V& u, const V& v, double rel = 1e-10) {
  const double scale = norm(v) > 1.0 ? norm(v) : 1.0;
  return norm(u - v) <= rel * scale;
}

/// Radial coefficient and orthogonal remainder of a vector relative to a
/// nonzero anchor: x = a * anchor + o with <o, anchor> = 0.
template <HilbertVector V>
struct OrthDecomp {
  double a;
  V o;
  V anchor;

  V reconstruct() const { return a * anchor + o; }
};

/// a(xbar; x) = <x, xbar> / ||xbar||^2. Throws std::invalid_argument if
/// xbar is the origin.
template <HilbertVector V>
double radial_coefficient(const V& xbar, const V& x);

/// Throws std::invalid_argument if xbar is the origin.
template <HilbertVector V>
OrthDecomp<V> orth_decompose(const V& xbar, const V& x) {
  const double a = radial_coefficient(xbar, x);
  return OrthDecomp<V>{a, x - a * xbar, xbar};
}

/// o(xbar; x).
template <HilbertVector V>
V orth_component(const V& xbar, const V& x) {
  return orth_decompose(xbar, x).o;
}

void require_nonzero_anchor(double anchor_norm_sq);

template <HilbertVector V>
double radial_coefficient(const V& xbar, const V& x) {
  const double nn = inner(xbar, xbar);
  require_nonzero_anchor(nn);
  return inner(x, xbar) / nn;
}

}  // namespace varproj
