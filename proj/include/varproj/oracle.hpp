#pragma once

// Numerical membership test for Frechet coderivatives of continuous maps.
//
// z belongs to D*f(xbar)(y) iff
//
//   limsup_{u -> xbar}  (<z, u - xbar> - <y, f(u) - f(xbar)>)
//                       / (||u - xbar|| + ||f(u) - f(xbar)||)   <= 0.
//
// The limsup is discretized by straight segments u = xbar + t*d over a
// decreasing list of radii t and a set of unit directions d: seeded random
// directions plus structured probes (radial, orthogonal-to-xbar,
// along y/z and signed coordinate segments) that reproduce the sequences used
// in the exclusion arguments for balls and cones.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "varproj/linear_map.hpp"
#include "varproj/vectors.hpp"

namespace varproj {

template <class V>
using Projection = std::function<V(const V&)>;

enum class Denominator {
  /// ||u - xbar|| + ||f(u) - f(xbar)||
  Sum,
  /// sqrt(||u - xbar||^2 + ||f(u) - f(xbar)||^2); within a factor sqrt(2)
  /// of Sum, so it yields the same membership verdicts.
  Euclidean,
};

struct ProbeConfig {
  std::vector<double> radii{1e-2, 1e-3, 1e-4};
  std::size_t random_directions = 256;
  std::uint64_t seed = 42;
  double tolerance = 1e-3;
  bool structured_probes = true;
  Denominator denominator = Denominator::Sum;

  /// Throws std::invalid_argument if radii are not strictly decreasing and
  /// positive, tolerance is not positive, or no probe would be generated.
  void validate() const;
};

enum class Verdict { Member, NonMember, Inconclusive };

const char* to_string(Verdict v);

template <class V>
struct Probe {
  std::string label;
  V direction;  // unit norm
};

template <class V>
struct Witness {
  std::string probe;
  V direction;
  double radius;
  double quotient;
};

struct RadiusEstimate {
  double radius;
  double sup;
};

template <class V>
struct OracleVerdict {
  /// One entry per configured radius, in config order.
  std::vector<RadiusEstimate> sup_estimates;
  Verdict verdict = Verdict::Inconclusive;
  /// Maximizing probe at the smallest radius.
  std::optional<Witness<V>> witness;
  /// Quotient per radius for every structured probe, keyed by label.
  std::map<std::string, std::vector<double>> structured;

  /// Quotient of a structured probe at the smallest radius.
  std::optional<double> structured_at_smallest(const std::string& label) const {
    const auto it = structured.find(label);
    if (it == structured.end() || it->second.empty()) return std::nullopt;
    return it->second.back();
  }
};

/// Decision rule applied to per-radius suprema (radii decreasing):
///   Member        sup at the smallest radius <= tol and no radius step
///                 increases the sup by more than tol;
///   NonMember     sup at the smallest radius > tol and not collapsing
///                 (at least half of the previous radius's sup);
///   Inconclusive  anything else.
Verdict classify_estimates(const std::vector<RadiusEstimate>& estimates, double tolerance);

namespace detail {

template <HilbertVector V>
double quotient_given(const Projection<V>& f, const V& xbar, const V& fxbar, const V& y,
                      const V& z, const V& u, Denominator den) {
  const V du = u - xbar;
  const V dfu = f(u) - fxbar;
  const double a = norm(du);
  if (!(a > 0.0)) throw std::invalid_argument("quotient needs u != xbar");
  const double b = norm(dfu);
  const double numerator = inner(z, du) - inner(y, dfu);
  const double denominator = den == Denominator::Sum ? a + b : std::sqrt(a * a + b * b);
  return numerator / denominator;
}

}  // namespace detail

/// Limsup quotient at one point u. Throws std::invalid_argument if u = xbar.
template <HilbertVector V>
double quotient(const Projection<V>& f, const V& xbar, const V& y, const V& z, const V& u,
                Denominator den = Denominator::Sum) {
  return detail::quotient_given(f, xbar, f(xbar), y, z, u, den);
}

/// Signed coordinate directions spanning the probed coordinates, labelled
/// by 1-based index. Dense: all coordinates. Sparse: the union of the
/// supports plus one fresh index beyond them.
std::vector<std::pair<std::size_t, DenseVector>> probe_basis(const DenseVector& xbar,
                                                             const DenseVector& y,
                                                             const DenseVector& z);
std::vector<std::pair<std::size_t, SparseVector>> probe_basis(const SparseVector& xbar,
                                                              const SparseVector& y,
                                                              const SparseVector& z);

template <HilbertVector V>
std::vector<Probe<V>> make_probes(const V& xbar, const V& y, const V& z,
                                  const ProbeConfig& config) {
  std::vector<Probe<V>> probes;
  const auto basis = probe_basis(xbar, y, z);

  auto push_unit = [&](std::string label, const V& v) {
    const double n = norm(v);
    if (n > 0.0) probes.push_back({std::move(label), (1.0 / n) * v});
  };

  if (config.structured_probes) {
    if (!xbar.is_zero()) {
      push_unit("radial-out", xbar);
      push_unit("radial-in", -xbar);
      for (const auto& [name, v] : {std::pair<const char*, const V&>{"y", y}, {"z", z}}) {
        if (v.is_zero()) continue;
        const V o = orth_component(xbar, v);
        if (norm(o) > 1e-12 * norm(v)) {
          push_unit(std::string("orth+") + name, o);
          push_unit(std::string("orth-") + name, -o);
        }
      }
    }
    for (const auto& [name, v] : {std::pair<const char*, const V&>{"y", y}, {"z", z}}) {
      if (v.is_zero()) continue;
      push_unit(std::string("along+") + name, v);
      push_unit(std::string("along-") + name, -v);
    }
    for (const auto& [index, e] : basis) {
      push_unit("coord+" + std::to_string(index), e);
      push_unit("coord-" + std::to_string(index), -e);
    }
  }

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t k = 0; k < config.random_directions; ++k) {
    V d = zero_like(xbar);
    for (const auto& [index, e] : basis) d = d + gauss(rng) * e;
    push_unit("random-" + std::to_string(k), d);
  }
  return probes;
}

/// Estimates whether z is in D*f(xbar)(y).
template <HilbertVector V>
OracleVerdict<V> membership(const Projection<V>& f, const V& xbar, const V& y, const V& z,
                            const ProbeConfig& config) {
  config.validate();
  const auto probes = make_probes(xbar, y, z, config);
  const V fxbar = f(xbar);

  OracleVerdict<V> out;
  std::size_t best = 0;
  for (std::size_t k = 0; k < config.radii.size(); ++k) {
    const double t = config.radii[k];
    double sup = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < probes.size(); ++p) {
      const V u = xbar + t * probes[p].direction;
      const double q =
          detail::quotient_given(f, xbar, fxbar, y, z, u, config.denominator);
      if (q > sup) {
        sup = q;
        if (k + 1 == config.radii.size()) best = p;
      }
      if (!probes[p].label.starts_with("random-")) {
        out.structured[probes[p].label].push_back(q);
      }
    }
    out.sup_estimates.push_back({t, sup});
  }
  out.verdict = classify_estimates(out.sup_estimates, config.tolerance);
  out.witness = Witness<V>{probes[best].label, probes[best].direction, config.radii.back(),
                           out.sup_estimates.back().sup};
  return out;
}

/// (f(xbar + t w) - f(xbar)) / t. Throws std::invalid_argument unless t > 0
/// and w != 0.
template <HilbertVector V>
V directional_quotient(const Projection<V>& f, const V& xbar, const V& w, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("step must be positive");
  if (w.is_zero()) throw std::invalid_argument("direction must be nonzero");
  return (1.0 / t) * (f(xbar + t * w) - f(xbar));
}

/// Central-difference Jacobian; column j is (f(x + h e_j) - f(x - h e_j)) / 2h.
/// Throws std::invalid_argument unless h > 0.
Matrix jacobian_fd(const Projection<DenseVector>& f, const DenseVector& xbar, double h);

}  // namespace varproj
