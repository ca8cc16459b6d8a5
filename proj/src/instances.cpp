#include "varproj/instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace varproj {

double InstanceGenerator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

std::size_t InstanceGenerator::uniform_int(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

double InstanceGenerator::gaussian() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

bool InstanceGenerator::coin() { return std::bernoulli_distribution(0.5)(rng_); }

double InstanceGenerator::signed_away_from_zero() {
  const double m = uniform(0.1, 2.0);
  return coin() ? m : -m;
}

DenseVector InstanceGenerator::dense(std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(lo, hi);
  return DenseVector(std::move(v));
}

DenseVector InstanceGenerator::unit_direction(std::size_t n) {
  for (;;) {
    std::vector<double> v(n);
    for (double& x : v) x = gaussian();
    const DenseVector d(std::move(v));
    const double len = norm(d);
    if (len > 1e-6) return (1.0 / len) * d;
  }
}

DenseVector InstanceGenerator::ball_interior(std::size_t n, double r) {
  return uniform(0.0, 0.8 * r) * unit_direction(n);
}

DenseVector InstanceGenerator::ball_exterior(std::size_t n, double r) {
  return uniform(1.2 * r, 3.0 * r) * unit_direction(n);
}

DenseVector InstanceGenerator::ball_sphere(std::size_t n, double r) {
  return r * unit_direction(n);
}

DenseVector InstanceGenerator::cone_interior(std::size_t n) { return dense(n, 0.1, 2.0); }

DenseVector InstanceGenerator::neg_cone_interior(std::size_t n) { return dense(n, -2.0, -0.1); }

DenseVector InstanceGenerator::cone_hat(std::size_t n) {
  if (n < 2) throw std::invalid_argument("KHat needs n >= 2");
  std::vector<double> v(n);
  for (double& x : v) x = signed_away_from_zero();
  const std::size_t p = uniform_int(0, n - 1);
  std::size_t q = uniform_int(0, n - 2);
  if (q >= p) ++q;
  v[p] = std::abs(v[p]);
  v[q] = -std::abs(v[q]);
  return DenseVector(std::move(v));
}

DenseVector InstanceGenerator::cone_delta(std::size_t n, bool allow_positive) {
  std::vector<double> v(n);
  for (double& x : v) {
    const double m = uniform(0.1, 2.0);
    x = (allow_positive && coin()) ? m : -m;
  }
  const std::size_t zero_at = uniform_int(0, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == zero_at || (n > 2 && uniform(0.0, 1.0) < 0.25)) v[i] = 0.0;
  }
  if (!allow_positive && std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) {
    if (n > 1) v[(zero_at + 1) % n] = -uniform(0.1, 2.0);
  }
  return DenseVector(std::move(v));
}

SupportSet InstanceGenerator::support(std::size_t size, std::size_t max_index) {
  if (size == 0 || size > max_index) throw std::invalid_argument("bad support size");
  std::vector<std::size_t> all(max_index);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng_);
  return SupportSet(std::set<std::size_t>(all.begin(), all.begin() + size));
}

SparseVector InstanceGenerator::z_m_point(const SupportSet& m) {
  std::vector<SparseVector::Entry> e;
  for (const auto i : m.indices()) e.emplace_back(i, uniform(0.1, 2.0));
  return SparseVector(e);
}

SparseVector InstanceGenerator::k_mbar_point(const SupportSet& m, std::size_t off_m_count) {
  std::vector<SparseVector::Entry> e;
  for (const auto i : m.indices()) e.emplace_back(i, signed_away_from_zero());
  std::size_t next = 1;
  for (std::size_t added = 0; added < off_m_count; ++next) {
    if (m.contains(next) || !coin()) continue;
    e.emplace_back(next, uniform(0.1, 2.0));
    ++added;
  }
  return SparseVector(e);
}

}  // namespace varproj
