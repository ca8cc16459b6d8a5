#include <doctest.h>

#include <cmath>

#include "varproj/instances.hpp"
#include "varproj/linear_map.hpp"
#include "varproj/vectors.hpp"
#include "varproj/verify.hpp"

using namespace varproj;

TEST_CASE("inner products") {
  CHECK(inner(DenseVector{1, 2}, DenseVector{3, 4}) == 11.0);
  CHECK(inner(DenseVector{1, 0}, DenseVector{0, 1}) == 0.0);
  CHECK(inner(SparseVector{{1, 2.0}, {5, 3.0}}, SparseVector{{5, 4.0}}) == 12.0);
  CHECK_THROWS_AS(inner(DenseVector{1, 2}, DenseVector{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("norms") {
  CHECK(norm(DenseVector{3, 4}) == 5.0);
  CHECK(norm(DenseVector::zeros(3)) == 0.0);
  CHECK(norm(SparseVector{{2, 1.0}, {7, -1.0}}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(norm(SparseVector{}) == 0.0);
}

TEST_CASE("orthogonal decomposition examples") {
  auto d = orth_decompose(DenseVector{1, 0}, DenseVector{2, 3});
  CHECK(d.a == 2.0);
  CHECK(d.o == DenseVector{0, 3});

  d = orth_decompose(DenseVector{1, 1}, DenseVector{1, 1});
  CHECK(d.a == 1.0);
  CHECK(d.o.is_zero());

  d = orth_decompose(DenseVector{3, 4}, DenseVector{4, -3});
  CHECK(d.a == 0.0);
  CHECK(d.o == DenseVector{4, -3});

  CHECK_THROWS_AS(orth_decompose(DenseVector{0, 0}, DenseVector{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(orth_decompose(SparseVector{}, SparseVector{{1, 1.0}}), std::invalid_argument);
}

TEST_CASE("sparse decomposition across disjoint supports") {
  const SparseVector xbar{{1, 2.0}};
  const SparseVector x{{1, 4.0}, {9, -1.0}};
  const auto d = orth_decompose(xbar, x);
  CHECK(d.a == 2.0);
  CHECK(d.o == SparseVector{{9, -1.0}});
  CHECK(d.reconstruct() == x);
}

TEST_CASE("dense construction rejects bad input") {
  CHECK_THROWS_AS(DenseVector(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(DenseVector({1.0, NAN}), std::invalid_argument);
  CHECK_THROWS_AS(DenseVector({INFINITY}), std::invalid_argument);
  CHECK(DenseVector::unit(3, 1) == DenseVector{0, 1, 0});
}

TEST_CASE("sparse invariants") {
  const SparseVector v{{3, 1.0}, {1, 0.0}, {7, -2.0}};
  CHECK(v.support() == std::vector<std::size_t>{3, 7});
  CHECK(v.at(1) == 0.0);
  CHECK(v.max_index() == 7);
  CHECK_THROWS_AS((SparseVector{{0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS((SparseVector{{2, 1.0}, {2, 3.0}}), std::invalid_argument);
  CHECK_THROWS_AS((SparseVector{{2, NAN}}), std::invalid_argument);

  // Cancellation drops the index from the support.
  const SparseVector w = v - SparseVector{{3, 1.0}};
  CHECK(w == SparseVector{{7, -2.0}});
  CHECK_FALSE(w.contains_index(3));
  CHECK((0.0 * v).is_zero());
}

TEST_CASE("rescale divides last so 3/5 lands on 0.6") {
  const DenseVector p = rescale(DenseVector{3, 4}, 1.0, 5.0);
  CHECK(p[0] == 0.6);
  CHECK(p[1] == 0.8);
}

TEST_CASE("decomposition identities on random triples") {
  InstanceGenerator gen(7);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = gen.uniform_int(2, 8);
    const auto r = decomposition_residuals(gen.dense(n, -2, 2), gen.dense(n, -2, 2), gen.dense(n, -2, 2));
    for (const double e : r) worst = std::max(worst, e);
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("orthogonality and reconstruction tolerances") {
  InstanceGenerator gen(11);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = gen.uniform_int(2, 8);
    const DenseVector xbar = gen.dense(n, -3, 3);
    const DenseVector x = gen.dense(n, -3, 3);
    const auto d = orth_decompose(xbar, x);
    CHECK(std::abs(inner(d.o, xbar)) <= 1e-12 * std::max(1e-300, norm(d.o) * norm(xbar)) + 1e-15);
    CHECK(norm(d.reconstruct() - x) <= 1e-12 * norm(x));
  }
}

TEST_CASE("linearity of a and o") {
  InstanceGenerator gen(13);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = gen.uniform_int(2, 8);
    const DenseVector xbar = gen.dense(n, -2, 2);
    const DenseVector u = gen.dense(n, -2, 2);
    const DenseVector v = gen.dense(n, -2, 2);
    const double s = gen.uniform(-3, 3);
    const double t = gen.uniform(-3, 3);
    const DenseVector w = s * u + t * v;
    const double a_lin = s * radial_coefficient(xbar, u) + t * radial_coefficient(xbar, v);
    CHECK(std::abs(radial_coefficient(xbar, w) - a_lin) <= 1e-10 * std::max(1.0, norm(w) / norm(xbar)));
    const DenseVector o_lin = s * orth_component(xbar, u) + t * orth_component(xbar, v);
    CHECK(approx_equal(orth_component(xbar, w), o_lin));
  }
}

TEST_CASE("a tends to 1 and o to zero monotonically along xbar + w/k") {
  InstanceGenerator gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = gen.uniform_int(2, 8);
    const DenseVector xbar = gen.dense(n, -2, 2);
    const DenseVector w = gen.dense(n, -2, 2);
    double prev_a = INFINITY;
    double prev_o = INFINITY;
    for (int k = 1; k <= 100; ++k) {
      const auto d = orth_decompose(xbar, xbar + (1.0 / k) * w);
      const double ea = std::abs(d.a - 1.0);
      const double eo = norm(d.o);
      CHECK(ea <= prev_a * (1 + 1e-12) + 1e-15);
      CHECK(eo <= prev_o * (1 + 1e-12) + 1e-15);
      prev_a = ea;
      prev_o = eo;
    }
    CHECK(prev_a <= std::abs(radial_coefficient(xbar, w)) / 100 + 1e-12);
  }
}

TEST_CASE("linear maps") {
  const DenseVector x{1, 2, 3};
  CHECK(LinearMap::identity().apply(x) == x);
  CHECK(LinearMap::zero().apply(x).is_zero());
  CHECK(LinearMap::coordinate_mask({true, false, true}).apply(x) == DenseVector{1, 0, 3});

  const auto exterior = LinearMap::scaled_orth_complement(0.5, DenseVector{2, 0});
  CHECK(exterior.apply(DenseVector{1, 1}) == DenseVector{0, 0.5});
  const Matrix m = exterior.matrix(2);
  CHECK(m(0, 0) == 0.0);
  CHECK(m(1, 1) == 0.5);
  CHECK(m(0, 1) == 0.0);
  CHECK(std::string(to_string(exterior.kind())) == "scaled_orth_complement");
}
