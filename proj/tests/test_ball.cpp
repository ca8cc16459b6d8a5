#include <doctest.h>

#include <cmath>

#include "varproj/ball.hpp"
#include "varproj/instances.hpp"
#include "varproj/oracle.hpp"

using namespace varproj;

namespace {

Projection<DenseVector> projector(const BallOperator& op) {
  return [op](const DenseVector& x) { return ball_project(op, x); };
}

double max_abs(const DenseVector& v) {
  double m = 0.0;
  for (const double x : v.entries()) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("radius must be positive and finite") {
  CHECK_THROWS_AS(BallOperator{0.0}, std::invalid_argument);
  CHECK_THROWS_AS(BallOperator{-1.0}, std::invalid_argument);
  CHECK_THROWS_AS(BallOperator{INFINITY}, std::invalid_argument);
  CHECK_THROWS_AS(BallOperator{NAN}, std::invalid_argument);
}

TEST_CASE("projection examples") {
  CHECK(ball_project(BallOperator(1), DenseVector{3, 4}) == DenseVector{0.6, 0.8});
  CHECK(ball_project(BallOperator(2), DenseVector{1, 0}) == DenseVector{1, 0});
  CHECK(ball_project(BallOperator(1), DenseVector{0, 0}) == DenseVector{0, 0});
  CHECK(ball_project(BallOperator(1), SparseVector{{2, 3.0}, {9, 4.0}}) ==
        SparseVector{{2, 0.6}, {9, 0.8}});
}

TEST_CASE("regions") {
  const BallOperator op(1);
  CHECK(ball_region(op, DenseVector{0.5, 0}) == BallRegion::Interior);
  CHECK(ball_region(op, DenseVector{1, 0}) == BallRegion::Sphere);
  CHECK(ball_region(op, DenseVector{2, 0}) == BallRegion::Exterior);
  CHECK(ball_region(op, DenseVector{1 + 5e-13, 0}) == BallRegion::Sphere);
  CHECK(ball_region(op, DenseVector{1 + 5e-12, 0}) == BallRegion::Exterior);
}

TEST_CASE("direction classes") {
  const BallOperator op(1);
  const DenseVector xbar{1, 0};
  CHECK(classify_direction(op, xbar, DenseVector{0, 1}) == DirectionClass::Up);
  CHECK(classify_direction(op, xbar, DenseVector{-1, 0.5}) == DirectionClass::Down);
  CHECK(classify_direction(op, xbar, DenseVector{2, 0}) == DirectionClass::Radial);
  CHECK(classify_direction(op, xbar, DenseVector{-2, 0}) == DirectionClass::Down);
  CHECK(classify_direction(op, xbar, DenseVector{1, 1}) == DirectionClass::Up);
  CHECK_THROWS_AS(classify_direction(op, xbar, DenseVector{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(classify_direction(op, DenseVector{0.5, 0}, DenseVector{0, 1}), std::invalid_argument);

  // Checked against the definition: ||xbar + t w|| vs r for small t.
  for (const double t : {1e-1, 1e-2, 1e-3}) {
    CHECK(norm(xbar + t * DenseVector{0, 1}) >= 1.0);
    CHECK(norm(xbar + t * DenseVector{-1, 0.5}) < 1.0);
  }
}

TEST_CASE("gateaux examples") {
  const BallOperator op(1);
  CHECK(ball_gateaux(op, DenseVector{1, 0}, DenseVector{0, 1}) == DenseVector{0, 1});
  CHECK(ball_gateaux(op, DenseVector{1, 0}, DenseVector{3, 0}).is_zero());
  CHECK(ball_gateaux(op, DenseVector{2, 0}, DenseVector{0, 1}) == DenseVector{0, 0.5});
  CHECK(ball_gateaux(op, DenseVector{1, 0}, DenseVector{-1, 0.5}) == DenseVector{-1, 0.5});
  CHECK(ball_gateaux(op, DenseVector{0.2, 0}, DenseVector{7, -1}) == DenseVector{7, -1});
  CHECK_THROWS_AS(ball_gateaux(op, DenseVector{1, 0}, DenseVector{0, 0}), std::invalid_argument);
}

TEST_CASE("frechet examples") {
  const BallOperator op(1);
  const auto interior = ball_frechet(op, DenseVector{0.2, 0.1});
  REQUIRE(interior);
  CHECK(interior->kind() == LinearMap::Kind::Identity);

  const auto exterior = ball_frechet(op, DenseVector{2, 0});
  REQUIRE(exterior);
  CHECK(exterior->apply(DenseVector{1, 1}) == DenseVector{0, 0.5});

  CHECK_FALSE(ball_frechet(op, DenseVector{1, 0}));
}

TEST_CASE("coderivative examples") {
  const BallOperator op(1);
  auto d = ball_coderiv(op, DenseVector{0.3, 0}, DenseVector{5, 6});
  REQUIRE(d.is_singleton());
  CHECK(d.singleton_value() == DenseVector{5, 6});

  d = ball_coderiv(op, DenseVector{2, 0}, DenseVector{1, 1});
  REQUIRE(d.is_singleton());
  CHECK(d.singleton_value() == DenseVector{0, 0.5});

  d = ball_coderiv(op, DenseVector{1, 0}, DenseVector{-2, 0});
  REQUIRE(d.is_partial());
  CHECK(d.contains(DenseVector{0, 0}) == Membership::Yes);
  CHECK(d.contains(DenseVector{1, 1}) == Membership::Unknown);

  CHECK(ball_coderiv(op, DenseVector{1, 0}, DenseVector{1, 0}).is_empty());
  CHECK(ball_coderiv(op, DenseVector{1, 0}, DenseVector{1, 0}).cardinality() == Cardinality::Empty);

  d = ball_coderiv(op, DenseVector{1, 0}, DenseVector{0, 0});
  REQUIRE(d.is_singleton());
  CHECK(d.singleton_value().is_zero());

  // Positive multiple of xbar other than xbar itself: theta is excluded.
  d = ball_coderiv(op, DenseVector{1, 0}, DenseVector{2, 0});
  CHECK(d.contains(DenseVector{0, 0}) == Membership::No);
  // Tangential part in y: theta is excluded.
  d = ball_coderiv(op, DenseVector{1, 0}, DenseVector{-1, 1});
  CHECK(d.contains(DenseVector{0, 0}) == Membership::No);
}

TEST_CASE("sparse ball coderivative") {
  const BallOperator op(2);
  const SparseVector xbar{{3, 2.0}};
  CHECK(ball_region(op, xbar) == BallRegion::Sphere);
  CHECK(ball_coderiv(op, xbar, xbar).is_empty());
  const auto d = ball_coderiv(op, xbar, SparseVector{{3, -1.0}});
  CHECK(d.contains(SparseVector{}) == Membership::Yes);
  const auto ext = ball_coderiv(op, SparseVector{{1, 4.0}}, SparseVector{{1, 1.0}, {5, 2.0}});
  REQUIRE(ext.is_singleton());
  CHECK(ext.singleton_value() == SparseVector{{5, 1.0}});
}

TEST_CASE("nonexpansive and idempotent") {
  InstanceGenerator gen(21);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = gen.uniform_int(2, 6);
    const BallOperator op(gen.uniform(0.5, 2.0));
    const DenseVector u = gen.dense(n, -3, 3);
    const DenseVector v = gen.dense(n, -3, 3);
    const DenseVector pu = ball_project(op, u);
    CHECK(norm(pu - ball_project(op, v)) <= norm(u - v) + 1e-12);
    CHECK(norm(ball_project(op, pu) - pu) <= 1e-12);
    CHECK(norm(pu) <= op.radius() * (1 + 1e-15));
  }
}

TEST_CASE("exterior frechet map against central differences") {
  InstanceGenerator gen(23);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = gen.uniform_int(2, 6);
    const BallOperator op(gen.uniform(0.5, 2.0));
    const DenseVector xbar = gen.ball_exterior(n, op.radius());
    const DenseVector w = gen.dense(n, -1, 1);
    const auto f = projector(op);
    const double h = 1e-6;
    const DenseVector fd = (1.0 / (2 * h)) * (f(xbar + h * w) - f(xbar - h * w));
    CHECK(max_abs(fd - ball_frechet(op, xbar)->apply(w)) <= 1e-5);
  }
}

TEST_CASE("sphere gateaux against forward quotients") {
  InstanceGenerator gen(29);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = gen.uniform_int(2, 6);
    const BallOperator op(gen.uniform(0.5, 2.0));
    const DenseVector xbar = gen.ball_sphere(n, op.radius());
    const DenseVector w = gen.dense(n, -1, 1);
    const DenseVector q = directional_quotient(projector(op), xbar, w, 1e-5);
    CHECK(max_abs(q - ball_gateaux(op, xbar, w)) <= 1e-4);
  }
}

TEST_CASE("coderivative matches frechet map off the sphere") {
  InstanceGenerator gen(31);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = gen.uniform_int(2, 6);
    const BallOperator op(gen.uniform(0.5, 2.0));
    const DenseVector xbar = k % 2 ? gen.ball_interior(n, op.radius()) : gen.ball_exterior(n, op.radius());
    const DenseVector y = gen.dense(n, -2, 2);
    const auto d = ball_coderiv(op, xbar, y);
    REQUIRE(d.is_singleton());
    CHECK(approx_equal(d.singleton_value(), ball_frechet(op, xbar)->apply(y)));
  }
}

TEST_CASE("oracle confirms the closed forms on the worked examples") {
  const BallOperator op(1);
  const auto f = projector(op);
  const ProbeConfig config;
  CHECK(membership(f, DenseVector{0.3, 0}, DenseVector{5, 6}, DenseVector{5, 6}, config).verdict ==
        Verdict::Member);
  CHECK(membership(f, DenseVector{2, 0}, DenseVector{1, 1}, DenseVector{0, 0.5}, config).verdict ==
        Verdict::Member);
  CHECK(membership(f, DenseVector{1, 0}, DenseVector{-2, 0}, DenseVector{0, 0}, config).verdict ==
        Verdict::Member);
  CHECK(membership(f, DenseVector{1, 0}, DenseVector{1, 0}, DenseVector{0, 0}, config).verdict ==
        Verdict::NonMember);
}
