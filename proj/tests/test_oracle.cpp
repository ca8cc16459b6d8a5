#include <doctest.h>

#include <cmath>

#include "varproj/ball.hpp"
#include "varproj/cone_l2.hpp"
#include "varproj/cone_rn.hpp"
#include "varproj/instances.hpp"
#include "varproj/oracle.hpp"

using namespace varproj;

namespace {

const Projection<DenseVector> cone = [](const DenseVector& x) { return cone_project(x); };
const Projection<SparseVector> l2 = [](const SparseVector& x) { return l2_project(x); };

Projection<DenseVector> ball(double r) {
  const BallOperator op(r);
  return [op](const DenseVector& x) { return ball_project(op, x); };
}

}  // namespace

TEST_CASE("quotient examples") {
  CHECK(quotient(cone, DenseVector{1, 1}, DenseVector{0, 0}, DenseVector{0, 0}, DenseVector{1.3, 0.2}) == 0.0);

  // u = (1 + d) xbar on the unit sphere with z = xbar, y = 0: numerator d,
  // denominator d + 0 since the projection stays at xbar.
  const double q = quotient(ball(1), DenseVector{1, 0}, DenseVector{0, 0}, DenseVector{1, 0},
                            DenseVector{1.001, 0});
  CHECK(q == doctest::Approx(1.0).epsilon(1e-12));

  // xbar with no positive part, y = xbar, z = 0, segment u = (0, -1 + t):
  // P_K stays at 0, so the numerator vanishes.
  CHECK(quotient(cone, DenseVector{0, -1}, DenseVector{0, -1}, DenseVector{0, 0}, DenseVector{0, -1 + 1e-3}) == 0.0);

  CHECK_THROWS_AS(quotient(cone, DenseVector{1, 1}, DenseVector{0, 0}, DenseVector{0, 0}, DenseVector{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("membership examples") {
  const ProbeConfig config;
  CHECK(membership(ball(1), DenseVector{0.5, 0}, DenseVector{2, 3}, DenseVector{2, 3}, config).verdict ==
        Verdict::Member);

  InstanceGenerator gen(71);
  int non_members = 0;
  for (int k = 0; k < 64; ++k) {
    const DenseVector z = gen.dense(2, -3, 3);
    non_members += membership(ball(1), DenseVector{1, 0}, DenseVector{1, 0}, z, config).verdict ==
                   Verdict::NonMember;
  }
  CHECK(non_members == 64);

  const SparseVector xbar{{1, 1.0}};
  CHECK(membership(l2, xbar, SparseVector{{1, 1.0}, {2, 0.5}}, SparseVector{{1, 1.0}, {2, 0.6}}, config).verdict ==
        Verdict::NonMember);
}

TEST_CASE("no positive part: theta is the only member for y = xbar") {
  const DenseVector xbar{0, -1};
  const ProbeConfig config;
  const auto v = membership(cone, xbar, xbar, DenseVector{0, 0}, config);
  CHECK(v.verdict == Verdict::Member);
  CHECK(v.sup_estimates.back().sup <= 0.0);
  CHECK(membership(cone, xbar, xbar, DenseVector{0, 0.3}, config).verdict == Verdict::NonMember);
  CHECK(membership(cone, xbar, xbar, DenseVector{-0.3, 0}, config).verdict == Verdict::NonMember);
}

TEST_CASE("directional quotient examples") {
  CHECK(directional_quotient(cone, DenseVector{1, 1}, DenseVector{1, 0}, 1e-6)[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(norm(directional_quotient(ball(1), DenseVector{1, 0}, DenseVector{1, 0}, 1e-4)) <= 1e-12);
  CHECK(directional_quotient(cone, DenseVector{0, 1}, DenseVector{-1, 0}, 1e-5).is_zero());
  CHECK_THROWS_AS(directional_quotient(cone, DenseVector{0, 1}, DenseVector{-1, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(directional_quotient(cone, DenseVector{0, 1}, DenseVector{0, 0}, 1e-3), std::invalid_argument);
}

TEST_CASE("central difference jacobians") {
  Matrix identity(2, 2);
  identity(0, 0) = identity(1, 1) = 1.0;
  CHECK(max_abs_diff(jacobian_fd(cone, DenseVector{1, 2}, 1e-6), identity) <= 1e-9);
  CHECK(max_abs_diff(jacobian_fd(cone, DenseVector{-1, -2}, 1e-6), Matrix(2, 2)) <= 1e-9);
  Matrix expected(2, 2);
  expected(1, 1) = 0.5;
  CHECK(max_abs_diff(jacobian_fd(ball(1), DenseVector{2, 0}, 1e-6), expected) <= 1e-5);
  CHECK_THROWS_AS(jacobian_fd(cone, DenseVector{1, 2}, -1.0), std::invalid_argument);
}

TEST_CASE("config validation") {
  ProbeConfig c;
  c.radii = {1e-3, 1e-2};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.radii = {};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.radii = {1e-2, 0.0};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ProbeConfig{};
  c.tolerance = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ProbeConfig{};
  c.random_directions = 0;
  c.structured_probes = false;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_NOTHROW(ProbeConfig{}.validate());
}

TEST_CASE("verdict rule") {
  const double tol = 1e-3;
  CHECK(classify_estimates({{1e-2, 0.0}, {1e-3, 0.0}, {1e-4, 0.0}}, tol) == Verdict::Member);
  CHECK(classify_estimates({{1e-2, -0.2}, {1e-3, -0.5}, {1e-4, -0.6}}, tol) == Verdict::Member);
  CHECK(classify_estimates({{1e-2, 0.0}, {1e-3, 5e-4}, {1e-4, 8e-4}}, tol) == Verdict::Member);
  // Rising by more than tol toward the limit is not trusted.
  CHECK(classify_estimates({{1e-2, -0.5}, {1e-3, -0.2}, {1e-4, -0.19}}, tol) == Verdict::Inconclusive);
  CHECK(classify_estimates({{1e-2, -0.5}, {1e-3, -0.0005}, {1e-4, 0.0}}, tol) == Verdict::Inconclusive);
  CHECK(classify_estimates({{1e-2, 0.3}, {1e-3, 0.3}, {1e-4, 0.3}}, tol) == Verdict::NonMember);
  // Positive but collapsing toward zero: not a stable limit yet.
  CHECK(classify_estimates({{1e-2, 0.3}, {1e-3, 0.03}, {1e-4, 0.003}}, tol) == Verdict::Inconclusive);
  CHECK(classify_estimates({}, tol) == Verdict::Inconclusive);
}

TEST_CASE("structured probes") {
  const DenseVector xbar{1, 0};
  const auto probes = make_probes(xbar, DenseVector{1, 1}, DenseVector{0, 2}, ProbeConfig{});
  std::set<std::string> labels;
  for (const auto& p : probes) {
    CHECK(std::abs(norm(p.direction) - 1.0) <= 1e-12);
    labels.insert(p.label);
  }
  for (const char* l : {"radial-out", "radial-in", "orth+y", "orth-y", "orth+z", "orth-z", "along+y", "along-y",
                        "along+z", "along-z", "coord+1", "coord-1", "coord+2", "coord-2", "random-0", "random-255"}) {
    CHECK_MESSAGE(labels.count(l) == 1, l);
  }
  CHECK(labels.size() == 14 + 256);

  const auto basis = probe_basis(SparseVector{{2, 1.0}}, SparseVector{{5, 1.0}}, SparseVector{});
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].first == 2);
  CHECK(basis[1].first == 5);
  CHECK(basis[2].first == 6);
}

TEST_CASE("denominators agree in sign and within sqrt 2") {
  InstanceGenerator gen(73);
  ProbeConfig sum;
  ProbeConfig euclid;
  euclid.denominator = Denominator::Euclidean;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = gen.uniform_int(2, 4);
    const DenseVector xbar = gen.cone_delta(n);
    const DenseVector y = gen.dense(n, -2, 2);
    const DenseVector z = gen.dense(n, -2, 2);
    const DenseVector u = xbar + 1e-3 * gen.unit_direction(n);
    const double qs = quotient(cone, xbar, y, z, u, Denominator::Sum);
    const double qe = quotient(cone, xbar, y, z, u, Denominator::Euclidean);
    CHECK((qs > 0) == (qe > 0));
    if (qe != 0.0) {
      const double ratio = qs / qe;
      CHECK(ratio >= std::sqrt(2.0) / 2 - 1e-12);
      CHECK(ratio <= 1.0 + 1e-12);
    }
  }
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = gen.uniform_int(2, 4);
    const DenseVector xbar = gen.cone_hat(n);
    const DenseVector y = gen.dense(n, -2, 2);
    const DenseVector member = cone_coderiv(xbar, y).singleton_value();
    const DenseVector z = k % 2 ? member : member + 0.5 * gen.unit_direction(n);
    CHECK(membership(cone, xbar, y, z, sum).verdict == membership(cone, xbar, y, z, euclid).verdict);
  }
}

TEST_CASE("same seed, same verdict") {
  ProbeConfig c;
  c.seed = 5;
  const DenseVector xbar{0, 1, -1};
  const DenseVector y{1, -1, 2};
  const DenseVector z{0.5, 0.5, 0.5};
  const auto a = membership(cone, xbar, y, z, c);
  const auto b = membership(cone, xbar, y, z, c);
  CHECK(a.verdict == b.verdict);
  CHECK(a.structured == b.structured);
  CHECK(a.witness->probe == b.witness->probe);
  CHECK(a.witness->direction == b.witness->direction);
  for (std::size_t i = 0; i < a.sup_estimates.size(); ++i) CHECK(a.sup_estimates[i].sup == b.sup_estimates[i].sup);

  c.seed = 6;
  const auto other = membership(cone, xbar, y, z, c);
  CHECK(other.structured == a.structured);
}

TEST_CASE("non-member witnesses reproduce their quotient") {
  InstanceGenerator gen(79);
  const ProbeConfig config;
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = gen.uniform_int(2, 4);
    const double r = gen.uniform(0.5, 2.0);
    const DenseVector xbar = gen.ball_sphere(n, r);
    const DenseVector y = gen.dense(n, -2, 2);
    const DenseVector z = gen.dense(n, -2, 2);
    const auto v = membership(ball(r), xbar, y, z, config);
    if (v.verdict != Verdict::NonMember) continue;
    ++checked;
    const auto& w = *v.witness;
    CHECK(w.radius == config.radii.back());
    const double again = quotient(ball(r), xbar, y, z, xbar + w.radius * w.direction);
    CHECK(again == w.quotient);
    CHECK(again > config.tolerance);
  }
  CHECK(checked > 50);
}

TEST_CASE("proof sequences reach their limit constants") {
  const ProbeConfig config;

  // Ball, y = 0, z = (0.6, 0) at xbar = (1, 0), r = 1: radial-out -> a(z) r.
  auto v = membership(ball(1), DenseVector{1, 0}, DenseVector{0, 0}, DenseVector{0.6, 0}, config);
  CHECK(*v.structured_at_smallest("radial-out") == doctest::Approx(0.6).epsilon(1e-3));

  // Cone, exclusion of lambda y: coord+j -> (1 - lambda)|y_j| / 2.
  for (const double lambda : {0.0, 0.5, -1.0}) {
    v = membership(cone, DenseVector{0, 1}, DenseVector{-1, 0}, lambda * DenseVector{-1, 0}, config);
    CHECK(*v.structured_at_smallest("coord+1") == doctest::Approx((1 - lambda) / 2).epsilon(1e-3));
  }

  // l2 with y outside K_Mbar, z = y: coord-m -> -y_m.
  const auto s = membership(l2, SparseVector{{1, 1.0}}, SparseVector{{3, -0.7}}, SparseVector{{3, -0.7}}, config);
  CHECK(*s.structured_at_smallest("coord-3") == doctest::Approx(0.7).epsilon(1e-3));
}
