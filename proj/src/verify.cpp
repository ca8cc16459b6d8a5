#include "varproj/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "varproj/ball.hpp"
#include "varproj/cone_l2.hpp"
#include "varproj/cone_rn.hpp"
#include "varproj/instances.hpp"

namespace varproj {

namespace {

std::string fmt(const char* format, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

std::string num(double a) { return fmt("%.6g", a); }

std::string case_id(const std::string& group, std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", k);
  return group + "/" + buf;
}

CaseResult check(std::string id, bool passed, std::string detail) {
  CaseResult c;
  c.instance = id;
  c.id = std::move(id);
  c.passed = passed;
  c.detail = std::move(detail);
  return c;
}

double max_abs(const DenseVector& v) {
  double m = 0.0;
  for (const double x : v.entries()) m = std::max(m, std::abs(x));
  return m;
}

template <HilbertVector V>
std::string variant_name(const CoderivDescriptor<V>& d) {
  if (d.is_singleton()) return "singleton";
  if (d.is_empty()) return "empty";
  if (d.is_order_interval()) return "order_interval";
  if (d.is_partial()) return "partial";
  return "unknown";
}

template <HilbertVector V>
using Candidates = std::vector<std::pair<std::string, V>>;

// One shape case plus one case per candidate with a definite symbolic answer.
template <HilbertVector V>
void add_instance(std::vector<CaseResult>& out, const std::string& instance,
                  const CoderivDescriptor<V>& d, const std::string& expected_variant,
                  const Projection<V>& f, const V& xbar, const V& y,
                  const Candidates<V>& candidates, const ProbeConfig& config) {
  CaseResult shape = check(instance + "/shape", variant_name(d) == expected_variant,
                           "variant=" + variant_name(d) + " expected=" + expected_variant);
  shape.instance = instance;
  out.push_back(std::move(shape));

  for (const auto& [label, z] : candidates) {
    const Membership symbolic = d.contains(z);
    if (symbolic == Membership::Unknown) continue;
    const auto ov = membership(f, xbar, y, z, config);
    CaseResult c;
    c.id = instance + "/" + label;
    c.instance = instance;
    c.inconclusive = ov.verdict == Verdict::Inconclusive;
    c.passed = !(symbolic == Membership::Yes && ov.verdict == Verdict::NonMember) &&
               !(symbolic == Membership::No && ov.verdict == Verdict::Member);
    c.detail = std::string("symbolic=") + to_string(symbolic) + " oracle=" +
               to_string(ov.verdict) + " sup=" + num(ov.sup_estimates.back().sup);
    out.push_back(std::move(c));
  }
}

DenseVector nudge(InstanceGenerator& gen, const DenseVector& v) {
  return v + 0.5 * gen.unit_direction(v.size());
}

SparseVector fresh_unit(const SparseVector& a, const SparseVector& b) {
  return SparseVector::unit(std::max(a.is_zero() ? 0 : a.max_index(),
                                     b.is_zero() ? 0 : b.max_index()) + 1);
}

// Dense cases: value of a closed-form singleton and a point next to it.
Candidates<DenseVector> singleton_candidates(InstanceGenerator& gen, const DenseVector& v) {
  return {{"value", v}, {"nudged", nudge(gen, v)}};
}

Projection<DenseVector> dense_cone() { return [](const DenseVector& x) { return cone_project(x); }; }
Projection<SparseVector> sparse_cone() { return [](const SparseVector& x) { return l2_project(x); }; }

bool sorted_by_id(const CaseResult& a, const CaseResult& b) { return a.id < b.id; }

// ---- decomp -----------------------------------------------------------

std::vector<CaseResult> decomp_suite(std::uint64_t seed) {
  InstanceGenerator gen(seed);
  std::vector<CaseResult> out;
  for (std::size_t k = 0; k < 200; ++k) {
    const std::size_t n = gen.uniform_int(2, 8);
    const DenseVector xbar = gen.dense(n, -2.0, 2.0);
    const DenseVector u = gen.dense(n, -2.0, 2.0);
    const DenseVector v = gen.dense(n, -2.0, 2.0);
    const auto res = decomposition_residuals(xbar, u, v);
    const double worst = *std::max_element(res.begin(), res.end());
    out.push_back(check(case_id("decomp/identities", k), worst <= 1e-9, "max_rel=" + num(worst)));
  }
  for (std::size_t k = 0; k < 50; ++k) {
    const std::size_t n = gen.uniform_int(2, 8);
    const DenseVector xbar = gen.dense(n, -2.0, 2.0);
    const DenseVector u = gen.dense(n, -2.0, 2.0);
    const DenseVector v = gen.dense(n, -2.0, 2.0);
    const double s = gen.uniform(-3.0, 3.0);
    const double t = gen.uniform(-3.0, 3.0);
    const DenseVector w = s * u + t * v;
    const double da = std::abs(radial_coefficient(xbar, w) -
                               (s * radial_coefficient(xbar, u) + t * radial_coefficient(xbar, v)));
    const double a_scale = std::max(1.0, norm(w) / norm(xbar));
    const DenseVector lin = s * orth_component(xbar, u) + t * orth_component(xbar, v);
    const double dorth = norm(orth_component(xbar, w) - lin);
    const bool ok = da <= 1e-10 * a_scale && dorth <= 1e-10 * std::max(1.0, norm(w));
    out.push_back(check(case_id("decomp/linearity", k), ok, "da=" + num(da) + " do=" + num(dorth)));
  }
  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t n = gen.uniform_int(2, 8);
    const DenseVector xbar = gen.dense(n, -2.0, 2.0);
    const DenseVector w = gen.dense(n, -2.0, 2.0);
    double prev_a = INFINITY;
    double prev_o = INFINITY;
    bool ok = true;
    for (int j = 1; j <= 50; ++j) {
      const auto d = orth_decompose(xbar, xbar + (1.0 / j) * w);
      const double ea = std::abs(d.a - 1.0);
      const double eo = norm(d.o);
      ok = ok && ea <= prev_a * (1 + 1e-12) + 1e-15 && eo <= prev_o * (1 + 1e-12) + 1e-15;
      prev_a = ea;
      prev_o = eo;
    }
    ok = ok && prev_a < 0.1 * std::abs(radial_coefficient(xbar, w)) + 1e-12;
    out.push_back(check(case_id("decomp/convergence", k), ok, "final_gap=" + num(prev_a)));
  }
  return out;
}

// ---- ball-deriv -------------------------------------------------------

std::vector<CaseResult> ball_deriv_suite(std::uint64_t seed) {
  InstanceGenerator gen(seed);
  std::vector<CaseResult> out;

  for (const bool exterior : {false, true}) {
    const std::string group = exterior ? "ball-deriv/frechet-exterior" : "ball-deriv/frechet-interior";
    for (std::size_t k = 0; k < 30; ++k) {
      const std::size_t n = gen.uniform_int(2, 6);
      const BallOperator op(gen.uniform(0.5, 2.0));
      const DenseVector xbar = exterior ? gen.ball_exterior(n, op.radius()) : gen.ball_interior(n, op.radius());
      const Matrix fd = jacobian_fd([&](const DenseVector& x) { return ball_project(op, x); }, xbar, 1e-6);
      const auto map = ball_frechet(op, xbar);
      const double err = map ? max_abs_diff(fd, map->matrix(n)) : INFINITY;
      out.push_back(check(case_id(group, k), err <= 1e-5, "max_abs=" + num(err)));
    }
  }

  for (const auto cls : {DirectionClass::Up, DirectionClass::Down, DirectionClass::Radial}) {
    const std::string group = std::string("ball-deriv/gateaux-") + to_string(cls);
    for (std::size_t k = 0; k < 30; ++k) {
      const std::size_t n = gen.uniform_int(2, 6);
      const BallOperator op(gen.uniform(0.5, 2.0));
      const double r = op.radius();
      const DenseVector xbar = gen.ball_sphere(n, r);
      const DenseVector o = orth_component(xbar, gen.dense(n, -1.0, 1.0));
      DenseVector w = o;
      switch (cls) {
        case DirectionClass::Up:
          w = o + (gen.coin() ? 0.0 : gen.uniform(0.1, 1.0) / r) * xbar;
          break;
        case DirectionClass::Down:
          w = o - (gen.uniform(0.1, 1.0) / r) * xbar;
          break;
        case DirectionClass::Radial:
          w = gen.uniform(0.1, 2.0) * xbar;
          break;
      }
      const auto f = Projection<DenseVector>([&](const DenseVector& x) { return ball_project(op, x); });
      const DenseVector q = directional_quotient(f, xbar, w, 1e-5);
      const double err = max_abs(q - ball_gateaux(op, xbar, w));
      const bool same_class = classify_direction(op, xbar, w) == cls;
      out.push_back(check(case_id(group, k), same_class && err <= 1e-4,
                          "max_abs=" + num(err) + (same_class ? "" : " misclassified")));
    }
  }

  for (std::size_t k = 0; k < 100; ++k) {
    const std::size_t n = gen.uniform_int(2, 6);
    const BallOperator op(gen.uniform(0.5, 2.0));
    const DenseVector u = gen.dense(n, -3.0, 3.0);
    const DenseVector v = gen.dense(n, -3.0, 3.0);
    const DenseVector pu = ball_project(op, u);
    const double gap = norm(pu - ball_project(op, v)) - norm(u - v);
    const double idem = norm(ball_project(op, pu) - pu);
    out.push_back(check(case_id("ball-deriv/nonexpansive", k), gap <= 1e-12, "gap=" + num(gap)));
    out.push_back(check(case_id("ball-deriv/idempotent", k), idem <= 1e-12, "drift=" + num(idem)));
  }

  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t n = gen.uniform_int(2, 6);
    const BallOperator op(gen.uniform(0.5, 2.0));
    const DenseVector xbar = gen.coin() ? gen.ball_exterior(n, op.radius()) : gen.ball_interior(n, op.radius());
    const DenseVector y = gen.dense(n, -2.0, 2.0);
    const auto d = ball_coderiv(op, xbar, y);
    const auto map = ball_frechet(op, xbar);
    const bool ok = map && d.is_singleton() && approx_equal(d.singleton_value(), map->apply(y));
    out.push_back(check(case_id("ball-deriv/coderiv-frechet", k), ok, "variant=" + variant_name(d)));
  }
  return out;
}

// ---- cone-rn ----------------------------------------------------------

DenseVector nonzero_delta(InstanceGenerator& gen, std::size_t n, bool allow_positive) {
  for (;;) {
    DenseVector x = gen.cone_delta(n, allow_positive);
    if (!x.is_zero()) return x;
  }
}

std::vector<CaseResult> cone_rn_suite(std::uint64_t seed) {
  InstanceGenerator gen(seed);
  std::vector<CaseResult> out;

  for (std::size_t k = 0; k < 30; ++k) {
    const DenseVector x = gen.dense(gen.uniform_int(1, 6), -2.0, 2.0);
    bool ok = true;
    for (const double lambda : {0.0, 0.5, 1.0, 2.0, 10.0}) {
      ok = ok && cone_project(lambda * x) == lambda * cone_project(x);
    }
    const DenseVector w = gen.dense(x.size(), -2.0, 2.0);
    const bool d_ok = d_map(DenseVector::zeros(x.size()), w) == cone_project(w);
    out.push_back(check(case_id("cone-rn/homogeneity", k), ok, ""));
    out.push_back(check(case_id("cone-rn/d-at-origin", k), d_ok, ""));
  }

  const auto f = dense_cone();
  for (std::size_t k = 0; k < 50; ++k) {
    const std::size_t n = gen.uniform_int(1, 6);
    const DenseVector xbar = gen.cone_delta(n);
    DenseVector w = gen.dense(n, -2.0, 2.0);
    if (w.is_zero()) w = DenseVector::unit(n, 0);
    const double err = max_abs(directional_quotient(f, xbar, w, 1e-6) - cone_gateaux(xbar, w));
    out.push_back(check(case_id("cone-rn/gateaux-delta", k), err <= 1e-5, "max_abs=" + num(err)));
  }

  const std::vector<std::pair<std::string, std::function<DenseVector(std::size_t)>>> smooth = {
      {"k-interior", [&](std::size_t n) { return gen.cone_interior(n); }},
      {"neg-k-interior", [&](std::size_t n) { return gen.neg_cone_interior(n); }},
      {"k-hat", [&](std::size_t n) { return gen.cone_hat(n); }},
  };
  for (const auto& [name, make] : smooth) {
    for (std::size_t k = 0; k < 20; ++k) {
      const std::size_t n = gen.uniform_int(2, 6);
      const DenseVector xbar = make(n);
      const auto map = cone_frechet(xbar);
      const double err = map ? max_abs_diff(jacobian_fd(f, xbar, 1e-6), map->matrix(n)) : INFINITY;
      out.push_back(check(case_id("cone-rn/frechet-" + name, k), err <= 1e-5, "max_abs=" + num(err)));

      const DenseVector y = gen.dense(n, -2.0, 2.0);
      const auto d = cone_coderiv(xbar, y);
      const bool ok = map && d.is_singleton() && d.singleton_value() == map->apply(y);
      out.push_back(check(case_id("cone-rn/coderiv-frechet-" + name, k), ok, "variant=" + variant_name(d)));
    }
  }

  for (std::size_t k = 0; k < 30; ++k) {
    const std::size_t n = gen.uniform_int(2, 6);
    const DenseVector x = gen.cone_hat(n);
    const DenseVector w = gen.dense(n, -2.0, 2.0);
    const DenseVector v = gen.dense(n, -2.0, 2.0);
    const double s = gen.uniform(-2.0, 2.0);
    const bool linear = approx_equal(b_map(x, s * w + v), s * b_map(x, w) + b_map(x, v));
    const DenseVector b = b_map(x, w);
    const bool in_delta = std::any_of(b.entries().begin(), b.entries().end(), [](double t) { return t == 0.0; });
    out.push_back(check(case_id("cone-rn/b-map", k), linear && in_delta, ""));
  }

  ProbeConfig config;
  config.seed = seed;
  auto cases = cone_coderiv_cases(seed, 5, config);
  out.insert(out.end(), cases.begin(), cases.end());
  return out;
}

// ---- cone-l2 ----------------------------------------------------------

std::vector<CaseResult> cone_l2_suite(std::uint64_t seed) {
  InstanceGenerator gen(seed);
  std::vector<CaseResult> out;

  for (std::size_t k = 0; k < 30; ++k) {
    const SupportSet m = gen.support(gen.uniform_int(1, 3), 5);
    const SparseVector y = gen.k_mbar_point(m, gen.uniform_int(1, 3));
    // Chain z <= w <= y built by shrinking off-M coordinates.
    std::vector<SparseVector::Entry> we;
    std::vector<SparseVector::Entry> ze;
    for (const auto& [i, v] : y.values()) {
      if (m.contains(i)) {
        we.emplace_back(i, v);
        ze.emplace_back(i, v);
      } else {
        const double wv = v * gen.uniform(0.1, 1.0);
        we.emplace_back(i, wv);
        ze.emplace_back(i, wv * gen.uniform(0.1, 1.0));
      }
    }
    const SparseVector w(we);
    const SparseVector z(ze);
    const bool ok = order_leq(y, y, m) && order_leq(w, y, m) && order_leq(z, w, m) &&
                    order_leq(z, y, m) && (!order_leq(y, w, m) || w == y);
    out.push_back(check(case_id("cone-l2/order-axioms", k), ok, ""));
  }

  for (std::size_t k = 0; k < 20; ++k) {
    const SupportSet m = gen.support(gen.uniform_int(1, 3), 5);
    const SparseVector xbar = gen.z_m_point(m);
    const SparseVector y = gen.k_mbar_point(m, 0);
    const auto d = l2_coderiv(xbar, m, y);
    const SparseVector id = l2_coderiv_restricted_identity(xbar, m, y);
    const bool ok = id == y && d.is_order_interval() && d.interval().collapsed() &&
                    d.contains(y) == Membership::Yes;
    out.push_back(check(case_id("cone-l2/restricted-identity", k), ok, "variant=" + variant_name(d)));
  }

  ProbeConfig config;
  config.seed = seed;
  auto cases = l2_coderiv_cases(seed, 5, config);
  out.insert(out.end(), cases.begin(), cases.end());
  return out;
}

// ---- oracle-consistency -----------------------------------------------

std::vector<CaseResult> oracle_suite(std::uint64_t seed) {
  InstanceGenerator gen(seed);
  std::vector<CaseResult> out;
  ProbeConfig sum;
  sum.seed = seed;
  ProbeConfig euclid = sum;
  euclid.denominator = Denominator::Euclidean;
  const auto f = dense_cone();

  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t n = gen.uniform_int(2, 4);
    const DenseVector xbar = gen.cone_hat(n);
    const DenseVector y = gen.dense(n, -2.0, 2.0);
    const DenseVector member = cone_coderiv(xbar, y).singleton_value();
    const DenseVector z = gen.coin() ? member : nudge(gen, member);
    const auto a = membership(f, xbar, y, z, sum);
    const auto b = membership(f, xbar, y, z, euclid);
    out.push_back(check(case_id("oracle-consistency/denominator", k), a.verdict == b.verdict,
                        std::string(to_string(a.verdict)) + " vs " + to_string(b.verdict)));
  }

  for (std::size_t k = 0; k < 10; ++k) {
    const std::size_t n = gen.uniform_int(2, 4);
    const DenseVector xbar = nonzero_delta(gen, n, true);
    const DenseVector y = gen.dense(n, -2.0, 2.0);
    const DenseVector z = gen.dense(n, -2.0, 2.0);
    const auto a = membership(f, xbar, y, z, sum);
    const auto b = membership(f, xbar, y, z, sum);
    bool same = a.verdict == b.verdict && a.structured == b.structured &&
                a.witness->probe == b.witness->probe && a.witness->quotient == b.witness->quotient;
    for (std::size_t i = 0; i < a.sup_estimates.size(); ++i) {
      same = same && a.sup_estimates[i].sup == b.sup_estimates[i].sup;
    }
    out.push_back(check(case_id("oracle-consistency/determinism", k), same, ""));
  }

  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t n = gen.uniform_int(2, 4);
    const BallOperator op(gen.uniform(0.5, 2.0));
    const Projection<DenseVector> ball = [&](const DenseVector& x) { return ball_project(op, x); };
    const DenseVector xbar = gen.ball_sphere(n, op.radius());
    const DenseVector y = gen.dense(n, -2.0, 2.0);
    const DenseVector z = gen.dense(n, -2.0, 2.0);
    const auto v = membership(ball, xbar, y, z, sum);
    const auto& w = *v.witness;
    const double again = quotient(ball, xbar, y, z, xbar + w.radius * w.direction);
    const bool ok = again == w.quotient && w.quotient == v.sup_estimates.back().sup &&
                    std::abs(norm(w.direction) - 1.0) <= 1e-12;
    out.push_back(check(case_id("oracle-consistency/witness", k), ok, "quotient=" + num(w.quotient)));
  }
  return out;
}

}  // namespace

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; }));
}

std::size_t SuiteReport::inconclusive() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.inconclusive; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"decomp",  "ball-deriv",         "ball-coderiv",
                                                 "cone-rn", "cone-l2", "oracle-consistency",
                                                 "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  ProbeConfig config;
  config.seed = seed;
  const std::map<std::string, std::function<std::vector<CaseResult>()>> suites = {
      {"decomp", [&] { return decomp_suite(seed); }},
      {"ball-deriv", [&] { return ball_deriv_suite(seed); }},
      {"ball-coderiv", [&] { return ball_coderiv_cases(seed, 6, config); }},
      {"cone-rn", [&] { return cone_rn_suite(seed); }},
      {"cone-l2", [&] { return cone_l2_suite(seed); }},
      {"oracle-consistency", [&] { return oracle_suite(seed); }},
  };

  SuiteReport report;
  report.suite = name;
  report.seed = seed;
  if (name == "all") {
    for (const auto& [_, run] : suites) {
      auto part = run();
      report.cases.insert(report.cases.end(), part.begin(), part.end());
    }
  } else {
    const auto it = suites.find(name);
    if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    report.cases = it->second();
  }
  std::stable_sort(report.cases.begin(), report.cases.end(), sorted_by_id);
  return report;
}

std::array<double, 5> decomposition_residuals(const DenseVector& xbar, const DenseVector& u,
                                              const DenseVector& v) {
  const auto du = orth_decompose(xbar, u);
  const auto dv = orth_decompose(xbar, v);
  const double nx2 = inner(xbar, xbar);
  const double nu = norm(u);
  const double nv = norm(v);
  auto rel = [](double lhs, double rhs, double scale) {
    return std::abs(lhs - rhs) / std::max(scale, 1e-300);
  };
  const DenseVector mix = du.a * xbar + dv.o;
  const DenseVector osum = du.o + dv.o;
  const double wide = (nu + nv) * (nu + nv);
  return {
      rel(inner(u, v), du.a * dv.a * nx2 + inner(du.o, dv.o), nu * nv),
      rel(inner(du.a * xbar, dv.o), 0.0, nu * nv),
      rel(inner(mix, mix), du.a * du.a * nx2 + inner(dv.o, dv.o), wide),
      rel(nu * nu, du.a * du.a * nx2 + inner(du.o, du.o), nu * nu),
      rel(inner(u + v, u + v), (du.a + dv.a) * (du.a + dv.a) * nx2 + inner(osum, osum), wide),
  };
}

std::vector<CaseResult> ball_coderiv_cases(std::uint64_t seed, std::size_t per_family,
                                           const ProbeConfig& config) {
  InstanceGenerator gen(seed);
  std::vector<CaseResult> out;
  for (std::size_t k = 0; k < per_family; ++k) {
    const std::size_t n = gen.uniform_int(2, 4);
    const BallOperator op(gen.uniform(0.5, 2.0));
    const double r = op.radius();
    const Projection<DenseVector> f = [&](const DenseVector& x) { return ball_project(op, x); };
    const DenseVector theta = DenseVector::zeros(n);

    for (const bool exterior : {false, true}) {
      const DenseVector xbar = exterior ? gen.ball_exterior(n, r) : gen.ball_interior(n, r);
      const DenseVector y = gen.dense(n, -2.0, 2.0);
      const auto d = ball_coderiv(op, xbar, y);
      add_instance(out, case_id(exterior ? "ball/exterior" : "ball/interior", k), d, "singleton", f,
                   xbar, y, d.is_singleton() ? singleton_candidates(gen, d.singleton_value()) : Candidates<DenseVector>{},
                   config);
    }

    const DenseVector xbar = gen.ball_sphere(n, r);
    {
      const auto d = ball_coderiv(op, xbar, theta);
      add_instance(out, case_id("ball/sphere-zero-y", k), d, "singleton", f, xbar, theta,
                   singleton_candidates(gen, theta), config);
    }
    {
      const auto d = ball_coderiv(op, xbar, xbar);
      add_instance(out, case_id("ball/sphere-self", k), d, "empty", f, xbar, xbar,
                   {{"theta", theta}, {"xbar", xbar}, {"random", gen.dense(n, -2.0, 2.0)}}, config);
    }
    {
      const DenseVector y = (-gen.uniform(0.1, 2.0) / r) * xbar;
      const auto d = ball_coderiv(op, xbar, y);
      add_instance(out, case_id("ball/sphere-antiradial", k), d, "partial", f, xbar, y,
                   {{"theta", theta}}, config);
    }
    {
      const double c = gen.coin() ? gen.uniform(0.2, 0.8) : gen.uniform(1.2, 2.0);
      const DenseVector y = c * xbar;
      const auto d = ball_coderiv(op, xbar, y);
      add_instance(out, case_id("ball/sphere-radial", k), d, "partial", f, xbar, y,
                   {{"theta", theta}}, config);
    }
    {
      const DenseVector o = orth_component(xbar, gen.unit_direction(n));
      const DenseVector y = gen.uniform(-1.0, 1.0) / r * xbar + (gen.uniform(0.3, 2.0) / norm(o)) * o;
      const auto d = ball_coderiv(op, xbar, y);
      add_instance(out, case_id("ball/sphere-generic", k), d, "partial", f, xbar, y,
                   {{"theta", theta}}, config);
    }
  }
  std::stable_sort(out.begin(), out.end(), sorted_by_id);
  return out;
}

std::vector<CaseResult> cone_coderiv_cases(std::uint64_t seed, std::size_t per_family,
                                           const ProbeConfig& config) {
  InstanceGenerator gen(seed);
  std::vector<CaseResult> out;
  const auto f = dense_cone();
  for (std::size_t k = 0; k < per_family; ++k) {
    const std::size_t n = gen.uniform_int(2, 4);
    const DenseVector theta = DenseVector::zeros(n);

    const std::vector<std::pair<std::string, DenseVector>> smooth = {
        {"cone/k-interior", gen.cone_interior(n)},
        {"cone/neg-k-interior", gen.neg_cone_interior(n)},
        {"cone/k-hat", gen.cone_hat(n)},
    };
    for (const auto& [group, xbar] : smooth) {
      const DenseVector y = gen.dense(n, -2.0, 2.0);
      const auto d = cone_coderiv(xbar, y);
      add_instance(out, case_id(group, k), d, "singleton", f, xbar, y,
                   d.is_singleton() ? singleton_candidates(gen, d.singleton_value()) : Candidates<DenseVector>{},
                   config);
    }

    {
      const DenseVector xbar = gen.cone_delta(n);
      const auto d = cone_coderiv(xbar, theta);
      add_instance(out, case_id("cone/delta-zero-y", k), d, "singleton", f, xbar, theta,
                   singleton_candidates(gen, theta), config);
    }
    for (const bool allow_positive : {true, false}) {
      const DenseVector xbar = nonzero_delta(gen, n, allow_positive);
      const auto d = cone_coderiv(xbar, xbar);
      auto cands = singleton_candidates(gen, cone_project(xbar));
      cands.emplace_back("theta", theta);
      add_instance(out, case_id(allow_positive ? "cone/delta-self" : "cone/delta-self-nonpositive", k), d,
                   "singleton", f, xbar, xbar, cands, config);
    }
    {
      const DenseVector xbar = gen.cone_delta(n);
      const auto zeros = partition(xbar).zero;
      const std::size_t j = zeros[gen.uniform_int(0, zeros.size() - 1)];
      std::vector<double> yv(n);
      for (double& t : yv) t = gen.signed_away_from_zero();
      yv[j - 1] = -std::abs(yv[j - 1]);
      const DenseVector y(std::move(yv));
      const auto d = cone_coderiv(xbar, y);
      add_instance(out, case_id("cone/delta-excluded", k), d, "partial", f, xbar, y,
                   {{"lambda=0", 0.0 * y}, {"lambda=0.5", 0.5 * y}, {"lambda=0.9", 0.9 * y},
                    {"lambda=-1", -1.0 * y}},
                   config);
    }
  }
  std::stable_sort(out.begin(), out.end(), sorted_by_id);
  return out;
}

std::vector<CaseResult> l2_coderiv_cases(std::uint64_t seed, std::size_t per_family,
                                         const ProbeConfig& config) {
  InstanceGenerator gen(seed);
  std::vector<CaseResult> out;
  const auto f = sparse_cone();
  const SparseVector theta;
  for (std::size_t k = 0; k < per_family; ++k) {
    const SupportSet m = gen.support(gen.uniform_int(1, 3), 5);
    const SparseVector xbar = gen.z_m_point(m);
    const auto m_index = m.as_vector()[gen.uniform_int(0, m.size() - 1)];
    const SparseVector e_m = SparseVector::unit(m_index);

    {
      const auto d = l2_coderiv(xbar, m, theta);
      add_instance(out, case_id("l2/zero-y", k), d, "singleton", f, xbar, theta,
                   {{"value", theta}, {"nudged", 0.5 * e_m}}, config);
    }
    {
      const SparseVector y = gen.k_mbar_point(m, 0);
      const auto d = l2_coderiv(xbar, m, y);
      add_instance(out, case_id("l2/boundary", k), d, "order_interval", f, xbar, y,
                   {{"y", y}, {"on-m", y + 0.5 * e_m}, {"fresh", y + 0.5 * fresh_unit(xbar, y)}},
                   config);
      const bool same = l2_coderiv_restricted_identity(xbar, m, y) == y && d.contains(y) == Membership::Yes;
      out.push_back(check(case_id("l2/restricted", k) + "/identity", same, ""));
    }
    {
      const SparseVector y = gen.k_mbar_point(m, gen.uniform_int(1, 2));
      const auto d = l2_coderiv(xbar, m, y);
      Candidates<SparseVector> cands = {{"y", y}, {"on-m", y + 0.5 * e_m}, {"fresh", y + 0.5 * fresh_unit(xbar, y)}};
      if (const auto pair = d.distinct_members()) cands.emplace_back("second", pair->second);
      for (const auto& [i, v] : y.values()) {
        if (m.contains(i)) continue;
        const SparseVector e = SparseVector::unit(i);
        cands.emplace_back("above-" + std::to_string(i), y + 0.5 * e);
        cands.emplace_back("negative-" + std::to_string(i), y - (v + 0.5) * e);
        break;
      }
      add_instance(out, case_id("l2/interval", k), d, "order_interval", f, xbar, y, cands, config);
    }
    {
      const SparseVector base = gen.k_mbar_point(m, gen.uniform_int(0, 1));
      const SparseVector y = base - gen.uniform(0.1, 2.0) * fresh_unit(xbar, base);
      const auto d = l2_coderiv(xbar, m, y);
      add_instance(out, case_id("l2/outside", k), d, "partial", f, xbar, y, {{"y", y}}, config);
    }
  }
  std::stable_sort(out.begin(), out.end(), sorted_by_id);
  return out;
}

}  // namespace varproj
