// varproj: JSON front end for the projection, derivative and coderivative
// queries and the verification suites.
//
// Exit codes: 0 success / all suites passed, 1 suite failure, 2 bad input.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "varproj/ball.hpp"
#include "varproj/cone_l2.hpp"
#include "varproj/cone_rn.hpp"
#include "varproj/json_io.hpp"
#include "varproj/oracle.hpp"
#include "varproj/verify.hpp"

using namespace varproj;

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string set;
  std::optional<double> radius;
  std::optional<std::size_t> dim;
  std::optional<std::string> support, xbar, y, z, w, point;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::string suite;
};

std::uint64_t effective_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("VARPROJ_SEED")) {
    try {
      std::size_t used = 0;
      const auto s = std::stoull(env, &used);
      if (used == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw BadInput("VARPROJ_SEED must be a nonnegative integer");
  }
  return 42;
}

const std::string& require(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw BadInput(std::string("missing ") + flag);
  return *v;
}

// A ball payload is sparse when it is written as [[i, v], ...] or [].
bool looks_sparse(const Json& j) { return j.is_array() && (j.empty() || j.front().is_array()); }

DenseVector dense_arg(const Options& o, const std::optional<std::string>& text, const char* flag) {
  DenseVector v = dense_from_json(parse_json(require(text, flag)));
  if (o.dim && v.size() != *o.dim) {
    throw BadInput(std::string(flag) + " has dimension " + std::to_string(v.size()) +
                   ", expected " + std::to_string(*o.dim));
  }
  return v;
}

SparseVector sparse_arg(const std::optional<std::string>& text, const char* flag) {
  return sparse_from_json(parse_json(require(text, flag)));
}

template <class V>
V vector_arg(const Options& o, const std::optional<std::string>& text, const char* flag) {
  if constexpr (std::is_same_v<V, DenseVector>) {
    return dense_arg(o, text, flag);
  } else {
    return sparse_arg(text, flag);
  }
}

BallOperator ball_op(const Options& o) {
  if (!o.radius) throw BadInput("--radius is required for --set ball");
  return BallOperator(*o.radius);
}

SupportSet support_arg(const Options& o) {
  return support_from_json(parse_json(require(o.support, "--support")));
}

ProbeConfig probe_config(const Options& o) {
  ProbeConfig c;
  c.seed = effective_seed(o);
  if (o.tolerance) c.tolerance = *o.tolerance;
  c.validate();
  return c;
}

// Decides whether the ball payloads are dense or sparse from the first one given.
bool ball_is_sparse(const Options& o) {
  for (const auto* v : {&o.point, &o.xbar, &o.y, &o.z, &o.w}) {
    if (*v) return looks_sparse(parse_json(**v));
  }
  return false;
}

template <class V>
Json ball_command(const std::string& cmd, const Options& o) {
  const BallOperator op = ball_op(o);
  if (cmd == "project") {
    return {{"result", to_json(ball_project(op, vector_arg<V>(o, o.point, "--point")))}};
  }
  const V xbar = vector_arg<V>(o, o.xbar, "--xbar");
  if (cmd == "gateaux") {
    const V w = vector_arg<V>(o, o.w, "--w");
    Json out{{"result", to_json(ball_gateaux(op, xbar, w))},
             {"region", to_string(ball_region(op, xbar))}};
    if (ball_region(op, xbar) == BallRegion::Sphere) {
      out["direction_class"] = to_string(classify_direction(op, xbar, w));
    }
    return out;
  }
  if (cmd == "frechet") {
    if constexpr (std::is_same_v<V, DenseVector>) {
      const auto map = ball_frechet(op, xbar);
      Json out{{"region", to_string(ball_region(op, xbar))}, {"exists", map.has_value()}};
      if (map) out["map"] = to_json(*map, xbar.size());
      return out;
    } else {
      throw BadInput("frechet matrices need dense vectors");
    }
  }
  const V y = vector_arg<V>(o, o.y, "--y");
  if (cmd == "coderiv") {
    const auto d = ball_coderiv(op, xbar, y);
    Json out = to_json(d);
    if (o.z) out["contains"] = to_string(d.contains(vector_arg<V>(o, o.z, "--z")));
    return out;
  }
  const Projection<V> f = [&](const V& x) { return ball_project(op, x); };
  return to_json(membership(f, xbar, y, vector_arg<V>(o, o.z, "--z"), probe_config(o)));
}

Json cone_rn_command(const std::string& cmd, const Options& o) {
  if (cmd == "project") return {{"result", to_json(cone_project(dense_arg(o, o.point, "--point")))}};
  const DenseVector xbar = dense_arg(o, o.xbar, "--xbar");
  if (cmd == "gateaux") {
    return {{"result", to_json(cone_gateaux(xbar, dense_arg(o, o.w, "--w")))},
            {"region", to_string(cone_region(xbar))}};
  }
  if (cmd == "frechet") {
    const auto map = cone_frechet(xbar);
    Json out{{"region", to_string(cone_region(xbar))}, {"exists", map.has_value()}};
    if (map) out["map"] = to_json(*map, xbar.size());
    return out;
  }
  const DenseVector y = dense_arg(o, o.y, "--y");
  if (cmd == "coderiv") {
    const auto d = cone_coderiv(xbar, y);
    Json out = to_json(d);
    if (o.z) out["contains"] = to_string(d.contains(dense_arg(o, o.z, "--z")));
    return out;
  }
  const Projection<DenseVector> f = [](const DenseVector& x) { return cone_project(x); };
  return to_json(membership(f, xbar, y, dense_arg(o, o.z, "--z"), probe_config(o)));
}

Json cone_l2_command(const std::string& cmd, const Options& o) {
  if (cmd == "project") return {{"result", to_json(l2_project(sparse_arg(o.point, "--point")))}};
  if (cmd == "gateaux" || cmd == "frechet") {
    throw BadInput(cmd + " is not available for --set cone-l2");
  }
  const SparseVector xbar = sparse_arg(o.xbar, "--xbar");
  const SparseVector y = sparse_arg(o.y, "--y");
  if (cmd == "coderiv") {
    // M plays no part when y = 0, so --support may be omitted there.
    const auto d = y.is_zero() && !o.support ? l2_coderiv(xbar, SupportSet{1}, y)
                                             : l2_coderiv(xbar, support_arg(o), y);
    Json out = to_json(d);
    if (o.z) out["contains"] = to_string(d.contains(sparse_arg(o.z, "--z")));
    return out;
  }
  const Projection<SparseVector> f = [](const SparseVector& x) { return l2_project(x); };
  return to_json(membership(f, xbar, y, sparse_arg(o.z, "--z"), probe_config(o)));
}

Json run_query(const std::string& cmd, const Options& o) {
  if (o.set == "ball") {
    return ball_is_sparse(o) ? ball_command<SparseVector>(cmd, o) : ball_command<DenseVector>(cmd, o);
  }
  if (o.set == "cone-rn") return cone_rn_command(cmd, o);
  if (o.set == "cone-l2") return cone_l2_command(cmd, o);
  throw BadInput("--set must be one of ball, cone-rn, cone-l2");
}

void add_query_flags(CLI::App* sub, Options& o, bool needs_z) {
  sub->add_option("--set", o.set, "ball | cone-rn | cone-l2")->required();
  sub->add_option("--radius", o.radius, "ball radius");
  sub->add_option("--dim", o.dim, "expected dimension of dense payloads");
  sub->add_option("--support", o.support, "support set M as a JSON index array");
  sub->add_option("--xbar", o.xbar);
  sub->add_option("--y", o.y);
  sub->add_option("--z", o.z, needs_z ? "candidate member" : "optional membership query");
  sub->add_option("--w", o.w, "direction");
  sub->add_option("--point", o.point);
  sub->add_option("--seed", o.seed);
  sub->add_option("--tolerance", o.tolerance);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric projections onto balls and positive cones: derivatives and coderivatives"};
  app.require_subcommand(1);
  Options o;

  const std::pair<const char*, const char*> queries[] = {
      {"project", "project --point onto the set"},
      {"gateaux", "directional derivative at --xbar along --w"},
      {"frechet", "Frechet derivative at --xbar, if it exists"},
      {"coderiv", "coderivative descriptor at (--xbar, --y), optionally tested on --z"},
      {"oracle-member", "numerical membership test of --z"},
  };
  for (const auto& [name, about] : queries) {
    add_query_flags(app.add_subcommand(name, about), o, std::string(name) == "oracle-member");
  }
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", o.suite)->required();
  verify->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "varproj: " << e.what() << "\n";
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "verify") {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
        throw BadInput("unknown suite '" + o.suite + "'");
      }
      const SuiteReport report = run_suite(o.suite, effective_seed(o));
      std::cout << to_json(report).dump() << "\n";
      return report.ok() ? 0 : 1;
    }
    std::cout << run_query(cmd, o).dump() << "\n";
    return 0;
  } catch (const BadInput& e) {
    std::cerr << "varproj: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "varproj: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "varproj: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    std::cerr << "varproj: " << e.what() << "\n";
  }
  return 2;
}
