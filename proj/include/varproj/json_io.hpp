#pragma once

// JSON encodings.
//
//   dense vector   [x1, x2, ...]
//   sparse vector  [[i, v], ...]  1-based, strictly increasing i, nonzero v
//   support set    [i, ...]
//   descriptor     {"variant": "singleton" | "empty" | "order_interval" |
//                   "partial" | "unknown", ...payload}

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "varproj/cone_rn.hpp"
#include "varproj/descriptor.hpp"
#include "varproj/linear_map.hpp"
#include "varproj/oracle.hpp"
#include "varproj/support_set.hpp"
#include "varproj/vectors.hpp"
#include "varproj/verify.hpp"

namespace varproj {

using Json = nlohmann::ordered_json;

/// Malformed JSON payload.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integral values below 2^53 are emitted as JSON integers.
Json number_to_json(double v);

Json to_json(const DenseVector& v);
Json to_json(const SparseVector& v);
Json to_json(const SupportSet& m);
Json to_json(const IndexPartition& p);
/// Kind tag plus the n x n matrix.
Json to_json(const LinearMap& map, std::size_t n);

DenseVector dense_from_json(const Json& j);
SparseVector sparse_from_json(const Json& j);
SupportSet support_from_json(const Json& j);

/// Parses text, wrapping syntax errors in ParseError.
Json parse_json(const std::string& text);

inline DenseVector decode(const Json& j, const DenseVector*) { return dense_from_json(j); }
inline SparseVector decode(const Json& j, const SparseVector*) { return sparse_from_json(j); }

template <HilbertVector V>
Json to_json(const CoderivDescriptor<V>& d) {
  return std::visit(
      [&](const auto& alt) -> Json {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, Singleton<V>>) {
          return Json{{"variant", "singleton"}, {"value", to_json(alt.value)}};
        } else if constexpr (std::is_same_v<T, EmptySet>) {
          return Json{{"variant", "empty"}};
        } else if constexpr (std::is_same_v<T, OrderInterval>) {
          return Json{{"variant", "order_interval"},
                      {"y", to_json(alt.y)},
                      {"support", to_json(alt.support)},
                      {"collapsed", alt.collapsed()}};
        } else if constexpr (std::is_same_v<T, PartialRules<V>>) {
          Json answers = Json::object();
          for (const auto& [name, m] : d.definite_answers()) answers[name] = to_string(m);
          return Json{{"variant", "partial"},
                      {"rule", to_string(alt.rule)},
                      {"xbar", to_json(alt.xbar)},
                      {"y", to_json(alt.y)},
                      {"answers", answers}};
        } else {
          return Json{{"variant", "unknown"}};
        }
      },
      d.value());
}

/// Summary of a verification suite: counts plus the failing and
/// inconclusive cases, in case-id order.
Json to_json(const SuiteReport& report);

PartialRule partial_rule_from_string(const std::string& s);

/// Inverse of to_json for descriptors; throws ParseError.
template <HilbertVector V>
CoderivDescriptor<V> descriptor_from_json(const Json& j) {
  using D = CoderivDescriptor<V>;
  if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string()) {
    throw ParseError("descriptor needs a string 'variant' tag");
  }
  const std::string tag = j["variant"].get<std::string>();
  auto field = [&](const char* name) -> const Json& {
    if (!j.contains(name)) throw ParseError(std::string("descriptor missing '") + name + "'");
    return j[name];
  };
  if (tag == "singleton") return D::singleton(decode(field("value"), static_cast<V*>(nullptr)));
  if (tag == "empty") return D::empty();
  if (tag == "unknown") return D::unknown();
  if (tag == "partial") {
    const Json& rule = field("rule");
    if (!rule.is_string()) throw ParseError("partial rule must be a string");
    return D::partial(partial_rule_from_string(rule.get<std::string>()),
                      decode(field("xbar"), static_cast<V*>(nullptr)),
                      decode(field("y"), static_cast<V*>(nullptr)));
  }
  if (tag == "order_interval") {
    if constexpr (std::is_same_v<V, SparseVector>) {
      return D::order_interval(sparse_from_json(field("y")), support_from_json(field("support")));
    } else {
      throw ParseError("order intervals are sparse-only");
    }
  }
  throw ParseError("unknown descriptor variant '" + tag + "'");
}

template <HilbertVector V>
Json to_json(const OracleVerdict<V>& v) {
  Json sups = Json::array();
  for (const auto& e : v.sup_estimates) sups.push_back({e.radius, e.sup});
  Json out{{"verdict", to_string(v.verdict)}, {"sup_estimates", sups}};
  if (v.witness) {
    out["witness"] = Json{{"probe", v.witness->probe},
                          {"direction", to_json(v.witness->direction)},
                          {"radius", v.witness->radius},
                          {"quotient", v.witness->quotient}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace varproj
