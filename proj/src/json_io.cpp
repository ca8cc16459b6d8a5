#include "varproj/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <set>

namespace varproj {

namespace {

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

std::size_t positive_index(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("index must be an integer");
  const auto i = j.get<std::int64_t>();
  if (i < 1) throw ParseError("indices are 1-based");
  return static_cast<std::size_t>(i);
}

}  // namespace

Json number_to_json(double v) {
  constexpr double kExact = 9007199254740992.0;  // 2^53
  if (std::isfinite(v) && std::abs(v) < kExact && v == std::trunc(v)) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

Json to_json(const DenseVector& v) {
  Json out = Json::array();
  for (double x : v.entries()) out.push_back(number_to_json(x));
  return out;
}

Json to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [i, x] : v.values()) out.push_back({i, number_to_json(x)});
  return out;
}

Json to_json(const SupportSet& m) { return Json(m.as_vector()); }

Json to_json(const IndexPartition& p) {
  return Json{{"plus", p.plus}, {"minus", p.minus}, {"zero", p.zero}};
}

Json to_json(const LinearMap& map, std::size_t n) {
  const Matrix m = map.matrix(n);
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(number_to_json(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"kind", to_string(map.kind())}, {"matrix", rows}};
}

DenseVector dense_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("dense vector must be a nonempty array");
  std::vector<double> entries;
  entries.reserve(j.size());
  for (const auto& x : j) entries.push_back(finite_number(x, "vector entry"));
  return DenseVector(std::move(entries));
}

SparseVector sparse_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("sparse vector must be an array of [index, value]");
  std::vector<SparseVector::Entry> entries;
  std::size_t last = 0;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("sparse entry must be an [index, value] pair");
    }
    const std::size_t i = positive_index(pair[0]);
    if (i <= last) throw ParseError("sparse indices must be strictly increasing");
    const double v = finite_number(pair[1], "sparse value");
    if (v == 0.0) throw ParseError("sparse values must be nonzero");
    entries.emplace_back(i, v);
    last = i;
  }
  return SparseVector(entries);
}

SupportSet support_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("support must be a nonempty index array");
  std::set<SupportSet::Index> indices;
  for (const auto& i : j) {
    if (!indices.insert(positive_index(i)).second) throw ParseError("repeated support index");
  }
  return SupportSet(std::move(indices));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

PartialRule partial_rule_from_string(const std::string& s) {
  for (auto rule : {PartialRule::BallSphere, PartialRule::ConeDelta,
                    PartialRule::L2SelfExclusion}) {
    if (s == to_string(rule)) return rule;
  }
  throw ParseError("unknown partial rule '" + s + "'");
}

Json to_json(const SuiteReport& report) {
  Json failures = Json::array();
  Json inconclusive = Json::array();
  for (const auto& c : report.cases) {
    if (!c.passed) failures.push_back({{"id", c.id}, {"detail", c.detail}});
    if (c.inconclusive) inconclusive.push_back(c.id);
  }
  return Json{{"suite", report.suite},
              {"seed", report.seed},
              {"total", report.cases.size()},
              {"passed", report.passed()},
              {"failed", report.failed()},
              {"inconclusive", inconclusive},
              {"failures", failures},
              {"status", report.ok() ? "pass" : "fail"}};
}

}  // namespace varproj
