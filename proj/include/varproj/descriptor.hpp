#pragma once

// Symbolic description of a coderivative set D*P(xbar)(y).

#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "varproj/support_set.hpp"
#include "varproj/vectors.hpp"

namespace varproj {

enum class Membership { Yes, No, Unknown };
enum class Cardinality { Empty, One, Many, Unknown };

/// Partial characterizations that answer only some membership queries.
enum class PartialRule {
  /// Sphere point of a ball, y not in {0, xbar}: decides only z = 0.
  BallSphere,
  /// Cone point with a zero coordinate: excludes z = lambda*y, lambda < 1,
  /// whenever y is negative on a zero coordinate of xbar.
  ConeDelta,
  /// Z_M point of the l2 cone, y negative off M: excludes z = y.
  L2SelfExclusion,
};

const char* to_string(PartialRule rule);
const char* to_string(Membership m);

template <class V>
struct Singleton {
  V value;
};

struct EmptySet {};

/// {z in K_{complement of M} : z <=_{complement of M} y}; never materialized.
struct OrderInterval {
  SparseVector y;
  SupportSet support;

  bool contains(const SparseVector& z) const {
    return in_K_Mbar(z, support) && order_leq(z, y, support);
  }
  bool collapsed() const { return in_boundary_K_Mbar(y, support); }
};

template <class V>
struct PartialRules {
  PartialRule rule;
  V xbar;
  V y;
};

struct UnknownSet {};

template <HilbertVector V>
class CoderivDescriptor {
 public:
  using Variant =
      std::variant<Singleton<V>, EmptySet, OrderInterval, PartialRules<V>, UnknownSet>;

  static CoderivDescriptor singleton(V value) {
    return CoderivDescriptor(Singleton<V>{std::move(value)});
  }
  static CoderivDescriptor empty() { return CoderivDescriptor(EmptySet{}); }
  static CoderivDescriptor order_interval(SparseVector y, SupportSet m)
    requires std::is_same_v<V, SparseVector>
  {
    return CoderivDescriptor(OrderInterval{std::move(y), std::move(m)});
  }
  static CoderivDescriptor partial(PartialRule rule, V xbar, V y) {
    return CoderivDescriptor(PartialRules<V>{rule, std::move(xbar), std::move(y)});
  }
  static CoderivDescriptor unknown() { return CoderivDescriptor(UnknownSet{}); }

  const Variant& value() const { return value_; }

  bool is_singleton() const { return std::holds_alternative<Singleton<V>>(value_); }
  bool is_empty() const { return std::holds_alternative<EmptySet>(value_); }
  bool is_order_interval() const { return std::holds_alternative<OrderInterval>(value_); }
  bool is_partial() const { return std::holds_alternative<PartialRules<V>>(value_); }
  bool is_unknown() const { return std::holds_alternative<UnknownSet>(value_); }

  const V& singleton_value() const { return std::get<Singleton<V>>(value_).value; }
  const OrderInterval& interval() const { return std::get<OrderInterval>(value_); }
  const PartialRules<V>& rules() const { return std::get<PartialRules<V>>(value_); }

  /// Membership query z in D*P(xbar)(y). Singleton equality is tested with
  /// approx_equal at 1e-10.
  Membership contains(const V& z) const;

  Cardinality cardinality() const;

  /// Two distinct members of a non-collapsed order interval: y itself and y
  /// with its first positive off-M coordinate halved.
  std::optional<std::pair<V, V>> distinct_members() const;

  /// Named queries a partial rule set answers definitely, e.g.
  /// ("contains_theta", No).
  std::vector<std::pair<std::string, Membership>> definite_answers() const;

 private:
  explicit CoderivDescriptor(Variant v) : value_(std::move(v)) {}

  Membership partial_contains(const PartialRules<V>& p, const V& z) const;

  Variant value_;
};

namespace detail {

inline Membership from_bool(bool b) { return b ? Membership::Yes : Membership::No; }

/// Sphere rule: 0 in D*(y) iff y = a(y) xbar with <y, xbar> <= 0.
template <HilbertVector V>
bool ball_sphere_contains_theta(const V& xbar, const V& y) {
  if (y.is_zero()) return true;
  const auto d = orth_decompose(xbar, y);
  return norm(d.o) <= 1e-10 * norm(y) && inner(y, xbar) <= 0.0;
}

/// Some j with y_j < 0 and xbar_j = 0.
bool negative_on_zero_coordinate(const DenseVector& xbar, const DenseVector& y);

}  // namespace detail

template <HilbertVector V>
Membership CoderivDescriptor<V>::partial_contains(const PartialRules<V>& p,
                                                  const V& z) const {
  switch (p.rule) {
    case PartialRule::BallSphere:
      if (z.is_zero()) {
        return detail::from_bool(detail::ball_sphere_contains_theta(p.xbar, p.y));
      }
      return Membership::Unknown;
    case PartialRule::ConeDelta:
      if constexpr (std::is_same_v<V, DenseVector>) {
        if (!p.y.is_zero() && detail::negative_on_zero_coordinate(p.xbar, p.y)) {
          const double lambda = inner(z, p.y) / inner(p.y, p.y);
          if (lambda < 1.0 && approx_equal(z, lambda * p.y)) return Membership::No;
        }
      }
      return Membership::Unknown;
    case PartialRule::L2SelfExclusion:
      if (approx_equal(z, p.y)) return Membership::No;
      return Membership::Unknown;
  }
  return Membership::Unknown;
}

template <HilbertVector V>
Membership CoderivDescriptor<V>::contains(const V& z) const {
  return std::visit(
      [&](const auto& alt) -> Membership {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, Singleton<V>>) {
          return detail::from_bool(approx_equal(z, alt.value));
        } else if constexpr (std::is_same_v<T, EmptySet>) {
          return Membership::No;
        } else if constexpr (std::is_same_v<T, OrderInterval>) {
          if constexpr (std::is_same_v<V, SparseVector>) {
            return detail::from_bool(alt.contains(z));
          } else {
            return Membership::Unknown;
          }
        } else if constexpr (std::is_same_v<T, PartialRules<V>>) {
          return partial_contains(alt, z);
        } else {
          return Membership::Unknown;
        }
      },
      value_);
}

template <HilbertVector V>
Cardinality CoderivDescriptor<V>::cardinality() const {
  if (is_singleton()) return Cardinality::One;
  if (is_empty()) return Cardinality::Empty;
  if (is_order_interval()) {
    return interval().collapsed() ? Cardinality::One : Cardinality::Many;
  }
  return Cardinality::Unknown;
}

template <HilbertVector V>
std::optional<std::pair<V, V>> CoderivDescriptor<V>::distinct_members() const {
  if constexpr (std::is_same_v<V, SparseVector>) {
    if (!is_order_interval() || interval().collapsed()) return std::nullopt;
    const auto& iv = interval();
    std::vector<SparseVector::Entry> entries;
    bool halved = false;
    for (const auto& [i, v] : iv.y.values()) {
      if (!halved && !iv.support.contains(i) && v > 0.0) {
        entries.emplace_back(i, 0.5 * v);
        halved = true;
      } else {
        entries.emplace_back(i, v);
      }
    }
    return std::pair<V, V>{iv.y, SparseVector(entries)};
  } else {
    return std::nullopt;
  }
}

template <HilbertVector V>
std::vector<std::pair<std::string, Membership>>
CoderivDescriptor<V>::definite_answers() const {
  if (!is_partial()) return {};
  const auto& p = rules();
  switch (p.rule) {
    case PartialRule::BallSphere:
      return {{"contains_theta",
               detail::from_bool(detail::ball_sphere_contains_theta(p.xbar, p.y))}};
    case PartialRule::ConeDelta:
      if constexpr (std::is_same_v<V, DenseVector>) {
        if (detail::negative_on_zero_coordinate(p.xbar, p.y)) {
          return {{"contains_theta", Membership::No},
                  {"contains_scaled_y_below_one", Membership::No}};
        }
      }
      return {};
    case PartialRule::L2SelfExclusion:
      return {{"contains_y", Membership::No}};
  }
  return {};
}

}  // namespace varproj
