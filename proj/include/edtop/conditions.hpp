#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edtop/topology.hpp"

namespace edtop {

// The built-in statements: seven equivalent characterizations of extremal
// disconnectedness (a)-(g), two unconditional identities (lemma1,
// corollary2), and the variant statements. `hint` quantifies its first
// variable over arbitrary subsets and is falsifiable; `hint_open` restricts
// it to opens and holds everywhere. `e_disjoint` is condition (e) weakened
// by a disjointness hypothesis, which makes it hold in every space.
enum class ConditionId {
  a,
  b,
  c,
  d,
  e,
  f,
  g,
  lemma1,
  corollary2,
  hint,
  hint_open,
  e_disjoint,
};

inline constexpr std::array<ConditionId, 7> kTheoremConditions = {
    ConditionId::a, ConditionId::b, ConditionId::c, ConditionId::d,
    ConditionId::e, ConditionId::f, ConditionId::g};

inline const char* to_string(ConditionId id) {
  switch (id) {
    case ConditionId::a: return "a";
    case ConditionId::b: return "b";
    case ConditionId::c: return "c";
    case ConditionId::d: return "d";
    case ConditionId::e: return "e";
    case ConditionId::f: return "f";
    case ConditionId::g: return "g";
    case ConditionId::lemma1: return "lemma1";
    case ConditionId::corollary2: return "corollary2";
    case ConditionId::hint: return "hint";
    case ConditionId::hint_open: return "hint_open";
    case ConditionId::e_disjoint: return "e_disjoint";
  }
  return "?";
}

inline std::optional<ConditionId> condition_from_string(std::string_view s) {
  for (ConditionId id :
       {ConditionId::a, ConditionId::b, ConditionId::c, ConditionId::d,
        ConditionId::e, ConditionId::f, ConditionId::g, ConditionId::lemma1,
        ConditionId::corollary2, ConditionId::hint, ConditionId::hint_open,
        ConditionId::e_disjoint}) {
    if (s == to_string(id)) return id;
  }
  return std::nullopt;
}

enum class RelationOp { equals, subset_of };

inline const char* to_string(RelationOp op) {
  return op == RelationOp::equals ? "=" : "<=";
}

struct WitnessBinding {
  std::string name;
  PointSet value;

  friend bool operator==(const WitnessBinding&, const WitnessBinding&) = default;
};

// A concrete variable assignment that falsifies a universally quantified
// relation, together with the two evaluated sides.
struct Witness {
  std::vector<WitnessBinding> assignment;
  PointSet lhs;
  PointSet rhs;
  RelationOp op = RelationOp::equals;

  std::string to_string() const {
    std::string s;
    for (const auto& b : assignment) {
      if (!s.empty()) s += ", ";
      s += b.name + "=" + b.value.to_string();
    }
    s += ": left=" + lhs.to_string() + " right=" + rhs.to_string() +
         " expected left " + edtop::to_string(op) + " right";
    return s;
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;          // present iff holds is false
  std::optional<ConditionId> condition;    // set by the built-in checks

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

inline Verdict pass(ConditionId id) { return Verdict{true, std::nullopt, id}; }

inline Verdict fail(ConditionId id, std::vector<WitnessBinding> assignment,
                    const PointSet& lhs, const PointSet& rhs, RelationOp op) {
  return Verdict{false, Witness{std::move(assignment), lhs, rhs, op}, id};
}

inline std::vector<PointSet> closures_of_opens(const Topology& t) {
  std::vector<PointSet> out;
  out.reserve(t.opens().size());
  for (const PointSet& a : t.opens()) out.push_back(t.closure(a));
  return out;
}

inline std::vector<PointSet> int_closures_of_opens(const Topology& t) {
  std::vector<PointSet> out;
  out.reserve(t.opens().size());
  for (const PointSet& a : t.opens()) out.push_back(t.interior(t.closure(a)));
  return out;
}

}  // namespace detail

// (a) the closure of every open set is open, checked as cl(A) = int(cl(A)).
inline Verdict check_condition_a(const Topology& t) {
  for (const PointSet& a : t.opens()) {
    const PointSet cl = t.closure(a);
    const PointSet ic = t.interior(cl);
    if (!(cl == ic))
      return detail::fail(ConditionId::a, {{"A", a}}, cl, ic, RelationOp::equals);
  }
  return detail::pass(ConditionId::a);
}

// (b) cl(A) & cl(B) = cl(A & B) for all open A, B.
inline Verdict check_condition_b(const Topology& t) {
  const auto cl = detail::closures_of_opens(t);
  const auto& opens = t.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      const PointSet lhs = cl[i] & cl[j];
      const PointSet rhs = t.closure(opens[i] & opens[j]);
      if (!(lhs == rhs))
        return detail::fail(ConditionId::b, {{"A", opens[i]}, {"B", opens[j]}},
                            lhs, rhs, RelationOp::equals);
    }
  }
  return detail::pass(ConditionId::b);
}

// (c) disjoint open sets have disjoint closures.
inline Verdict check_condition_c(const Topology& t) {
  const auto cl = detail::closures_of_opens(t);
  const auto& opens = t.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (!(opens[i] & opens[j]).is_empty()) continue;
      const PointSet lhs = cl[i] & cl[j];
      if (!lhs.is_empty())
        return detail::fail(ConditionId::c, {{"A", opens[i]}, {"B", opens[j]}},
                            lhs, t.empty_set(), RelationOp::equals);
    }
  }
  return detail::pass(ConditionId::c);
}

// (d) cl(int(cl(K))) & cl(A) = empty for every subset K and open A disjoint
// from K.
inline Verdict check_condition_d(const Topology& t) {
  const auto cl = detail::closures_of_opens(t);
  const auto& opens = t.opens();
  const int n = t.point_count();
  const PointSet::mask_type limit = PointSet::universe_mask(n);
  for (PointSet::mask_type m = 0;; ++m) {
    const PointSet k = PointSet::from_mask(n, m);
    const PointSet cic = t.closure(t.interior(t.closure(k)));
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (!(k & opens[j]).is_empty()) continue;
      const PointSet lhs = cic & cl[j];
      if (!lhs.is_empty())
        return detail::fail(ConditionId::d, {{"K", k}, {"A", opens[j]}}, lhs,
                            t.empty_set(), RelationOp::equals);
    }
    if (m == limit) break;
  }
  return detail::pass(ConditionId::d);
}

// (e) int(cl(K)) & cl(A) = int(cl(K & A)) for every subset K and every open
// A. Equivalent to (a) in any space whatsoever: K = X specializes to
// cl(A) = int(cl(A)), and conversely under (a) the universal identity of
// check_lemma1 turns into this one by rewriting int(cl(A)) as cl(A).
inline Verdict check_condition_e(const Topology& t) {
  const auto cl = detail::closures_of_opens(t);
  const auto& opens = t.opens();
  const int n = t.point_count();
  const PointSet::mask_type limit = PointSet::universe_mask(n);
  for (PointSet::mask_type m = 0;; ++m) {
    const PointSet k = PointSet::from_mask(n, m);
    const PointSet ic = t.interior(t.closure(k));
    for (std::size_t j = 0; j < opens.size(); ++j) {
      const PointSet lhs = ic & cl[j];
      const PointSet rhs = t.interior(t.closure(k & opens[j]));
      if (!(lhs == rhs))
        return detail::fail(ConditionId::e, {{"K", k}, {"A", opens[j]}}, lhs,
                            rhs, RelationOp::equals);
    }
    if (m == limit) break;
  }
  return detail::pass(ConditionId::e);
}

// The same identity restricted to pairs with K & A = empty. Under that
// hypothesis both sides are forced empty in every space — an open A disjoint
// from K is disjoint from cl(K), so any point of int(cl(K)) & cl(A) would
// put a point of A inside cl(K) — which makes this variant universally true
// and useless for telling spaces apart. It is exposed anyway so the
// reduction below can be checked against it; the right side is computed
// literally, not assumed empty.
inline Verdict check_condition_e_disjoint(const Topology& t) {
  const auto cl = detail::closures_of_opens(t);
  const auto& opens = t.opens();
  const int n = t.point_count();
  const PointSet::mask_type limit = PointSet::universe_mask(n);
  for (PointSet::mask_type m = 0;; ++m) {
    const PointSet k = PointSet::from_mask(n, m);
    const PointSet ic = t.interior(t.closure(k));
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (!(k & opens[j]).is_empty()) continue;
      const PointSet lhs = ic & cl[j];
      const PointSet rhs = t.interior(t.closure(k & opens[j]));
      if (!(lhs == rhs))
        return detail::fail(ConditionId::e_disjoint, {{"K", k}, {"A", opens[j]}},
                            lhs, rhs, RelationOp::equals);
    }
    if (m == limit) break;
  }
  return detail::pass(ConditionId::e_disjoint);
}

// Same quantification as the disjoint variant with the right side reduced
// to empty. Must agree with check_condition_e_disjoint on every topology.
inline Verdict check_condition_e_simplified(const Topology& t) {
  const auto cl = detail::closures_of_opens(t);
  const auto& opens = t.opens();
  const int n = t.point_count();
  const PointSet::mask_type limit = PointSet::universe_mask(n);
  for (PointSet::mask_type m = 0;; ++m) {
    const PointSet k = PointSet::from_mask(n, m);
    const PointSet ic = t.interior(t.closure(k));
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (!(k & opens[j]).is_empty()) continue;
      const PointSet lhs = ic & cl[j];
      if (!lhs.is_empty())
        return detail::fail(ConditionId::e_disjoint, {{"K", k}, {"A", opens[j]}},
                            lhs, t.empty_set(), RelationOp::equals);
    }
    if (m == limit) break;
  }
  return detail::pass(ConditionId::e_disjoint);
}

// (f) int(cl(A)) | int(cl(B)) = int(cl(A | B)) for all open A, B.
inline Verdict check_condition_f(const Topology& t) {
  const auto ic = detail::int_closures_of_opens(t);
  const auto& opens = t.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      const PointSet lhs = ic[i] | ic[j];
      const PointSet rhs = t.interior(t.closure(opens[i] | opens[j]));
      if (!(lhs == rhs))
        return detail::fail(ConditionId::f, {{"A", opens[i]}, {"B", opens[j]}},
                            lhs, rhs, RelationOp::equals);
    }
  }
  return detail::pass(ConditionId::f);
}

// (g) int(G) | int(H) = int(G | H) for all closed G, H. Closed variables
// range over complements of the opens in normalized opens order.
inline Verdict check_condition_g(const Topology& t) {
  const auto closed = t.closed_sets();
  std::vector<PointSet> in;
  in.reserve(closed.size());
  for (const PointSet& c : closed) in.push_back(t.interior(c));
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < closed.size(); ++j) {
      const PointSet lhs = in[i] | in[j];
      const PointSet rhs = t.interior(closed[i] | closed[j]);
      if (!(lhs == rhs))
        return detail::fail(ConditionId::g, {{"G", closed[i]}, {"H", closed[j]}},
                            lhs, rhs, RelationOp::equals);
    }
  }
  return detail::pass(ConditionId::g);
}

// int(cl(A)) & int(cl(B)) = int(cl(A & B)) for every subset A and open B.
// Holds in every topological space.
inline Verdict check_lemma1(const Topology& t) {
  const auto icb = detail::int_closures_of_opens(t);
  const auto& opens = t.opens();
  const int n = t.point_count();
  const PointSet::mask_type limit = PointSet::universe_mask(n);
  for (PointSet::mask_type m = 0;; ++m) {
    const PointSet a = PointSet::from_mask(n, m);
    const PointSet ica = t.interior(t.closure(a));
    for (std::size_t j = 0; j < opens.size(); ++j) {
      const PointSet lhs = ica & icb[j];
      const PointSet rhs = t.interior(t.closure(a & opens[j]));
      if (!(lhs == rhs))
        return detail::fail(ConditionId::lemma1, {{"A", a}, {"B", opens[j]}},
                            lhs, rhs, RelationOp::equals);
    }
    if (m == limit) break;
  }
  return detail::pass(ConditionId::lemma1);
}

// The lemma1 identity with both variables open. Its quantification domain
// is contained in lemma1's, so it can only fail where lemma1 fails.
inline Verdict check_corollary2(const Topology& t) {
  const auto ic = detail::int_closures_of_opens(t);
  const auto& opens = t.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      const PointSet lhs = ic[i] & ic[j];
      const PointSet rhs = t.interior(t.closure(opens[i] & opens[j]));
      if (!(lhs == rhs))
        return detail::fail(ConditionId::corollary2,
                            {{"A", opens[i]}, {"B", opens[j]}}, lhs, rhs,
                            RelationOp::equals);
    }
  }
  return detail::pass(ConditionId::corollary2);
}

enum class HintVariant { arbitrary_a, open_a };

// A & int(cl(B)) <= cl(A & B) for open B. With A ranging over arbitrary
// subsets the inclusion is falsifiable (already on two points); with A
// restricted to opens it holds everywhere. Both variants are exposed,
// neither is silently altered.
inline Verdict check_hint_fact(const Topology& t,
                               HintVariant variant = HintVariant::arbitrary_a) {
  const auto icb = detail::int_closures_of_opens(t);
  const auto& opens = t.opens();
  const ConditionId id = variant == HintVariant::arbitrary_a
                             ? ConditionId::hint
                             : ConditionId::hint_open;
  auto body = [&](const PointSet& a) -> Verdict {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      const PointSet lhs = a & icb[j];
      const PointSet rhs = t.closure(a & opens[j]);
      if (!lhs.subset_of(rhs))
        return detail::fail(id, {{"A", a}, {"B", opens[j]}}, lhs, rhs,
                            RelationOp::subset_of);
    }
    return detail::pass(id);
  };
  if (variant == HintVariant::open_a) {
    for (const PointSet& a : opens) {
      Verdict v = body(a);
      if (!v.holds) return v;
    }
    return detail::pass(id);
  }
  const int n = t.point_count();
  const PointSet::mask_type limit = PointSet::universe_mask(n);
  for (PointSet::mask_type m = 0;; ++m) {
    Verdict v = body(PointSet::from_mask(n, m));
    if (!v.holds) return v;
    if (m == limit) break;
  }
  return detail::pass(id);
}

inline Verdict check_condition(const Topology& t, ConditionId id) {
  switch (id) {
    case ConditionId::a: return check_condition_a(t);
    case ConditionId::b: return check_condition_b(t);
    case ConditionId::c: return check_condition_c(t);
    case ConditionId::d: return check_condition_d(t);
    case ConditionId::e: return check_condition_e(t);
    case ConditionId::f: return check_condition_f(t);
    case ConditionId::g: return check_condition_g(t);
    case ConditionId::lemma1: return check_lemma1(t);
    case ConditionId::corollary2: return check_corollary2(t);
    case ConditionId::hint: return check_hint_fact(t, HintVariant::arbitrary_a);
    case ConditionId::hint_open: return check_hint_fact(t, HintVariant::open_a);
    case ConditionId::e_disjoint: return check_condition_e_disjoint(t);
  }
  throw std::invalid_argument("unknown condition id");
}

inline bool is_extremally_disconnected(const Topology& t) {
  return check_condition_a(t).holds;
}

}  // namespace edtop
