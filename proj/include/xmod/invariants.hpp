#pragma once

// Centers, commutators, central and derived series, and the numeric
// invariants of groups and crossed modules.

#include <bit>
#include <cmath>
#include <sstream>

#include "xmod/xmod.hpp"

namespace xmod {

// ---------------------------------------------------------------------------
// Rendering of exact orders as log2 values

/// floor(100 log2 n + 1/2) / 100, i.e. rounded half-up to two places.
inline long long log2_centi(std::size_t n) {
  return static_cast<long long>(std::floor(100.0 * std::log2(static_cast<double>(n)) + 0.5 + 1e-9));
}

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// "4.17" for 18; "3" for 8 when `integer` is set (n must then be a power of 2).
inline std::string render_log2(std::size_t n, bool integer) {
  if (integer) {
    if (!is_power_of_two(n)) throw Error("integer log2 rendering of a non power of two");
    return std::to_string(std::bit_width(n) - 1);
  }
  long long c = log2_centi(n);
  std::ostringstream s;
  s << c / 100 << '.' << (c % 100 < 10 ? "0" : "") << c % 100;
  return s.str();
}

/// Not nilpotent (or not solvable) is std::nullopt; tables print it as 0.
using ClassValue = std::optional<unsigned>;

inline std::string render_class(const ClassValue& c) { return c ? std::to_string(*c) : "0"; }

// ---------------------------------------------------------------------------
// Group invariants

inline std::vector<Subgroup> group_lower_central_series(const GroupPtr& g) {
  std::vector<Subgroup> terms{Subgroup::whole(g)};
  const Subgroup all = Subgroup::whole(g);
  for (;;) {
    Subgroup next = commutator_subgroup(terms.back(), all);
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

inline ClassValue group_nilpotency_class(const GroupPtr& g) {
  auto lcs = group_lower_central_series(g);
  if (!lcs.back().is_trivial()) return std::nullopt;
  return std::max<unsigned>(1, static_cast<unsigned>(lcs.size() - 1));
}

/// |Z ∩ G'| |G/Z|; the rank is its log2.
inline std::size_t group_rank_order(const GroupPtr& g) {
  Subgroup z = center(g);
  Subgroup d = derived_subgroup(g);
  return intersection(z, d).size() * (g->order() / z.size());
}

/// |G' / (Z ∩ G')|; the middle length is its log2.
inline std::size_t group_middle_length_order(const GroupPtr& g) {
  Subgroup z = center(g);
  Subgroup d = derived_subgroup(g);
  return d.size() / intersection(z, d).size();
}

inline double group_rank(const GroupPtr& g) { return std::log2(double(group_rank_order(g))); }
inline double group_middle_length(const GroupPtr& g) { return std::log2(double(group_middle_length_order(g))); }

// ---------------------------------------------------------------------------
// Crossed module subgroups

/// G1^{G0}
inline Subgroup fixed_points(const XModPtr& x) {
  std::vector<Elem> m;
  for (std::size_t a = 0; a < x->source()->order(); ++a) {
    bool fixed = true;
    for (std::size_t g = 0; g < x->range()->order() && fixed; ++g) fixed = x->act(Elem(g), Elem(a)) == a;
    if (fixed) m.push_back(Elem(a));
  }
  return Subgroup::from_closed(x->source(), std::move(m));
}

/// St_{G0}(G1)
inline Subgroup stabilizer(const XModPtr& x) {
  std::vector<Elem> m;
  for (std::size_t g = 0; g < x->range()->order(); ++g) {
    bool trivial = true;
    for (std::size_t a = 0; a < x->source()->order() && trivial; ++a) trivial = x->act(Elem(g), Elem(a)) == a;
    if (trivial) m.push_back(Elem(g));
  }
  return Subgroup::from_closed(x->range(), std::move(m));
}

/// Z(X) = (G1^{G0} -> St_{G0}(G1) ∩ Z(G0)).
inline SubXMod center_xmod(const XModPtr& x) {
  return SubXMod{x, fixed_points(x), intersection(stabilizer(x), center(x->range()))};
}

/// [A, B] for subcrossed modules of one parent: level 1 generated by
/// ^{a0}b1 b1^-1 and ^{b0}a1 a1^-1, level 0 by [A0, B0].
inline SubXMod commutator_subxmod(const SubXMod& a, const SubXMod& b) {
  const auto& x = *a.parent;
  const auto& g1 = *x.source();
  std::vector<char> seen(g1.order());
  std::vector<Elem> seeds;
  auto add = [&](const Subgroup& top, const Subgroup& bottom) {
    for (Elem t : top.members())
      for (Elem s : bottom.members()) {
        Elem v = g1.mul(x.act(t, s), g1.inv(s));
        if (!seen[v]) {
          seen[v] = 1;
          seeds.push_back(v);
        }
      }
  };
  add(a.s0, b.s1);
  add(b.s0, a.s1);
  return SubXMod{a.parent, subgroup_generated(x.source(), std::span<const Elem>(seeds)),
                 commutator_subgroup(a.s0, b.s0)};
}

/// D_{G0}(G1)
inline Subgroup displacement_subgroup(const XModPtr& x) {
  SubXMod w = whole_subxmod(x);
  return commutator_subxmod(w, w).s1;
}

/// [X, X] = (D_{G0}(G1) -> [G0, G0]).
inline SubXMod derived_subxmod(const XModPtr& x) {
  SubXMod w = whole_subxmod(x);
  return commutator_subxmod(w, w);
}

/// [N, X] for a normal subcrossed module N.
inline SubXMod relative_commutator(const SubXMod& n) {
  if (!is_normal_subxmod(n)) throw Error("relative commutator needs a normal sub crossed module");
  return commutator_subxmod(n, whole_subxmod(n.parent));
}

// ---------------------------------------------------------------------------
// Series

enum class SeriesKind { lower_central, upper_central, derived };

struct SeriesRecord {
  SeriesKind kind;
  std::vector<SubXMod> terms;  // each differs from its predecessor
  /// Lower and derived series: the last term is trivial. Upper series: the
  /// last term is everything.
  bool reaches_end = false;
};

/// Γ1 = X, Γ(i+1) = [Γi, X], stopping at the first repeat.
inline SeriesRecord lower_central_series(const XModPtr& x) {
  SeriesRecord r{SeriesKind::lower_central, {whole_subxmod(x)}};
  const SubXMod all = whole_subxmod(x);
  for (;;) {
    SubXMod next = commutator_subxmod(r.terms.back(), all);
    if (next == r.terms.back()) break;
    r.terms.push_back(std::move(next));
  }
  r.reaches_end = r.terms.back().is_trivial();
  return r;
}

/// Preimage of the center of X/N.
inline SubXMod second_center(const SubXMod& n) {
  QuotientXMod q = quotient_xmod(n);
  SubXMod zq = center_xmod(q.xmod);
  std::vector<Elem> m1, m0;
  for (std::size_t a = 0; a < q.q1.project.size(); ++a)
    if (zq.s1.contains(q.q1.project[a])) m1.push_back(Elem(a));
  for (std::size_t g = 0; g < q.q0.project.size(); ++g)
    if (zq.s0.contains(q.q0.project[g])) m0.push_back(Elem(g));
  return SubXMod{n.parent, Subgroup::from_closed(n.parent->source(), std::move(m1)),
                 Subgroup::from_closed(n.parent->range(), std::move(m0))};
}

/// ξ0 = 1, ξ(i+1) = preimage of Z(X/ξi), stopping at the first repeat.
inline SeriesRecord upper_central_series(const XModPtr& x) {
  SeriesRecord r{SeriesKind::upper_central, {trivial_subxmod(x)}};
  for (;;) {
    SubXMod next = second_center(r.terms.back());
    if (next == r.terms.back()) break;
    r.terms.push_back(std::move(next));
  }
  r.reaches_end = r.terms.back().is_whole();
  return r;
}

/// X, [X,X], [[X,X],[X,X]], ...
inline SeriesRecord derived_series(const XModPtr& x) {
  SeriesRecord r{SeriesKind::derived, {whole_subxmod(x)}};
  for (;;) {
    SubXMod next = commutator_subxmod(r.terms.back(), r.terms.back());
    if (next == r.terms.back()) break;
    r.terms.push_back(std::move(next));
  }
  r.reaches_end = r.terms.back().is_trivial();
  return r;
}

/// Least c >= 1 with Γ(c+1) trivial.
inline ClassValue nilpotency_class(const XModPtr& x) {
  SeriesRecord s = lower_central_series(x);
  if (!s.reaches_end) return std::nullopt;
  return std::max<unsigned>(1, static_cast<unsigned>(s.terms.size() - 1));
}

/// Least c >= 1 with ξc = X.
inline ClassValue upper_nilpotency_class(const XModPtr& x) {
  SeriesRecord s = upper_central_series(x);
  if (!s.reaches_end) return std::nullopt;
  return std::max<unsigned>(1, static_cast<unsigned>(s.terms.size() - 1));
}

inline ClassValue derived_length(const XModPtr& x) {
  SeriesRecord s = derived_series(x);
  if (!s.reaches_end) return std::nullopt;
  return std::max<unsigned>(1, static_cast<unsigned>(s.terms.size() - 1));
}

inline bool is_nilpotent(const XModPtr& x) { return lower_central_series(x).reaches_end; }
inline bool is_solvable(const XModPtr& x) { return derived_series(x).reaches_end; }

// ---------------------------------------------------------------------------
// Predicates

inline bool is_abelian_xmod(const XModPtr& x) { return center_xmod(x).is_whole(); }

inline bool is_stem_xmod(const XModPtr& x) { return center_xmod(x).is_subset_of(derived_subxmod(x)); }

inline bool is_aspherical(const XModPtr& x) { return x->boundary_hom().kernel().is_trivial(); }

inline bool is_simply_connected(const XModPtr& x) { return x->boundary_hom().image().is_whole(); }

// ---------------------------------------------------------------------------
// Rank and middle length

/// A pair of exact orders whose log2 values form the displayed pair.
struct RankValue {
  std::size_t level1_order = 1;
  std::size_t level0_order = 1;
  friend auto operator<=>(const RankValue&, const RankValue&) = default;
  bool integral() const { return is_power_of_two(level1_order) && is_power_of_two(level0_order); }
  std::string render(bool integer) const {
    return "[" + render_log2(level1_order, integer) + "," + render_log2(level0_order, integer) + "]";
  }
};

inline RankValue rank_of_xmod(const XModPtr& x) {
  SubXMod z = center_xmod(x);
  SubXMod c = derived_subxmod(x);
  return RankValue{intersection(z.s1, c.s1).size() * (x->source()->order() / z.s1.size()),
                   intersection(z.s0, c.s0).size() * (x->range()->order() / z.s0.size())};
}

inline RankValue middle_length_of_xmod(const XModPtr& x) {
  SubXMod z = center_xmod(x);
  SubXMod c = derived_subxmod(x);
  return RankValue{c.s1.size() / intersection(z.s1, c.s1).size(), c.s0.size() / intersection(z.s0, c.s0).size()};
}

/// |X / Z(X)|
inline std::array<std::size_t, 2> central_quotient_size(const XModPtr& x) {
  SubXMod z = center_xmod(x);
  return {x->source()->order() / z.s1.size(), x->range()->order() / z.s0.size()};
}

/// Sizes of γ2, γ3, ... skipping trivial terms; the series stops at its
/// first repeat, so a non-nilpotent tail appears once.
inline std::vector<std::array<std::size_t, 2>> gamma_sizes(const XModPtr& x) {
  SeriesRecord s = lower_central_series(x);
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t i = 1; i < s.terms.size(); ++i)
    if (!s.terms[i].is_trivial()) out.push_back(s.terms[i].order());
  return out;
}

// ---------------------------------------------------------------------------
// Simply connected / aspherical identities

struct Prop10Report {
  bool simply_connected = false;
  bool aspherical = false;
  std::optional<bool> fixed_points_is_center;       // simply connected only
  std::optional<bool> displacement_is_derived;      // simply connected only
  std::optional<bool> center_inside_stabilizer;     // aspherical only
  bool displacement_equals_derived_anyway = false;  // recorded in every case
  bool passed() const {
    return fixed_points_is_center.value_or(true) && displacement_is_derived.value_or(true) &&
           center_inside_stabilizer.value_or(true);
  }
};

inline Prop10Report prop10_checks(const XModPtr& x) {
  Prop10Report r;
  r.simply_connected = is_simply_connected(x);
  r.aspherical = is_aspherical(x);
  Subgroup d = displacement_subgroup(x);
  Subgroup g1_derived = derived_subgroup(x->source());
  r.displacement_equals_derived_anyway = d == g1_derived;
  if (r.simply_connected) {
    r.fixed_points_is_center = fixed_points(x) == center(x->source());
    r.displacement_is_derived = r.displacement_equals_derived_anyway;
  }
  if (r.aspherical) {
    Subgroup z0 = center(x->range());
    r.center_inside_stabilizer = intersection(stabilizer(x), z0) == z0;
  }
  return r;
}

}  // namespace xmod
