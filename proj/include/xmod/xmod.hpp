#pragma once

// Crossed modules d: G1 -> G0 with a G0-action on G1, their morphisms,
// subcrossed modules and quotients.

#include <array>

#include "xmod/homs.hpp"

namespace xmod {

enum class XModErrc {
  shape,
  boundary_not_homomorphism,
  action_not_automorphic,
  action_not_homomorphic,
  cm1_violated,
  cm2_violated,
};

inline const char* to_string(XModErrc c) {
  switch (c) {
    case XModErrc::shape: return "shape";
    case XModErrc::boundary_not_homomorphism: return "boundary-not-homomorphism";
    case XModErrc::action_not_automorphic: return "action-not-automorphic";
    case XModErrc::action_not_homomorphic: return "action-not-homomorphic";
    case XModErrc::cm1_violated: return "cm1-violated";
    case XModErrc::cm2_violated: return "cm2-violated";
  }
  return "unknown";
}

/// A failed axiom with the pair of elements exhibiting it.
///   boundary_not_homomorphism: (a, b) in G1 with d(ab) != d(a)d(b)
///   action_not_automorphic:    (g0, g1) where the map of g0 is not bijective
///                              at g1, or fails to be multiplicative at (g1, third)
///   action_not_homomorphic:    (x, y) in G0 with act(xy) != act(x)act(y) at third
///   cm1_violated:              (g0, g1)
///   cm2_violated:              (g1, g1')
struct Violation {
  XModErrc code;
  Elem first = 0;
  Elem second = 0;
  Elem third = 0;
};

class XModError : public Error {
 public:
  explicit XModError(Violation v)
      : Error(std::string("not a crossed module: ") + to_string(v.code) + " at (" +
              std::to_string(v.first) + "," + std::to_string(v.second) + ")"),
        violation_(v) {}
  const Violation& violation() const { return violation_; }
  XModErrc code() const { return violation_.code; }

 private:
  Violation violation_;
};

class CrossedModule {
 public:
  /// Unchecked; use make_xmod to validate.
  CrossedModule(GroupPtr g1, GroupPtr g0, std::vector<Elem> boundary, std::vector<Elem> action)
      : g1_(std::move(g1)), g0_(std::move(g0)), d_(std::move(boundary)), act_(std::move(action)) {}

  const GroupPtr& source() const { return g1_; }
  const GroupPtr& range() const { return g0_; }
  Elem boundary(Elem g1) const { return d_[g1]; }
  /// ^{g0} g1
  Elem act(Elem g0, Elem g1) const { return act_[std::size_t(g0) * g1_->order() + g1]; }
  const std::vector<Elem>& boundary_table() const { return d_; }
  const std::vector<Elem>& action_table() const { return act_; }
  std::array<std::size_t, 2> order() const { return {g1_->order(), g0_->order()}; }

  GroupHom boundary_hom() const { return GroupHom{g1_, g0_, d_}; }

  /// Structural equality of tables.
  friend bool operator==(const CrossedModule& a, const CrossedModule& b) {
    return *a.g1_ == *b.g1_ && *a.g0_ == *b.g0_ && a.d_ == b.d_ && a.act_ == b.act_;
  }

 private:
  GroupPtr g1_, g0_;
  std::vector<Elem> d_;
  std::vector<Elem> act_;
};

using XModPtr = std::shared_ptr<const CrossedModule>;

/// Exhaustive axiom check; the first violation found, if any.
inline std::optional<Violation> find_violation(const GroupPtr& g1, const GroupPtr& g0,
                                               const std::vector<Elem>& d,
                                               const std::vector<Elem>& act) {
  const std::size_t n1 = g1->order(), n0 = g0->order();
  if (d.size() != n1 || act.size() != n0 * n1) return Violation{XModErrc::shape};
  for (Elem v : d)
    if (v >= n0) return Violation{XModErrc::shape};
  for (Elem v : act)
    if (v >= n1) return Violation{XModErrc::shape};
  auto A = [&](std::size_t x, std::size_t y) { return act[x * n1 + y]; };
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b)
      if (d[g1->mul(Elem(a), Elem(b))] != g0->mul(d[a], d[b]))
        return Violation{XModErrc::boundary_not_homomorphism, Elem(a), Elem(b)};
  std::vector<char> seen(n1);
  for (std::size_t x = 0; x < n0; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n1; ++y) {
      if (seen[A(x, y)]) return Violation{XModErrc::action_not_automorphic, Elem(x), Elem(y)};
      seen[A(x, y)] = 1;
    }
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n1; ++b)
        if (A(x, g1->mul(Elem(a), Elem(b))) != g1->mul(A(x, a), A(x, b)))
          return Violation{XModErrc::action_not_automorphic, Elem(x), Elem(a), Elem(b)};
  }
  for (std::size_t y = 0; y < n1; ++y)
    if (A(0, y) != y) return Violation{XModErrc::action_not_homomorphic, 0, 0, Elem(y)};
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t z = 0; z < n0; ++z) {
      const Elem xz = g0->mul(Elem(x), Elem(z));
      for (std::size_t y = 0; y < n1; ++y)
        if (A(xz, y) != A(x, A(z, y)))
          return Violation{XModErrc::action_not_homomorphic, Elem(x), Elem(z), Elem(y)};
    }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n1; ++y)
      if (d[A(x, y)] != g0->conj(Elem(x), d[y]))
        return Violation{XModErrc::cm1_violated, Elem(x), Elem(y)};
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b)
      if (A(d[a], b) != g1->conj(Elem(a), Elem(b)))
        return Violation{XModErrc::cm2_violated, Elem(a), Elem(b)};
  return std::nullopt;
}

/// Re-evaluates a reported violation; true when the witness really fails.
inline bool witness_fails(const CrossedModule& x, const Violation& v) {
  const auto& g1 = *x.source();
  const auto& g0 = *x.range();
  switch (v.code) {
    case XModErrc::shape: return true;
    case XModErrc::boundary_not_homomorphism:
      return x.boundary(g1.mul(v.first, v.second)) != g0.mul(x.boundary(v.first), x.boundary(v.second));
    case XModErrc::action_not_automorphic: {
      if (g1.mul(v.second, v.third) != 0 || v.third != 0) {
        if (x.act(v.first, g1.mul(v.second, v.third)) !=
            g1.mul(x.act(v.first, v.second), x.act(v.first, v.third)))
          return true;
      }
      for (std::size_t y = 0; y < v.second; ++y)
        if (x.act(v.first, Elem(y)) == x.act(v.first, v.second)) return true;
      return false;
    }
    case XModErrc::action_not_homomorphic:
      return x.act(g0.mul(v.first, v.second), v.third) != x.act(v.first, x.act(v.second, v.third));
    case XModErrc::cm1_violated:
      return x.boundary(x.act(v.first, v.second)) != g0.conj(v.first, x.boundary(v.second));
    case XModErrc::cm2_violated:
      return x.act(x.boundary(v.first), v.second) != g1.conj(v.first, v.second);
  }
  return false;
}

/// Validates every axiom exhaustively; throws XModError on failure.
inline XModPtr make_xmod(GroupPtr g1, GroupPtr g0, std::vector<Elem> boundary, std::vector<Elem> action) {
  if (auto v = find_violation(g1, g0, boundary, action)) throw XModError(*v);
  return std::make_shared<const CrossedModule>(std::move(g1), std::move(g0), std::move(boundary),
                                               std::move(action));
}

inline XModPtr make_xmod_unchecked(GroupPtr g1, GroupPtr g0, std::vector<Elem> boundary,
                                   std::vector<Elem> action) {
  return std::make_shared<const CrossedModule>(std::move(g1), std::move(g0), std::move(boundary),
                                               std::move(action));
}

inline bool is_xmod(const CrossedModule& x) {
  return !find_violation(x.source(), x.range(), x.boundary_table(), x.action_table());
}

// ---------------------------------------------------------------------------
// Standard constructions

inline XModPtr trivial_xmod() {
  auto t = trivial_group();
  return make_xmod(t, t, {0}, {0});
}

inline std::vector<Elem> conjugation_action(const FiniteGroup& g0, std::span<const Elem> g1_in_g0,
                                            const std::vector<int>& g0_to_g1) {
  const std::size_t n1 = g1_in_g0.size();
  std::vector<Elem> act(g0.order() * n1);
  for (std::size_t x = 0; x < g0.order(); ++x)
    for (std::size_t y = 0; y < n1; ++y) {
      int v = g0_to_g1[g0.conj(Elem(x), g1_in_g0[y])];
      if (v < 0) throw Error("subgroup is not normal");
      act[x * n1 + y] = static_cast<Elem>(v);
    }
  return act;
}

/// N -> M inclusion with conjugation action; N must be normal in M.
inline XModPtr inclusion_xmod(const GroupPtr& m, const Subgroup& n) {
  if (!is_normal(n)) throw Error("inclusion crossed module needs a normal subgroup");
  EmbeddedGroup e = subgroup_as_group(n);
  auto act = conjugation_action(*m, e.to_parent, e.from_parent);
  return make_xmod(e.group, m, e.to_parent, std::move(act));
}

/// M -> M, identity boundary, conjugation action.
inline XModPtr identity_xmod(const GroupPtr& m) { return inclusion_xmod(m, Subgroup::whole(m)); }

/// K -> L with zero boundary; `action[l * |K| + k]` is ^l k.
inline XModPtr module_xmod(const GroupPtr& k, const GroupPtr& l, std::vector<Elem> action) {
  if (!k->is_abelian()) throw Error("module crossed module needs an abelian source");
  return make_xmod(k, l, std::vector<Elem>(k->order(), 0), std::move(action));
}

inline std::vector<Elem> trivial_action(std::size_t n1, std::size_t n0) {
  std::vector<Elem> act(n0 * n1);
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n1; ++y) act[x * n1 + y] = static_cast<Elem>(y);
  return act;
}

/// M -> Aut(M), x -> conjugation by x, natural action.
inline XModPtr conjugation_xmod(const GroupPtr& m, std::size_t max_order = kDefaultMaxOrder) {
  AutomorphismGroup aut = automorphism_group(m, max_order);
  std::vector<Elem> d(m->order());
  for (std::size_t x = 0; x < m->order(); ++x) d[x] = aut.inner(Elem(x));
  std::vector<Elem> act(aut.maps.size() * m->order());
  for (std::size_t a = 0; a < aut.maps.size(); ++a)
    for (std::size_t y = 0; y < m->order(); ++y) act[a * m->order() + y] = aut.maps[a](Elem(y));
  return make_xmod(m, aut.group, std::move(d), std::move(act));
}

// ---------------------------------------------------------------------------
// Morphisms

struct XModMorphism {
  XModPtr source;
  XModPtr target;
  GroupHom alpha;  // G1 -> H1
  GroupHom beta;   // G0 -> H0

  /// beta d = d' alpha, alpha(^{g0} g1) = ^{beta g0} alpha(g1), both maps homomorphisms.
  bool is_valid() const {
    if (!alpha.is_homomorphism() || !beta.is_homomorphism()) return false;
    const auto& x = *source;
    const auto& y = *target;
    for (std::size_t g = 0; g < x.source()->order(); ++g)
      if (beta(x.boundary(Elem(g))) != y.boundary(alpha(Elem(g)))) return false;
    for (std::size_t a = 0; a < x.range()->order(); ++a)
      for (std::size_t g = 0; g < x.source()->order(); ++g)
        if (alpha(x.act(Elem(a), Elem(g))) != y.act(beta(Elem(a)), alpha(Elem(g)))) return false;
    return true;
  }

  bool is_isomorphism() const { return is_valid() && alpha.is_bijective() && beta.is_bijective(); }

  static XModMorphism identity(const XModPtr& x) {
    return XModMorphism{x, x, GroupHom::identity(x->source()), GroupHom::identity(x->range())};
  }

  XModMorphism inverse() const { return XModMorphism{target, source, alpha.inverse(), beta.inverse()}; }
};

inline XModMorphism compose(const XModMorphism& f, const XModMorphism& g) {
  return XModMorphism{g.source, f.target, compose(f.alpha, g.alpha), compose(f.beta, g.beta)};
}

// ---------------------------------------------------------------------------
// Subcrossed modules

struct SubXMod {
  XModPtr parent;
  Subgroup s1;  // in G1
  Subgroup s0;  // in G0

  std::array<std::size_t, 2> order() const { return {s1.size(), s0.size()}; }
  bool is_trivial() const { return s1.is_trivial() && s0.is_trivial(); }
  bool is_whole() const { return s1.is_whole() && s0.is_whole(); }
  bool is_subset_of(const SubXMod& o) const { return s1.is_subset_of(o.s1) && s0.is_subset_of(o.s0); }
  friend bool operator==(const SubXMod& a, const SubXMod& b) { return a.s1 == b.s1 && a.s0 == b.s0; }
};

inline SubXMod whole_subxmod(const XModPtr& x) {
  return SubXMod{x, Subgroup::whole(x->source()), Subgroup::whole(x->range())};
}

inline SubXMod trivial_subxmod(const XModPtr& x) {
  return SubXMod{x, Subgroup::trivial(x->source()), Subgroup::trivial(x->range())};
}

/// Validates d(s1) in s0 and that s0 maps s1 into itself.
inline SubXMod sub_xmod(const XModPtr& x, const Subgroup& s1, const Subgroup& s0) {
  for (Elem a : s1.members())
    if (!s0.contains(x->boundary(a))) throw Error("sub crossed module: boundary leaves the range subgroup");
  for (Elem b : s0.members())
    for (Elem a : s1.members())
      if (!s1.contains(x->act(b, a))) throw Error("sub crossed module: source subgroup is not action-closed");
  return SubXMod{x, s1, s0};
}

inline SubXMod sub_xmod(const XModPtr& x, std::vector<Elem> s1, std::vector<Elem> s0) {
  return sub_xmod(x, make_subgroup(x->source(), std::move(s1)), make_subgroup(x->range(), std::move(s0)));
}

/// H0 normal in G0, ^{g0}h1 in H1 and ^{h0}g1 g1^-1 in H1.
inline bool is_normal_subxmod(const SubXMod& s) {
  const auto& x = *s.parent;
  const auto& g1 = *x.source();
  if (!is_normal(s.s0)) return false;
  for (std::size_t a = 0; a < x.range()->order(); ++a)
    for (Elem h : s.s1.members())
      if (!s.s1.contains(x.act(Elem(a), h))) return false;
  for (Elem h0 : s.s0.members())
    for (std::size_t g = 0; g < g1.order(); ++g)
      if (!s.s1.contains(g1.mul(x.act(h0, Elem(g)), g1.inv(Elem(g))))) return false;
  return true;
}

/// A subcrossed module realized as a crossed module, with the index maps
/// into the parent.
struct EmbeddedXMod {
  XModPtr xmod;
  EmbeddedGroup e1;
  EmbeddedGroup e0;
  XModMorphism inclusion() const {
    return XModMorphism{xmod, parent, GroupHom{e1.group, parent->source(), e1.to_parent},
                        GroupHom{e0.group, parent->range(), e0.to_parent}};
  }
  XModPtr parent;
};

inline EmbeddedXMod subxmod_as_xmod(const SubXMod& s) {
  EmbeddedXMod e;
  e.parent = s.parent;
  e.e1 = subgroup_as_group(s.s1);
  e.e0 = subgroup_as_group(s.s0);
  const auto& x = *s.parent;
  const std::size_t n1 = s.s1.size(), n0 = s.s0.size();
  std::vector<Elem> d(n1);
  for (std::size_t i = 0; i < n1; ++i) d[i] = static_cast<Elem>(e.e0.from_parent[x.boundary(e.e1.to_parent[i])]);
  std::vector<Elem> act(n0 * n1);
  for (std::size_t b = 0; b < n0; ++b)
    for (std::size_t a = 0; a < n1; ++a)
      act[b * n1 + a] = static_cast<Elem>(e.e1.from_parent[x.act(e.e0.to_parent[b], e.e1.to_parent[a])]);
  e.xmod = make_xmod_unchecked(e.e1.group, e.e0.group, std::move(d), std::move(act));
  return e;
}

/// Quotient by a normal subcrossed module together with the level-wise
/// coset data and the projection morphism.
struct QuotientXMod {
  XModPtr xmod;
  Quotient q1;
  Quotient q0;
  XModMorphism projection;
};

inline QuotientXMod quotient_xmod(const SubXMod& n) {
  if (!is_normal_subxmod(n)) throw Error("quotient by a sub crossed module that is not normal");
  const auto& x = *n.parent;
  QuotientXMod q;
  q.q1 = quotient_group(n.s1);
  q.q0 = quotient_group(n.s0);
  const std::size_t k1 = q.q1.rep.size(), k0 = q.q0.rep.size();
  std::vector<Elem> d(k1);
  for (std::size_t c = 0; c < k1; ++c) d[c] = q.q0.project[x.boundary(q.q1.rep[c])];
  std::vector<Elem> act(k0 * k1);
  for (std::size_t b = 0; b < k0; ++b)
    for (std::size_t a = 0; a < k1; ++a) act[b * k1 + a] = q.q1.project[x.act(q.q0.rep[b], q.q1.rep[a])];
  // independence of the coset representatives
  for (std::size_t g = 0; g < x.source()->order(); ++g)
    if (d[q.q1.project[g]] != q.q0.project[x.boundary(Elem(g))])
      throw Error("quotient boundary is not well defined");
  for (std::size_t b = 0; b < x.range()->order(); ++b)
    for (std::size_t a = 0; a < x.source()->order(); ++a)
      if (act[q.q0.project[b] * k1 + q.q1.project[a]] != q.q1.project[x.act(Elem(b), Elem(a))])
        throw Error("quotient action is not well defined");
  q.xmod = make_xmod_unchecked(q.q1.group, q.q0.group, std::move(d), std::move(act));
  q.projection = XModMorphism{n.parent, q.xmod, q.q1.projection(), q.q0.projection()};
  return q;
}

inline SubXMod intersection(const SubXMod& h, const SubXMod& k) {
  if (h.parent != k.parent && !(*h.parent == *k.parent))
    throw Error("intersection of sub crossed modules with different parents");
  return SubXMod{h.parent, intersection(h.s1, k.s1), intersection(h.s0, k.s0)};
}

/// HK, level-wise products; K must be normal.
inline SubXMod product(const SubXMod& h, const SubXMod& k) {
  if (h.parent != k.parent && !(*h.parent == *k.parent))
    throw Error("product of sub crossed modules with different parents");
  if (!is_normal_subxmod(k)) throw Error("product needs a normal second factor");
  return sub_xmod(h.parent, join(h.s1, k.s1), join(h.s0, k.s0));
}

inline SubXMod kernel(const XModMorphism& f) { return SubXMod{f.source, f.alpha.kernel(), f.beta.kernel()}; }

inline SubXMod image(const XModMorphism& f) { return SubXMod{f.target, f.alpha.image(), f.beta.image()}; }

}  // namespace xmod
