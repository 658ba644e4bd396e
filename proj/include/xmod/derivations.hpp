#pragma once

// Derivations G0 -> G1, the Whitehead group, the actor crossed module and
// its inner and class-preserving parts.

#include <set>

#include "xmod/xmod_iso.hpp"

namespace xmod {

inline constexpr std::size_t kDefaultDerivationCap = 24;

using Derivation = std::vector<Elem>;  // g0 -> d(g0) in G1

/// ∂(xy) = ∂(x) ^x∂(y) for all x, y.
inline bool is_derivation(const CrossedModule& x, const Derivation& f) {
  const auto& g0 = *x.range();
  const auto& g1 = *x.source();
  if (f.size() != g0.order()) return false;
  for (std::size_t a = 0; a < g0.order(); ++a)
    for (std::size_t b = 0; b < g0.order(); ++b)
      if (f[g0.mul(Elem(a), Elem(b))] != g1.mul(f[a], x.act(Elem(a), f[b]))) return false;
  return true;
}

/// (∂1 ∘ ∂2)(g0) = ∂1(d(∂2(g0)) g0) ∂2(g0)
inline Derivation circle(const CrossedModule& x, const Derivation& f1, const Derivation& f2) {
  Derivation r(f2.size());
  for (std::size_t g = 0; g < f2.size(); ++g)
    r[g] = x.source()->mul(f1[x.range()->mul(x.boundary(f2[g]), Elem(g))], f2[g]);
  return r;
}

struct DerivationMonoid {
  XModPtr xmod;
  std::vector<Derivation> elements;  // element 0 is the zero map
  std::vector<std::size_t> table;    // circle product, row-major
  std::size_t size() const { return elements.size(); }
  std::size_t product(std::size_t a, std::size_t b) const { return table[a * elements.size() + b]; }
};

namespace detail {

inline bool extend_derivation(const CrossedModule& x, std::span<const Elem> gens, std::span<const Elem> imgs,
                              std::vector<int>& img, std::vector<Elem>& queue) {
  const auto& g0 = *x.range();
  const auto& g1 = *x.source();
  std::fill(img.begin(), img.end(), -1);
  img[0] = 0;
  queue.assign(1, 0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elem a = queue[q];
    const auto ia = static_cast<Elem>(img[a]);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem b = g0.mul(a, gens[i]);
      const Elem v = g1.mul(ia, x.act(a, imgs[i]));
      if (img[b] < 0) {
        img[b] = v;
        queue.push_back(b);
      } else if (img[b] != v) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Every derivation, by backtracking over images of a generating set of G0.
inline DerivationMonoid all_derivations(const XModPtr& x, std::size_t cap = kDefaultDerivationCap) {
  if (x->source()->order() > cap || x->range()->order() > cap)
    throw Error("derivation enumeration exceeds the order cap");
  const auto gens = generating_set(x->range());
  const std::size_t n1 = x->source()->order();
  DerivationMonoid m;
  m.xmod = x;
  std::vector<Elem> imgs(gens.size());
  std::vector<int> img(x->range()->order());
  std::vector<Elem> queue;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == gens.size()) {
      if (!detail::extend_derivation(*x, gens, imgs, img, queue)) return;
      m.elements.emplace_back(img.begin(), img.end());
      return;
    }
    for (std::size_t y = 0; y < n1; ++y) {
      imgs[level] = Elem(y);
      if (!detail::extend_derivation(*x, std::span<const Elem>(gens).first(level + 1),
                                     std::span<const Elem>(imgs).first(level + 1), img, queue))
        continue;
      rec(level + 1);
    }
  };
  rec(0);
  // lexicographic generator images put the zero map first
  std::map<Derivation, std::size_t> index;
  for (std::size_t i = 0; i < m.elements.size(); ++i) index.emplace(m.elements[i], i);
  const std::size_t k = m.elements.size();
  m.table.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto it = index.find(circle(*x, m.elements[a], m.elements[b]));
      if (it == index.end()) throw Error("circle product left the set of derivations");
      m.table[a * k + b] = it->second;
    }
  return m;
}

/// The group of units of the circle monoid.
struct WhiteheadGroup {
  GroupPtr group;
  std::vector<Derivation> derivations;     // element i of group; 0 is the zero map
  std::vector<std::size_t> monoid_index;   // position in the monoid
  std::map<Derivation, Elem> index;
  Elem index_of(const Derivation& d) const { return index.at(d); }
};

inline WhiteheadGroup whitehead_group(const DerivationMonoid& m) {
  WhiteheadGroup w;
  const std::size_t k = m.size();
  for (std::size_t a = 0; a < k; ++a) {
    bool unit = false;
    for (std::size_t b = 0; b < k && !unit; ++b) unit = m.product(a, b) == 0 && m.product(b, a) == 0;
    if (unit) w.monoid_index.push_back(a);
  }
  std::map<std::size_t, Elem> pos;
  for (std::size_t i = 0; i < w.monoid_index.size(); ++i) {
    pos[w.monoid_index[i]] = Elem(i);
    w.derivations.push_back(m.elements[w.monoid_index[i]]);
    w.index.emplace(w.derivations.back(), Elem(i));
  }
  const std::size_t u = w.monoid_index.size();
  std::vector<Elem> table(u * u);
  for (std::size_t a = 0; a < u; ++a)
    for (std::size_t b = 0; b < u; ++b) table[a * u + b] = pos.at(m.product(w.monoid_index[a], w.monoid_index[b]));
  w.group = make_group(FiniteGroup(u, std::move(table), "D(G0,G1)"));
  return w;
}

inline WhiteheadGroup whitehead_group(const XModPtr& x, std::size_t cap = kDefaultDerivationCap) {
  return whitehead_group(all_derivations(x, cap));
}

// ---------------------------------------------------------------------------
// Aut(X) as a group

struct XModAutGroup {
  XModPtr base;
  GroupPtr group;
  std::vector<XModMorphism> maps;  // element i; identity first
  std::map<std::vector<Elem>, Elem> index;

  static std::vector<Elem> key(const XModMorphism& f) {
    std::vector<Elem> k = f.alpha.image_of;
    k.insert(k.end(), f.beta.image_of.begin(), f.beta.image_of.end());
    return k;
  }
  std::optional<Elem> find(const XModMorphism& f) const {
    auto it = index.find(key(f));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

/// Builds a group from a list of automorphisms closed under composition.
inline XModAutGroup aut_group_from(const XModPtr& x, std::vector<XModMorphism> maps, const std::string& name) {
  XModAutGroup a;
  a.base = x;
  a.maps = std::move(maps);
  for (std::size_t i = 0; i < a.maps.size(); ++i) a.index.emplace(XModAutGroup::key(a.maps[i]), Elem(i));
  const std::size_t n = a.maps.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto e = a.find(compose(a.maps[i], a.maps[j]));
      if (!e) throw Error("automorphism set is not closed under composition");
      table[i * n + j] = *e;
    }
  a.group = make_group(FiniteGroup(n, std::move(table), name));
  return a;
}

inline XModAutGroup xmod_aut_group(const XModPtr& x) { return aut_group_from(x, xmod_automorphisms(x), "Aut(X)"); }

// ---------------------------------------------------------------------------
// Actor

/// Δ(∂) = (g1 -> ∂(d g1) g1, g0 -> d(∂ g0) g0)
inline XModMorphism delta(const XModPtr& x, const Derivation& f) {
  const auto& g1 = *x->source();
  const auto& g0 = *x->range();
  std::vector<Elem> a(g1.order()), b(g0.order());
  for (std::size_t h = 0; h < g1.order(); ++h) a[h] = g1.mul(f[x->boundary(Elem(h))], Elem(h));
  for (std::size_t g = 0; g < g0.order(); ++g) b[g] = g0.mul(x->boundary(f[g]), Elem(g));
  return XModMorphism{x, x, GroupHom{x->source(), x->source(), a}, GroupHom{x->range(), x->range(), b}};
}

/// ^{(α,β)}∂ = α ∂ β^-1
inline Derivation act_on_derivation(const XModMorphism& ab, const Derivation& f) {
  GroupHom binv = ab.beta.inverse();
  Derivation r(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) r[g] = ab.alpha(f[binv(Elem(g))]);
  return r;
}

struct Actor {
  XModPtr xmod;  // D(G0,G1) -> Aut(X)
  WhiteheadGroup whitehead;
  XModAutGroup auts;
};

inline Actor actor(const XModPtr& x, std::size_t cap = kDefaultDerivationCap) {
  Actor r;
  r.whitehead = whitehead_group(x, cap);
  r.auts = xmod_aut_group(x);
  const std::size_t n1 = r.whitehead.derivations.size(), n0 = r.auts.maps.size();
  std::vector<Elem> d(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    auto e = r.auts.find(delta(x, r.whitehead.derivations[i]));
    if (!e) throw Error("Δ of a regular derivation is not an automorphism");
    d[i] = *e;
  }
  std::vector<Elem> act(n0 * n1);
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t i = 0; i < n1; ++i)
      act[a * n1 + i] = r.whitehead.index_of(act_on_derivation(r.auts.maps[a], r.whitehead.derivations[i]));
  r.xmod = make_xmod(r.whitehead.group, r.auts.group, std::move(d), std::move(act));
  return r;
}

/// η_{g1}(g0) = g1 ^{g0}g1^-1
inline Derivation inner_derivation(const CrossedModule& x, Elem g1) {
  Derivation r(x.range()->order());
  for (std::size_t g = 0; g < r.size(); ++g) r[g] = x.source()->mul(g1, x.source()->inv(x.act(Elem(g), g1)));
  return r;
}

/// (α_{g0}, φ_{g0}) with α_{g0} = action of g0 and φ_{g0} = conjugation.
inline XModMorphism inner_automorphism(const XModPtr& x, Elem g0) {
  const auto& G1 = *x->source();
  const auto& G0 = *x->range();
  std::vector<Elem> a(G1.order()), b(G0.order());
  for (std::size_t h = 0; h < a.size(); ++h) a[h] = x->act(g0, Elem(h));
  for (std::size_t g = 0; g < b.size(); ++g) b[g] = G0.conj(g0, Elem(g));
  return XModMorphism{x, x, GroupHom{x->source(), x->source(), a}, GroupHom{x->range(), x->range(), b}};
}

struct InnerActor {
  Actor act;
  XModMorphism eta_gamma;  // X -> Act(X)
  SubXMod image;           // InnAct(X)
};

inline InnerActor inner_actor(const XModPtr& x, std::size_t cap = kDefaultDerivationCap) {
  InnerActor r;
  r.act = actor(x, cap);
  std::vector<Elem> eta(x->source()->order()), gamma(x->range()->order());
  for (std::size_t h = 0; h < eta.size(); ++h) eta[h] = r.act.whitehead.index_of(inner_derivation(*x, Elem(h)));
  for (std::size_t g = 0; g < gamma.size(); ++g) {
    auto e = r.act.auts.find(inner_automorphism(x, Elem(g)));
    if (!e) throw Error("inner automorphism missing from Aut(X)");
    gamma[g] = *e;
  }
  r.eta_gamma = XModMorphism{x, r.act.xmod, GroupHom{x->source(), r.act.xmod->source(), eta},
                             GroupHom{x->range(), r.act.xmod->range(), gamma}};
  r.image = image(r.eta_gamma);
  return r;
}

// ---------------------------------------------------------------------------
// Class-preserving parts

/// D_C = {η_{g1}} under the circle product; element 0 is the zero map.
struct ClassPreservingDerivations {
  GroupPtr group;
  std::vector<Derivation> derivations;
  std::vector<std::vector<Elem>> representatives;  // g1 with η_{g1} = element i
  std::map<Derivation, Elem> index;
};

inline ClassPreservingDerivations class_preserving_derivations(const XModPtr& x) {
  ClassPreservingDerivations c;
  for (std::size_t h = 0; h < x->source()->order(); ++h) {
    Derivation d = inner_derivation(*x, Elem(h));
    auto [it, fresh] = c.index.emplace(d, Elem(c.derivations.size()));
    if (fresh) {
      c.derivations.push_back(d);
      c.representatives.emplace_back();
    }
    c.representatives[it->second].push_back(Elem(h));
  }
  const std::size_t n = c.derivations.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = c.index.find(circle(*x, c.derivations[a], c.derivations[b]));
      if (it == c.index.end()) throw Error("D_C is not closed under the circle product");
      table[a * n + b] = it->second;
    }
  c.group = make_group(FiniteGroup(n, std::move(table), "D_C"));
  return c;
}

/// Aut_C = {(α_{g0}, φ_{g0})} under composition; identity first.
inline XModAutGroup class_preserving_auts(const XModPtr& x) {
  std::vector<XModMorphism> maps;
  std::set<std::vector<Elem>> seen;
  for (std::size_t g = 0; g < x->range()->order(); ++g) {
    XModMorphism f = inner_automorphism(x, Elem(g));
    if (seen.insert(XModAutGroup::key(f)).second) maps.push_back(std::move(f));
  }
  return aut_group_from(x, std::move(maps), "Aut_C");
}

struct ClassPreservingActor {
  XModPtr xmod;  // D_C -> Aut_C
  ClassPreservingDerivations derivations;
  XModAutGroup auts;
};

/// Action ^{(α,β)}δ(h0) = α(g1) ^{h0}α(g1)^-1 for δ = η_{g1}, evaluated for
/// every representing g1; throws if the representatives disagree.
inline ClassPreservingActor class_preserving_actor(const XModPtr& x) {
  ClassPreservingActor r;
  r.derivations = class_preserving_derivations(x);
  r.auts = class_preserving_auts(x);
  const auto& dc = r.derivations;
  const std::size_t n1 = dc.derivations.size(), n0 = r.auts.maps.size();
  std::vector<Elem> d(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    auto e = r.auts.find(delta(x, dc.derivations[i]));
    if (!e) throw Error("Δ does not map D_C into Aut_C");
    d[i] = *e;
  }
  std::vector<Elem> act(n0 * n1);
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t i = 0; i < n1; ++i) {
      std::optional<Elem> value;
      for (Elem g1 : dc.representatives[i]) {
        Derivation img = inner_derivation(*x, r.auts.maps[a].alpha(g1));
        auto it = dc.index.find(img);
        if (it == dc.index.end()) throw Error("Aut_C action leaves D_C");
        if (value && *value != it->second) throw Error("Aut_C action depends on the representative g1");
        value = it->second;
      }
      act[a * n1 + i] = *value;
    }
  r.xmod = make_xmod(dc.group, r.auts.group, std::move(d), std::move(act));
  return r;
}

}  // namespace xmod
