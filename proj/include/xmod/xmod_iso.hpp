#pragma once

// Isomorphisms between crossed modules: paired backtracking over range
// isomorphisms first, then source isomorphisms constrained by the boundary.

#include "xmod/invariants.hpp"

namespace xmod {

/// Cheap invariants that every isomorphism preserves.
struct XModKey {
  GroupFingerprint g1, g0;
  std::size_t kernel = 0, image = 0;
  std::size_t fixed = 0, stab_center = 0;
  std::size_t displacement = 0, derived0 = 0;
  friend auto operator<=>(const XModKey&, const XModKey&) = default;
};

inline XModKey xmod_key(const XModPtr& x) {
  XModKey k;
  k.g1 = fingerprint(x->source());
  k.g0 = fingerprint(x->range());
  GroupHom d = x->boundary_hom();
  k.kernel = d.kernel().size();
  k.image = d.image().size();
  SubXMod z = center_xmod(x);
  k.fixed = z.s1.size();
  k.stab_center = z.s0.size();
  SubXMod c = derived_subxmod(x);
  k.displacement = c.s1.size();
  k.derived0 = c.s0.size();
  return k;
}

/// True when (alpha, beta) intertwine the boundaries and actions, checked on
/// generators only (both sides are homomorphisms in each argument).
inline bool is_xmod_map_on_generators(const CrossedModule& x, const CrossedModule& y,
                                      const std::vector<Elem>& alpha, const std::vector<Elem>& beta,
                                      const std::vector<Elem>& gens1, const std::vector<Elem>& gens0) {
  for (Elem g : gens1)
    if (beta[x.boundary(g)] != y.boundary(alpha[g])) return false;
  for (Elem b : gens0)
    for (Elem g : gens1)
      if (alpha[x.act(b, g)] != y.act(beta[b], alpha[g])) return false;
  return true;
}

/// Calls `visit` for every isomorphism X -> Y, range map first. `visit`
/// returns false to stop.
inline void for_each_xmod_iso(const XModPtr& x, const XModPtr& y,
                              const std::function<bool(const XModMorphism&)>& visit) {
  if (x->order() != y->order()) return;
  if (x->order()[0] == 0) return;
  const auto gens1 = generating_set(x->source());
  const auto gens0 = generating_set(x->range());
  const auto betas = all_isos(x->range(), y->range());
  if (betas.empty()) return;
  if (fingerprint(x->source()) != fingerprint(y->source())) return;
  bool stop = false;
  for (const GroupHom& beta : betas) {
    std::vector<std::vector<Elem>> cand(gens1.size());
    bool empty = false;
    for (std::size_t i = 0; i < gens1.size(); ++i) {
      const Elem want = beta(x->boundary(gens1[i]));
      for (std::size_t h = 0; h < y->source()->order(); ++h)
        if (y->boundary(Elem(h)) == want) cand[i].push_back(Elem(h));
      if (cand[i].empty()) empty = true;
    }
    if (empty) continue;
    for_each_hom(
        x->source(), y->source(),
        [&](const std::vector<Elem>& alpha) {
          if (!is_xmod_map_on_generators(*x, *y, alpha, beta.image_of, gens1, gens0)) return true;
          XModMorphism m{x, y, GroupHom{x->source(), y->source(), alpha}, beta};
          if (!visit(m)) stop = true;
          return !stop;
        },
        HomSearch{.injective = true}, cand);
    if (stop) return;
  }
}

inline std::vector<XModMorphism> all_xmod_isos(const XModPtr& x, const XModPtr& y) {
  std::vector<XModMorphism> out;
  for_each_xmod_iso(x, y, [&](const XModMorphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

/// A witness isomorphism, or nothing.
inline std::optional<XModMorphism> is_isomorphic_xmod(const XModPtr& x, const XModPtr& y) {
  if (x->order() != y->order()) return std::nullopt;
  if (xmod_key(x) != xmod_key(y)) return std::nullopt;
  std::optional<XModMorphism> out;
  for_each_xmod_iso(x, y, [&](const XModMorphism& m) {
    out = m;
    return false;
  });
  return out;
}

/// Aut(X) as the list of pairs (alpha, beta); the identity comes first.
inline std::vector<XModMorphism> xmod_automorphisms(const XModPtr& x) {
  auto all = all_xmod_isos(x, x);
  auto id = XModMorphism::identity(x);
  auto it = std::find_if(all.begin(), all.end(), [&](const XModMorphism& m) {
    return m.alpha == id.alpha && m.beta == id.beta;
  });
  if (it != all.end()) std::rotate(all.begin(), it, it + 1);
  return all;
}

// ---------------------------------------------------------------------------
// Unfiltered reference search. Enumerates every bijection fixing the
// identity and keeps the homomorphisms; meant for small orders only.

namespace brute {

inline std::vector<GroupHom> all_isos(const GroupPtr& g, const GroupPtr& h) {
  std::vector<GroupHom> out;
  if (g->order() != h->order()) return out;
  const std::size_t n = g->order();
  if (n > 10) throw Error("brute-force isomorphism search is limited to order 10");
  std::vector<Elem> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = Elem(i);
  do {
    GroupHom f{g, h, perm};
    if (f.is_homomorphism()) out.push_back(f);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

/// Exhaustive morphism check over all element pairs.
inline bool is_xmod_iso(const CrossedModule& x, const CrossedModule& y, const GroupHom& alpha,
                        const GroupHom& beta) {
  for (std::size_t g = 0; g < x.source()->order(); ++g)
    if (beta(x.boundary(Elem(g))) != y.boundary(alpha(Elem(g)))) return false;
  for (std::size_t b = 0; b < x.range()->order(); ++b)
    for (std::size_t g = 0; g < x.source()->order(); ++g)
      if (alpha(x.act(Elem(b), Elem(g))) != y.act(beta(Elem(b)), alpha(Elem(g)))) return false;
  return true;
}

inline std::vector<XModMorphism> all_xmod_isos(const XModPtr& x, const XModPtr& y) {
  std::vector<XModMorphism> out;
  if (x->order() != y->order()) return out;
  auto betas = brute::all_isos(x->range(), y->range());
  auto alphas = brute::all_isos(x->source(), y->source());
  for (const auto& b : betas)
    for (const auto& a : alphas)
      if (is_xmod_iso(*x, *y, a, b)) out.push_back(XModMorphism{x, y, a, b});
  return out;
}

inline bool is_isomorphic_xmod(const XModPtr& x, const XModPtr& y) { return !brute::all_xmod_isos(x, y).empty(); }

}  // namespace brute

}  // namespace xmod
