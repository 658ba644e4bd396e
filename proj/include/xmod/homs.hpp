#pragma once

// Homomorphism, isomorphism and automorphism search by backtracking over
// the images of a small generating set.

#include <functional>
#include <map>

#include "xmod/group.hpp"

namespace xmod {

/// Cheap isomorphism invariants. Equal fingerprints are necessary, not
/// sufficient, for isomorphism.
struct GroupFingerprint {
  std::size_t order = 0;
  std::vector<std::pair<unsigned, unsigned>> order_counts;  // (element order, count)
  std::size_t center_size = 0;
  std::size_t derived_size = 0;
  std::vector<std::pair<unsigned, unsigned>> abelianization_counts;
  friend auto operator<=>(const GroupFingerprint&, const GroupFingerprint&) = default;
};

inline std::vector<std::pair<unsigned, unsigned>> order_histogram(const FiniteGroup& g) {
  std::map<unsigned, unsigned> h;
  for (unsigned o : g.elem_orders()) ++h[o];
  return {h.begin(), h.end()};
}

inline GroupFingerprint fingerprint(const GroupPtr& g) {
  GroupFingerprint f;
  f.order = g->order();
  f.order_counts = order_histogram(*g);
  f.center_size = center(g).size();
  Subgroup d = derived_subgroup(g);
  f.derived_size = d.size();
  f.abelianization_counts = order_histogram(*quotient_group(d).group);
  return f;
}

struct HomSearch {
  bool injective = false;  // only bijections (requires equal orders)
  std::size_t limit = 0;   // stop after this many results; 0 = unlimited
};

namespace detail {

/// Extends the partial assignment gens[0..k) -> imgs[0..k) over the
/// subgroup they generate. Returns false when the assignment is not the
/// restriction of a homomorphism. `img` uses -1 for unassigned entries.
inline bool extend_partial(const FiniteGroup& g, const FiniteGroup& h, std::span<const Elem> gens,
                           std::span<const Elem> imgs, std::vector<int>& img,
                           std::vector<Elem>& queue) {
  std::fill(img.begin(), img.end(), -1);
  img[0] = 0;
  queue.clear();
  queue.push_back(0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem x = queue[q];
    auto ix = static_cast<Elem>(img[x]);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g.mul(x, gens[i]);
      Elem v = h.mul(ix, imgs[i]);
      if (img[y] < 0) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Calls `visit(image_of)` for every homomorphism g -> h, in lexicographic
/// order of generator images. `visit` returns false to stop early.
/// `candidates`, when non-empty, restricts the image of each generator of
/// `generating_set(g)`.
inline void for_each_hom(const GroupPtr& g, const GroupPtr& h,
                         const std::function<bool(const std::vector<Elem>&)>& visit,
                         HomSearch opts = {},
                         const std::vector<std::vector<Elem>>& candidates = {}) {
  if (opts.injective && g->order() != h->order()) return;
  const std::vector<Elem> gens = generating_set(g);
  const std::size_t k = gens.size();
  std::vector<std::vector<Elem>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    const unsigned o = g->elem_order(gens[i]);
    auto ok = [&](Elem y) {
      unsigned oy = h->elem_order(y);
      return opts.injective ? oy == o : o % oy == 0;
    };
    if (!candidates.empty()) {
      for (Elem y : candidates[i])
        if (ok(y)) cand[i].push_back(y);
    } else {
      for (std::size_t y = 0; y < h->order(); ++y)
        if (ok(static_cast<Elem>(y))) cand[i].push_back(static_cast<Elem>(y));
    }
  }
  std::vector<Elem> imgs(k);
  std::vector<int> img(g->order());
  std::vector<Elem> queue;
  std::vector<Elem> result(g->order());
  std::size_t found = 0;
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (stop) return;
    if (level == k) {
      if (!detail::extend_partial(*g, *h, gens, imgs, img, queue)) return;
      for (std::size_t x = 0; x < g->order(); ++x) result[x] = static_cast<Elem>(img[x]);
      if (opts.injective) {
        std::vector<char> seen(h->order());
        for (Elem y : result) {
          if (seen[y]) return;
          seen[y] = 1;
        }
      }
      ++found;
      if (!visit(result) || (opts.limit && found >= opts.limit)) stop = true;
      return;
    }
    for (Elem y : cand[level]) {
      imgs[level] = y;
      if (level + 1 < k &&
          !detail::extend_partial(*g, *h, std::span<const Elem>(gens).first(level + 1),
                                  std::span<const Elem>(imgs).first(level + 1), img, queue))
        continue;
      rec(level + 1);
      if (stop) return;
    }
  };
  rec(0);
}

inline std::vector<GroupHom> all_homs(const GroupPtr& g, const GroupPtr& h) {
  std::vector<GroupHom> out;
  for_each_hom(g, h, [&](const std::vector<Elem>& m) {
    out.push_back(GroupHom{g, h, m});
    return true;
  });
  return out;
}

/// All isomorphisms g -> h; empty when the fingerprints differ.
inline std::vector<GroupHom> all_isos(const GroupPtr& g, const GroupPtr& h) {
  std::vector<GroupHom> out;
  if (g->order() != h->order() || fingerprint(g) != fingerprint(h)) return out;
  for_each_hom(
      g, h,
      [&](const std::vector<Elem>& m) {
        out.push_back(GroupHom{g, h, m});
        return true;
      },
      HomSearch{.injective = true});
  return out;
}

inline std::optional<GroupHom> find_iso(const GroupPtr& g, const GroupPtr& h) {
  std::optional<GroupHom> out;
  if (g->order() != h->order() || fingerprint(g) != fingerprint(h)) return out;
  for_each_hom(
      g, h,
      [&](const std::vector<Elem>& m) {
        out = GroupHom{g, h, m};
        return false;
      },
      HomSearch{.injective = true, .limit = 1});
  return out;
}

inline bool are_isomorphic(const GroupPtr& g, const GroupPtr& h) { return find_iso(g, h).has_value(); }

/// Aut(G) realized as a finite group. Element i of `group` is `maps[i]`;
/// element 0 is the identity automorphism and the product is composition,
/// (f o g)(x) = f(g(x)).
struct AutomorphismGroup {
  GroupPtr base;
  GroupPtr group;
  std::vector<GroupHom> maps;
  std::map<std::vector<Elem>, Elem> index;

  Elem index_of(const std::vector<Elem>& image_of) const { return index.at(image_of); }
  std::optional<Elem> find(const std::vector<Elem>& image_of) const {
    auto it = index.find(image_of);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  /// Index of the inner automorphism x -> g x g^-1.
  Elem inner(Elem g) const {
    std::vector<Elem> m(base->order());
    for (std::size_t x = 0; x < m.size(); ++x) m[x] = base->conj(g, Elem(x));
    return index_of(m);
  }
};

namespace detail {

inline std::vector<std::vector<Elem>> automorphism_images(const GroupPtr& g, std::size_t max_order) {
  std::vector<std::vector<Elem>> maps;
  bool over = false;
  for_each_hom(
      g, g,
      [&](const std::vector<Elem>& m) {
        if (maps.size() >= max_order) {
          over = true;
          return false;
        }
        maps.push_back(m);
        return true;
      },
      HomSearch{.injective = true});
  if (over) throw Error("automorphism group exceeds the order cap");
  // identity first, the rest in enumeration order
  auto id = GroupHom::identity(g).image_of;
  auto it = std::find(maps.begin(), maps.end(), id);
  std::rotate(maps.begin(), it, it + 1);
  return maps;
}

inline AutomorphismGroup automorphisms_from(const GroupPtr& g, std::vector<std::vector<Elem>> maps) {
  AutomorphismGroup a;
  a.base = g;
  for (std::size_t i = 0; i < maps.size(); ++i) a.index.emplace(maps[i], static_cast<Elem>(i));
  for (auto& m : maps) a.maps.push_back(GroupHom{g, g, std::move(m)});
  return a;
}

}  // namespace detail

inline AutomorphismGroup automorphism_group(const GroupPtr& g, std::size_t max_order = kDefaultMaxOrder) {
  AutomorphismGroup a = detail::automorphisms_from(g, detail::automorphism_images(g, max_order));
  const std::size_t n = a.maps.size();
  std::vector<Elem> table(n * n);
  std::vector<Elem> tmp(g->order());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < tmp.size(); ++x) tmp[x] = a.maps[i].image_of[a.maps[j].image_of[x]];
      table[i * n + j] = a.index.at(tmp);
    }
  a.group = make_group(FiniteGroup(n, std::move(table), "Aut(" + g->name() + ")"));
  return a;
}

/// Aut(G) as a list of maps with no multiplication table (`group` is null).
/// Used where Aut(G) is too large to table, e.g. GL(4,2) for C2^4.
inline AutomorphismGroup automorphism_maps(const GroupPtr& g) {
  return detail::automorphisms_from(g, detail::automorphism_images(g, SIZE_MAX));
}

/// Tabled when |Aut(G)| is within the cap, a bare map list otherwise.
inline AutomorphismGroup automorphisms_for_search(const GroupPtr& g) {
  try {
    return automorphism_group(g);
  } catch (const Error&) {
    return automorphism_maps(g);
  }
}

namespace detail {

inline std::vector<Elem> compose_images(const std::vector<Elem>& f, const std::vector<Elem>& g) {
  std::vector<Elem> r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = f[g[x]];
  return r;
}

/// Closure of the listed automorphisms under composition, as indices.
inline std::vector<Elem> automorphism_closure(const AutomorphismGroup& a, const std::vector<Elem>& gens) {
  std::vector<bool> seen(a.maps.size(), false);
  std::vector<Elem> out{0};
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Elem s : gens) {
      Elem y = a.index_of(compose_images(a.maps[out[k]].image_of, a.maps[s].image_of));
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

}  // namespace detail

/// A generating set of Aut(G), as indices into `maps`.
inline std::vector<Elem> automorphism_generators(const AutomorphismGroup& a) {
  if (a.group) return generating_set(a.group);
  // greedy: add the first map outside the current closure
  std::vector<Elem> gens;
  std::vector<bool> covered(a.maps.size(), false);
  covered[0] = true;
  for (std::size_t i = 1; i < a.maps.size(); ++i) {
    if (covered[i]) continue;
    gens.push_back(Elem(i));
    for (Elem e : detail::automorphism_closure(a, gens)) covered[e] = true;
  }
  return gens;
}

/// Every homomorphism G0 -> Aut(G1), as the list of image indices. With a
/// table this is the ordinary homomorphism search; without one, generator
/// images are chosen among automorphisms of fitting order and checked on
/// the Cayley graph of the subgroup generated so far.
template <class F>
void for_each_action_hom(const GroupPtr& g0, const AutomorphismGroup& a, F&& f) {
  if (a.group) {
    for_each_hom(g0, a.group, std::forward<F>(f));
    return;
  }
  const auto gens = generating_set(g0);
  const std::size_t n0 = g0->order();
  std::vector<std::size_t> aut_order(a.maps.size());
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    std::size_t k = 1;
    for (auto p = a.maps[i].image_of; a.index_of(p) != 0; ++k) p = detail::compose_images(a.maps[i].image_of, p);
    aut_order[i] = k;
  }
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < a.maps.size(); ++j)
      if (g0->elem_order(gens[i]) % aut_order[j] == 0) cand[i].push_back(Elem(j));
  std::vector<Elem> chosen(gens.size());
  constexpr Elem kNoElem = std::numeric_limits<Elem>::max();
  // Extends img over <gens[0..k]>; false on a relation that fails.
  auto close = [&](std::size_t k, std::vector<Elem>& img) {
    std::vector<Elem> queue{0};
    std::fill(img.begin(), img.end(), kNoElem);
    img[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem x = queue[q];
      for (std::size_t i = 0; i <= k; ++i) {
        const Elem y = g0->mul(x, gens[i]);
        const Elem v = a.index_of(detail::compose_images(a.maps[img[x]].image_of, a.maps[chosen[i]].image_of));
        if (img[y] == kNoElem) {
          img[y] = v;
          queue.push_back(y);
        } else if (img[y] != v) {
          return false;
        }
      }
    }
    return true;
  };
  std::vector<Elem> img(n0);
  if (gens.empty()) {
    f(std::vector<Elem>{0});
    return;
  }
  bool go = true;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    for (Elem c : cand[k]) {
      if (!go) return;
      chosen[k] = c;
      if (!close(k, img)) continue;
      if (k + 1 == gens.size()) {
        go = f(std::as_const(img));
      } else {
        self(self, k + 1);
      }
    }
  };
  rec(rec, 0);
}

}  // namespace xmod
