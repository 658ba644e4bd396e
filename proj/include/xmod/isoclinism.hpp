#pragma once

// Isoclinism of groups and of crossed modules, with witnesses, and the
// partition of a list into isoclinism families.

#include "xmod/xmod_iso.hpp"

namespace xmod {

// ---------------------------------------------------------------------------
// Groups

/// Commutator map of a group on its central quotient: c(aZ, bZ) = [a, b],
/// valued in the derived subgroup realized as a group.
struct GroupPairing {
  GroupPtr group;
  Quotient central;
  EmbeddedGroup derived;
  std::vector<Elem> c;  // [a * |G/Z| + b] -> element of derived.group

  std::size_t quotient_order() const { return central.rep.size(); }
  Elem at(Elem a, Elem b) const { return c[std::size_t(a) * quotient_order() + b]; }
};

inline GroupPairing group_pairing(const GroupPtr& g) {
  GroupPairing p;
  p.group = g;
  p.central = quotient_group(center(g));
  p.derived = subgroup_as_group(derived_subgroup(g));
  const std::size_t k = p.central.rep.size();
  constexpr Elem kUnset = 0xFFFF;
  p.c.assign(k * k, kUnset);
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t b = 0; b < g->order(); ++b) {
      auto v = static_cast<Elem>(p.derived.from_parent[g->comm(Elem(a), Elem(b))]);
      Elem& slot = p.c[std::size_t(p.central.project[a]) * k + p.central.project[b]];
      if (slot != kUnset && slot != v) throw Error("group commutator map is not well defined on cosets");
      slot = v;
    }
  return p;
}

/// (eta, xi) with eta: M/Z(M) -> N/Z(N) and xi: [M,M] -> [N,N].
struct GroupIsoclinism {
  GroupHom eta;
  GroupHom xi;
};

inline bool validate_group_isoclinism(const GroupPairing& p, const GroupPairing& q, const GroupIsoclinism& w) {
  if (!w.eta.is_homomorphism() || !w.eta.is_bijective()) return false;
  if (!w.xi.is_homomorphism() || !w.xi.is_bijective()) return false;
  if (w.eta.image_of.size() != p.quotient_order() || w.xi.image_of.size() != p.derived.group->order())
    return false;
  const std::size_t k = p.quotient_order();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (w.xi(p.at(Elem(a), Elem(b))) != q.at(w.eta(Elem(a)), w.eta(Elem(b)))) return false;
  return true;
}

namespace detail {

/// Builds the unique homomorphism sending each seeds[i] to images[i], if one
/// exists and the seeds generate `g`. Pairs must already be conflict-free.
inline std::optional<std::vector<Elem>> extend_from_seeds(const FiniteGroup& g, const FiniteGroup& h,
                                                          const std::vector<Elem>& seeds,
                                                          const std::vector<Elem>& images) {
  std::vector<int> img(g.order());
  std::vector<Elem> queue;
  if (!extend_partial(g, h, seeds, images, img, queue)) return std::nullopt;
  std::vector<Elem> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (img[x] < 0) return std::nullopt;
    out[x] = static_cast<Elem>(img[x]);
  }
  return out;
}

/// Records a -> b in a partial map; false on conflict.
inline bool assign(std::vector<int>& map, std::vector<Elem>& seeds, std::vector<Elem>& images, Elem a, Elem b) {
  if (map[a] < 0) {
    map[a] = b;
    seeds.push_back(a);
    images.push_back(b);
    return true;
  }
  return map[a] == b;
}

inline bool is_bijection(const std::vector<Elem>& m, std::size_t target_order) {
  if (m.size() != target_order) return false;
  std::vector<char> seen(target_order);
  for (Elem y : m) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

}  // namespace detail

/// Searches all eta; xi is forced by the commutator values, which generate
/// the derived subgroup. With `slow`, every xi is enumerated instead.
inline std::optional<GroupIsoclinism> is_isoclinic_group(const GroupPairing& p, const GroupPairing& q,
                                                         bool slow = false) {
  const auto& qm = p.central.group;
  const auto& qn = q.central.group;
  const auto& dm = p.derived.group;
  const auto& dn = q.derived.group;
  if (qm->order() != qn->order() || dm->order() != dn->order()) return std::nullopt;
  std::optional<GroupIsoclinism> out;
  const std::size_t k = qm->order();
  if (slow) {
    auto etas = qm->order() <= 10 ? brute::all_isos(qm, qn) : all_isos(qm, qn);
    auto xis = dm->order() <= 10 ? brute::all_isos(dm, dn) : all_isos(dm, dn);
    for (const auto& eta : etas)
      for (const auto& xi : xis) {
        GroupIsoclinism w{eta, xi};
        if (validate_group_isoclinism(p, q, w)) return w;
      }
    return std::nullopt;
  }
  for_each_hom(
      qm, qn,
      [&](const std::vector<Elem>& eta) {
        std::vector<int> map(dm->order(), -1);
        std::vector<Elem> seeds, images;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b)
            if (!detail::assign(map, seeds, images, p.at(Elem(a), Elem(b)), q.at(eta[a], eta[b]))) return true;
        auto xi = detail::extend_from_seeds(*dm, *dn, seeds, images);
        if (!xi || !detail::is_bijection(*xi, dn->order())) return true;
        out = GroupIsoclinism{GroupHom{qm, qn, eta}, GroupHom{dm, dn, *xi}};
        return false;
      },
      HomSearch{.injective = true});
  return out;
}

inline std::optional<GroupIsoclinism> is_isoclinic_group(const GroupPtr& m, const GroupPtr& n, bool slow = false) {
  return is_isoclinic_group(group_pairing(m), group_pairing(n), slow);
}

/// Families in first-occurrence order; each family lists input indices in
/// increasing order. Without `slow`, candidates are compared only against
/// leaders with equal central-quotient and derived fingerprints.
inline std::vector<std::vector<std::size_t>> group_family_partition(const std::vector<GroupPtr>& groups,
                                                                    bool slow = false) {
  std::vector<GroupPairing> pairings;
  std::vector<std::pair<GroupFingerprint, GroupFingerprint>> keys;
  for (const auto& g : groups) {
    pairings.push_back(group_pairing(g));
    keys.emplace_back(fingerprint(pairings.back().central.group), fingerprint(pairings.back().derived.group));
  }
  std::vector<std::vector<std::size_t>> families;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    bool placed = false;
    for (auto& fam : families) {
      const std::size_t lead = fam.front();
      if (!slow && keys[lead] != keys[i]) continue;
      if (is_isoclinic_group(pairings[lead], pairings[i], slow)) {
        fam.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) families.push_back({i});
  }
  return families;
}

// ---------------------------------------------------------------------------
// Crossed modules

/// The pairings c1 and c0 of X on its central quotient, valued in the
/// commutator subcrossed module realized as a crossed module.
struct CommutatorPairing {
  XModPtr xmod;
  QuotientXMod central;  // X / Z(X)
  SubXMod derived;       // [X, X] inside X
  EmbeddedXMod derived_x;
  std::vector<Elem> c1;  // [q1 * |Q0| + q0] -> element of derived_x source
  std::vector<Elem> c0;  // [q0 * |Q0| + q0'] -> element of derived_x range

  std::size_t q1_order() const { return central.q1.rep.size(); }
  std::size_t q0_order() const { return central.q0.rep.size(); }
  Elem at1(Elem q1, Elem q0) const { return c1[std::size_t(q1) * q0_order() + q0]; }
  Elem at0(Elem a, Elem b) const { return c0[std::size_t(a) * q0_order() + b]; }
};

/// Throws when c1 or c0 takes two values on one pair of cosets.
inline CommutatorPairing commutator_pairing(const XModPtr& x) {
  CommutatorPairing p;
  p.xmod = x;
  p.central = quotient_xmod(center_xmod(x));
  p.derived = derived_subxmod(x);
  p.derived_x = subxmod_as_xmod(p.derived);
  const auto& g1 = *x->source();
  const auto& g0 = *x->range();
  const std::size_t k1 = p.q1_order(), k0 = p.q0_order();
  constexpr Elem kUnset = 0xFFFF;
  p.c1.assign(k1 * k0, kUnset);
  p.c0.assign(k0 * k0, kUnset);
  for (std::size_t a = 0; a < g1.order(); ++a)
    for (std::size_t b = 0; b < g0.order(); ++b) {
      Elem v = g1.mul(x->act(Elem(b), Elem(a)), g1.inv(Elem(a)));
      auto e = static_cast<Elem>(p.derived_x.e1.from_parent[v]);
      Elem& slot = p.c1[std::size_t(p.central.q1.project[a]) * k0 + p.central.q0.project[b]];
      if (slot != kUnset && slot != e) throw Error("c1 is not well defined on cosets");
      slot = e;
    }
  for (std::size_t a = 0; a < g0.order(); ++a)
    for (std::size_t b = 0; b < g0.order(); ++b) {
      auto e = static_cast<Elem>(p.derived_x.e0.from_parent[g0.comm(Elem(a), Elem(b))]);
      Elem& slot = p.c0[std::size_t(p.central.q0.project[a]) * k0 + p.central.q0.project[b]];
      if (slot != kUnset && slot != e) throw Error("c0 is not well defined on cosets");
      slot = e;
    }
  return p;
}

/// ((eta1, eta0), (xi1, xi0)) between central quotients and commutator
/// subcrossed modules.
struct IsoclinismWitness {
  XModMorphism quotient_iso;
  XModMorphism derived_iso;
};

/// Both maps are isomorphisms and both diagrams commute on every pair.
inline bool validate_isoclinism(const CommutatorPairing& p, const CommutatorPairing& q, const IsoclinismWitness& w) {
  const auto& eta = w.quotient_iso;
  const auto& xi = w.derived_iso;
  if (eta.alpha.image_of.size() != p.q1_order() || eta.beta.image_of.size() != p.q0_order()) return false;
  if (xi.alpha.image_of.size() != p.derived_x.xmod->source()->order() ||
      xi.beta.image_of.size() != p.derived_x.xmod->range()->order())
    return false;
  if (!eta.is_isomorphism() || !xi.is_isomorphism()) return false;
  const std::size_t k1 = p.q1_order(), k0 = p.q0_order();
  for (std::size_t a = 0; a < k1; ++a)
    for (std::size_t b = 0; b < k0; ++b)
      if (xi.alpha(p.at1(Elem(a), Elem(b))) != q.at1(eta.alpha(Elem(a)), eta.beta(Elem(b)))) return false;
  for (std::size_t a = 0; a < k0; ++a)
    for (std::size_t b = 0; b < k0; ++b)
      if (xi.beta(p.at0(Elem(a), Elem(b))) != q.at0(eta.beta(Elem(a)), eta.beta(Elem(b)))) return false;
  return true;
}

struct IsoclinismOptions {
  /// Enumerate every pair (eta, xi) by unfiltered search instead of
  /// deriving xi from eta.
  bool slow = false;
};

inline std::optional<IsoclinismWitness> is_isoclinic_xmod(const CommutatorPairing& p, const CommutatorPairing& q,
                                                          IsoclinismOptions opts = {}) {
  const XModPtr& qx = p.central.xmod;
  const XModPtr& qy = q.central.xmod;
  const XModPtr& dx = p.derived_x.xmod;
  const XModPtr& dy = q.derived_x.xmod;
  if (qx->order() != qy->order() || dx->order() != dy->order()) return std::nullopt;
  std::optional<IsoclinismWitness> out;

  if (opts.slow) {
    auto small = [](const XModPtr& x) { return x->order()[0] <= 10 && x->order()[1] <= 10; };
    auto etas = small(qx) ? brute::all_xmod_isos(qx, qy) : all_xmod_isos(qx, qy);
    if (etas.empty()) return std::nullopt;
    auto xis = small(dx) ? brute::all_xmod_isos(dx, dy) : all_xmod_isos(dx, dy);
    for (const auto& eta : etas)
      for (const auto& xi : xis) {
        IsoclinismWitness w{eta, xi};
        if (validate_isoclinism(p, q, w)) return w;
      }
    return std::nullopt;
  }

  const std::size_t k1 = p.q1_order(), k0 = p.q0_order();
  const auto& d1 = *dx->source();
  const auto& d0 = *dx->range();
  const auto gens1 = generating_set(dx->source());
  const auto gens0 = generating_set(dx->range());
  for_each_xmod_iso(qx, qy, [&](const XModMorphism& eta) {
    std::vector<int> map1(d1.order(), -1), map0(d0.order(), -1);
    std::vector<Elem> s1, i1, s0, i0;
    for (std::size_t a = 0; a < k1; ++a)
      for (std::size_t b = 0; b < k0; ++b)
        if (!detail::assign(map1, s1, i1, p.at1(Elem(a), Elem(b)), q.at1(eta.alpha(Elem(a)), eta.beta(Elem(b)))))
          return true;
    for (std::size_t a = 0; a < k0; ++a)
      for (std::size_t b = 0; b < k0; ++b)
        if (!detail::assign(map0, s0, i0, p.at0(Elem(a), Elem(b)), q.at0(eta.beta(Elem(a)), eta.beta(Elem(b)))))
          return true;
    auto xi1 = detail::extend_from_seeds(d1, *dy->source(), s1, i1);
    if (!xi1 || !detail::is_bijection(*xi1, dy->source()->order())) return true;
    auto xi0 = detail::extend_from_seeds(d0, *dy->range(), s0, i0);
    if (!xi0 || !detail::is_bijection(*xi0, dy->range()->order())) return true;
    if (!is_xmod_map_on_generators(*dx, *dy, *xi1, *xi0, gens1, gens0)) return true;
    out = IsoclinismWitness{eta, XModMorphism{dx, dy, GroupHom{dx->source(), dy->source(), *xi1},
                                              GroupHom{dx->range(), dy->range(), *xi0}}};
    return false;
  });
  return out;
}

inline std::optional<IsoclinismWitness> is_isoclinic_xmod(const XModPtr& x, const XModPtr& y,
                                                          IsoclinismOptions opts = {}) {
  return is_isoclinic_xmod(commutator_pairing(x), commutator_pairing(y), opts);
}

/// Isomorphism-invariant data of the central quotient and the commutator
/// subcrossed module; isoclinic crossed modules always share it.
struct IsoclinismKey {
  XModKey quotient;
  XModKey derived;
  friend auto operator<=>(const IsoclinismKey&, const IsoclinismKey&) = default;
};

inline IsoclinismKey isoclinism_key(const CommutatorPairing& p) {
  return IsoclinismKey{xmod_key(p.central.xmod), xmod_key(p.derived_x.xmod)};
}

struct FamilyOptions {
  bool slow = false;  // no key filter, unfiltered isoclinism search
};

/// Families in first-occurrence order. Each candidate is tested against
/// the leader of every existing family.
inline std::vector<std::vector<std::size_t>> xmod_family_partition(const std::vector<CommutatorPairing>& pairings,
                                                                   FamilyOptions opts = {}) {
  std::vector<IsoclinismKey> keys;
  if (!opts.slow)
    for (const auto& p : pairings) keys.push_back(isoclinism_key(p));
  std::vector<std::vector<std::size_t>> families;
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    bool placed = false;
    for (auto& fam : families) {
      const std::size_t lead = fam.front();
      if (!opts.slow && keys[lead] != keys[i]) continue;
      if (is_isoclinic_xmod(pairings[lead], pairings[i], IsoclinismOptions{.slow = opts.slow})) {
        fam.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) families.push_back({i});
  }
  return families;
}

inline std::vector<std::vector<std::size_t>> xmod_family_partition(const std::vector<XModPtr>& reps,
                                                                   FamilyOptions opts = {}) {
  std::vector<CommutatorPairing> pairings;
  for (const auto& x : reps) pairings.push_back(commutator_pairing(x));
  return xmod_family_partition(pairings, opts);
}

// ---------------------------------------------------------------------------
// Sub crossed modules H with H Z(X) = X

struct HZIsoclinism {
  EmbeddedXMod sub;  // H realized as a crossed module
  CommutatorPairing sub_pairing;
  CommutatorPairing pairing;
  IsoclinismWitness witness;  // from H to X
  bool valid = false;
};

/// The witness from the inclusion: quotient map induced by H -> X, derived
/// map the identity on the shared commutator. Throws when H Z(X) != X.
inline HZIsoclinism hz_subxmod_isoclinism(const SubXMod& h) {
  const XModPtr& x = h.parent;
  SubXMod z = center_xmod(x);
  if (!join(h.s1, z.s1).is_whole() || !join(h.s0, z.s0).is_whole())
    throw Error("sub crossed module does not satisfy H Z(X) = X");
  HZIsoclinism r;
  r.sub = subxmod_as_xmod(h);
  r.sub_pairing = commutator_pairing(r.sub.xmod);
  r.pairing = commutator_pairing(x);
  const auto& hp = r.sub_pairing;
  const auto& xp = r.pairing;

  std::vector<Elem> eta1(hp.q1_order()), eta0(hp.q0_order());
  for (std::size_t c = 0; c < eta1.size(); ++c) eta1[c] = xp.central.q1.project[r.sub.e1.to_parent[hp.central.q1.rep[c]]];
  for (std::size_t c = 0; c < eta0.size(); ++c) eta0[c] = xp.central.q0.project[r.sub.e0.to_parent[hp.central.q0.rep[c]]];

  const auto& hd = hp.derived_x;
  const auto& xd = xp.derived_x;
  std::vector<Elem> xi1(hd.xmod->source()->order()), xi0(hd.xmod->range()->order());
  bool inside = true;
  for (std::size_t e = 0; e < xi1.size(); ++e) {
    int v = xd.e1.from_parent[r.sub.e1.to_parent[hd.e1.to_parent[e]]];
    inside = inside && v >= 0;
    xi1[e] = static_cast<Elem>(std::max(v, 0));
  }
  for (std::size_t e = 0; e < xi0.size(); ++e) {
    int v = xd.e0.from_parent[r.sub.e0.to_parent[hd.e0.to_parent[e]]];
    inside = inside && v >= 0;
    xi0[e] = static_cast<Elem>(std::max(v, 0));
  }
  r.witness = IsoclinismWitness{
      XModMorphism{hp.central.xmod, xp.central.xmod, GroupHom{hp.central.xmod->source(), xp.central.xmod->source(), eta1},
                   GroupHom{hp.central.xmod->range(), xp.central.xmod->range(), eta0}},
      XModMorphism{hd.xmod, xd.xmod, GroupHom{hd.xmod->source(), xd.xmod->source(), xi1},
                   GroupHom{hd.xmod->range(), xd.xmod->range(), xi0}}};
  r.valid = inside && validate_isoclinism(hp, xp, r.witness);
  return r;
}

// ---------------------------------------------------------------------------
// Component groups of isoclinic crossed modules

struct ComponentReport {
  bool source_groups_isoclinic = false;
  bool range_groups_isoclinic = false;
  std::optional<bool> aspherical_claim;        // ranges isoclinic, when both aspherical
  std::optional<bool> simply_connected_claim;  // sources isoclinic, when both simply connected
  /// Only the two conditional claims are binding.
  bool passed() const { return aspherical_claim.value_or(true) && simply_connected_claim.value_or(true); }
};

inline ComponentReport component_isoclinism_checks(const XModPtr& x, const XModPtr& y) {
  ComponentReport r;
  r.source_groups_isoclinic = is_isoclinic_group(x->source(), y->source()).has_value();
  r.range_groups_isoclinic = is_isoclinic_group(x->range(), y->range()).has_value();
  if (is_aspherical(x) && is_aspherical(y)) r.aspherical_claim = r.range_groups_isoclinic;
  if (is_simply_connected(x) && is_simply_connected(y)) r.simply_connected_claim = r.source_groups_isoclinic;
  return r;
}

}  // namespace xmod
