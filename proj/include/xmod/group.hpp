#pragma once

// Finite groups held as dense multiplication tables, with subgroups,
// quotients and homomorphisms between them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <compare>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xmod {

using Elem = std::uint16_t;
using Perm = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultMaxOrder = 512;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogId {
  unsigned order = 0;
  unsigned index = 0;
  friend auto operator<=>(const CatalogId&, const CatalogId&) = default;
  std::string str() const { return std::to_string(order) + ":" + std::to_string(index); }
  std::string bracket() const {
    return "[" + std::to_string(order) + "," + std::to_string(index) + "]";
  }
};

/// A finite group given by its full multiplication table. Element 0 is
/// always the identity. Immutable once built.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}) {}

  /// Builds a group from a row-major n x n table. Throws if the table is
  /// not a Latin square with identity 0; associativity is checked by
  /// `is_associative()` on demand since it costs n^3.
  FiniteGroup(std::size_t n, std::vector<Elem> table, std::string name = {})
      : n_(n), table_(std::move(table)), name_(std::move(name)) {
    if (n_ == 0 || table_.size() != n_ * n_) throw Error("group table has wrong shape");
    if (n_ > 0xFFFF) throw Error("group order exceeds element index range");
    std::vector<char> seen(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      if (table_[a] != a || table_[a * n_] != a) throw Error("element 0 is not the identity");
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n_; ++b) {
        Elem v = table_[a * n_ + b];
        if (v >= n_ || seen[v]) throw Error("group table row is not a permutation");
        seen[v] = 1;
      }
    }
    for (std::size_t b = 0; b < n_; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t a = 0; a < n_; ++a) {
        Elem v = table_[a * n_ + b];
        if (seen[v]) throw Error("group table column is not a permutation");
        seen[v] = 1;
      }
    }
    inv_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (table_[a * n_ + b] == 0) {
          inv_[a] = static_cast<Elem>(b);
          break;
        }
    orders_.assign(n_, 1);
    for (std::size_t a = 1; a < n_; ++a) {
      unsigned k = 1;
      for (Elem x = static_cast<Elem>(a); x != 0; x = table_[x * n_ + a]) ++k;
      orders_[a] = k;
    }
  }

  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  unsigned elem_order(Elem a) const { return orders_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  /// x y x^-1 y^-1
  Elem comm(Elem x, Elem y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }
  Elem pow(Elem x, long long k) const {
    k %= static_cast<long long>(orders_[x]);
    if (k < 0) k += orders_[x];
    Elem r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

  std::span<const Elem> table() const { return table_; }
  std::span<const Elem> row(Elem a) const { return {table_.data() + std::size_t(a) * n_, n_}; }
  const std::vector<unsigned>& elem_orders() const { return orders_; }

  const std::string& name() const { return name_; }
  const std::optional<CatalogId>& catalog_id() const { return id_; }

  FiniteGroup with_label(std::optional<CatalogId> id, std::string name) const {
    FiniteGroup g = *this;
    g.id_ = id;
    g.name_ = std::move(name);
    return g;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
    return true;
  }

  bool is_associative() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        Elem ab = table_[a * n_ + b];
        for (std::size_t c = 0; c < n_; ++c)
          if (table_[ab * n_ + c] != table_[a * n_ + table_[b * n_ + c]]) return false;
      }
    return true;
  }

  /// Structural equality: identical tables. Labels are ignored.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<unsigned> orders_;
  std::string name_;
  std::optional<CatalogId> id_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

inline GroupPtr trivial_group() { return make_group(FiniteGroup{}); }

// ---------------------------------------------------------------------------
// Permutations

inline Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

/// (p * q)(x) = p(q(x)).
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

/// Parses GAP-style cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
/// "()" is the identity. The result acts on `degree` points, or on the
/// largest mentioned point when degree is 0.
inline Perm parse_cycles(const std::string& text, std::size_t degree = 0) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  std::uint32_t max_point = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error("malformed cycle notation: " + text);
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw Error("malformed cycle notation: " + text);
      auto pt = static_cast<std::uint32_t>(std::stoul(text.substr(start, i - start)));
      if (pt == 0) throw Error("cycle points are 1-based: " + text);
      cyc.push_back(pt - 1);
      max_point = std::max(max_point, pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (degree == 0) degree = max_point;
  if (max_point > degree) throw Error("cycle point exceeds degree: " + text);
  Perm p = identity_perm(degree);
  std::vector<char> used(degree);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (used[c[k]]) throw Error("point repeated in cycle notation: " + text);
      used[c[k]] = 1;
      p[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return p;
}

inline std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    out += '(';
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      if (x != s) out += ',';
      out += std::to_string(x + 1);
      seen[x] = 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Closes the generators under composition. Element 0 is the identity and
/// the remaining elements appear in breadth-first discovery order, right
/// multiplying by the generators in the given order.
inline FiniteGroup group_from_generators(const std::vector<Perm>& gens,
                                         std::size_t max_order = kDefaultMaxOrder,
                                         std::string name = {}) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  std::vector<Perm> padded;
  for (const auto& g : gens) {
    Perm p = identity_perm(degree);
    std::copy(g.begin(), g.end(), p.begin());
    padded.push_back(std::move(p));
  }
  std::vector<Perm> elems{identity_perm(degree)};
  std::map<Perm, Elem> index{{elems[0], 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : padded) {
      Perm y = compose(elems[k], g);
      if (index.contains(y)) continue;
      if (elems.size() >= max_order) throw Error("group order cap exceeded while closing generators");
      index.emplace(y, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(n, std::move(table), std::move(name));
}

inline FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup(n, std::move(t), "C" + std::to_string(n));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Elem>(a.mul(Elem(x / nb), Elem(y / nb)) * nb +
                                       b.mul(Elem(x % nb), Elem(y % nb)));
  return FiniteGroup(n, std::move(t), a.name() + " x " + b.name());
}

// ---------------------------------------------------------------------------
// Subgroups

class Subgroup {
 public:
  Subgroup() = default;

  /// Wraps a member set already known to be a subgroup.
  static Subgroup from_closed(GroupPtr parent, std::vector<Elem> members) {
    Subgroup s;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    s.mask_.assign(parent->order(), 0);
    for (Elem m : members) s.mask_[m] = 1;
    s.members_ = std::move(members);
    s.parent_ = std::move(parent);
    return s;
  }

  static Subgroup trivial(GroupPtr parent) { return from_closed(std::move(parent), {0}); }
  static Subgroup whole(const GroupPtr& parent) {
    std::vector<Elem> all(parent->order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
    return from_closed(parent, std::move(all));
  }

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem x) const { return mask_[x] != 0; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }

  bool is_subset_of(const Subgroup& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](Elem x) { return other.contains(x); });
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.parent_->order() == b.parent_->order();
  }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
};

/// Smallest subgroup containing `seeds`.
inline Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> seeds) {
  std::vector<Elem> gens;
  for (Elem s : seeds)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  std::vector<char> in(g->order());
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (Elem s : gens) {
      Elem y = g->mul(members[k], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  return Subgroup::from_closed(g, std::move(members));
}

inline Subgroup subgroup_generated(const GroupPtr& g, std::initializer_list<Elem> seeds) {
  std::vector<Elem> v(seeds);
  return subgroup_generated(g, std::span<const Elem>(v));
}

/// Validates closure before wrapping; throws if `members` is not a subgroup.
inline Subgroup make_subgroup(const GroupPtr& g, std::vector<Elem> members) {
  Subgroup s = Subgroup::from_closed(g, std::move(members));
  if (!s.contains(0)) throw Error("subgroup must contain the identity");
  for (Elem a : s.members()) {
    if (!s.contains(g->inv(a))) throw Error("subgroup is not closed under inverses");
    for (Elem b : s.members())
      if (!s.contains(g->mul(a, b))) throw Error("subgroup is not closed under multiplication");
  }
  return s;
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> m;
  for (Elem x : a.members())
    if (b.contains(x)) m.push_back(x);
  return Subgroup::from_closed(a.parent(), std::move(m));
}

/// Subgroup generated by both; equals the product set AB when one of them
/// normalizes the other.
inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> seeds = a.members();
  seeds.insert(seeds.end(), b.members().begin(), b.members().end());
  return subgroup_generated(a.parent(), std::span<const Elem>(seeds));
}

inline Subgroup center(const GroupPtr& g) {
  std::vector<Elem> m;
  for (std::size_t z = 0; z < g->order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < g->order() && central; ++x)
      central = g->mul(Elem(z), Elem(x)) == g->mul(Elem(x), Elem(z));
    if (central) m.push_back(static_cast<Elem>(z));
  }
  return Subgroup::from_closed(g, std::move(m));
}

/// [A, B] = < a b a^-1 b^-1 >.
inline Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const auto& g = a.parent();
  std::vector<char> seen(g->order());
  std::vector<Elem> seeds;
  for (Elem x : a.members())
    for (Elem y : b.members()) {
      Elem c = g->comm(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  return subgroup_generated(g, std::span<const Elem>(seeds));
}

inline Subgroup derived_subgroup(const GroupPtr& g) {
  Subgroup all = Subgroup::whole(g);
  return commutator_subgroup(all, all);
}

inline bool is_normal(const Subgroup& n) {
  const auto& g = n.parent();
  for (std::size_t x = 0; x < g->order(); ++x)
    for (Elem m : n.members())
      if (!n.contains(g->conj(Elem(x), m))) return false;
  return true;
}

/// Elements of `g` commuting with every element of `s`.
inline Subgroup centralizer(const Subgroup& s) {
  const auto& g = s.parent();
  std::vector<Elem> m;
  for (std::size_t x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (Elem y : s.members())
      if (g->mul(Elem(x), y) != g->mul(y, Elem(x))) {
        ok = false;
        break;
      }
    if (ok) m.push_back(static_cast<Elem>(x));
  }
  return Subgroup::from_closed(g, std::move(m));
}

/// Small generating set: a minimum-size one for groups of order <= 64,
/// greedy by decreasing element order above that.
inline std::vector<Elem> generating_set(const GroupPtr& g) {
  const std::size_t n = g->order();
  if (n == 1) return {};
  std::vector<Elem> by_order(n - 1);
  for (std::size_t i = 1; i < n; ++i) by_order[i - 1] = static_cast<Elem>(i);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return g->elem_order(a) > g->elem_order(b); });
  if (g->elem_order(by_order[0]) == n) return {by_order[0]};
  std::vector<Elem> greedy;
  std::vector<Elem> current{0};
  {
    Subgroup s = Subgroup::trivial(g);
    for (Elem x : by_order) {
      if (s.contains(x)) continue;
      greedy.push_back(x);
      s = subgroup_generated(g, std::span<const Elem>(greedy));
      if (s.is_whole()) break;
    }
  }
  if (n > 64 || greedy.size() <= 2) return greedy;
  // Look for a shorter set by exhaustive search over tuples in by_order.
  for (std::size_t k = 2; k < greedy.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<Elem> cand(k);
      for (std::size_t i = 0; i < k; ++i) cand[i] = by_order[idx[i]];
      if (subgroup_generated(g, std::span<const Elem>(cand)).is_whole()) return cand;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == by_order.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return greedy;
}

/// A subgroup realized as a group in its own right. Elements are numbered
/// by increasing parent index, so the identity stays at 0.
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<Elem> to_parent;
  std::vector<int> from_parent;  // -1 outside the subgroup
};

inline EmbeddedGroup subgroup_as_group(const Subgroup& s) {
  const auto& g = s.parent();
  const std::size_t n = s.size();
  EmbeddedGroup e;
  e.to_parent = s.members();
  e.from_parent.assign(g->order(), -1);
  for (std::size_t i = 0; i < n; ++i) e.from_parent[e.to_parent[i]] = static_cast<int>(i);
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Elem>(e.from_parent[g->mul(e.to_parent[a], e.to_parent[b])]);
  e.group = make_group(FiniteGroup(n, std::move(table)));
  return e;
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> image_of;

  Elem operator()(Elem x) const { return image_of[x]; }

  bool is_homomorphism() const {
    if (image_of.size() != source->order() || image_of[0] != 0) return false;
    for (std::size_t a = 0; a < source->order(); ++a)
      for (std::size_t b = 0; b < source->order(); ++b)
        if (image_of[source->mul(Elem(a), Elem(b))] != target->mul(image_of[a], image_of[b]))
          return false;
    return true;
  }

  bool is_injective() const {
    std::vector<char> seen(target->order());
    for (Elem y : image_of) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
    return true;
  }

  bool is_bijective() const { return source->order() == target->order() && is_injective(); }

  Subgroup kernel() const {
    std::vector<Elem> m;
    for (std::size_t x = 0; x < image_of.size(); ++x)
      if (image_of[x] == 0) m.push_back(static_cast<Elem>(x));
    return Subgroup::from_closed(source, std::move(m));
  }

  Subgroup image() const {
    return Subgroup::from_closed(target, std::vector<Elem>(image_of.begin(), image_of.end()));
  }

  GroupHom inverse() const {
    if (!is_bijective()) throw Error("only bijective homomorphisms have inverses");
    GroupHom r{target, source, std::vector<Elem>(image_of.size())};
    for (std::size_t x = 0; x < image_of.size(); ++x) r.image_of[image_of[x]] = static_cast<Elem>(x);
    return r;
  }

  static GroupHom identity(const GroupPtr& g) {
    GroupHom h{g, g, std::vector<Elem>(g->order())};
    for (std::size_t x = 0; x < g->order(); ++x) h.image_of[x] = static_cast<Elem>(x);
    return h;
  }

  static GroupHom trivial(const GroupPtr& from, const GroupPtr& to) {
    return GroupHom{from, to, std::vector<Elem>(from->order(), 0)};
  }
};

/// (f o g)(x) = f(g(x)).
inline GroupHom compose(const GroupHom& f, const GroupHom& g) {
  GroupHom r{g.source, f.target, std::vector<Elem>(g.image_of.size())};
  for (std::size_t x = 0; x < g.image_of.size(); ++x) r.image_of[x] = f.image_of[g.image_of[x]];
  return r;
}

inline bool operator==(const GroupHom& a, const GroupHom& b) { return a.image_of == b.image_of; }

// ---------------------------------------------------------------------------
// Quotients

struct Quotient {
  GroupPtr group;
  std::vector<Elem> project;  // parent element -> coset index
  std::vector<Elem> rep;      // coset index -> least parent element in it
  GroupHom projection() const { return GroupHom{parent, group, project}; }
  GroupPtr parent;
};

/// G/N with cosets numbered by their least member, so coset 0 is N itself.
inline Quotient quotient_group(const Subgroup& n) {
  if (!is_normal(n)) throw Error("quotient by a subgroup that is not normal");
  const auto& g = n.parent();
  Quotient q;
  q.parent = g;
  constexpr Elem kUnset = 0xFFFF;
  q.project.assign(g->order(), kUnset);
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (q.project[x] != kUnset) continue;
    auto c = static_cast<Elem>(q.rep.size());
    q.rep.push_back(static_cast<Elem>(x));
    for (Elem m : n.members()) q.project[g->mul(Elem(x), m)] = c;
  }
  const std::size_t k = q.rep.size();
  std::vector<Elem> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = q.project[g->mul(q.rep[a], q.rep[b])];
  q.group = make_group(FiniteGroup(k, std::move(table)));
  return q;
}

}  // namespace xmod
