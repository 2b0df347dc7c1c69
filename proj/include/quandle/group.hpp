#pragma once

// Finite groups as Cayley tables, subgroups, homomorphisms, and the
// backtracking searches for isomorphisms and automorphisms.
//
// Elements are indices 0..n-1 and index 0 is always the identity.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quandle/errors.hpp"

namespace qf {

using Elem = std::uint32_t;

namespace detail {

struct ElemVectorHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace detail

class FiniteGroup {
 public:
  /// Builds a group from a row-major table (table[i*order+j] = i*j) and
  /// verifies identity-at-0, the Latin property and associativity.
  FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table) {
    if (order == 0) throw StructuralError("group order must be positive");
    if (table.size() != order * order)
      throw StructuralError("table of " + name + " has " + detail::idx(table.size()) +
                            " entries, expected " + detail::idx(order * order));
    for (Elem v : table)
      if (v >= order) throw StructuralError("table entry " + detail::idx(v) + " out of range in " + name);
    auto t = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };
    for (std::size_t i = 0; i < order; ++i)
      if (t(0, i) != i || t(i, 0) != i)
        throw StructuralError("index 0 is not the identity of " + name);
    std::vector<char> seen(order);
    for (std::size_t i = 0; i < order; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < order; ++j) {
        if (seen[t(i, j)]) throw StructuralError("row " + detail::idx(i) + " of " + name + " is not a permutation");
        seen[t(i, j)] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < order; ++j) {
        if (seen[t(j, i)]) throw StructuralError("column " + detail::idx(i) + " of " + name + " is not a permutation");
        seen[t(j, i)] = 1;
      }
    }
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        const std::size_t ij = t(i, j);
        for (std::size_t k = 0; k < order; ++k)
          if (t(ij, k) != t(i, t(j, k)))
            throw StructuralError("associativity fails in " + name + " at (" + detail::idx(i) + "," +
                                  detail::idx(j) + "," + detail::idx(k) + ")");
      }

    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->order = order;
    d->table = std::move(table);
    d->inverse.resize(order);
    d->element_order.resize(order);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j)
        if (d->table[i * order + j] == 0) {
          d->inverse[i] = static_cast<Elem>(j);
          break;
        }
      std::size_t k = 1;
      Elem p = static_cast<Elem>(i);
      while (p != 0) {
        p = d->table[p * order + i];
        ++k;
      }
      d->element_order[i] = k;
    }
    d->abelian = true;
    for (std::size_t i = 0; i < order && d->abelian; ++i)
      for (std::size_t j = i + 1; j < order; ++j)
        if (d->table[i * order + j] != d->table[j * order + i]) {
          d->abelian = false;
          break;
        }
    d_ = std::move(d);
  }

  /// Builds the table by calling mul(a, b) for every pair.
  template <class Mul>
  static FiniteGroup from_product(std::string name, std::size_t order, Mul&& mul) {
    std::vector<Elem> table(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) table[a * order + b] = static_cast<Elem>(mul(a, b));
    return FiniteGroup(std::move(name), order, std::move(table));
  }

  const std::string& name() const noexcept { return d_->name; }
  std::size_t order() const noexcept { return d_->order; }
  bool is_abelian() const noexcept { return d_->abelian; }
  std::span<const Elem> table() const noexcept { return d_->table; }

  /// Unchecked product.
  Elem mul(Elem a, Elem b) const noexcept { return d_->table[a * d_->order + b]; }
  /// Unchecked inverse.
  Elem inv(Elem a) const noexcept { return d_->inverse[a]; }
  std::size_t order_of(Elem a) const noexcept { return d_->element_order[a]; }

  void check_index(std::size_t a) const {
    if (a >= d_->order)
      throw StructuralError("element index " + detail::idx(a) + " out of range for " + d_->name + " of order " +
                            detail::idx(d_->order));
  }

  FiniteGroup renamed(std::string name) const {
    FiniteGroup g = *this;
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    g.d_ = std::move(d);
    return g;
  }

  /// Sorted multiset of element orders.
  std::vector<std::size_t> order_profile() const {
    std::vector<std::size_t> v = d_->element_order;
    std::sort(v.begin(), v.end());
    return v;
  }

  /// Same Cayley table (names are ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.d_ == b.d_ || (a.d_->order == b.d_->order && a.d_->table == b.d_->table);
  }

 private:
  struct Data {
    std::string name;
    std::size_t order = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::size_t> element_order;
    bool abelian = true;
  };
  std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------------------
// Element-level operations

inline Elem multiply(const FiniteGroup& g, std::size_t a, std::size_t b) {
  g.check_index(a);
  g.check_index(b);
  return g.mul(static_cast<Elem>(a), static_cast<Elem>(b));
}

inline Elem inverse(const FiniteGroup& g, std::size_t a) {
  g.check_index(a);
  return g.inv(static_cast<Elem>(a));
}

inline std::size_t element_order(const FiniteGroup& g, std::size_t a) {
  g.check_index(a);
  return g.order_of(static_cast<Elem>(a));
}

inline Elem power(const FiniteGroup& g, Elem a, long long k) {
  const long long n = static_cast<long long>(g.order_of(a));
  k %= n;
  if (k < 0) k += n;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = g.mul(r, a);
  return r;
}

/// Sorted closure of gens under the product (contains 0).
inline std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Elem x = members[head];
    for (Elem s : gens) {
      const Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// ---------------------------------------------------------------------------

class Subgroup {
 public:
  /// members need not be sorted; throws ContractViolation unless they form a subgroup.
  Subgroup(FiniteGroup parent, std::vector<Elem> members) : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(parent_.order(), 0);
    for (Elem m : members_) {
      parent_.check_index(m);
      mask_[m] = 1;
    }
    if (members_.empty() || members_.front() != 0)
      throw ContractViolation("subgroup of " + parent_.name() + " must contain the identity");
    for (Elem a : members_)
      for (Elem b : members_)
        if (!mask_[parent_.mul(a, b)])
          throw ContractViolation("subset of " + parent_.name() + " is not closed: " + detail::idx(a) + "*" +
                                  detail::idx(b) + " escapes");
  }

  /// The whole group.
  static Subgroup whole(const FiniteGroup& g) {
    std::vector<Elem> all(g.order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(g, std::move(all));
  }

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::span<const Elem> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept { return x < mask_.size() && mask_[x]; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }
  bool is_trivial() const noexcept { return members_.size() == 1; }

  /// Position of a member in the sorted member list; that is its index in as_group().
  Elem local_index(Elem x) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x)
      throw ContractViolation("element " + detail::idx(x) + " is not in the subgroup");
    return static_cast<Elem>(it - members_.begin());
  }

  /// The subgroup as a group of its own, element i being members()[i].
  FiniteGroup as_group(std::string name = {}) const {
    const std::size_t n = members_.size();
    std::vector<Elem> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local_index(parent_.mul(members_[i], members_[j]));
    if (name.empty()) name = "subgroup of " + parent_.name();
    return FiniteGroup(std::move(name), n, std::move(table));
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  FiniteGroup parent_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
};

inline Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  for (Elem x : gens) g.check_index(x);
  return Subgroup(g, closure(g, gens));
}

inline Subgroup generated_subgroup(const FiniteGroup& g, std::initializer_list<Elem> gens) {
  return generated_subgroup(g, std::span<const Elem>(gens.begin(), gens.size()));
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (!(h.parent() == g)) throw ContractViolation("subgroup does not belong to " + g.name());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem x : h.members())
      if (!h.contains(g.mul(g.mul(a, x), g.inv(a)))) return false;
  return true;
}

inline Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

/// Smallest normal subgroup containing x.
inline Subgroup normal_closure(const FiniteGroup& g, Elem x) {
  std::vector<Elem> conj;
  for (Elem a = 0; a < g.order(); ++a) conj.push_back(g.mul(g.mul(a, x), g.inv(a)));
  return generated_subgroup(g, conj);
}

inline bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  for (Elem x = 1; x < g.order(); ++x)
    if (!normal_closure(g, x).is_whole()) return false;
  return true;
}

/// Greedy generating set: repeatedly add the smallest element outside the current closure.
inline std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  for (Elem x = 1; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    std::fill(in.begin(), in.end(), 0);
    for (Elem m : closure(g, gens)) in[m] = 1;
  }
  return gens;
}

// ---------------------------------------------------------------------------

class GroupMap {
 public:
  /// Verifies images[0] = 0 and the homomorphism law; throws ContractViolation otherwise.
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.order())
      throw ContractViolation("map from " + source_.name() + " needs " + detail::idx(source_.order()) + " images");
    for (Elem v : images_)
      if (v >= target_.order()) throw StructuralError("image " + detail::idx(v) + " outside " + target_.name());
    if (images_[0] != 0) throw ContractViolation("map does not send identity to identity");
    for (Elem a = 0; a < source_.order(); ++a)
      for (Elem b = 0; b < source_.order(); ++b)
        if (images_[source_.mul(a, b)] != target_.mul(images_[a], images_[b]))
          throw ContractViolation("map " + source_.name() + " -> " + target_.name() +
                                  " is not a homomorphism at (" + detail::idx(a) + "," + detail::idx(b) + ")");
  }

  /// Skips verification; for images produced by the searches below.
  static GroupMap trusted(FiniteGroup source, FiniteGroup target, std::vector<Elem> images) {
    return GroupMap(std::move(source), std::move(target), std::move(images), Trusted{});
  }

  static GroupMap identity(const FiniteGroup& g) {
    std::vector<Elem> im(g.order());
    std::iota(im.begin(), im.end(), Elem{0});
    return trusted(g, g, std::move(im));
  }

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  std::span<const Elem> images() const noexcept { return images_; }
  const std::vector<Elem>& image_vector() const noexcept { return images_; }
  Elem operator()(Elem x) const noexcept { return images_[x]; }

  bool is_bijective() const {
    if (source_.order() != target_.order()) return false;
    std::vector<char> seen(target_.order(), 0);
    for (Elem v : images_) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
  bool is_endomorphism() const noexcept { return source_ == target_; }
  bool is_automorphism() const { return is_endomorphism() && is_bijective(); }
  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// (*this) o inner: apply inner first.
  GroupMap after(const GroupMap& inner) const {
    if (!(inner.target_ == source_)) throw ContractViolation("composition of incompatible maps");
    std::vector<Elem> im(inner.source_.order());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[inner.images_[i]];
    return trusted(inner.source_, target_, std::move(im));
  }

  GroupMap inverse() const {
    if (!is_bijective()) throw ContractViolation("inverse of a non-bijective map");
    std::vector<Elem> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<Elem>(i);
    return trusted(target_, source_, std::move(im));
  }

  GroupMap power(long long k) const {
    if (!is_automorphism()) throw ContractViolation("power of a non-automorphism");
    if (k < 0) return inverse().power(-k);
    GroupMap r = identity(source_);
    for (long long i = 0; i < k; ++i) r = after(r);
    return r;
  }

  /// Order in Aut(G).
  std::size_t order() const {
    if (!is_automorphism()) throw ContractViolation("order of a non-automorphism");
    std::vector<Elem> cur = images_;
    std::size_t k = 1;
    auto is_id = [](const std::vector<Elem>& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != i) return false;
      return true;
    };
    while (!is_id(cur)) {
      for (Elem& c : cur) c = images_[c];
      ++k;
    }
    return k;
  }

  /// tau o this o tau^-1.
  GroupMap conjugated_by(const GroupMap& tau) const { return tau.after(*this).after(tau.inverse()); }

  /// Restriction to a subgroup mapped onto itself, as an automorphism of sub.as_group().
  GroupMap restricted_to(const Subgroup& sub, const FiniteGroup& sub_group) const {
    std::vector<Elem> im(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
      const Elem y = images_[sub.members()[i]];
      if (!sub.contains(y)) throw ContractViolation("subgroup is not invariant under the map");
      im[i] = sub.local_index(y);
    }
    return trusted(sub_group, sub_group, std::move(im));
  }

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.images_ == b.images_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  struct Trusted {};
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> images, Trusted)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> images_;
};

inline Subgroup fixed_subgroup(const GroupMap& psi) {
  if (!psi.is_automorphism()) throw ContractViolation("fixed_subgroup needs an automorphism");
  std::vector<Elem> fix;
  for (Elem x = 0; x < psi.source().order(); ++x)
    if (psi(x) == x) fix.push_back(x);
  return Subgroup(psi.source(), std::move(fix));
}

/// Automorphism x -> a x a^-1.
inline GroupMap inner_automorphism(const FiniteGroup& g, Elem a) {
  g.check_index(a);
  std::vector<Elem> im(g.order());
  for (Elem x = 0; x < g.order(); ++x) im[x] = g.mul(g.mul(a, x), g.inv(a));
  return GroupMap::trusted(g, g, std::move(im));
}

/// Whether psi restricted to P is conjugation by an element of P.
inline bool restriction_is_inner(const GroupMap& psi, const Subgroup& p) {
  const FiniteGroup& g = psi.source();
  for (Elem a : p.members()) {
    bool ok = true;
    for (Elem x : p.members())
      if (psi(x) != g.mul(g.mul(a, x), g.inv(a))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Backtracking over generator images

namespace detail {

/// Extends gens[i] -> imgs[i] to <gens> by breadth-first right multiplication.
/// Fails on an inconsistent or (when injective) non-injective assignment.
inline bool extend_on_generators(const FiniteGroup& src, const FiniteGroup& tgt, std::span<const Elem> gens,
                                 std::span<const Elem> imgs, bool injective, std::vector<std::int64_t>& map,
                                 std::vector<char>& used) {
  map.assign(src.order(), -1);
  used.assign(tgt.order(), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    const Elem fx = static_cast<Elem>(map[x]);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = src.mul(x, gens[i]);
      const Elem fy = tgt.mul(fx, imgs[i]);
      if (map[y] < 0) {
        if (injective && used[fy]) return false;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      } else if (static_cast<Elem>(map[y]) != fy) {
        return false;
      }
    }
  }
  return true;
}

/// Enumerates injective homomorphisms src -> tgt defined on all of src.
/// visit(images) returns false to stop the search.
template <class Visit>
void search_injective_homomorphisms(const FiniteGroup& src, const FiniteGroup& tgt, Visit&& visit) {
  if (src.order() > tgt.order()) return;
  const std::vector<Elem> gens = greedy_generators(src);
  if (gens.empty()) {
    visit(std::vector<Elem>{0});
    return;
  }
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < tgt.order(); ++y)
      if (tgt.order_of(y) == src.order_of(gens[i])) candidates[i].push_back(y);

  std::vector<Elem> imgs(gens.size());
  std::vector<std::int64_t> map;
  std::vector<char> used;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    for (Elem y : candidates[level]) {
      if (stop) return;
      imgs[level] = y;
      const std::span<const Elem> gs(gens.data(), level + 1);
      const std::span<const Elem> is(imgs.data(), level + 1);
      if (!extend_on_generators(src, tgt, gs, is, true, map, used)) continue;
      if (level + 1 == gens.size()) {
        std::vector<Elem> out(src.order());
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<Elem>(map[k]);
        if (!visit(std::move(out))) stop = true;
      } else {
        rec(level + 1);
      }
    }
  };
  rec(0);
}

}  // namespace detail

/// Cheap isomorphism-invariant fingerprint used to prune group isomorphism tests.
inline bool may_be_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order() == b.order() && a.is_abelian() == b.is_abelian() && a.order_profile() == b.order_profile() &&
         center(a).size() == center(b).size();
}

inline std::optional<GroupMap> groups_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (!may_be_isomorphic(g1, g2)) return std::nullopt;
  std::optional<GroupMap> found;
  detail::search_injective_homomorphisms(g1, g2, [&](std::vector<Elem> im) {
    found = GroupMap::trusted(g1, g2, std::move(im));
    return false;
  });
  return found;
}

/// Every isomorphism g1 -> g2, sorted by image array.
inline std::vector<GroupMap> all_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2) {
  std::vector<std::vector<Elem>> found;
  if (may_be_isomorphic(g1, g2))
    detail::search_injective_homomorphisms(g1, g2, [&](std::vector<Elem> im) {
      found.push_back(std::move(im));
      return true;
    });
  std::sort(found.begin(), found.end());
  std::vector<GroupMap> out;
  out.reserve(found.size());
  for (auto& im : found) out.push_back(GroupMap::trusted(g1, g2, std::move(im)));
  return out;
}

inline constexpr std::size_t kDefaultAutomorphismBound = 60;

/// Every automorphism exactly once, sorted lexicographically by image array.
inline std::vector<GroupMap> automorphism_group(const FiniteGroup& g,
                                                std::size_t bound = kDefaultAutomorphismBound) {
  if (g.order() > bound)
    throw CapacityError("automorphism enumeration of " + g.name() + " (order " + detail::idx(g.order()) +
                        ") exceeds bound " + detail::idx(bound));
  return all_isomorphisms(g, g);
}

// ---------------------------------------------------------------------------

struct ConjugacyClass {
  GroupMap representative;  // lexicographically smallest image array in the class
  std::size_t size = 0;
  std::vector<std::size_t> members;  // indices into AutomorphismClasses::automorphisms
};

/// Aut(G) together with its partition into conjugacy classes.
struct AutomorphismClasses {
  FiniteGroup group;
  std::vector<GroupMap> automorphisms;  // lexicographic order
  std::vector<ConjugacyClass> classes;  // ordered by representative
  std::vector<std::size_t> class_of;    // automorphism index -> class index
  std::unordered_map<std::vector<Elem>, std::size_t, detail::ElemVectorHash> index_of;

  std::size_t automorphism_index(std::span<const Elem> images) const {
    auto it = index_of.find(std::vector<Elem>(images.begin(), images.end()));
    if (it == index_of.end()) throw ContractViolation("map is not an automorphism of " + group.name());
    return it->second;
  }
  std::size_t class_index(const GroupMap& psi) const { return class_of[automorphism_index(psi.images())]; }
};

namespace detail {

/// Small generating set of Aut(G): greedily add automorphisms outside the current closure.
inline std::vector<std::size_t> automorphism_generators(const AutomorphismClasses& ac) {
  const std::size_t m = ac.automorphisms.size();
  std::vector<std::size_t> gens;
  std::vector<char> in(m, 0);
  const std::size_t id = 0;  // identity is lexicographically smallest
  auto rebuild = [&] {
    std::fill(in.begin(), in.end(), 0);
    std::vector<std::size_t> queue{id};
    in[id] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto& x = ac.automorphisms[queue[head]].image_vector();
      for (std::size_t gi : gens) {
        const auto& s = ac.automorphisms[gi].image_vector();
        std::vector<Elem> y(x.size());
        for (std::size_t k = 0; k < y.size(); ++k) y[k] = x[s[k]];
        const std::size_t yi = ac.index_of.at(y);
        if (!in[yi]) {
          in[yi] = 1;
          queue.push_back(yi);
        }
      }
    }
  };
  rebuild();
  for (std::size_t i = 0; i < m; ++i)
    if (!in[i]) {
      gens.push_back(i);
      rebuild();
    }
  return gens;
}

}  // namespace detail

inline AutomorphismClasses automorphism_conjugacy_classes(const FiniteGroup& g,
                                                          std::size_t bound = kDefaultAutomorphismBound) {
  AutomorphismClasses ac{g, automorphism_group(g, bound), {}, {}, {}};
  const std::size_t m = ac.automorphisms.size();
  for (std::size_t i = 0; i < m; ++i) ac.index_of.emplace(ac.automorphisms[i].image_vector(), i);
  const auto gens = detail::automorphism_generators(ac);
  std::vector<std::vector<Elem>> gen_img, gen_inv;
  for (std::size_t gi : gens) {
    gen_img.push_back(ac.automorphisms[gi].image_vector());
    gen_inv.push_back(ac.automorphisms[gi].inverse().image_vector());
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ac.class_of.assign(m, kUnset);
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < m; ++i) {
    if (ac.class_of[i] != kUnset) continue;
    const std::size_t c = ac.classes.size();
    std::vector<std::size_t> members{i};
    ac.class_of[i] = c;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const auto& psi = ac.automorphisms[members[head]].image_vector();
      for (std::size_t k = 0; k < gen_img.size(); ++k) {
        std::vector<Elem> conj(n);
        for (std::size_t x = 0; x < n; ++x) conj[x] = gen_img[k][psi[gen_inv[k][x]]];
        const std::size_t j = ac.index_of.at(conj);
        if (ac.class_of[j] == kUnset) {
          ac.class_of[j] = c;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ac.classes.push_back(ConjugacyClass{ac.automorphisms[i], members.size(), std::move(members)});
  }
  return ac;
}

}  // namespace qf
