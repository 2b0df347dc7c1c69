#pragma once

// Invariants of Q(G, psi): the displacement subgroup P (orbit of e under Inn),
// P^2, Fix(psi), twisted normalizers, the (P1)/(P2) conditions, the structure
// of Inn(Q), and the bundled InvariantProfile.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quandle/catalog.hpp"
#include "quandle/quandle.hpp"

namespace qf {

namespace detail {

inline void require_automorphism(const GroupMap& psi) {
  if (!psi.is_automorphism()) throw ContractViolation("expected an automorphism");
}

}  // namespace detail

/// s_x(e) = x psi(x)^-1.
inline Elem displacement(const GroupMap& psi, Elem x) {
  const FiniteGroup& g = psi.source();
  return g.mul(x, g.inv(psi(x)));
}

/// P: the orbit of e under Inn(Q(G,psi)), cross-checked against <x psi(x)^-1>.
inline Subgroup compute_P(const GroupMap& psi) {
  detail::require_automorphism(psi);
  const FiniteGroup& g = psi.source();
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> orbit{0};
  in[0] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const Elem y = orbit[head];
    for (Elem x = 0; x < n; ++x) {
      const Elem z = g.mul(x, psi(g.mul(g.inv(x), y)));
      if (!in[z]) {
        in[z] = 1;
        orbit.push_back(z);
      }
    }
  }
  std::vector<Elem> gens(n);
  for (Elem x = 0; x < n; ++x) gens[x] = displacement(psi, x);
  Subgroup generated = generated_subgroup(g, gens);
  std::sort(orbit.begin(), orbit.end());
  if (!std::equal(orbit.begin(), orbit.end(), generated.members().begin(), generated.members().end()))
    throw InternalError("orbit of e and <x psi(x)^-1> differ for " + g.name());
  return generated;
}

/// psi restricted to an invariant subgroup, as an automorphism of sub.as_group().
inline GroupMap restrict_automorphism(const GroupMap& psi, const Subgroup& sub) {
  return psi.restricted_to(sub, sub.as_group(sub.parent().name() + "|sub"));
}

/// P^2 = P(Q(P, psi|P)), as a subgroup of G.
inline Subgroup compute_P2(const GroupMap& psi) {
  const Subgroup p = compute_P(psi);
  const GroupMap rest = restrict_automorphism(psi, p);
  const Subgroup p_of_p = compute_P(rest);
  std::vector<Elem> members;
  for (Elem local : p_of_p.members()) members.push_back(p.members()[local]);
  return Subgroup(psi.source(), std::move(members));
}

/// TN(H) = { x : x H psi(x)^-1 = H }.
inline Subgroup twisted_normalizer(const GroupMap& psi, const Subgroup& h) {
  detail::require_automorphism(psi);
  const FiniteGroup& g = psi.source();
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem px = g.inv(psi(x));
    bool ok = true;
    for (Elem y : h.members())
      if (!h.contains(g.mul(g.mul(x, y), px))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

/// {s_p(e) : p in P}, sorted.
inline std::vector<Elem> displacements_of(const GroupMap& psi, const Subgroup& p) {
  std::vector<Elem> out;
  for (Elem x : p.members()) out.push_back(displacement(psi, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// (P1): P^2 is normal in G.
inline bool check_p1(const GroupMap& psi) { return is_normal(psi.source(), compute_P2(psi)); }

/// (P2): P^2 = { s_p(e) : p in P }.
inline bool check_p2(const GroupMap& psi) {
  const Subgroup p2 = compute_P2(psi);
  const auto d = displacements_of(psi, compute_P(psi));
  return std::equal(d.begin(), d.end(), p2.members().begin(), p2.members().end());
}

/// Elementwise product set A B, sorted.
inline std::vector<Elem> product_set(const FiniteGroup& g, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<Elem> out;
  for (Elem x : a)
    for (Elem y : b) out.push_back(g.mul(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Descriptors

/// Isomorphism type of a small group: order, element-order multiset, abelian flag, catalog name.
struct GroupDescriptor {
  std::size_t order = 0;
  std::vector<std::size_t> element_orders;
  bool abelian = true;
  std::optional<std::string> catalog_id;

  std::string display() const {
    if (order == 1) return "1";
    if (catalog_id) return *catalog_id;
    return "order " + std::to_string(order) + (abelian ? " abelian" : " nonabelian");
  }
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  friend auto operator<=>(const GroupDescriptor&, const GroupDescriptor&) = default;
};

inline GroupDescriptor describe_group(const FiniteGroup& g) {
  return {g.order(), g.order_profile(), g.is_abelian(), identify_group(g)};
}

/// Automorphism classes of catalog groups, computed once per name.
inline const AutomorphismClasses& catalog_automorphism_classes(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<AutomorphismClasses>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<AutomorphismClasses>(automorphism_conjugacy_classes(build_group(name), 16));
  return *slot;
}

/// Conjugacy class of an automorphism of P, transported into the catalog copy of P.
struct RestrictedClass {
  std::optional<std::size_t> class_id;  // class index in Aut(catalog P)
  std::size_t order = 1;                // order of psi|P
  std::size_t fixed = 1;                // fixed points of psi|P
  std::string display;

  friend bool operator==(const RestrictedClass& a, const RestrictedClass& b) {
    return a.class_id == b.class_id && a.order == b.order && a.fixed == b.fixed;
  }
};

/// Short label for an automorphism of a catalog group: "id", "x r" on cyclic groups, else the class.
inline std::string automorphism_label(const GroupMap& a, const std::optional<std::string>& catalog,
                                      std::optional<std::size_t> class_id) {
  if (a.is_identity()) return "id";
  const FiniteGroup& p = a.source();
  if (catalog && (*catalog)[0] == 'C' && catalog->find('x') == std::string::npos) {
    for (Elem gen = 0; gen < p.order(); ++gen)
      if (p.order_of(gen) == p.order()) {
        Elem y = 0;
        for (std::size_t r = 0; r < p.order(); ++r, y = p.mul(y, gen))
          if (y == a(gen)) return "x" + std::to_string(r);
      }
  }
  return "class " + (class_id ? std::to_string(*class_id) : std::string("?")) + " (ord " +
         std::to_string(a.order()) + ")";
}

/// Class of an automorphism of an arbitrary small group (identified with its catalog type).
inline RestrictedClass classify_automorphism(const GroupMap& a) {
  RestrictedClass rc;
  rc.order = a.order();
  rc.fixed = fixed_subgroup(a).size();
  const FiniteGroup& p = a.source();
  const auto id = identify_group(p);
  if (id) {
    const auto& ac = catalog_automorphism_classes(*id);
    const auto h = groups_isomorphic(p, ac.group);
    if (!h) throw InternalError("catalog identification lost its witness");
    const GroupMap moved = h->after(a).after(h->inverse());
    rc.class_id = ac.class_index(moved);
  }
  rc.display = automorphism_label(a, id, rc.class_id);
  return rc;
}

// ---------------------------------------------------------------------------
// Inn(Q) structure

struct InnStructure {
  std::size_t inn_size = 0;
  std::size_t p_size = 0;
  std::size_t psi_order = 0;
  bool size_formula_holds = false;      // |Inn| = |P| m
  bool semidirect_isomorphic = false;   // Inn = P x| C_m, with a verified isomorphism
  bool p_centerless = false;
  bool restriction_inner = false;       // psi|P is conjugation by an element of P
  bool direct_isomorphic = false;       // Inn = P x C_m
};

/// P x| C_m with (x,i)(y,j) = (x psi^i(y), i+j); element (x,i) has index i|P| + x.
inline FiniteGroup twisted_product(const GroupMap& psi_on_p, std::size_t m) {
  const FiniteGroup& p = psi_on_p.source();
  const std::size_t n = p.order();
  std::vector<GroupMap> powers{GroupMap::identity(p)};
  for (std::size_t i = 1; i < m; ++i) powers.push_back(psi_on_p.after(powers.back()));
  return FiniteGroup::from_product("P x| C" + std::to_string(m), n * m, [&](std::size_t a, std::size_t b) {
    const std::size_t i = a / n, j = b / n;
    const Elem x = static_cast<Elem>(a % n), y = static_cast<Elem>(b % n);
    return ((i + j) % m) * n + p.mul(x, powers[i](y));
  });
}

inline InnStructure inn_structure(const GroupMap& psi, std::size_t bound = kDefaultClosureBound) {
  detail::require_automorphism(psi);
  InnStructure r;
  const Quandle q = general_alexander(psi);
  const PermGroup inn = inner_group(q, bound);
  const Subgroup p = compute_P(psi);
  r.inn_size = inn.size();
  r.p_size = p.size();
  r.psi_order = psi.order();
  r.size_formula_holds = r.inn_size == r.p_size * r.psi_order;
  const FiniteGroup inn_g = inn.as_group("Inn");
  const GroupMap rest = restrict_automorphism(psi, p);
  const FiniteGroup semi = twisted_product(rest, r.psi_order);
  r.semidirect_isomorphic = groups_isomorphic(inn_g, semi).has_value();
  const FiniteGroup pg = rest.source();
  r.p_centerless = center(pg).is_trivial();
  r.restriction_inner = restriction_is_inner(psi, p);
  r.direct_isomorphic = groups_isomorphic(inn_g, direct_product(pg, cyclic_group(r.psi_order), "PxC")).has_value();
  return r;
}

// ---------------------------------------------------------------------------

struct InvariantProfile {
  std::size_t group_order = 0;
  std::size_t psi_order = 0;
  std::size_t fix_size = 0;
  GroupDescriptor p_iso_type;
  GroupDescriptor p2_iso_type;
  RestrictedClass psi_restricted_class;
  std::size_t p_cap_fix = 0;
  std::size_t tn_size = 0;
  bool p1 = false;
  bool p2_flag = false;
  std::size_t inn_size = 0;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

inline constexpr const char* kProfileFields[] = {"group_order", "psi_order",  "fix_size", "p_iso_type",
                                                 "p2_iso_type", "psi_restricted_class", "p_cap_fix",
                                                 "tn_size",     "p1",         "p2_flag",  "inn_size"};

/// Name of the first field where the profiles differ, or nullopt if equal.
inline std::optional<std::string> first_difference(const InvariantProfile& a, const InvariantProfile& b) {
  if (a.group_order != b.group_order) return "group_order";
  if (a.psi_order != b.psi_order) return "psi_order";
  if (a.fix_size != b.fix_size) return "fix_size";
  if (!(a.p_iso_type == b.p_iso_type)) return "p_iso_type";
  if (!(a.p2_iso_type == b.p2_iso_type)) return "p2_iso_type";
  if (!(a.psi_restricted_class == b.psi_restricted_class)) return "psi_restricted_class";
  if (a.p_cap_fix != b.p_cap_fix) return "p_cap_fix";
  if (a.tn_size != b.tn_size) return "tn_size";
  if (a.p1 != b.p1) return "p1";
  if (a.p2_flag != b.p2_flag) return "p2_flag";
  if (a.inn_size != b.inn_size) return "inn_size";
  return std::nullopt;
}

/// Subgroups behind a profile, for callers that need more than the summary.
struct InvariantData {
  Subgroup p;
  Subgroup p2;
  Subgroup fix;
  InvariantProfile profile;
};

inline InvariantData compute_invariants(const GroupMap& psi) {
  detail::require_automorphism(psi);
  const FiniteGroup& g = psi.source();
  Subgroup p = compute_P(psi);
  Subgroup p2 = compute_P2(psi);
  Subgroup fix = fixed_subgroup(psi);
  InvariantProfile pr;
  pr.group_order = g.order();
  pr.psi_order = psi.order();
  pr.fix_size = fix.size();
  pr.p_iso_type = describe_group(p.as_group());
  pr.p2_iso_type = describe_group(p2.as_group());
  pr.psi_restricted_class = classify_automorphism(restrict_automorphism(psi, p));
  for (Elem x : p.members()) pr.p_cap_fix += fix.contains(x);
  pr.tn_size = twisted_normalizer(psi, p2).size();
  pr.p1 = is_normal(g, p2);
  const auto d = displacements_of(psi, p);
  pr.p2_flag = std::equal(d.begin(), d.end(), p2.members().begin(), p2.members().end());
  pr.inn_size = inner_group(general_alexander(psi)).size();
  return {std::move(p), std::move(p2), std::move(fix), std::move(pr)};
}

inline InvariantProfile profile(const GroupMap& psi) { return compute_invariants(psi).profile; }

}  // namespace qf
