#pragma once

// Quandle isomorphism: a backtracking oracle, the P/P^2 criterion with an
// explicit witness construction, formula deciders for cyclic, dihedral,
// abelian and simple groups, and a dispatcher that cross-checks them.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quandle/dihedral.hpp"
#include "quandle/invariants.hpp"

namespace qf {

enum class IsoResult { Isomorphic, NotIsomorphic, Undecided };

enum class IsoMethod {
  BruteForce,
  Theorem13,
  InvariantSeparation,
  SimpleGroupConjugacy,
  DihedralFormula,
  CyclicFormula,
  AbelianNelson,
};

inline const char* to_string(IsoResult r) {
  switch (r) {
    case IsoResult::Isomorphic: return "isomorphic";
    case IsoResult::NotIsomorphic: return "not-isomorphic";
    case IsoResult::Undecided: return "undecided";
  }
  return "?";
}

inline const char* to_string(IsoMethod m) {
  switch (m) {
    case IsoMethod::BruteForce: return "brute-force";
    case IsoMethod::Theorem13: return "theorem-1-3";
    case IsoMethod::InvariantSeparation: return "invariant-separation";
    case IsoMethod::SimpleGroupConjugacy: return "simple-group-conjugacy";
    case IsoMethod::DihedralFormula: return "dihedral-formula";
    case IsoMethod::CyclicFormula: return "cyclic-formula";
    case IsoMethod::AbelianNelson: return "abelian-nelson";
  }
  return "?";
}

struct IsoVerdict {
  IsoResult result = IsoResult::Undecided;
  IsoMethod method = IsoMethod::BruteForce;
  std::optional<std::vector<Elem>> witness;
  std::optional<std::string> separator;
  std::string note;
  std::vector<IsoMethod> agreeing;  // other methods that reached the same verdict

  bool isomorphic() const noexcept { return result == IsoResult::Isomorphic; }
  bool decided() const noexcept { return result != IsoResult::Undecided; }
};

inline constexpr std::size_t kDefaultBruteForceBound = 64;

// ---------------------------------------------------------------------------
// Brute force

namespace detail {

using Color = std::array<std::size_t, 5>;

inline std::vector<Elem> inverse_rows(const Quandle& q) {
  const std::size_t n = q.size();
  std::vector<Elem> inv(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) inv[x * n + q.s(x, y)] = y;
  return inv;
}

inline std::size_t cycle_length(const Quandle& q, Elem by, Elem start) {
  std::size_t len = 1;
  for (Elem z = q.s(by, start); z != start; z = q.s(by, z)) ++len;
  return len;
}

inline std::vector<char> inn_orbit_mask(const Quandle& q, Elem x) {
  std::vector<char> in(q.size(), 0);
  std::vector<Elem> orbit{x};
  in[x] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (Elem a = 0; a < q.size(); ++a) {
      const Elem z = q.s(a, orbit[head]);
      if (!in[z]) {
        in[z] = 1;
        orbit.push_back(z);
      }
    }
  return in;
}

/// Point invariants relative to a base point b (preserved by isomorphisms sending b to b').
inline std::vector<Color> colors_relative_to(const Quandle& q, Elem b) {
  const std::size_t n = q.size();
  const auto orbit = inn_orbit_mask(q, b);
  std::vector<Color> out(n);
  for (Elem x = 0; x < n; ++x) {
    std::size_t fixed_comp = 0, fixed_own = 0;
    for (Elem z = 0; z < n; ++z) {
      fixed_comp += q.s(x, q.s(b, z)) == z;
      fixed_own += q.s(x, z) == z;
    }
    out[x] = {cycle_length(q, b, x), cycle_length(q, x, b), fixed_comp, fixed_own, orbit[x] ? 1u : 0u};
  }
  return out;
}

class PointMapSearch {
 public:
  PointMapSearch(const Quandle& a, const Quandle& b, std::vector<Color> ca, std::vector<Color> cb)
      : a_(a), b_(b), n_(a.size()), ainv_(inverse_rows(a)), binv_(inverse_rows(b)), ca_(std::move(ca)),
        cb_(std::move(cb)), f_(n_, -1), finv_(n_, -1) {}

  /// Searches for an isomorphism extending root -> root_image.
  std::optional<std::vector<Elem>> run(Elem root, Elem root_image) {
    std::vector<Elem> trail;
    if (!assign(root, root_image, trail)) return std::nullopt;
    if (recurse()) {
      std::vector<Elem> out(n_);
      for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<Elem>(f_[i]);
      return out;
    }
    return std::nullopt;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  bool force(Elem x, Elem y, std::vector<Elem>& trail, std::vector<Elem>& queue) {
    if (f_[x] >= 0) return static_cast<Elem>(f_[x]) == y;
    if (finv_[y] >= 0 || ca_[x] != cb_[y]) return false;
    f_[x] = y;
    finv_[y] = x;
    trail.push_back(x);
    queue.push_back(x);
    assigned_.push_back(x);
    return true;
  }

  bool assign(Elem x, Elem y, std::vector<Elem>& trail) {
    std::vector<Elem> queue;
    if (!force(x, y, trail, queue)) return false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem u = queue[head];
      const Elem fu = static_cast<Elem>(f_[u]);
      for (std::size_t k = 0; k < assigned_.size(); ++k) {
        const Elem v = assigned_[k];
        const Elem fv = static_cast<Elem>(f_[v]);
        if (!force(a_.s(u, v), b_.s(fu, fv), trail, queue)) return false;
        if (!force(a_.s(v, u), b_.s(fv, fu), trail, queue)) return false;
        if (!force(ainv_[u * n_ + v], binv_[fu * n_ + fv], trail, queue)) return false;
        if (!force(ainv_[v * n_ + u], binv_[fv * n_ + fu], trail, queue)) return false;
      }
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      finv_[f_[*it]] = -1;
      f_[*it] = -1;
    }
    assigned_.resize(assigned_.size() - trail.size());
    trail.clear();
  }

  bool recurse() {
    ++nodes_;
    if (assigned_.size() == n_) return true;
    // most constrained unassigned point: fewest free targets of its color
    std::map<Color, std::size_t> free_targets;
    for (Elem y = 0; y < n_; ++y)
      if (finv_[y] < 0) ++free_targets[cb_[y]];
    std::int64_t best = -1;
    std::size_t best_count = 0;
    for (Elem x = 0; x < n_; ++x) {
      if (f_[x] >= 0) continue;
      const std::size_t c = free_targets[ca_[x]];
      if (c == 0) return false;
      if (best < 0 || c < best_count) {
        best = x;
        best_count = c;
      }
    }
    const Elem x = static_cast<Elem>(best);
    for (Elem y = 0; y < n_; ++y) {
      if (finv_[y] >= 0 || cb_[y] != ca_[x]) continue;
      std::vector<Elem> trail;
      if (assign(x, y, trail) && recurse()) return true;
      undo(trail);
    }
    return false;
  }

  const Quandle& a_;
  const Quandle& b_;
  std::size_t n_;
  std::vector<Elem> ainv_, binv_;
  std::vector<Color> ca_, cb_;
  std::vector<std::int64_t> f_, finv_;
  std::vector<Elem> assigned_;
  std::size_t nodes_ = 0;
};

inline bool same_color_multiset(std::vector<Color> a, std::vector<Color> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace detail

/// Exhaustive search for a quandle isomorphism. When both quandles are generalized
/// Alexander quandles the search fixes f(e) = e'; otherwise every root image is tried.
inline IsoVerdict brute_force_iso(const Quandle& q1, const Quandle& q2, std::size_t bound = kDefaultBruteForceBound) {
  IsoVerdict v;
  v.method = IsoMethod::BruteForce;
  if (q1.size() > bound || q2.size() > bound)
    throw CapacityError("brute-force isomorphism bound " + std::to_string(bound) + " exceeded");
  if (q1.size() != q2.size()) {
    v.result = IsoResult::NotIsomorphic;
    v.note = "sizes differ";
    return v;
  }
  const bool homogeneous = q1.provenance() && q2.provenance();
  const std::vector<Elem> roots2 = [&] {
    std::vector<Elem> r;
    if (homogeneous)
      r.push_back(0);
    else
      for (Elem y = 0; y < q2.size(); ++y) r.push_back(y);
    return r;
  }();
  const auto c1 = detail::colors_relative_to(q1, 0);
  for (Elem root2 : roots2) {
    auto c2 = detail::colors_relative_to(q2, root2);
    if (c1[0] != c2[root2] || !detail::same_color_multiset(c1, c2)) continue;
    detail::PointMapSearch search(q1, q2, c1, std::move(c2));
    if (auto f = search.run(0, root2)) {
      if (!is_quandle_isomorphism(q1, q2, *f)) throw InternalError("brute-force search returned a non-isomorphism");
      v.result = IsoResult::Isomorphic;
      v.witness = std::move(f);
      return v;
    }
  }
  v.result = IsoResult::NotIsomorphic;
  v.note = homogeneous ? "no isomorphism with f(e) = e'" : "no isomorphism";
  return v;
}

inline IsoVerdict brute_force_iso(const GroupMap& psi1, const GroupMap& psi2,
                                  std::size_t bound = kDefaultBruteForceBound) {
  return brute_force_iso(general_alexander(psi1), general_alexander(psi2), bound);
}

// ---------------------------------------------------------------------------
// The P / P^2 criterion

namespace detail {

inline std::vector<Elem> displacement_set(const GroupMap& psi) {
  std::vector<Elem> out;
  for (Elem a = 0; a < psi.source().order(); ++a) out.push_back(displacement(psi, a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Smallest element of the coset x N.
inline Elem coset_key(const FiniteGroup& g, Elem x, const Subgroup& n) {
  Elem best = x;
  for (Elem q : n.members()) best = std::min(best, g.mul(x, q));
  return best;
}

/// Left coset representatives of N in G (smallest element of each, identity first) and the rep of every element.
inline std::pair<std::vector<Elem>, std::vector<Elem>> coset_representatives(const FiniteGroup& g, const Subgroup& n) {
  std::vector<Elem> reps, rep_of(g.order(), 0);
  std::vector<char> done(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (Elem q : n.members()) {
      done[g.mul(x, q)] = 1;
      rep_of[g.mul(x, q)] = x;
    }
  }
  return {std::move(reps), std::move(rep_of)};
}

}  // namespace detail

/// Builds f(x) = h(x a_x^-1) k(a_x) from a group isomorphism h: P -> P' meeting (C-1) and (C-2).
/// h maps elements of P (as G-indices) to elements of P' (as G'-indices). Returns nullopt if a step
/// of the construction has no solution.
inline std::optional<std::vector<Elem>> construct_isomorphism(const GroupMap& psi1, const GroupMap& psi2,
                                                              const InvariantData& d1, const InvariantData& d2,
                                                              const std::vector<Elem>& h_on_g) {
  const FiniteGroup& g1 = psi1.source();
  const FiniteGroup& g2 = psi2.source();
  auto h = [&](Elem p) { return h_on_g[p]; };
  const auto [reps1, rep_of1] = detail::coset_representatives(g1, d1.p);
  const auto [reps2, rep_of2] = detail::coset_representatives(g2, d2.p);
  if (reps1.size() != reps2.size()) return std::nullopt;

  // cosets of P' grouped by s'_{a'}(e') P'^2
  std::map<Elem, std::vector<Elem>> bucket;
  for (Elem r : reps2) bucket[detail::coset_key(g2, displacement(psi2, r), d2.p2)].push_back(r);
  std::map<Elem, std::size_t> used;

  std::vector<Elem> k(g1.order(), 0);
  for (Elem a : reps1) {
    const Elem target = h(displacement(psi1, a));
    const Elem key = detail::coset_key(g2, target, d2.p2);
    auto it = bucket.find(key);
    if (it == bucket.end() || used[key] >= it->second.size()) return std::nullopt;
    const Elem a2 = it->second[used[key]++];
    std::optional<Elem> chosen;
    for (Elem p2 : d2.p.members()) {
      const Elem cand = g2.mul(a2, p2);
      if (displacement(psi2, cand) == target) {
        chosen = cand;
        break;
      }
    }
    if (!chosen) return std::nullopt;
    k[a] = *chosen;
  }
  std::vector<Elem> f(g1.order());
  for (Elem x = 0; x < g1.order(); ++x) {
    const Elem a = rep_of1[x];
    f[x] = g2.mul(h(g1.mul(x, g1.inv(a))), k[a]);
  }
  return f;
}

namespace detail {

/// Searches group isomorphisms h: P -> P' with h psi|P = psi'|P' h and, if required,
/// h({s_a(e)}) inside {s'_a'(e')}; returns h on G-indices.
inline std::optional<std::vector<Elem>> compatible_isomorphism(const GroupMap& psi1, const GroupMap& psi2,
                                                               const InvariantData& d1, const InvariantData& d2,
                                                               bool require_c2) {
  const FiniteGroup p1 = d1.p.as_group();
  const FiniteGroup p2 = d2.p.as_group();
  if (!may_be_isomorphic(p1, p2)) return std::nullopt;
  const GroupMap r1 = psi1.restricted_to(d1.p, p1);
  const GroupMap r2 = psi2.restricted_to(d2.p, p2);
  std::vector<char> disp2(psi2.source().order(), 0);
  for (Elem y : displacement_set(psi2)) disp2[y] = 1;
  const auto disp1 = displacement_set(psi1);
  std::optional<std::vector<Elem>> found;
  search_injective_homomorphisms(p1, p2, [&](std::vector<Elem> im) {
    for (Elem x = 0; x < p1.order(); ++x)
      if (im[r1(x)] != r2(im[x])) return true;
    if (require_c2)
      for (Elem s : disp1)
        if (!disp2[d2.p.members()[im[d1.p.local_index(s)]]]) return true;
    std::vector<Elem> on_g(psi1.source().order(), 0);
    for (Elem x = 0; x < p1.order(); ++x) on_g[d1.p.members()[x]] = d2.p.members()[im[x]];
    found = std::move(on_g);
    return false;
  });
  return found;
}

inline IsoVerdict verdict_from_construction(IsoMethod method, const GroupMap& psi1, const GroupMap& psi2,
                                            const InvariantData& d1, const InvariantData& d2,
                                            const std::vector<Elem>& h) {
  auto f = construct_isomorphism(psi1, psi2, d1, d2, h);
  if (!f || !is_quandle_isomorphism(general_alexander(psi1), general_alexander(psi2), *f))
    throw InternalError(std::string(to_string(method)) + ": witness construction failed for " +
                        psi1.source().name() + " vs " + psi2.source().name());
  IsoVerdict v;
  v.result = IsoResult::Isomorphic;
  v.method = method;
  v.witness = std::move(f);
  return v;
}

inline IsoVerdict not_isomorphic(IsoMethod method, std::string separator, std::string note = {}) {
  IsoVerdict v;
  v.result = IsoResult::NotIsomorphic;
  v.method = method;
  v.separator = std::move(separator);
  v.note = std::move(note);
  return v;
}

}  // namespace detail

/// Decides isomorphism by (A) |G| = |G'|, (B) |Fix| = |Fix'|, (C) a compatible h: P -> P'.
/// Undecided unless both quandles satisfy (P1) and (P2).
inline IsoVerdict theorem13_iso(const GroupMap& psi1, const GroupMap& psi2) {
  const InvariantData d1 = compute_invariants(psi1);
  const InvariantData d2 = compute_invariants(psi2);
  if (!(d1.profile.p1 && d1.profile.p2_flag && d2.profile.p1 && d2.profile.p2_flag)) {
    IsoVerdict v;
    v.result = IsoResult::Undecided;
    v.method = IsoMethod::Theorem13;
    v.note = "(P1) and (P2) must hold on both sides";
    return v;
  }
  if (psi1.source().order() != psi2.source().order())
    return detail::not_isomorphic(IsoMethod::Theorem13, "condition (A)", "group orders differ");
  if (d1.fix.size() != d2.fix.size())
    return detail::not_isomorphic(IsoMethod::Theorem13, "condition (B)", "fixed subgroups differ in size");
  auto h = detail::compatible_isomorphism(psi1, psi2, d1, d2, true);
  if (!h)
    return detail::not_isomorphic(IsoMethod::Theorem13, "condition (C)",
                                  "no isomorphism P -> P' satisfies (C-1) and (C-2)");
  return detail::verdict_from_construction(IsoMethod::Theorem13, psi1, psi2, d1, d2, *h);
}

/// For abelian groups: isomorphic iff |G| = |G'| and some h: Im(1-psi) -> Im(1-psi') intertwines the restrictions.
inline IsoVerdict abelian_decider(const GroupMap& psi1, const GroupMap& psi2) {
  if (!psi1.source().is_abelian() || !psi2.source().is_abelian())
    throw ContractViolation("abelian_decider needs abelian groups");
  if (psi1.source().order() != psi2.source().order())
    return detail::not_isomorphic(IsoMethod::AbelianNelson, "group_order");
  const InvariantData d1 = compute_invariants(psi1);
  const InvariantData d2 = compute_invariants(psi2);
  auto h = detail::compatible_isomorphism(psi1, psi2, d1, d2, false);
  if (!h)
    return detail::not_isomorphic(IsoMethod::AbelianNelson, "psi_restricted_class",
                                  "no isomorphism of the images of 1-psi intertwines the restrictions");
  return detail::verdict_from_construction(IsoMethod::AbelianNelson, psi1, psi2, d1, d2, *h);
}

/// For a simple group: isomorphic iff psi and psi' are conjugate in Aut(G); the conjugator is the witness.
inline IsoVerdict simple_group_decider(const GroupMap& psi1, const GroupMap& psi2) {
  const FiniteGroup& g = psi1.source();
  if (!(g == psi2.source())) throw ContractViolation("simple_group_decider needs both maps on the same group");
  if (!is_simple(g)) throw ContractViolation(g.name() + " is not simple");
  for (const auto& tau : automorphism_group(g))
    if (psi1.conjugated_by(tau) == psi2) {
      IsoVerdict v;
      v.result = IsoResult::Isomorphic;
      v.method = IsoMethod::SimpleGroupConjugacy;
      v.witness = tau.image_vector();
      return v;
    }
  return detail::not_isomorphic(IsoMethod::SimpleGroupConjugacy, "conjugacy class",
                                "automorphisms are not conjugate");
}

/// Formula verdict for D_n (n >= 3); the witness comes from the P / P^2 construction.
inline IsoVerdict dihedral_decider(const GroupMap& psi1, const GroupMap& psi2) {
  const auto x = recognize_dihedral(psi1);
  const auto y = recognize_dihedral(psi2);
  if (!x || !y || x->n != y->n) throw ContractViolation("dihedral_decider needs two phi_{a,b} on the same D_n");
  if (!dihedral_iso_decider(*x, *y)) {
    std::string sep = fix_size_dn(*x) != fix_size_dn(*y) ? "fix_size" : x->d() != y->d() ? "p_iso_type" : "psi_restricted_class";
    return detail::not_isomorphic(IsoMethod::DihedralFormula, sep);
  }
  IsoVerdict v = theorem13_iso(psi1, psi2);
  if (!v.isomorphic()) throw DeciderDisagreement("dihedral formula says isomorphic, P/P^2 criterion does not");
  v.method = IsoMethod::DihedralFormula;
  return v;
}

/// Formula verdict for linear Alexander quandles on C_n.
inline IsoVerdict cyclic_decider(const GroupMap& psi1, const GroupMap& psi2) {
  const auto a = recognize_cyclic(psi1);
  const auto b = recognize_cyclic(psi2);
  if (!a || !b || psi1.source().order() != psi2.source().order())
    throw ContractViolation("cyclic_decider needs two multipliers on the same C_n");
  const long long n = static_cast<long long>(psi1.source().order());
  if (!cyclic_iso_decider(n, *a, *b)) return detail::not_isomorphic(IsoMethod::CyclicFormula, "multiplier");
  IsoVerdict v = theorem13_iso(psi1, psi2);
  if (!v.isomorphic()) throw DeciderDisagreement("cyclic formula says isomorphic, P/P^2 criterion does not");
  v.method = IsoMethod::CyclicFormula;
  return v;
}

// ---------------------------------------------------------------------------

struct DecideOptions {
  enum class Mode { Auto, Brute, Theorem13 } mode = Mode::Auto;
  bool cross_check = true;  // run every applicable decider and require agreement
  std::size_t brute_force_bound = kDefaultBruteForceBound;
};

/// Deciders applicable to a pair, in dispatch order.
inline std::vector<IsoMethod> applicable_methods(const GroupMap& psi1, const GroupMap& psi2,
                                                 const InvariantProfile& p1, const InvariantProfile& p2,
                                                 std::size_t brute_bound) {
  std::vector<IsoMethod> out;
  const FiniteGroup& g1 = psi1.source();
  const FiniteGroup& g2 = psi2.source();
  if (g1 == g2 && g1.order() <= kDefaultAutomorphismBound && is_simple(g1)) out.push_back(IsoMethod::SimpleGroupConjugacy);
  if (recognize_cyclic(psi1) && recognize_cyclic(psi2) && g1.order() == g2.order()) out.push_back(IsoMethod::CyclicFormula);
  {
    const auto x = recognize_dihedral(psi1), y = recognize_dihedral(psi2);
    if (x && y && x->n == y->n) out.push_back(IsoMethod::DihedralFormula);
  }
  if (g1.is_abelian() && g2.is_abelian()) out.push_back(IsoMethod::AbelianNelson);
  if (p1.p1 && p1.p2_flag && p2.p1 && p2.p2_flag) out.push_back(IsoMethod::Theorem13);
  if (g1.order() <= brute_bound && g2.order() <= brute_bound) out.push_back(IsoMethod::BruteForce);
  return out;
}

inline IsoVerdict run_method(IsoMethod m, const GroupMap& psi1, const GroupMap& psi2, std::size_t brute_bound) {
  switch (m) {
    case IsoMethod::SimpleGroupConjugacy: return simple_group_decider(psi1, psi2);
    case IsoMethod::CyclicFormula: return cyclic_decider(psi1, psi2);
    case IsoMethod::DihedralFormula: return dihedral_decider(psi1, psi2);
    case IsoMethod::AbelianNelson: return abelian_decider(psi1, psi2);
    case IsoMethod::Theorem13: return theorem13_iso(psi1, psi2);
    case IsoMethod::BruteForce: return brute_force_iso(psi1, psi2, brute_bound);
    case IsoMethod::InvariantSeparation: break;
  }
  throw ContractViolation("method cannot be run directly");
}

/// Profile separation, then the applicable deciders. With cross_check every applicable
/// decider runs and any disagreement throws DeciderDisagreement.
inline IsoVerdict decide(const GroupMap& psi1, const GroupMap& psi2, const DecideOptions& opt = {}) {
  const InvariantProfile pr1 = profile(psi1);
  const InvariantProfile pr2 = profile(psi2);
  if (opt.mode == DecideOptions::Mode::Brute) return brute_force_iso(psi1, psi2, opt.brute_force_bound);
  if (opt.mode == DecideOptions::Mode::Theorem13) return theorem13_iso(psi1, psi2);

  const auto diff = first_difference(pr1, pr2);
  std::vector<IsoMethod> methods = applicable_methods(psi1, psi2, pr1, pr2, opt.brute_force_bound);
  if (diff) {
    IsoVerdict v = detail::not_isomorphic(IsoMethod::InvariantSeparation, *diff);
    if (opt.cross_check)
      for (IsoMethod m : methods) {
        if (m == IsoMethod::BruteForce || m == IsoMethod::SimpleGroupConjugacy) continue;
        const IsoVerdict w = run_method(m, psi1, psi2, opt.brute_force_bound);
        if (w.result == IsoResult::Isomorphic)
          throw DeciderDisagreement(std::string(to_string(m)) + " claims isomorphic but profiles differ in " + *diff);
        if (w.decided()) v.agreeing.push_back(m);
      }
    return v;
  }

  std::optional<IsoVerdict> primary;
  for (IsoMethod m : methods) {
    IsoVerdict w = run_method(m, psi1, psi2, opt.brute_force_bound);
    if (!w.decided()) continue;
    if (!primary) {
      primary = std::move(w);
      if (!opt.cross_check) break;
      continue;
    }
    if (w.result != primary->result)
      throw DeciderDisagreement(std::string(to_string(primary->method)) + " and " + to_string(m) + " disagree on " +
                                psi1.source().name() + " vs " + psi2.source().name());
    primary->agreeing.push_back(m);
  }
  if (!primary) {
    IsoVerdict v;
    v.result = IsoResult::Undecided;
    v.method = IsoMethod::BruteForce;
    v.note = "profiles agree and no decider applies within capacity";
    return v;
  }
  return *primary;
}

// ---------------------------------------------------------------------------

struct Theorem39Report {
  bool restriction_iso = false;      // (i)
  bool commutes_with_psi = false;    // (ii)
  bool restriction_hom = false;      // (iii)
  bool cosets_preserved = false;     // (iv)
  std::string failure;

  bool ok() const noexcept { return restriction_iso && commutes_with_psi && restriction_hom && cosets_preserved; }
};

/// Checks (i)-(iv) for a quandle isomorphism f: Q(G,psi) -> Q(G',psi') with f(e) = e'.
inline Theorem39Report check_theorem39_properties(const std::vector<Elem>& f, const GroupMap& psi1,
                                                  const GroupMap& psi2) {
  const Quandle q1 = general_alexander(psi1);
  const Quandle q2 = general_alexander(psi2);
  if (!is_quandle_isomorphism(q1, q2, f)) throw ContractViolation("witness is not a quandle isomorphism");
  if (f[0] != 0) throw ContractViolation("witness must send e to e'");
  const FiniteGroup& g1 = psi1.source();
  const FiniteGroup& g2 = psi2.source();
  const Subgroup p1 = compute_P(psi1);
  const Subgroup p2 = compute_P(psi2);
  Theorem39Report r;

  std::vector<Elem> image;
  for (Elem x : p1.members()) image.push_back(f[x]);
  std::sort(image.begin(), image.end());
  if (std::equal(image.begin(), image.end(), p2.members().begin(), p2.members().end())) {
    const Quandle s1 = subquandle(q1, {p1.members().begin(), p1.members().end()});
    const Quandle s2 = subquandle(q2, {p2.members().begin(), p2.members().end()});
    std::vector<Elem> local(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) local[i] = p2.local_index(f[p1.members()[i]]);
    r.restriction_iso = is_quandle_isomorphism(s1, s2, local);
  }
  if (!r.restriction_iso) r.failure = "(i) f|P is not a quandle isomorphism onto P'";

  r.commutes_with_psi = true;
  for (Elem x = 0; x < g1.order(); ++x)
    if (f[psi1(x)] != psi2(f[x])) r.commutes_with_psi = false;
  if (!r.commutes_with_psi && r.failure.empty()) r.failure = "(ii) f psi != psi' f";

  r.restriction_hom = r.restriction_iso;
  if (r.restriction_hom)
    for (Elem x : p1.members())
      for (Elem y : p1.members())
        if (f[g1.mul(x, y)] != g2.mul(f[x], f[y])) r.restriction_hom = false;
  if (!r.restriction_hom && r.failure.empty()) r.failure = "(iii) f|P is not a group homomorphism";

  r.cosets_preserved = true;
  for (Elem x = 0; x < g1.order() && r.cosets_preserved; ++x) {
    std::vector<Elem> lhs, rhs;
    for (Elem p : p1.members()) lhs.push_back(f[g1.mul(x, p)]);
    for (Elem p : p2.members()) rhs.push_back(g2.mul(f[x], p));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    r.cosets_preserved = lhs == rhs;
  }
  if (!r.cosets_preserved && r.failure.empty()) r.failure = "(iv) f(xP) != f(x)P'";
  return r;
}

}  // namespace qf
