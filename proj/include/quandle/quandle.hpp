#pragma once

// Quandles as point-symmetry tables: sym[x][y] = s_x(y), with x*y = s_y(x).

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "quandle/group.hpp"

namespace qf {

/// Where a generalized Alexander quandle came from.
struct Provenance {
  FiniteGroup group;
  std::vector<Elem> automorphism;  // images of psi
};

struct AxiomViolation {
  enum class Axiom { Q1, Q2, Q3 } axiom;
  Elem x = 0, y = 0, z = 0;  // Q1: x; Q2: row x repeats value at columns y,z; Q3: (x,y) fails at z

  std::string describe() const {
    switch (axiom) {
      case Axiom::Q1: return "Q1: s_" + std::to_string(x) + "(" + std::to_string(x) + ") != " + std::to_string(x);
      case Axiom::Q2:
        return "Q2: row " + std::to_string(x) + " repeats at " + std::to_string(y) + " and " + std::to_string(z);
      case Axiom::Q3:
        return "Q3: s_x s_y != s_{s_x(y)} s_x at x=" + std::to_string(x) + " y=" + std::to_string(y) +
               " z=" + std::to_string(z);
    }
    return {};
  }
};

/// All axiom violations of a table (empty iff it is a quandle). Q3 reports one z per (x,y).
inline std::vector<AxiomViolation> check_axioms(std::size_t n, const std::vector<Elem>& sym) {
  using A = AxiomViolation::Axiom;
  std::vector<AxiomViolation> out;
  if (sym.size() != n * n) throw StructuralError("symmetry table has wrong size");
  for (Elem v : sym)
    if (v >= n) throw StructuralError("symmetry table entry " + std::to_string(v) + " out of range");
  auto s = [&](Elem x, Elem y) { return sym[x * n + y]; };
  for (Elem x = 0; x < n; ++x)
    if (s(x, x) != x) out.push_back({A::Q1, x, x, x});
  for (Elem x = 0; x < n; ++x) {
    std::vector<std::int64_t> where(n, -1);
    for (Elem y = 0; y < n; ++y) {
      const Elem v = s(x, y);
      if (where[v] >= 0) {
        out.push_back({A::Q2, x, static_cast<Elem>(where[v]), y});
        break;
      }
      where[v] = y;
    }
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem sxy = s(x, y);
      for (Elem z = 0; z < n; ++z)
        if (s(x, s(y, z)) != s(sxy, s(x, z))) {
          out.push_back({A::Q3, x, y, z});
          break;
        }
    }
  return out;
}

class Quandle {
 public:
  /// Verifies the axioms; throws StructuralError naming the first violation.
  Quandle(std::size_t size, std::vector<Elem> sym, std::optional<Provenance> provenance = std::nullopt)
      : n_(size), sym_(std::move(sym)), provenance_(std::move(provenance)) {
    if (n_ == 0) throw StructuralError("quandle must be nonempty");
    const auto v = check_axioms(n_, sym_);
    if (!v.empty()) throw StructuralError("not a quandle: " + v.front().describe());
  }

  std::size_t size() const noexcept { return n_; }
  /// s_x(y).
  Elem s(Elem x, Elem y) const noexcept { return sym_[x * n_ + y]; }
  /// x * y = s_y(x).
  Elem op(Elem x, Elem y) const noexcept { return sym_[y * n_ + x]; }
  const std::vector<Elem>& sym() const noexcept { return sym_; }
  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

  std::vector<Elem> row(Elem x) const { return {sym_.begin() + x * n_, sym_.begin() + (x + 1) * n_}; }

  friend bool operator==(const Quandle& a, const Quandle& b) { return a.n_ == b.n_ && a.sym_ == b.sym_; }

 private:
  std::size_t n_;
  std::vector<Elem> sym_;
  std::optional<Provenance> provenance_;
};

/// Q(G, psi): s_x(y) = x psi(x^-1 y).
inline Quandle general_alexander(const GroupMap& psi) {
  if (!psi.is_automorphism()) throw ContractViolation("general_alexander needs an automorphism");
  const FiniteGroup& g = psi.source();
  const std::size_t n = g.order();
  std::vector<Elem> sym(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) sym[x * n + y] = g.mul(x, psi(g.mul(g.inv(x), y)));
  return Quandle(n, std::move(sym), Provenance{g, psi.image_vector()});
}

// ---------------------------------------------------------------------------

using Permutation = std::vector<Elem>;

inline constexpr std::size_t kDefaultClosureBound = 1'000'000;

/// Permutation group given by generators, closed eagerly by breadth-first search.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t bound = kDefaultClosureBound)
      : degree_(degree), generators_(std::move(generators)) {
    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Elem>(i);
    for (const auto& g : generators_)
      if (g.size() != degree) throw ContractViolation("generator has wrong degree");
    std::unordered_set<Permutation, detail::ElemVectorHash> seen{id};
    elements_.push_back(id);
    for (std::size_t head = 0; head < elements_.size(); ++head)
      for (const auto& g : generators_) {
        Permutation p(degree);
        const Permutation& x = elements_[head];
        for (std::size_t i = 0; i < degree; ++i) p[i] = g[x[i]];
        if (seen.insert(p).second) {
          if (elements_.size() >= bound)
            throw CapacityError("permutation group closure exceeds " + std::to_string(bound) + " elements");
          elements_.push_back(std::move(p));
        }
      }
    std::sort(elements_.begin() + 1, elements_.end());
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Identity first, then lexicographic.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin() + 1, elements_.end(), p) || p == elements_.front();
  }

  /// Orbit of a point, sorted.
  std::vector<Elem> orbit(Elem x) const {
    std::vector<char> in(degree_, 0);
    std::vector<Elem> out{x};
    in[x] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
      for (const auto& g : generators_)
        if (!in[g[out[head]]]) {
          in[g[out[head]]] = 1;
          out.push_back(g[out[head]]);
        }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Cayley table with composition (pq)(i) = p(q(i)).
  FiniteGroup as_group(std::string name) const {
    std::unordered_map<Permutation, Elem, detail::ElemVectorHash> index;
    for (std::size_t i = 0; i < elements_.size(); ++i) index.emplace(elements_[i], static_cast<Elem>(i));
    return FiniteGroup::from_product(std::move(name), elements_.size(), [&](std::size_t a, std::size_t b) {
      Permutation c(degree_);
      for (std::size_t i = 0; i < degree_; ++i) c[i] = elements_[a][elements_[b][i]];
      return index.at(c);
    });
  }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Inn(Q) = <s_x : x in Q>.
inline PermGroup inner_group(const Quandle& q, std::size_t bound = kDefaultClosureBound) {
  std::vector<Permutation> gens;
  for (Elem x = 0; x < q.size(); ++x) gens.push_back(q.row(x));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return PermGroup(q.size(), std::move(gens), bound);
}

inline std::size_t permutation_order(const Permutation& p) {
  std::size_t result = 1;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

/// ord(s_x), which must not depend on x.
inline std::size_t quandle_order(const Quandle& q) {
  const std::size_t o = permutation_order(q.row(0));
  for (Elem x = 1; x < q.size(); ++x)
    if (permutation_order(q.row(x)) != o)
      throw ContractViolation("quandle is not homogeneous: ord(s_0) = " + std::to_string(o) + " but ord(s_" +
                              std::to_string(x) + ") = " + std::to_string(permutation_order(q.row(x))));
  return o;
}

inline bool is_connected(const Quandle& q) {
  std::vector<Permutation> gens;
  for (Elem x = 0; x < q.size(); ++x) gens.push_back(q.row(x));
  std::vector<char> in(q.size(), 0);
  std::vector<Elem> orbit{0};
  in[0] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& g : gens)
      if (!in[g[orbit[head]]]) {
        in[g[orbit[head]]] = 1;
        orbit.push_back(g[orbit[head]]);
      }
  return orbit.size() == q.size();
}

/// The subquandle on members (re-indexed in sorted order).
inline Quandle subquandle(const Quandle& q, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw ContractViolation("subquandle needs at least one element");
  std::vector<std::int64_t> local(q.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= q.size()) throw StructuralError("subquandle member out of range");
    local[members[i]] = static_cast<std::int64_t>(i);
  }
  const std::size_t m = members.size();
  std::vector<Elem> sym(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Elem v = q.s(members[i], members[j]);
      if (local[v] < 0)
        throw ContractViolation("subset is not closed: s_" + std::to_string(members[i]) + "(" +
                                std::to_string(members[j]) + ") = " + std::to_string(v) + " escapes");
      sym[i * m + j] = static_cast<Elem>(local[v]);
    }
  return Quandle(m, std::move(sym));
}

/// f(s_x(y)) = s'_{f(x)}(f(y)) for all x, y, and f bijective.
inline bool is_quandle_isomorphism(const Quandle& q1, const Quandle& q2, const std::vector<Elem>& f) {
  if (q1.size() != q2.size() || f.size() != q1.size()) return false;
  std::vector<char> seen(q2.size(), 0);
  for (Elem v : f) {
    if (v >= q2.size() || seen[v]) return false;
    seen[v] = 1;
  }
  for (Elem x = 0; x < q1.size(); ++x)
    for (Elem y = 0; y < q1.size(); ++y)
      if (f[q1.s(x, y)] != q2.s(f[x], f[y])) return false;
  return true;
}

/// The left translation y -> a y of G as a permutation.
inline Permutation left_translation(const FiniteGroup& g, Elem a) {
  Permutation p(g.order());
  for (Elem y = 0; y < g.order(); ++y) p[y] = g.mul(a, y);
  return p;
}

}  // namespace qf
