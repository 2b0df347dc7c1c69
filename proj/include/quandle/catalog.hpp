#pragma once

// Concrete groups: cyclic, dihedral, dicyclic, Q8, S_n, A_n, SL(2,3),
// direct and semidirect products, the fourteen groups of order 16, and
// the named automorphisms used throughout the tables.
//
// Element orderings:
//   C_n       i
//   D_n       tau^e sigma^i           -> e*n + i
//   Dic_n     a^i b^e (a^{2n} = 1)    -> e*2n + i
//   Q8        1,-1,i,-i,j,-j,k,-k
//   S_n, A_n  permutations of {0..n-1} in lexicographic order
//   SL23      identity, then the remaining matrices (a,b;c,d) in lex order
//   G x H     (g,h)                   -> g*|H| + h
//   N x| H    (n,h)                   -> h*|N| + n

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/group.hpp"

namespace qf {

inline constexpr std::size_t kMaxCatalogOrder = 128;

namespace detail {

inline long long mod(long long a, long long n) {
  a %= n;
  return a < 0 ? a + n : a;
}

inline void check_catalog_order(std::size_t order, const std::string& what) {
  if (order == 0 || order > kMaxCatalogOrder)
    throw CapacityError(what + " has order " + std::to_string(order) + ", outside 1.." +
                        std::to_string(kMaxCatalogOrder));
}

using Perm = std::vector<int>;

inline std::vector<Perm> permutations_lex(int n, bool even_only) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline FiniteGroup permutation_group(std::string name, const std::vector<Perm>& perms) {
  std::map<Perm, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Elem>(i));
  return FiniteGroup::from_product(std::move(name), perms.size(), [&](std::size_t a, std::size_t b) {
    Perm c(perms[a].size());
    for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
    return index.at(c);
  });
}

using Mat2 = std::array<int, 4>;  // (a,b;c,d) mod 3

inline std::vector<Mat2> sl23_elements() {
  std::vector<Mat2> out{{1, 0, 0, 1}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          Mat2 m{a, b, c, d};
          if (m != Mat2{1, 0, 0, 1} && mod(a * d - b * c, 3) == 1) out.push_back(m);
        }
  return out;
}

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {static_cast<int>(mod(x[0] * y[0] + x[1] * y[2], 3)), static_cast<int>(mod(x[0] * y[1] + x[1] * y[3], 3)),
          static_cast<int>(mod(x[2] * y[0] + x[3] * y[2], 3)), static_cast<int>(mod(x[2] * y[1] + x[3] * y[3], 3))};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Builders

inline FiniteGroup cyclic_group(std::size_t n) {
  detail::check_catalog_order(n, "C" + std::to_string(n));
  return FiniteGroup::from_product("C" + std::to_string(n), n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

/// D_n of order 2n; (tau^e sigma^i)(tau^f sigma^j) = tau^{e+f} sigma^{(-1)^f i + j}.
inline FiniteGroup dihedral_group(std::size_t n) {
  detail::check_catalog_order(2 * n, "D" + std::to_string(n));
  const long long nn = static_cast<long long>(n);
  return FiniteGroup::from_product("D" + std::to_string(n), 2 * n, [nn](std::size_t x, std::size_t y) {
    const long long e = static_cast<long long>(x) / nn, i = static_cast<long long>(x) % nn;
    const long long f = static_cast<long long>(y) / nn, j = static_cast<long long>(y) % nn;
    const long long k = detail::mod((f ? -i : i) + j, nn);
    return static_cast<std::size_t>(((e + f) % 2) * nn + k);
  });
}

/// Dic_n of order 4n: a^{2n} = 1, b^2 = a^n, b^-1 a b = a^-1.
inline FiniteGroup dicyclic_group(std::size_t n) {
  detail::check_catalog_order(4 * n, "Dic" + std::to_string(n));
  const long long m = 2 * static_cast<long long>(n);
  return FiniteGroup::from_product("Dic" + std::to_string(n), 4 * n, [m, n](std::size_t x, std::size_t y) {
    const long long e = static_cast<long long>(x) / m, i = static_cast<long long>(x) % m;
    const long long f = static_cast<long long>(y) / m, j = static_cast<long long>(y) % m;
    long long k, g;
    if (e == 0) {
      k = i + j;
      g = f;
    } else if (f == 0) {
      k = i - j;
      g = 1;
    } else {
      k = i - j + static_cast<long long>(n);
      g = 0;
    }
    return static_cast<std::size_t>(g * m + detail::mod(k, m));
  });
}

inline FiniteGroup quaternion_group() {
  // unit u in {1,i,j,k} = 0..3, index 2u + (negative ? 1 : 0)
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return FiniteGroup::from_product("Q8", 8, [](std::size_t x, std::size_t y) {
    const int u = static_cast<int>(x / 2), v = static_cast<int>(y / 2);
    int s = sign[u][v] * ((x % 2) ? -1 : 1) * ((y % 2) ? -1 : 1);
    return static_cast<std::size_t>(2 * unit[u][v] + (s < 0 ? 1 : 0));
  });
}

inline FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw CapacityError("S" + std::to_string(n) + " is supported only for n <= 5");
  return detail::permutation_group("S" + std::to_string(n), detail::permutations_lex(n, false));
}

inline FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 5) throw CapacityError("A" + std::to_string(n) + " is supported only for n <= 5");
  return detail::permutation_group("A" + std::to_string(n), detail::permutations_lex(n, true));
}

inline FiniteGroup sl23_group() {
  const auto els = detail::sl23_elements();
  std::map<detail::Mat2, Elem> index;
  for (std::size_t i = 0; i < els.size(); ++i) index.emplace(els[i], static_cast<Elem>(i));
  return FiniteGroup::from_product("SL23", els.size(), [&](std::size_t a, std::size_t b) {
    return index.at(detail::mat2_mul(els[a], els[b]));
  });
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name = {}) {
  detail::check_catalog_order(a.order() * b.order(), a.name() + "x" + b.name());
  if (name.empty()) name = a.name() + "x" + b.name();
  const std::size_t nb = b.order();
  return FiniteGroup::from_product(std::move(name), a.order() * nb, [&](std::size_t x, std::size_t y) {
    return a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb)) * nb +
           b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
  });
}

/// N x| H with h acting as action[h] in Aut(N); (n,h)(m,k) = (n action[h](m), hk).
inline FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const std::vector<GroupMap>& action,
                                      std::string name) {
  if (action.size() != h.order()) throw ContractViolation("semidirect action needs one automorphism per element");
  for (Elem x = 0; x < h.order(); ++x)
    for (Elem y = 0; y < h.order(); ++y)
      if (!(action[h.mul(x, y)] == action[x].after(action[y])))
        throw ContractViolation("semidirect action is not a homomorphism");
  const std::size_t nn = n.order();
  return FiniteGroup::from_product(std::move(name), nn * h.order(), [&](std::size_t x, std::size_t y) {
    const Elem xn = static_cast<Elem>(x % nn), xh = static_cast<Elem>(x / nn);
    const Elem yn = static_cast<Elem>(y % nn), yh = static_cast<Elem>(y / nn);
    return h.mul(xh, yh) * nn + n.mul(xn, action[xh](yn));
  });
}

/// C_m x| C_2 with the generator acting by x -> r x.
inline FiniteGroup cyclic_by_c2(std::size_t m, long long r, std::string name) {
  const FiniteGroup cm = cyclic_group(m);
  std::vector<Elem> im(m);
  for (std::size_t x = 0; x < m; ++x) im[x] = static_cast<Elem>(detail::mod(r * static_cast<long long>(x), m));
  return semidirect_product(cm, cyclic_group(2), {GroupMap::identity(cm), GroupMap(cm, cm, im)}, std::move(name));
}

/// N x| C_2 for an involutive automorphism theta of N.
inline FiniteGroup extension_by_c2(const FiniteGroup& n, const GroupMap& theta, std::string name) {
  return semidirect_product(n, cyclic_group(2), {GroupMap::identity(n), theta}, std::move(name));
}

namespace detail {

inline bool has_automorphism_of_order(const FiniteGroup& g, std::size_t k) {
  for (const auto& a : automorphism_group(g))
    if (a.order() == k) return true;
  return false;
}

/// (C4 x C2) x| C2 for the first involutive action, in lexicographic order, whose
/// group has an automorphism of order 3.
inline FiniteGroup sd16_group() {
  const FiniteGroup base = direct_product(cyclic_group(4), cyclic_group(2));
  for (const auto& theta : automorphism_group(base)) {
    if (theta.order() != 2) continue;
    FiniteGroup g = extension_by_c2(base, theta, "SD16");
    if (has_automorphism_of_order(g, 3)) return g;
  }
  throw InternalError("no action of C2 on C4xC2 admits an order-3 automorphism");
}

inline std::optional<std::size_t> parse_uint(std::string_view s) {
  std::size_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

inline FiniteGroup build_atom(const std::string& name) {
  if (name == "Q8") return quaternion_group();
  if (name == "SL23") return sl23_group();
  if (name == "SD16") return sd16_group();
  if (name == "QD16") return cyclic_by_c2(8, 3, "QD16");
  if (name == "M16") return cyclic_by_c2(8, 5, "M16");
  if (name == "C4sC4") {
    const FiniteGroup c4 = cyclic_group(4);
    return semidirect_product(c4, c4,
                              {GroupMap::identity(c4), GroupMap(c4, c4, {0, 3, 2, 1}), GroupMap::identity(c4),
                               GroupMap(c4, c4, {0, 3, 2, 1})},
                              "C4sC4");
  }
  if (name == "G16_3") {
    // (C4 x C2) x| C2 with a -> ab, b -> b, where a = (1,0), b = (0,1).
    const FiniteGroup base = direct_product(cyclic_group(4), cyclic_group(2));
    std::vector<Elem> im(8);
    for (Elem i = 0; i < 4; ++i)
      for (Elem j = 0; j < 2; ++j) im[i * 2 + j] = i * 2 + (i + j) % 2;
    return extension_by_c2(base, GroupMap(base, base, im), "G16_3");
  }
  auto numbered = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    return parse_uint(std::string_view(name).substr(prefix.size()));
  };
  if (auto n = numbered("Dic"); n && *n >= 1) return dicyclic_group(*n);
  if (auto n = numbered("C"); n && *n >= 1) return cyclic_group(*n);
  if (auto n = numbered("D"); n && *n >= 1) return dihedral_group(*n);
  if (auto n = numbered("S"); n && *n >= 1) return symmetric_group(static_cast<int>(*n));
  if (auto n = numbered("A"); n && *n >= 1) return alternating_group(static_cast<int>(*n));
  throw LookupError("unknown group name '" + name + "'");
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

}  // namespace detail

/// Builds a group from its catalog name; products are written with 'x', e.g. "C4xC2", "C2xQ8".
inline FiniteGroup build_group(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, FiniteGroup> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
  }
  const auto parts = detail::split(name, 'x');
  FiniteGroup g = detail::build_atom(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, detail::build_atom(parts[i]));
  if (parts.size() > 1) g = g.renamed(name);
  std::lock_guard lock(mu);
  return cache.emplace(name, g).first->second;
}

/// Catalog names of the isomorphism types of order n, one per type.
inline std::vector<std::string> group_names_of_order(std::size_t n) {
  if (n == 0) throw ContractViolation("group order must be positive");
  if (n > 16) throw CapacityError("the catalog covers orders up to 16");
  switch (n) {
    case 4: return {"C4", "C2xC2"};
    case 6: return {"C6", "D3"};
    case 8: return {"C8", "C4xC2", "C2xC2xC2", "D4", "Q8"};
    case 9: return {"C9", "C3xC3"};
    case 10: return {"C10", "D5"};
    case 12: return {"C12", "C6xC2", "D6", "Dic3", "A4"};
    case 14: return {"C14", "D7"};
    case 16:
      return {"C16", "C8xC2", "C4xC4", "C4xC2xC2", "C2xC2xC2xC2", "D8", "Dic4",
              "QD16", "M16", "C4sC4", "G16_3", "C2xD4", "C2xQ8", "SD16"};
    default: return {"C" + std::to_string(n)};
  }
}

inline std::vector<FiniteGroup> groups_of_order(std::size_t n) {
  std::vector<FiniteGroup> out;
  for (const auto& name : group_names_of_order(n)) out.push_back(build_group(name));
  return out;
}

/// Catalog name of the type of g, or nullopt when |g| > 16.
inline std::optional<std::string> identify_group(const FiniteGroup& g) {
  if (g.order() > 16) return std::nullopt;
  for (const auto& name : group_names_of_order(g.order()))
    if (groups_isomorphic(g, build_group(name))) return name;
  throw InternalError("group of order " + std::to_string(g.order()) + " matches no catalog type");
}

// ---------------------------------------------------------------------------
// Named automorphisms

namespace detail {

inline std::vector<long long> parse_ints(std::string_view s, char sep) {
  std::vector<long long> out;
  for (const auto& tok : split(s, sep)) {
    long long v = 0;
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    if (b != e && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (tok.empty() || ec != std::errc() || p != e) throw LookupError("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

/// Orders of the cyclic factors when g's name is a product of cyclic groups.
inline std::optional<std::vector<long long>> cyclic_factors(const std::string& name) {
  std::vector<long long> out;
  for (const auto& p : split(name, 'x')) {
    if (p.size() < 2 || p[0] != 'C') return std::nullopt;
    auto n = parse_uint(std::string_view(p).substr(1));
    if (!n) return std::nullopt;
    out.push_back(static_cast<long long>(*n));
  }
  return out;
}

/// Map on a product of cyclic groups given by a rule on coordinate vectors.
template <class Rule>
GroupMap coordinate_map(const FiniteGroup& g, const std::vector<long long>& radix, Rule rule) {
  std::vector<Elem> im(g.order());
  const std::size_t k = radix.size();
  std::vector<long long> v(k);
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t r = x;
    for (std::size_t i = k; i-- > 0;) {
      v[i] = static_cast<long long>(r % radix[i]);
      r /= radix[i];
    }
    std::vector<long long> w = rule(v);
    std::size_t y = 0;
    for (std::size_t i = 0; i < k; ++i) y = y * radix[i] + static_cast<std::size_t>(mod(w[i], radix[i]));
    im[x] = static_cast<Elem>(y);
  }
  return GroupMap(g, g, std::move(im));
}

inline GroupMap matrix_map(const FiniteGroup& g, const std::vector<std::vector<long long>>& m) {
  auto radix = cyclic_factors(g.name());
  if (!radix) throw LookupError("matrix automorphisms need a product of cyclic groups, got " + g.name());
  if (m.size() != radix->size())
    throw LookupError("matrix has " + std::to_string(m.size()) + " rows, " + g.name() + " has " +
                      std::to_string(radix->size()) + " factors");
  for (const auto& row : m)
    if (row.size() != m.size()) throw LookupError("matrix must be square");
  return coordinate_map(g, *radix, [&](const std::vector<long long>& v) {
    std::vector<long long> w(v.size(), 0);
    for (std::size_t r = 0; r < v.size(); ++r)
      for (std::size_t c = 0; c < v.size(); ++c) w[r] += m[r][c] * v[c];
    return w;
  });
}

/// Extends generator images to a map and verifies it.
inline GroupMap from_generator_images(const FiniteGroup& g, std::vector<Elem> gens, std::vector<Elem> imgs) {
  std::vector<std::int64_t> map;
  std::vector<char> used;
  if (!extend_on_generators(g, g, gens, imgs, true, map, used))
    throw ContractViolation("generator images do not define an automorphism of " + g.name());
  std::vector<Elem> im(g.order());
  for (std::size_t i = 0; i < im.size(); ++i) {
    if (map[i] < 0) throw ContractViolation("generators do not generate " + g.name());
    im[i] = static_cast<Elem>(map[i]);
  }
  return GroupMap(g, g, std::move(im));
}

inline std::optional<std::pair<char, int>> symmetric_kind(const std::string& name) {
  if (name.size() == 2 && (name[0] == 'S' || name[0] == 'A') && name[1] >= '1' && name[1] <= '5')
    return std::make_pair(name[0], name[1] - '0');
  return std::nullopt;
}

/// "(12)(34)" on S_n/A_n; points are 1-based digits.
inline Perm parse_cycles(std::string_view s, int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw LookupError("bad cycle notation '" + std::string(s) + "'");
    const std::size_t close = s.find(')', i);
    if (close == std::string_view::npos) throw LookupError("unclosed cycle in '" + std::string(s) + "'");
    std::vector<int> cyc;
    for (std::size_t k = i + 1; k < close; ++k) {
      const int pt = s[k] - '1';
      if (pt < 0 || pt >= n) throw LookupError("cycle point out of range in '" + std::string(s) + "'");
      cyc.push_back(pt);
    }
    Perm c(n);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    Perm q(n);
    for (int x = 0; x < n; ++x) q[x] = p[c[x]];
    p = q;
    i = close + 1;
  }
  return p;
}

/// x -> c x c^-1 for a permutation c of the points, on S_n or A_n.
inline GroupMap permutation_conjugation(const FiniteGroup& g, int n, const Perm& c) {
  const auto perms = permutations_lex(n, g.name()[0] == 'A');
  std::map<Perm, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Elem>(i));
  Perm cinv(n);
  for (int x = 0; x < n; ++x) cinv[c[x]] = x;
  std::vector<Elem> im(g.order());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    Perm r(n);
    for (int x = 0; x < n; ++x) r[x] = c[perms[i][cinv[x]]];
    im[i] = index.at(r);
  }
  return GroupMap(g, g, std::move(im));
}

inline GroupMap named_atom(const FiniteGroup& g, const std::string& term);
inline GroupMap named_term_product(const FiniteGroup& g, const std::string& name);

inline GroupMap named_term(const FiniteGroup& g, const std::string& term) {
  const auto caret = term.rfind('^');
  if (caret != std::string::npos && caret + 1 < term.size() &&
      term.find_first_not_of("-0123456789", caret + 1) == std::string::npos && term.find(')', caret) == std::string::npos) {
    const long long k = parse_ints(std::string_view(term).substr(caret + 1), ',').at(0);
    return named_atom(g, term.substr(0, caret)).power(k);
  }
  return named_atom(g, term);
}

inline GroupMap named_atom(const FiniteGroup& g, const std::string& name) {
  const std::string& gn = g.name();
  auto body = [&](std::string_view prefix) -> std::optional<std::string> {
    if (name.size() >= prefix.size() && name.compare(0, prefix.size(), prefix) == 0) return name.substr(prefix.size());
    return std::nullopt;
  };
  auto with_n = [&](const std::string& b, std::size_t expected) {
    const auto at = b.find('@');
    if (at != std::string::npos) {
      auto n = parse_uint(std::string_view(b).substr(at + 1));
      if (!n || *n != expected)
        throw LookupError("automorphism '" + name + "' does not belong to " + gn);
      return b.substr(0, at);
    }
    return b;
  };

  if (name == "id") return GroupMap::identity(g);
  if (auto b = body("inner:")) {
    auto x = parse_uint(*b);
    if (!x) throw LookupError("bad element index in '" + name + "'");
    g.check_index(*x);
    return inner_automorphism(g, static_cast<Elem>(*x));
  }
  if (auto b = body("images:")) {
    std::vector<Elem> im;
    for (long long v : parse_ints(*b, ',')) {
      if (v < 0) throw ContractViolation("negative image in '" + name + "'");
      im.push_back(static_cast<Elem>(v));
    }
    GroupMap m(g, g, std::move(im));
    if (!m.is_bijective()) throw ContractViolation("'" + name + "' is not bijective");
    return m;
  }
  if (auto b = body("phi:")) {
    if (gn.empty() || gn[0] != 'D' || !parse_uint(std::string_view(gn).substr(1)))
      throw LookupError("phi:a,b is defined on dihedral groups, not " + gn);
    const long long n = static_cast<long long>(g.order() / 2);
    const auto ab = parse_ints(with_n(*b, static_cast<std::size_t>(n)), ',');
    if (ab.size() != 2) throw LookupError("phi needs two parameters: '" + name + "'");
    std::vector<Elem> im(g.order());
    for (long long e = 0; e < 2; ++e)
      for (long long i = 0; i < n; ++i) im[e * n + i] = static_cast<Elem>(e * n + mod(ab[0] * i + e * ab[1], n));
    GroupMap m(g, g, std::move(im));
    if (!m.is_bijective()) throw ContractViolation("phi_{a,b} needs a coprime to n: '" + name + "'");
    return m;
  }
  if (auto b = body("mul:")) {
    auto radix = cyclic_factors(gn);
    if (!radix || radix->size() != 1) throw LookupError("mul:a is defined on cyclic groups, not " + gn);
    const long long n = radix->front();
    const auto a = parse_ints(with_n(*b, static_cast<std::size_t>(n)), ',');
    if (a.size() != 1) throw LookupError("mul needs one parameter: '" + name + "'");
    std::vector<Elem> im(g.order());
    for (long long x = 0; x < n; ++x) im[x] = static_cast<Elem>(mod(a[0] * x, n));
    GroupMap m(g, g, std::move(im));
    if (!m.is_bijective()) throw ContractViolation("mul:a needs a coprime to n: '" + name + "'");
    return m;
  }
  if (auto b = body("mat:")) {
    std::vector<std::vector<long long>> rows;
    for (const auto& r : split(*b, ';')) rows.push_back(parse_ints(r, ','));
    GroupMap m = matrix_map(g, rows);
    if (!m.is_bijective()) throw ContractViolation("matrix '" + name + "' is not invertible");
    return m;
  }
  if (auto b = body("conj:")) {
    if (auto sk = symmetric_kind(gn)) return permutation_conjugation(g, sk->second, parse_cycles(*b, sk->second));
    if (gn == "SL23") {
      std::vector<int> entries;
      for (const auto& r : split(*b, ';'))
        for (long long v : parse_ints(r, ',')) entries.push_back(static_cast<int>(mod(v, 3)));
      if (entries.size() != 4) throw LookupError("conj on SL23 needs a 2x2 matrix: '" + name + "'");
      const auto els = sl23_elements();
      const detail::Mat2 a{entries[0], entries[1], entries[2], entries[3]};
      auto it = std::find(els.begin(), els.end(), a);
      if (it == els.end()) throw ContractViolation("matrix in '" + name + "' is not in SL(2,3)");
      return inner_automorphism(g, static_cast<Elem>(it - els.begin()));
    }
    throw LookupError("conj: is defined on S_n, A_n and SL23, not " + gn);
  }
  if (name == "swap") {
    const auto parts = split(gn, 'x');
    if (parts.size() != 2 || parts[0] != parts[1]) throw LookupError("swap needs a square G x G, not " + gn);
    const std::size_t n = build_group(parts[0]).order();
    std::vector<Elem> im(g.order());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) im[x * n + y] = static_cast<Elem>(y * n + x);
    return GroupMap(g, g, std::move(im));
  }
  if (auto b = body("componentwise:")) {
    const auto parts = split(gn, 'x');
    const auto maps = split(*b, '|');
    if (parts.size() != maps.size())
      throw LookupError("componentwise needs one map per factor of " + gn + ": '" + name + "'");
    std::vector<FiniteGroup> factors;
    std::vector<GroupMap> fm;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      factors.push_back(build_group(parts[i]));
      std::string sub = maps[i];
      std::replace(sub.begin(), sub.end(), '&', '*');
      fm.push_back(named_term_product(factors.back(), sub));
    }
    std::vector<Elem> im(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::size_t r = x, y = 0, scale = 1;
      for (std::size_t i = parts.size(); i-- > 0;) {
        const std::size_t o = factors[i].order();
        y += fm[i](static_cast<Elem>(r % o)) * scale;
        r /= o;
        scale *= o;
      }
      im[x] = static_cast<Elem>(y);
    }
    return GroupMap(g, g, std::move(im));
  }

  // Maps named in the classification tables.
  const auto radix = cyclic_factors(gn);
  if (gn == "C4xC2" && name == "psi_sigma")
    return coordinate_map(g, *radix, [](const auto& v) { return std::vector<long long>{v[0] + 2 * v[1], v[0] + v[1]}; });
  if (gn == "C4xC2" && name == "psi_tau")
    return coordinate_map(g, *radix, [](const auto& v) { return std::vector<long long>{-v[0], v[0] + v[1]}; });
  if (gn == "C6xC2" && name == "alpha_sigma")
    return coordinate_map(g, *radix,
                          [](const auto& v) { return std::vector<long long>{2 * v[0] + 3 * v[1], v[0] + v[1]}; });
  if (gn == "C6xC2" && name == "alpha_tau")
    return coordinate_map(g, *radix, [](const auto& v) { return std::vector<long long>{-v[0], v[0] + v[1]}; });
  if (gn == "C2xC2xC2" && name.size() == 2 && name[0] == 'M' && name[1] >= '1' && name[1] <= '6') {
    static const std::vector<std::vector<std::vector<long long>>> ms = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
        {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}};
    return matrix_map(g, ms[name[1] - '1']);
  }
  if (gn == "Dic3" && (name == "beta_sigma" || name == "beta_tau")) {
    const bool sigma = name == "beta_sigma";
    std::vector<Elem> im(12);
    for (long long e = 0; e < 2; ++e)
      for (long long i = 0; i < 6; ++i) im[e * 6 + i] = static_cast<Elem>(e * 6 + mod(sigma ? i + e : -i, 6));
    return GroupMap(g, g, std::move(im));
  }
  if (gn == "Q8" && name.size() == 4 && name.compare(0, 3, "psi") == 0 && name[3] >= '1' && name[3] <= '5') {
    // images of i (=2) and j (=4); 1,-1,i,-i,j,-j,k,-k = 0..7
    static constexpr Elem img[5][2] = {{2, 4}, {2, 5}, {4, 2}, {4, 6}, {4, 3}};
    const auto& p = img[name[3] - '1'];
    return from_generator_images(g, {2, 4}, {p[0], p[1]});
  }
  throw LookupError("unknown automorphism '" + name + "' for " + gn);
}

}  // namespace detail

/// Parses an automorphism name. Terms are joined with '*' (rightmost applied first)
/// and may carry a power suffix "^k".
inline GroupMap named_automorphism(const FiniteGroup& g, const std::string& name) {
  if (name.empty()) throw LookupError("empty automorphism name");
  GroupMap result = GroupMap::identity(g);
  std::size_t depth = 0, start = 0;
  std::vector<std::string> terms;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i < name.size() && name[i] == '(') ++depth;
    if (i < name.size() && name[i] == ')') --depth;
    if (i == name.size() || (name[i] == '*' && depth == 0)) {
      terms.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  for (const auto& t : terms) result = result.after(detail::named_term(g, t));
  return result;
}

namespace detail {
inline GroupMap named_term_product(const FiniteGroup& g, const std::string& name) { return named_automorphism(g, name); }
}  // namespace detail

}  // namespace qf
