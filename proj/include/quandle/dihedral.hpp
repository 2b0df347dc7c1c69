#pragma once

// Closed forms for Q(D_n, phi_{a,b}) with phi_{a,b}(tau^e sigma^i) = tau^e sigma^{ai + eb},
// and for linear Alexander quandles Q(C_n, a).

#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quandle/catalog.hpp"

namespace qf {

/// Solutions of c z = d (mod n): z0 + step*i for i in [0, count).
struct CongruenceSolution {
  long long z0 = 0;
  long long step = 0;
  long long count = 0;
};

/// Extended Euclid: returns g = gcd(a,b) >= 0 with a*x + b*y = g.
inline long long extended_gcd(long long a, long long b, long long& x, long long& y) {
  long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const long long q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

inline std::optional<CongruenceSolution> solve_congruence(long long c, long long d, long long n) {
  if (n <= 0) throw ContractViolation("modulus must be positive");
  c = detail::mod(c, n);
  d = detail::mod(d, n);
  long long x = 0, y = 0;
  const long long g = extended_gcd(c, n, x, y);  // g = gcd(n, c), gcd(n, 0) = n
  if (d % g != 0) return std::nullopt;
  const long long step = n / g;
  const long long z0 = detail::mod(static_cast<long long>((static_cast<__int128>(x) * (d / g)) % step), step);
  return CongruenceSolution{z0, step, g};
}

/// A unit p mod n with p*c = gcd(m, c) (mod m); found by scanning upward.
inline long long unit_multiplier_to_gcd(long long c, long long m, long long n) {
  if (m <= 0 || n <= 0) throw ContractViolation("moduli must be positive");
  const long long g = std::gcd(m, detail::mod(c, m));
  const long long target = detail::mod(g, m);
  const long long limit = 1'000'000;
  for (long long p = 1; p < limit; ++p)
    if (std::gcd(n, p) == 1 && detail::mod(p * detail::mod(c, m), m) == target) return p;
  throw InternalError("no unit multiplier found below the scan limit");
}

struct DihedralAut {
  long long n = 0;
  long long a = 1;
  long long b = 0;

  DihedralAut() = default;
  DihedralAut(long long n_, long long a_, long long b_) : n(n_), a(detail::mod(a_, n_)), b(detail::mod(b_, n_)) {
    if (n < 1) throw ContractViolation("dihedral n must be positive");
    if (std::gcd(a, n) != 1 && n > 1) throw ContractViolation("phi_{a,b} needs a coprime to n");
  }

  /// gcd(n, 1 - a), with gcd(n, 0) = n.
  long long g() const { return std::gcd(n, detail::mod(1 - a, n)); }
  /// gcd(n, 1 - a, b).
  long long d() const { return std::gcd(g(), b); }

  std::string name() const { return "phi:" + std::to_string(a) + "," + std::to_string(b) + "@" + std::to_string(n); }
  friend bool operator==(const DihedralAut&, const DihedralAut&) = default;
};

inline GroupMap to_group_map(const DihedralAut& phi) {
  return named_automorphism(build_group("D" + std::to_string(phi.n)), phi.name());
}

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

inline std::vector<long long> units_mod(long long n) {
  std::vector<long long> out;
  for (long long a = 0; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  if (n == 1) out = {0};
  return out;
}

namespace detail {
inline void require_conjugation_formula(long long n) {
  if (n < 3) throw ContractViolation("Aut(D_n) = Aff(C_n) needs n >= 3, got n = " + std::to_string(n));
}
}  // namespace detail

/// One phi_{a,d} per conjugacy class of Aut(D_n): a a unit, d a divisor of gcd(n, 1-a) (d = g written as b = g mod n).
/// Sorted by (a, b).
inline std::vector<DihedralAut> conjugacy_reps_aut_dn(long long n) {
  detail::require_conjugation_formula(n);
  std::vector<DihedralAut> out;
  for (long long a : units_mod(n)) {
    const long long g = std::gcd(n, detail::mod(1 - a, n));
    std::vector<DihedralAut> row;
    for (long long d : divisors(g)) row.emplace_back(n, a, d % n);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.b < y.b; });
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

/// phi_{a,b} ~ phi_{a',b'} iff a = a' (mod n) and gcd(n,1-a,b) = gcd(n,1-a',b').
inline bool are_conjugate_dn(const DihedralAut& x, const DihedralAut& y) {
  detail::require_conjugation_formula(x.n);
  if (x.n != y.n) throw ContractViolation("automorphisms of different dihedral groups");
  return x.a == y.a && x.d() == y.d();
}

/// The representative of phi's class in conjugacy_reps_aut_dn.
inline DihedralAut canonical_rep_dn(const DihedralAut& x) {
  detail::require_conjugation_formula(x.n);
  return DihedralAut(x.n, x.a, x.d() % x.n);
}

/// |Fix(phi_{a,b})| = 2g if d = g, else g.
inline long long fix_size_dn(const DihedralAut& x) { return x.d() == x.g() ? 2 * x.g() : x.g(); }

/// P = <sigma^p_step>, P^2 = <sigma^p2_step>.
struct DihedralP {
  long long p_step = 1;
  long long p2_step = 1;
};

inline DihedralP p_subgroups_dn(const DihedralAut& x) {
  const long long d = x.d();
  const long long g2 = std::gcd(x.n / d, detail::mod(1 - x.a, x.n / d));
  return {d, d * g2};
}

/// Members of <sigma^step> as indices of D_n.
inline std::vector<Elem> rotation_subgroup(long long n, long long step) {
  std::vector<Elem> out;
  for (long long i = 0; i < n; i += step) out.push_back(static_cast<Elem>(i));
  return out;
}

/// Q(D_n, phi) = Q(D_n, phi') iff |Fix| agree, d = d', and a = a' (mod n/d).
inline bool dihedral_iso_decider(const DihedralAut& x, const DihedralAut& y) {
  detail::require_conjugation_formula(x.n);
  if (x.n != y.n) throw ContractViolation("automorphisms of different dihedral groups");
  const long long d = x.d();
  return fix_size_dn(x) == fix_size_dn(y) && d == y.d() && detail::mod(x.a - y.a, x.n / d) == 0;
}

/// Q(C_{2n}, a) = Q(D_n, phi_{a~, g}) with a = 2k+1, g = gcd(k, n), a~ = a - floor(a/n) n.
inline DihedralAut cyclic_to_dihedral(long long n, long long a) {
  if (n < 1) throw ContractViolation("n must be positive");
  a = detail::mod(a, 2 * n);
  if (std::gcd(a, 2 * n) != 1) throw ContractViolation("a must be a unit mod 2n");
  const long long k = (a - 1) / 2;
  const long long g = std::gcd(k, n);  // gcd(0, n) = n
  const long long at = a - (a / n) * n;
  return DihedralAut(n, at, g);
}

/// Q(C_n, a) = Q(C_n, a') iff gcd(n,1-a) = gcd(n,1-a') = g and a = a' (mod n/g).
inline bool cyclic_iso_decider(long long n, long long a, long long a2) {
  const long long g = std::gcd(n, detail::mod(1 - a, n));
  const long long g2 = std::gcd(n, detail::mod(1 - a2, n));
  return g == g2 && detail::mod(a - a2, n / g) == 0;
}

/// Reads psi as phi_{a,b} when g is the catalog D_n (n >= 3).
inline std::optional<DihedralAut> recognize_dihedral(const GroupMap& psi) {
  const FiniteGroup& g = psi.source();
  const std::string& name = g.name();
  if (name.size() < 2 || name[0] != 'D') return std::nullopt;
  const auto n = detail::parse_uint(std::string_view(name).substr(1));
  if (!n || *n < 3 || !(g == build_group(name))) return std::nullopt;
  const long long nn = static_cast<long long>(*n);
  const Elem s = psi(1), t = psi(static_cast<Elem>(nn));
  if (s >= nn || t < nn) return std::nullopt;
  DihedralAut phi(nn, s, t - nn);
  if (!(to_group_map(phi) == psi)) return std::nullopt;
  return phi;
}

/// Reads psi as multiplication by a when g is the catalog C_n.
inline std::optional<long long> recognize_cyclic(const GroupMap& psi) {
  const FiniteGroup& g = psi.source();
  const std::string& name = g.name();
  if (name.size() < 2 || name[0] != 'C' || name.find('x') != std::string::npos) return std::nullopt;
  const auto n = detail::parse_uint(std::string_view(name).substr(1));
  if (!n || !(g == build_group(name))) return std::nullopt;
  if (*n == 1) return 1;
  return static_cast<long long>(psi(1));
}

}  // namespace qf
