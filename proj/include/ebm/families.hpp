// Edge-biregular maps of negative prime Euler characteristic: the classified
// families for chi = -p with p odd, and the twelve maps with chi = -2.
//
// Every map is produced from its canonical presentation by coset enumeration.
// The H_{p,j} family also has a direct construction as C_{kappa lambda} x| V_4,
// and by default both are built and required to agree.

#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ebm/coset.hpp"
#include "ebm/group.hpp"
#include "ebm/map.hpp"
#include "ebm/presentation.hpp"

namespace ebm {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A constructed map together with the presentation it came from.
struct Construction {
  std::string label;
  Presentation presentation;
  EdgeBiregularMap map;
};

/// Relators shared by every canonical presentation.
inline constexpr const char* kCanonicalRelators[] = {"x^2", "y^2", "s^2", "t^2", "(x y)^2", "(s t)^2"};

/// Presentation text over x, y, s, t with the canonical relators followed by `extra`.
inline std::string canonical_presentation_text(const std::vector<std::string>& extra) {
  std::string text = "gens x y s t\n";
  for (const char* r : kCanonicalRelators) text += std::string("rel ") + r + "\n";
  for (const auto& r : extra) text += "rel " + r + "\n";
  return text;
}

inline Construction construct_from_relators(std::string label, const std::vector<std::string>& extra,
                                            std::size_t max_cosets = kDefaultMaxCosets) {
  Presentation p = parse_presentation(canonical_presentation_text(extra));
  EdgeBiregularMap m = new_map(group_from_presentation(p, max_cosets));
  return Construction{std::move(label), std::move(p), std::move(m)};
}

namespace detail {
inline void require_odd_prime(long long p, const char* who) {
  if (p < 3 || !is_prime(p)) throw Error(std::string(who) + ": p must be an odd prime, got " + std::to_string(p));
}
inline std::string pw(const std::string& base, long long e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// chi = -p, p odd

/// Single-vertex map of type (4(p+1), 4) on the dihedral group of order 4(p+1).
inline Construction dihedral_family_1(long long p, std::size_t max_cosets = kDefaultMaxCosets) {
  detail::require_odd_prime(p, "dihedral_family_1");
  return construct_from_relators("dh1(" + std::to_string(p) + ")",
                                 {"x y s", "s " + detail::pw("(y t)", p + 1)}, max_cosets);
}

/// Two-vertex map of type (2(p+2), 4) on the dihedral group of order 4(p+2).
inline Construction dihedral_family_2(long long p, std::size_t max_cosets = kDefaultMaxCosets) {
  detail::require_odd_prime(p, "dihedral_family_2");
  return construct_from_relators("dh2(" + std::to_string(p) + ")",
                                 {"x y s", "s " + detail::pw("(x t)", p + 2)}, max_cosets);
}

struct HpjParams {
  long long kappa = 1;
  long long lambda = 3;
  long long j = 1;

  long long p() const { return 2 * kappa * lambda - 2 * kappa - lambda; }
  /// (j - 1)(lambda + 1)/2 reduced into [0, lambda).
  long long a() const { return ((j - 1) * (lambda + 1) / 2) % lambda; }
  std::string label() const {
    return "Hpj(p=" + std::to_string(p()) + ",kappa=" + std::to_string(kappa) + ",lambda=" + std::to_string(lambda) +
           ",j=" + std::to_string(j) + ")";
  }
  friend bool operator==(const HpjParams&, const HpjParams&) = default;
};

/// Throws unless kappa, lambda are odd and coprime, lambda >= 3, 0 < j < lambda
/// and j^2 = 1 mod lambda. p itself need not be prime.
inline void validate(const HpjParams& q) {
  if (q.kappa < 1 || q.kappa % 2 == 0) throw Error("Hpj: kappa must be a positive odd integer");
  if (q.lambda < 3 || q.lambda % 2 == 0) throw Error("Hpj: lambda must be an odd integer >= 3");
  if (std::gcd(q.kappa, q.lambda) != 1) throw Error("Hpj: kappa and lambda must be coprime");
  if (q.j <= 0 || q.j >= q.lambda) throw Error("Hpj: j must satisfy 0 < j < lambda");
  if ((q.j * q.j) % q.lambda != 1) throw Error("Hpj: j^2 must be 1 mod lambda");
}

/// All 0 < j < lambda with j^2 = 1 mod lambda.
inline std::vector<long long> square_roots_of_unity(long long lambda) {
  std::vector<long long> out;
  for (long long j = 1; j < lambda; ++j)
    if ((j * j) % lambda == 1 % lambda) out.push_back(j);
  return out;
}

/// Parameter sets from factorizations p + 1 = b d with b = 1 mod 4 and
/// gcd(b + 1, d + 1) = 1, giving kappa = (b + 1)/2, lambda = d + 1.
inline std::vector<HpjParams> factorizations_of(long long p) {
  detail::require_odd_prime(p, "factorizations_of");
  std::vector<HpjParams> out;
  for (long long b = 1; b <= p + 1; ++b) {
    if ((p + 1) % b != 0 || b % 4 != 1) continue;
    long long d = (p + 1) / b;
    if (std::gcd(b + 1, d + 1) != 1) continue;
    long long kappa = (b + 1) / 2, lambda = d + 1;
    if (lambda < 3) continue;
    for (long long j : square_roots_of_unity(lambda)) out.push_back(HpjParams{kappa, lambda, j});
  }
  return out;
}

/// Relators of H_{p,j} beyond the canonical ones, with u = s x and v = t y.
/// The commutator [z, v^2] is written z v^2 z v^-2, and v^-1 = y t.
inline std::vector<std::string> hpj_relators(const HpjParams& q) {
  std::string last = detail::pw("(t y)", q.kappa);
  if (q.a() != 0) last += " " + detail::pw("(s x)", q.a());
  last += " s";
  return {detail::pw("(s x)", q.lambda),
          detail::pw("(t y)", 2 * q.kappa),
          "s (t y)^2 s (y t)^2",
          "x (t y)^2 x (y t)^2",
          "t (s x) t " + detail::pw("(s x)", q.j),
          last};
}

/// H_{p,j} as (C_lambda x C_kappa) x| <s, t>: s inverts u and fixes w = v^2,
/// t sends u to u^-j and inverts w; then x = s u and y = u^a w^((kappa-1)/2) s t.
inline EdgeBiregularMap hpj_semidirect(const HpjParams& q) {
  validate(q);
  const std::size_t lam = std::size_t(q.lambda), kap = std::size_t(q.kappa);
  const FiniteGroup f = direct_product(cyclic(lam), cyclic(kap));
  auto enc = [&](long long i, long long w) {
    return Element(((i % q.lambda + q.lambda) % q.lambda) * q.kappa + ((w % q.kappa + q.kappa) % q.kappa));
  };
  Perm s_aut(f.order()), t_aut(f.order());
  for (long long i = 0; i < q.lambda; ++i)
    for (long long w = 0; w < q.kappa; ++w) {
      s_aut[enc(i, w)] = enc(-i, w);
      t_aut[enc(i, w)] = enc(-q.j * i, -w);
    }
  const MarkedGroup v4 = dihedral(4);
  const auto action = action_from_generators(f, v4, {s_aut, t_aut});
  auto g = share(semidirect(f, v4.g(), action));
  const std::size_t nb = v4.g().order();
  auto in_f = [&](Element e) { return Element(e * nb + v4.g().identity()); };
  auto in_v4 = [&](Element e) { return Element(f.identity() * nb + e); };
  const Element s = in_v4(v4.marked[0]), t = in_v4(v4.marked[1]);
  const Element u = in_f(enc(1, 0)), w = in_f(enc(0, 1));
  const Element x = g->mul(s, u);
  const Element y = g->product({g->pow(u, q.a()), g->pow(w, (q.kappa - 1) / 2), s, t});
  return new_map(MarkedGroup{g, {x, y, s, t}});
}

enum class HpjRoute { Presentation, Semidirect, Both };

/// Maps of type (4 kappa, 2 lambda) on a group of order 4 kappa lambda. With
/// HpjRoute::Both the presentation route is returned after checking that the
/// direct construction gives an isomorphic map.
inline Construction family_Hpj(const HpjParams& q, HpjRoute route = HpjRoute::Both,
                               std::size_t max_cosets = kDefaultMaxCosets) {
  validate(q);
  Presentation p = parse_presentation(canonical_presentation_text(hpj_relators(q)));
  if (route == HpjRoute::Semidirect) return Construction{q.label(), std::move(p), hpj_semidirect(q)};
  EdgeBiregularMap m = new_map(group_from_presentation(p, max_cosets));
  if (route == HpjRoute::Both && !is_map_isomorphic(m, hpj_semidirect(q)))
    throw Error("Hpj: presentation and semidirect constructions disagree for " + q.label());
  return Construction{q.label(), std::move(p), std::move(m)};
}

inline std::vector<std::string> hp_relators(long long m, bool with_sx_power = true) {
  std::vector<std::string> r;
  if (with_sx_power) r.push_back(detail::pw("(s x)", 3 * m));
  r.insert(r.end(), {"(t y)^4", "(s x y)^2 t", "t x t y"});
  return r;
}

/// Map of type (8, 6m) on a group of order 24m; chi = -(9m - 4).
inline Construction family_Hp(long long m, std::size_t max_cosets = kDefaultMaxCosets) {
  if (m < 1 || m % 2 == 0) throw Error("Hp: m must be a positive odd integer, got " + std::to_string(m));
  return construct_from_relators("Hp(m=" + std::to_string(m) + ")", hp_relators(m), max_cosets);
}

/// Set when 9m - 4 is composite: the map exists but lies outside the prime census.
inline std::optional<std::string> hp_composite_warning(long long m) {
  if (is_prime(9 * m - 4)) return std::nullopt;
  return "9m-4 = " + std::to_string(9 * m - 4) + " is not prime";
}

/// The H_p presentation without (sx)^(3m) enumerated over <(sx)^3>.
struct HpQuotientCheck {
  std::size_t index = 0;
  MarkedGroup quotient;
  bool quotient_is_s4 = false;
};

inline HpQuotientCheck hp_quotient_check(std::size_t max_cosets = kDefaultMaxCosets) {
  Presentation u = parse_presentation(canonical_presentation_text(hp_relators(1, false)));
  const Word n_gen = parse_word(u, "(s x)^3");
  CosetTable t = coset_enumerate(u, std::vector<Word>{n_gen}, max_cosets);
  HpQuotientCheck out;
  out.index = t.index();
  out.quotient = coset_action_group(t).marked;
  out.quotient_is_s4 = are_isomorphic_groups(out.quotient.g(), symmetric(4));
  return out;
}

/// Fully regular map of type (4, 6) on D_6 x D_6, chi = -3.
inline Construction map_H3(std::size_t max_cosets = kDefaultMaxCosets) {
  return construct_from_relators("H3", {"(t y)^2", "(s x)^3", "(x y t)^3", "(s t y)^3", "(x y s t)^2"}, max_cosets);
}

/// All maps of the odd-p classification for this p: dh1, dh2, H_{p,j} for
/// every factorization, H_p when p = 9m - 4, and H3 when p = 3.
inline std::vector<Construction> odd_prime_constructions(long long p, std::size_t max_cosets = kDefaultMaxCosets) {
  detail::require_odd_prime(p, "odd_prime_constructions");
  std::vector<Construction> out;
  out.push_back(dihedral_family_1(p, max_cosets));
  out.push_back(dihedral_family_2(p, max_cosets));
  for (const auto& q : factorizations_of(p)) out.push_back(family_Hpj(q, HpjRoute::Both, max_cosets));
  if ((p + 4) % 9 == 0) out.push_back(family_Hp((p + 4) / 9, max_cosets));
  if (p == 3) out.push_back(map_H3(max_cosets));
  return out;
}

// ---------------------------------------------------------------------------
// chi = -2

/// Relators (beyond the canonical ones) of H_{2,1} .. H_{2,12}, kept as given,
/// redundant relators included.
inline const std::vector<std::vector<std::string>>& chi_minus_2_relators() {
  static const std::vector<std::vector<std::string>> r{
      {"(t y)^4", "(s x)^4", "y s x s", "t x s x", "x t y t", "s y t y"},
      {"(t y)^2", "(s x)^6", "x y t", "t (s x)^3"},
      {"(t y)^3", "(s x)^3", "s t y x"},
      {"(t y)^2", "(s x)^4", "(y s)^4", "(t x)^2", "y s x s"},
      {"(t y)^2", "(s x)^4", "(y s)^2", "(t x)^2", "y (s x)^2"},
      {"(t y)^2", "(s x)^4", "(y s)^2", "(s t x)^2", "y (s x)^2"},
      {"(t y)^2", "(s x)^4", "(y s)^2", "(t x)^2", "t y (s x)^2"},
      {"(t y)^2", "(s x)^4", "(y s)^2", "(s t x)^2", "t y x s x"},
      {"(t y)^2", "(s x)^4", "(y s)^2", "(s t x)^2", "t y s"},
      {"(t y)^2", "(s x)^3", "t (s y)^2", "y (x t)^2"},
      {"(t y)^2", "(s x)^3", "(y s x)^2", "(t x)^2"},
      {"(t y)^2", "(s x)^3", "(y s)^2", "(t x)^2"},
  };
  return r;
}

/// H_{2,index} for index in 1..12.
inline Construction chi_minus_2_map(std::size_t index, std::size_t max_cosets = kDefaultMaxCosets) {
  if (index < 1 || index > 12) throw Error("chi = -2 catalog index must be in 1..12");
  return construct_from_relators("H2_" + std::to_string(index), chi_minus_2_relators()[index - 1], max_cosets);
}

inline std::vector<Construction> chi_minus_2_catalog(std::size_t max_cosets = kDefaultMaxCosets) {
  std::vector<Construction> out;
  for (std::size_t i = 1; i <= 12; ++i) out.push_back(chi_minus_2_map(i, max_cosets));
  return out;
}

/// The map given by (t y)^2, (s x)^3, (y s)^2, (t x s)^2, which is the twin of H_{2,11}.
inline Construction h2_11_twin_presentation(std::size_t max_cosets = kDefaultMaxCosets) {
  return construct_from_relators("H2_11_twin", {"(t y)^2", "(s x)^3", "(y s)^2", "(t x s)^2"}, max_cosets);
}

}  // namespace ebm
