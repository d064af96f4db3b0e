#pragma once

// Rational cohomology of generalized flag manifolds G/H with H a Levi
// subgroup: Poincare polynomials, Betti numbers and Euler numbers, each
// computed along independent routes that are cross-checked.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "shodge/error.hpp"
#include "shodge/polyring.hpp"
#include "shodge/rootsys.hpp"

namespace shodge {

/// Betti numbers b^0 .. b^top.
struct BettiVector {
  std::vector<std::uint64_t> entries;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto b : entries) s += b;
    return s;
  }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Euler number as obtained by each independent route.
struct EulerRoutes {
  std::uint64_t degree_formula = 0;   // prod (g_i + 1) / prod (l_i + 1)
  std::uint64_t weyl_quotient = 0;    // |W(G)| / |W(H)|
  std::uint64_t poincare_at_one = 0;  // P_t(G/H) at t = 1
};

struct FlagCohomology {
  std::string label;
  IntPolynomial poincare;
  BettiVector betti;
  std::uint64_t euler = 0;
  int complex_dimension = 0;
  EulerRoutes euler_routes;
};

inline std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(UINT64_MAX)) throw std::overflow_error("integer does not fit in 64 bits");
  return v.convert_to<std::uint64_t>();
}

/// prod (1 - t^{g_i + 1}) / prod (1 - t^{l_i + 1}) for odd degree lists g, l of
/// equal length. Both lists are sorted and the factors paired in order; each
/// denominator is divided out as soon as the running product allows it, and
/// whatever is left is divided out after all numerator factors are in.
inline IntPolynomial poincare_borel(const ExponentSet& g_exponents, const ExponentSet& l_exponents) {
  if (g_exponents.size() != l_exponents.size())
    throw RankMismatch("G has rank " + std::to_string(g_exponents.size()) + " but H has rank " +
                       std::to_string(l_exponents.size()));
  const auto g = g_exponents.degrees();
  const auto l = l_exponents.degrees();

  IntPolynomial acc = IntPolynomial::one();
  std::vector<int> pending;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc *= IntPolynomial::one_minus_power(static_cast<std::size_t>(g[i] + 1));
    pending.push_back(l[i]);
    std::vector<int> still_pending;
    for (int li : pending) {
      try {
        acc = poly_exact_div(acc, IntPolynomial::one_minus_power(static_cast<std::size_t>(li + 1)));
      } catch (const NonExactDivision&) {
        still_pending.push_back(li);
      }
    }
    pending = std::move(still_pending);
  }
  // Full-product fallback: a failure here propagates NonExactDivision.
  IntPolynomial denominator = IntPolynomial::one();
  for (int li : pending) denominator *= IntPolynomial::one_minus_power(static_cast<std::size_t>(li + 1));
  return poly_exact_div(acc, denominator);
}

/// Bruhat-cell count: sum over minimal coset representatives of t^{2 l(w)}.
inline IntPolynomial poincare_coset(const RootSystem& rs, const LeviSpec& levi,
                                    std::size_t budget = kDefaultEnumerationBudget) {
  const auto data = parabolic_coset_data(rs, levi, budget);
  std::vector<BigInt> c(2 * data.max_length() + 1);
  for (const auto& rep : data.representatives) c[2 * rep.length] += 1;
  return IntPolynomial(std::move(c));
}

inline std::uint64_t euler_number(const ExponentSet& g_exponents, const ExponentSet& l_exponents) {
  if (g_exponents.size() != l_exponents.size())
    throw RankMismatch("G and H have different ranks");
  BigInt num = 1, den = 1;
  for (int g : g_exponents.degrees()) num *= g + 1;
  for (int l : l_exponents.degrees()) den *= l + 1;
  if (num % den != 0)
    throw NonIntegerEuler("degree products " + num.str() + " / " + den.str() + " are not an integer");
  return to_u64(num / den);
}

inline std::uint64_t euler_weyl(const RootSystem& rs, const LeviSpec& levi) {
  const std::uint64_t w = weyl_order(rs);
  const std::uint64_t wh = levi_exponents(levi_decompose(rs, levi)).weyl_order();
  return w / wh;
}

inline BettiVector betti_from_poincare(const IntPolynomial& p) {
  BettiVector b;
  b.entries.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) b.entries.push_back(to_u64(c));
  return b;
}

/// Full cohomology record of G/H, with every route cross-checked.
/// Throws OracleMismatch if any two routes disagree.
inline FlagCohomology compute_flag_cohomology(const RootSystem& rs, const LeviSpec& levi,
                                              std::size_t budget = kDefaultEnumerationBudget) {
  const ExponentSet g = exponents(rs);
  const GroupSpec h_spec = levi_decompose(rs, levi);
  const ExponentSet l = levi_exponents(h_spec);

  FlagCohomology out;
  out.label = rs.name() + "/" + h_spec.to_string();
  out.poincare = poincare_borel(g, l);
  if (poincare_coset(rs, levi, budget) != out.poincare)
    throw OracleMismatch("Borel and Bruhat Poincare polynomials differ for " + out.label);

  out.complex_dimension = g.positive_root_count() - l.positive_root_count();
  if (out.poincare.degree() != 2L * out.complex_dimension)
    throw OracleMismatch("Poincare degree is not twice the complex dimension for " + out.label);

  out.betti = betti_from_poincare(out.poincare);
  out.euler_routes = {euler_number(g, l), euler_weyl(rs, levi), to_u64(eval_at_one(out.poincare))};
  const auto& r = out.euler_routes;
  if (r.degree_formula != r.weyl_quotient || r.weyl_quotient != r.poincare_at_one ||
      r.poincare_at_one != out.betti.total())
    throw OracleMismatch("Euler number routes disagree for " + out.label);
  out.euler = r.degree_formula;
  return out;
}

}  // namespace shodge
