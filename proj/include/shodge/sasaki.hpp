#pragma once

// Basic Hodge diamonds of Sasakian characteristic foliations.
//
// Constructors here only emit data that the vanishing and localization
// results guarantee. The validators are separate and make no assumptions, so
// they can audit hand-entered diamonds as well.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shodge/error.hpp"
#include "shodge/flagcoh.hpp"

namespace shodge {

/// h^{p,q} for 0 <= p, q <= n, stored as a full square matrix (row p, column q).
class HodgeDiamond {
 public:
  HodgeDiamond() : HodgeDiamond(0) {}

  explicit HodgeDiamond(int n)
      : n_(n), h_(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0)) {
    if (n < 0) throw InputError("diamond dimension must be nonnegative");
  }

  HodgeDiamond(int n, std::vector<std::vector<std::int64_t>> entries) : n_(n), h_(std::move(entries)) {
    if (n < 0) throw InputError("diamond dimension must be nonnegative");
    if (h_.size() != static_cast<std::size_t>(n + 1))
      throw InputError("diamond with n = " + std::to_string(n) + " needs " + std::to_string(n + 1) + " rows");
    for (const auto& row : h_)
      if (row.size() != static_cast<std::size_t>(n + 1))
        throw InputError("diamond rows must have length n + 1");
  }

  /// Diagonal diamond with h^{k,k} = diag[k].
  static HodgeDiamond diagonal(const std::vector<std::int64_t>& diag) {
    HodgeDiamond d(static_cast<int>(diag.size()) - 1);
    for (std::size_t k = 0; k < diag.size(); ++k) d.h_[k][k] = diag[k];
    return d;
  }

  int n() const noexcept { return n_; }
  const std::vector<std::vector<std::int64_t>>& entries() const noexcept { return h_; }

  std::int64_t at(int p, int q) const { return h_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q)); }
  std::int64_t& at(int p, int q) { return h_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q)); }

  /// sum_p h^{p,p+s}, zero when |s| > n.
  std::int64_t offset_sum(int s) const {
    std::int64_t total = 0;
    for (int p = 0; p <= n_; ++p)
      if (p + s >= 0 && p + s <= n_) total += at(p, p + s);
    return total;
  }

  bool is_diagonal() const {
    for (int p = 0; p <= n_; ++p)
      for (int q = 0; q <= n_; ++q)
        if (p != q && at(p, q) != 0) return false;
    return true;
  }

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  int n_;
  std::vector<std::vector<std::int64_t>> h_;
};

enum class Positivity { positive, negative, null, unknown };

inline std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::positive: return "positive";
    case Positivity::negative: return "negative";
    case Positivity::null: return "null";
    case Positivity::unknown: return "unknown";
  }
  return "unknown";
}

inline Positivity positivity_from_string(const std::string& s) {
  if (s == "positive") return Positivity::positive;
  if (s == "negative") return Positivity::negative;
  if (s == "null") return Positivity::null;
  if (s == "unknown") return Positivity::unknown;
  throw InputError("unknown positivity '" + s + "'");
}

/// Number of closed leaves of the characteristic foliation; empty means infinite.
using ClosedLeafCount = std::optional<std::uint64_t>;

struct SasakiStructureRecord {
  std::string name;
  HodgeDiamond diamond;
  ClosedLeafCount closed_leaf_count;
  Positivity positivity = Positivity::unknown;
};

/// One offending entry of a failed rule.
struct Witness {
  int p = 0;
  int q = 0;
  std::string detail;
};

struct RuleResult {
  std::string rule;
  bool passed = true;
  std::vector<Witness> witnesses{};
};

struct ValidationReport {
  std::vector<RuleResult> rules;

  bool passed() const {
    for (const auto& r : rules)
      if (!r.passed) return false;
    return true;
  }

  const RuleResult* find(const std::string& rule) const {
    for (const auto& r : rules)
      if (r.rule == rule) return &r;
    return nullptr;
  }

  void add(RuleResult r) {
    r.passed = r.witnesses.empty();
    rules.push_back(std::move(r));
  }
};

/// Diagonal diamond of the deformed homogeneous structure over G/H:
/// h^{k,k} = b^{2k}(G/H), everything off the diagonal zero.
inline HodgeDiamond diamond_from_flag(const FlagCohomology& flag) {
  HodgeDiamond d(flag.complex_dimension);
  for (int k = 0; k <= flag.complex_dimension; ++k) {
    const auto idx = static_cast<std::size_t>(2 * k);
    d.at(k, k) = idx < flag.betti.entries.size() ? static_cast<std::int64_t>(flag.betti.entries[idx]) : 0;
  }
  return d;
}

/// C[z]/(z^{n+1}) with z of bidegree (1,1).
inline HodgeDiamond sphere_diamond(int n) {
  if (n < 1) throw PreconditionViolated("sphere diamond needs n >= 1");
  return HodgeDiamond::diagonal(std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 1));
}

/// b^k = sum_{p+q=k} h^{p,q}, k = 0..2n. Negative input entries are summed as-is.
inline std::vector<std::int64_t> betti_from_diamond(const HodgeDiamond& d) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(2 * d.n() + 1), 0);
  for (int p = 0; p <= d.n(); ++p)
    for (int q = 0; q <= d.n(); ++q) b[static_cast<std::size_t>(p + q)] += d.at(p, q);
  return b;
}

struct ValidationOptions {
  bool lefschetz = false;
};

namespace detail {

inline std::string pq(int p, int q) { return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}"; }

}  // namespace detail

/// Audits a diamond against the Hodge-theoretic rules: corner values, nonnegativity,
/// conjugation symmetry h^{p,q} = h^{q,p}, star duality h^{p,q} = h^{n-q,n-p},
/// and optionally Lefschetz monotonicity h^{p,q} <= h^{p+1,q+1} for p + q < n.
inline ValidationReport validate_diamond(const HodgeDiamond& d, ValidationOptions options = {}) {
  using detail::pq;
  const int n = d.n();
  ValidationReport report;

  RuleResult corner{"corner"};
  if (d.at(0, 0) != 1) corner.witnesses.push_back({0, 0, pq(0, 0) + " = " + std::to_string(d.at(0, 0)) + ", expected 1"});
  if (n > 0 && d.at(n, n) != 1)
    corner.witnesses.push_back({n, n, pq(n, n) + " = " + std::to_string(d.at(n, n)) + ", expected 1"});
  report.add(std::move(corner));

  RuleResult nonneg{"nonnegative"};
  RuleResult conj{"conjugation"};
  RuleResult dual{"duality"};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (d.at(p, q) < 0) nonneg.witnesses.push_back({p, q, pq(p, q) + " is negative"});
      if (p < q && d.at(p, q) != d.at(q, p))
        conj.witnesses.push_back({p, q, pq(p, q) + " != " + pq(q, p)});
      const int dp = n - q, dq = n - p;
      if ((p < dp || (p == dp && q < dq)) && d.at(p, q) != d.at(dp, dq))
        dual.witnesses.push_back({p, q, pq(p, q) + " != " + pq(dp, dq)});
    }
  report.add(std::move(nonneg));
  report.add(std::move(conj));
  report.add(std::move(dual));

  if (options.lefschetz) {
    RuleResult lef{"lefschetz"};
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q < n; ++q)
        if (d.at(p, q) > d.at(p + 1, q + 1))
          lef.witnesses.push_back({p, q, pq(p, q) + " > " + pq(p + 1, q + 1)});
    report.add(std::move(lef));
  }
  return report;
}

/// With finitely many closed leaves every off-diagonal basic Hodge number vanishes.
inline ValidationReport check_finite_closed_leaves_vanishing(const SasakiStructureRecord& record) {
  if (!record.closed_leaf_count)
    throw PreconditionViolated(record.name + ": closed-leaf count is infinite");
  const auto& d = record.diamond;
  RuleResult r{"offdiagonal_vanishing"};
  for (int p = 0; p <= d.n(); ++p)
    for (int q = 0; q <= d.n(); ++q)
      if (p != q && d.at(p, q) != 0)
        r.witnesses.push_back({p, q, detail::pq(p, q) + " = " + std::to_string(d.at(p, q)) + " with finitely many closed leaves"});
  ValidationReport report;
  report.add(std::move(r));
  return report;
}

/// Positive structures have h^{p,0} = h^{0,p} = 0 for p > 0.
inline ValidationReport check_positivity_vanishing(const SasakiStructureRecord& record) {
  if (record.positivity != Positivity::positive)
    throw PreconditionViolated(record.name + ": structure is not marked positive");
  const auto& d = record.diamond;
  RuleResult r{"positivity_vanishing"};
  for (int p = 1; p <= d.n(); ++p) {
    if (d.at(p, 0) != 0) r.witnesses.push_back({p, 0, detail::pq(p, 0) + " != 0 on a positive structure"});
    if (d.at(0, p) != 0) r.witnesses.push_back({0, p, detail::pq(0, p) + " != 0 on a positive structure"});
  }
  ValidationReport report;
  report.add(std::move(r));
  return report;
}

/// Compares sum_p h^{p,p+s} of M with the same sums for the closed-leaf set C,
/// and checks h^{p,p+s}(M) = 0 for |s| > dim_C. One rule per s:
/// "offset_sum[s]" and, where it applies, "band_vanishing[s]".
inline ValidationReport carrell_lieberman_check(const HodgeDiamond& diamond_m, const HodgeDiamond& diamond_c,
                                                int dim_c) {
  const int reach = std::max(diamond_m.n(), diamond_c.n());
  ValidationReport report;
  for (int s = -reach; s <= reach; ++s) {
    const std::string tag = "[" + std::to_string(s) + "]";
    RuleResult sums{"offset_sum" + tag};
    const auto m_sum = diamond_m.offset_sum(s);
    const auto c_sum = diamond_c.offset_sum(s);
    if (m_sum != c_sum)
      sums.witnesses.push_back({0, s, "M sum " + std::to_string(m_sum) + " != C sum " + std::to_string(c_sum)});
    report.add(std::move(sums));

    if (s > dim_c || -s > dim_c) {
      RuleResult band{"band_vanishing" + tag};
      for (int p = 0; p <= diamond_m.n(); ++p)
        if (p + s >= 0 && p + s <= diamond_m.n() && diamond_m.at(p, p + s) != 0)
          band.witnesses.push_back({p, p + s, detail::pq(p, p + s) + " != 0 outside the band"});
      report.add(std::move(band));
    }
  }
  return report;
}

/// Closed-leaf set of isolated points: a zero-dimensional diamond carrying the
/// number of points in h^{0,0}.
inline HodgeDiamond points_diamond(std::uint64_t count) {
  HodgeDiamond d(0);
  d.at(0, 0) = static_cast<std::int64_t>(count);
  return d;
}

/// Number of closed leaves of the deformed homogeneous structure over G/H.
/// Equal to the Euler number, the total Betti number and |W(G)/W(H)|.
inline std::uint64_t closed_leaf_count_from_flag(const FlagCohomology& flag) {
  if (flag.euler != flag.betti.total() || flag.euler != flag.euler_routes.weyl_quotient)
    throw OracleMismatch(flag.label + ": Euler number, total Betti number and Weyl quotient disagree");
  return flag.euler;
}

inline SasakiStructureRecord flag_record(const FlagCohomology& flag) {
  return {flag.label, diamond_from_flag(flag), closed_leaf_count_from_flag(flag), Positivity::positive};
}

/// Reference structures: two Sasakian structures on the 21-fold connected sum
/// of S^2 x S^3 (a circle bundle over a K3 surface and a positive weighted
/// hypersurface link) and the standard spheres S^3 .. S^11.
inline std::vector<SasakiStructureRecord> builtin_fixtures() {
  std::vector<SasakiStructureRecord> out;
  out.push_back({"21#(S2xS3) K3 bundle",
                 HodgeDiamond(2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}),
                 std::nullopt,
                 Positivity::null});
  out.push_back({"21#(S2xS3) positive link",
                 HodgeDiamond::diagonal({1, 22, 1}),
                 std::nullopt,
                 Positivity::positive});
  // A generic Reeb field on S^{2n+1} has n + 1 closed orbits, the total basic Betti number.
  for (int n = 1; n <= 5; ++n)
    out.push_back({"S" + std::to_string(2 * n + 1), sphere_diamond(n), static_cast<std::uint64_t>(n + 1),
                   Positivity::positive});
  return out;
}

}  // namespace shodge
