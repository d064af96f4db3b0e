#pragma once

// Root systems of the simple types A-G, their Weyl groups, exponents, and
// parabolic (Levi) quotients. All arithmetic is exact integer arithmetic.
//
// Node numbering follows Bourbaki (see dynkin_diagrams()). The Cartan matrix
// convention is A[i][j] = <alpha_i^vee, alpha_j>, so the simple reflection s_i
// acts on a root written in the simple-root basis by
//     (s_i beta)_i = beta_i - sum_j A[i][j] beta_j
// and leaves the other coordinates alone.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shodge/error.hpp"
#include "shodge/polyring.hpp"

namespace shodge {

enum class CartanType { A, B, C, D, E, F, G };

inline char to_char(CartanType t) { return "ABCDEFG"[static_cast<int>(t)]; }

/// Accepts upper or lower case; throws InvalidType for anything else.
inline CartanType cartan_type_from_char(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G') throw InvalidType(std::string("unknown Cartan type '") + c + "'");
  return static_cast<CartanType>(c - 'A');
}

/// True for A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E_6..8, F_4, G_2.
inline bool is_valid_simple_type(CartanType type, int rank) {
  switch (type) {
    case CartanType::A: return rank >= 1;
    case CartanType::B: return rank >= 2;
    case CartanType::C: return rank >= 3;
    case CartanType::D: return rank >= 4;
    case CartanType::E: return rank >= 6 && rank <= 8;
    case CartanType::F: return rank == 4;
    case CartanType::G: return rank == 2;
  }
  return false;
}

struct SimpleType {
  CartanType type;
  int rank;

  std::string to_string() const { return to_char(type) + std::to_string(rank); }
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

using CartanMatrix = std::vector<std::vector<int>>;

/// A root (or weight) written in a basis of rank coordinates.
using Root = std::vector<int>;

inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;

/// Bourbaki Cartan matrix of a valid simple type.
inline CartanMatrix cartan_matrix_for(CartanType type, int rank) {
  if (!is_valid_simple_type(type, rank))
    throw RankError(std::string("no simple root system of type ") + to_char(type) +
                    std::to_string(rank));
  const auto n = static_cast<std::size_t>(rank);
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };

  switch (type) {
    case CartanType::A:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      break;
    case CartanType::B:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case CartanType::C:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case CartanType::D:
      for (int i = 1; i < rank - 1; ++i) bond(i, i + 1);
      bond(rank - 2, rank);
      break;
    case CartanType::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < rank; ++i) bond(i, i + 1);
      break;
    case CartanType::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case CartanType::G:
      bond(1, 2);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
  return a;
}

/// Applies the simple reflection s_i (0-based) to a root in the simple-root basis.
inline void reflect_root_in_place(const CartanMatrix& a, std::size_t i, Root& beta) {
  int pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += a[i][j] * beta[j];
  beta[i] -= pairing;
}

/// Applies s_i (0-based) to a weight in the fundamental-weight basis.
inline void reflect_weight_in_place(const CartanMatrix& a, std::size_t i, Root& mu) {
  const int c = mu[i];
  if (c == 0) return;
  for (std::size_t k = 0; k < mu.size(); ++k) mu[k] -= c * a[k][i];
}

inline bool is_positive_root(const Root& beta) {
  bool nonzero = false;
  for (int c : beta) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

inline int height(const Root& beta) { return std::accumulate(beta.begin(), beta.end(), 0); }

/// Immutable root system of a simple type. Positive roots are sorted by height,
/// then in descending lexicographic order, so they start with alpha_1..alpha_r.
class RootSystem {
 public:
  RootSystem(CartanType type, int rank) : type_{type, rank}, cartan_(cartan_matrix_for(type, rank)) {
    generate_positive_roots();
  }

  CartanType cartan_type() const noexcept { return type_.type; }
  int rank() const noexcept { return type_.rank; }
  SimpleType simple_type() const noexcept { return type_; }
  std::string name() const { return type_.to_string(); }
  const CartanMatrix& cartan_matrix() const noexcept { return cartan_; }
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }

  Root simple_root(int node) const {
    Root r(static_cast<std::size_t>(rank()), 0);
    r[static_cast<std::size_t>(node - 1)] = 1;
    return r;
  }

 private:
  // Closure of the simple roots under simple reflections, keeping positives.
  void generate_positive_roots() {
    const auto n = static_cast<std::size_t>(rank());
    std::set<Root> seen;
    std::deque<Root> queue;
    for (std::size_t i = 0; i < n; ++i) {
      Root r(n, 0);
      r[i] = 1;
      seen.insert(r);
      queue.push_back(std::move(r));
    }
    while (!queue.empty()) {
      Root beta = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i < n; ++i) {
        Root gamma = beta;
        reflect_root_in_place(cartan_, i, gamma);
        if (is_positive_root(gamma) && seen.insert(gamma).second) queue.push_back(std::move(gamma));
      }
    }
    positive_.assign(seen.begin(), seen.end());
    std::stable_sort(positive_.begin(), positive_.end(), [](const Root& x, const Root& y) {
      const int hx = height(x), hy = height(y);
      if (hx != hy) return hx < hy;
      return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
    });
  }

  SimpleType type_;
  CartanMatrix cartan_;
  std::vector<Root> positive_;
};

inline RootSystem build_root_system(CartanType type, int rank) { return RootSystem(type, rank); }

/// Weyl exponents m_i and the matching odd degrees g_i = 2 m_i + 1 of the
/// primitive generators of H^*(G). Torus factors contribute m = 0, g = 1.
class ExponentSet {
 public:
  ExponentSet() = default;
  explicit ExponentSet(std::vector<int> weyl_exponents) : m_(std::move(weyl_exponents)) {
    std::sort(m_.begin(), m_.end());
  }

  const std::vector<int>& weyl_exponents() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.size(); }

  std::vector<int> degrees() const {
    std::vector<int> g;
    g.reserve(m_.size());
    for (int m : m_) g.push_back(2 * m + 1);
    return g;
  }

  /// prod (m_i + 1): the order of the Weyl group with these exponents.
  std::uint64_t weyl_order() const {
    std::uint64_t order = 1;
    for (int m : m_) order *= static_cast<std::uint64_t>(m + 1);
    return order;
  }

  int positive_root_count() const { return std::accumulate(m_.begin(), m_.end(), 0); }

  ExponentSet& merge(const ExponentSet& other) {
    m_.insert(m_.end(), other.m_.begin(), other.m_.end());
    std::sort(m_.begin(), m_.end());
    return *this;
  }

  friend bool operator==(const ExponentSet&, const ExponentSet&) = default;

 private:
  std::vector<int> m_;
};

/// Exponents from the height distribution of the positive roots: if n_h roots
/// have height h, then n_h - n_{h+1} exponents are equal to h.
inline ExponentSet exponents(const RootSystem& rs) {
  std::vector<int> count_by_height;
  for (const Root& r : rs.positive_roots()) {
    const auto h = static_cast<std::size_t>(height(r));
    if (count_by_height.size() <= h + 1) count_by_height.resize(h + 2, 0);
    ++count_by_height[h];
  }
  std::vector<int> m;
  for (std::size_t h = 1; h + 1 < count_by_height.size(); ++h)
    for (int k = 0; k < count_by_height[h] - count_by_height[h + 1]; ++k) m.push_back(static_cast<int>(h));
  return ExponentSet(std::move(m));
}

inline std::uint64_t weyl_order(const RootSystem& rs) { return exponents(rs).weyl_order(); }

/// A set of Dynkin nodes (1-based, Bourbaki) generating a Levi subgroup.
/// Always sorted and duplicate-free.
class LeviSpec {
 public:
  LeviSpec() = default;

  LeviSpec(int rank, std::vector<int> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
      throw InvalidLevi("duplicate node in Levi subset");
    for (int v : nodes_)
      if (v < 1 || v > rank)
        throw InvalidLevi("node " + std::to_string(v) + " out of range 1.." + std::to_string(rank));
  }

  static LeviSpec all(int rank) {
    std::vector<int> v(static_cast<std::size_t>(rank));
    std::iota(v.begin(), v.end(), 1);
    return LeviSpec(rank, std::move(v));
  }

  const std::vector<int>& nodes() const noexcept { return nodes_; }
  bool contains(int node) const { return std::binary_search(nodes_.begin(), nodes_.end(), node); }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < nodes_.size(); ++i) s += (i ? "," : "") + std::to_string(nodes_[i]);
    return s + "}";
  }

  friend bool operator==(const LeviSpec&, const LeviSpec&) = default;

 private:
  std::vector<int> nodes_;
};

/// Every subset of {1..rank}, ordered by bitmask.
inline std::vector<LeviSpec> all_levi_subsets(int rank) {
  std::vector<LeviSpec> out;
  for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) nodes.push_back(i + 1);
    out.emplace_back(rank, std::move(nodes));
  }
  return out;
}

/// Compact connected reductive group of equal rank, up to covering: simple
/// factors plus a central torus.
struct GroupSpec {
  std::vector<SimpleType> simple_components;
  int torus_rank = 0;

  int total_rank() const {
    int r = torus_rank;
    for (const auto& c : simple_components) r += c.rank;
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& c : simple_components) s += (s.empty() ? "" : "x") + c.to_string();
    if (torus_rank > 0) s += (s.empty() ? "" : "x") + ("T" + std::to_string(torus_rank));
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

namespace detail {

// Identifies a connected Dynkin diagram from its Cartan matrix.
inline SimpleType classify_connected(const CartanMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 1) return {CartanType::A, 1};

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  int edges = 0, max_bond = 1;
  int double_i = -1, double_j = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int prod = a[i][j] * a[j][i];
      if (prod == 0) continue;
      if (prod < 0 || prod > 3 || a[i][j] > 0 || a[j][i] > 0)
        throw UnrecognizedDiagram("invalid off-diagonal Cartan entries");
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
      if (prod > max_bond) max_bond = prod;
      if (prod == 2) {
        // orient so that double_i is the long root (|a[short][long]| == 2)
        if (a[j][i] == -2) { double_i = i; double_j = j; }
        else { double_i = j; double_j = i; }
      }
    }
  if (edges != n - 1) throw UnrecognizedDiagram("Dynkin diagram is not a tree");

  std::vector<int> degree(static_cast<std::size_t>(n));
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    degree[i] = static_cast<int>(adj[i].size());
    if (degree[i] > 3) throw UnrecognizedDiagram("node of degree > 3");
    if (degree[i] == 3) {
      if (branch >= 0) throw UnrecognizedDiagram("more than one branch node");
      branch = i;
    }
  }

  if (max_bond == 3) {
    if (n == 2) return {CartanType::G, 2};
    throw UnrecognizedDiagram("triple bond outside G2");
  }
  if (max_bond == 2) {
    if (branch >= 0) throw UnrecognizedDiagram("branched diagram with a double bond");
    if (n == 2) return {CartanType::B, 2};
    const bool long_end = degree[double_i] == 1;
    const bool short_end = degree[double_j] == 1;
    if (short_end) return {CartanType::B, n};
    if (long_end) return {CartanType::C, n};
    if (n == 4) return {CartanType::F, 4};
    throw UnrecognizedDiagram("interior double bond outside F4");
  }
  if (branch < 0) return {CartanType::A, n};

  // Arm lengths from the branch node.
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (degree[cur] == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {CartanType::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {CartanType::E, n};
  throw UnrecognizedDiagram("branched diagram is not of type D or E");
}

}  // namespace detail

/// Splits the Dynkin subdiagram on the Levi nodes into connected components and
/// names each one. Components are listed in order of their smallest node.
inline GroupSpec levi_decompose(const RootSystem& rs, const LeviSpec& levi) {
  const auto& a = rs.cartan_matrix();
  const auto& nodes = levi.nodes();
  GroupSpec out;
  out.torus_rank = rs.rank() - static_cast<int>(nodes.size());

  std::vector<bool> used(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (used[s]) continue;
    std::vector<std::size_t> comp{s};
    used[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const auto u = static_cast<std::size_t>(nodes[comp[k]] - 1);
      for (std::size_t t = 0; t < nodes.size(); ++t) {
        const auto v = static_cast<std::size_t>(nodes[t] - 1);
        if (!used[t] && a[u][v] != 0) {
          used[t] = true;
          comp.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    CartanMatrix sub(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j)
        sub[i][j] = a[static_cast<std::size_t>(nodes[comp[i]] - 1)][static_cast<std::size_t>(nodes[comp[j]] - 1)];
    out.simple_components.push_back(detail::classify_connected(sub));
  }
  return out;
}

inline ExponentSet levi_exponents(const GroupSpec& group) {
  ExponentSet out(std::vector<int>(static_cast<std::size_t>(group.torus_rank), 0));
  for (const auto& c : group.simple_components) out.merge(exponents(build_root_system(c.type, c.rank)));
  return out;
}

inline GroupSpec group_spec(const RootSystem& rs) { return {{rs.simple_type()}, 0}; }

struct CosetRepresentative {
  /// Reduced word i_1 ... i_k (1-based nodes) for w = s_{i_1} ... s_{i_k}.
  std::vector<int> word;
  std::size_t length = 0;
};

/// Minimal-length representatives of W / W_P.
struct WeylCosetData {
  std::vector<CosetRepresentative> representatives;
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;

  std::size_t max_length() const {
    std::size_t m = 0;
    for (const auto& r : representatives) m = std::max(m, r.length);
    return m;
  }
};

namespace detail {

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int c : r) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(c))) * 0x100000001b3ull;
    return h;
  }
};

// Number of positive roots sent to negative roots by w = s_{word[0]} ... s_{word[k-1]}.
inline std::size_t inversion_count(const RootSystem& rs, const std::vector<int>& word) {
  const auto& a = rs.cartan_matrix();
  std::size_t count = 0;
  for (Root beta : rs.positive_roots()) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      reflect_root_in_place(a, static_cast<std::size_t>(*it - 1), beta);
    if (!is_positive_root(beta)) ++count;
  }
  return count;
}

inline bool maps_to_positive(const RootSystem& rs, const std::vector<int>& word, Root beta) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    reflect_root_in_place(rs.cartan_matrix(), static_cast<std::size_t>(*it - 1), beta);
  return is_positive_root(beta);
}

}  // namespace detail

/// Enumerates the minimal coset representatives W^P for the parabolic subgroup
/// generated by the Levi nodes.
///
/// Works in the W-orbit of the weight lambda with lambda_j = 0 on the Levi
/// nodes and 1 elsewhere, whose stabilizer is W_P. Orbit points are visited
/// level by level; s_i raises the length exactly when the i-th coordinate is
/// positive. Each representative carries the lexicographically smallest of its
/// reduced words, and its length is recomputed independently as an inversion
/// count. Throws EnumerationBudgetExceeded if the quotient has more than
/// `budget` elements.
inline WeylCosetData parabolic_coset_data(const RootSystem& rs, const LeviSpec& levi,
                                          std::size_t budget = kDefaultEnumerationBudget) {
  const auto n = static_cast<std::size_t>(rs.rank());
  const auto& a = rs.cartan_matrix();

  Root lambda(n, 1);
  for (int v : levi.nodes()) lambda[static_cast<std::size_t>(v - 1)] = 0;

  struct Node {
    Root weight;
    std::vector<int> word;
  };
  std::vector<Node> level{{lambda, {}}};
  WeylCosetData out;
  out.group_order = weyl_order(rs);
  out.subgroup_order = levi_exponents(levi_decompose(rs, levi)).weyl_order();
  if (out.group_order / out.subgroup_order > budget) throw EnumerationBudgetExceeded(budget);

  for (std::size_t len = 0; !level.empty(); ++len) {
    if (out.representatives.size() + level.size() > budget) throw EnumerationBudgetExceeded(budget);
    for (const Node& x : level) out.representatives.push_back({x.word, len});

    // Outer loop over the first letter, inner over parents in lex order, so the
    // first hit is the lex-smallest reduced word of the child.
    std::vector<Node> next;
    std::unordered_map<Root, std::size_t, detail::RootHash> index;
    for (std::size_t i = 0; i < n; ++i) {
      for (const Node& x : level) {
        if (x.weight[i] <= 0) continue;
        Root mu = x.weight;
        reflect_weight_in_place(a, i, mu);
        if (index.contains(mu)) continue;
        std::vector<int> word;
        word.reserve(x.word.size() + 1);
        word.push_back(static_cast<int>(i + 1));
        word.insert(word.end(), x.word.begin(), x.word.end());
        index.emplace(mu, next.size());
        next.push_back({std::move(mu), std::move(word)});
      }
    }
    std::sort(next.begin(), next.end(), [](const Node& p, const Node& q) { return p.word < q.word; });
    level = std::move(next);
  }

  for (const auto& rep : out.representatives) {
    if (detail::inversion_count(rs, rep.word) != rep.length)
      throw OracleMismatch("coset representative length disagrees with its inversion count");
    for (int v : levi.nodes())
      if (!detail::maps_to_positive(rs, rep.word, rs.simple_root(v)))
        throw OracleMismatch("coset representative is not minimal");
  }
  if (out.representatives.size() * out.subgroup_order != out.group_order)
    throw OracleMismatch("coset count times |W_P| differs from |W|");
  return out;
}

/// Length generating function sum_{w in W} t^{l(w)} by enumerating the whole
/// group as the orbit of rho. Only two length levels are held at a time.
/// Groups larger than `budget` (E8 under the default) are refused up front.
inline IntPolynomial weyl_length_polynomial(const RootSystem& rs,
                                            std::size_t budget = kDefaultEnumerationBudget) {
  const auto n = static_cast<std::size_t>(rs.rank());
  const auto& a = rs.cartan_matrix();
  if (weyl_order(rs) > budget) throw EnumerationBudgetExceeded(budget);
  std::vector<BigInt> counts;
  std::vector<Root> level{Root(n, 1)};
  std::size_t total = 0;
  while (!level.empty()) {
    total += level.size();
    if (total > budget) throw EnumerationBudgetExceeded(budget);
    counts.emplace_back(level.size());
    std::unordered_map<Root, char, detail::RootHash> next;
    for (const Root& mu : level)
      for (std::size_t i = 0; i < n; ++i) {
        if (mu[i] <= 0) continue;
        Root nu = mu;
        reflect_weight_in_place(a, i, nu);
        next.emplace(std::move(nu), 0);
      }
    level.clear();
    level.reserve(next.size());
    for (auto& [mu, unused] : next) level.push_back(mu);
  }
  return IntPolynomial(std::move(counts));
}

/// Bourbaki numbering, one ASCII diagram per type. Used by the CLI help.
inline const char* dynkin_diagrams() {
  return R"(Dynkin node numbering (Bourbaki):
  A_n   1 - 2 - ... - n
  B_n   1 - 2 - ... - (n-1) => n          (n short)
  C_n   1 - 2 - ... - (n-1) <= n          (n long)
  D_n   1 - 2 - ... - (n-2) - (n-1)
                        |
                        n
  E_n   1 - 3 - 4 - 5 - ... - n           (n = 6, 7, 8)
                |
                2
  F_4   1 - 2 => 3 - 4                    (3, 4 short)
  G_2   1 <= 2                            (1 short)
)";
}

}  // namespace shodge
