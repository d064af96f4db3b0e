#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "shodge/rootsys.hpp"

namespace shodge {
namespace {

using CT = CartanType;

std::vector<SimpleType> all_types_up_to_rank(int max_rank) {
  std::vector<SimpleType> out;
  for (CT t : {CT::A, CT::B, CT::C, CT::D, CT::E, CT::F, CT::G})
    for (int r = 1; r <= max_rank; ++r)
      if (is_valid_simple_type(t, r)) out.push_back({t, r});
  return out;
}

// Types whose Weyl group has at most 10^5 elements.
std::vector<SimpleType> enumerable_types() {
  std::vector<SimpleType> out;
  for (const auto& s : all_types_up_to_rank(8))
    if (weyl_order(build_root_system(s.type, s.rank)) <= 100000)
      out.push_back(s);
  return out;
}

long long bareiss_det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  long long prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

TEST(RootSystem, SmallExamples) {
  const auto a2 = build_root_system(CT::A, 2);
  EXPECT_EQ(a2.positive_roots().size(), 3u);

  const auto a1 = build_root_system(CT::A, 1);
  EXPECT_EQ(a1.positive_roots().size(), 1u);
  EXPECT_EQ(a1.cartan_matrix(), (CartanMatrix{{2}}));

  EXPECT_EQ(build_root_system(CT::E, 7).positive_roots().size(), 63u);
  EXPECT_EQ(build_root_system(CT::E, 8).positive_roots().size(), 120u);
  EXPECT_EQ(build_root_system(CT::F, 4).positive_roots().size(), 24u);
  EXPECT_EQ(build_root_system(CT::G, 2).positive_roots().size(), 6u);
}

TEST(RootSystem, InvalidTypesAreRejected) {
  EXPECT_THROW(build_root_system(CT::A, 0), RankError);
  EXPECT_THROW(build_root_system(CT::B, 1), RankError);
  EXPECT_THROW(build_root_system(CT::C, 2), RankError);
  EXPECT_THROW(build_root_system(CT::D, 3), RankError);
  EXPECT_THROW(build_root_system(CT::E, 5), RankError);
  EXPECT_THROW(build_root_system(CT::E, 9), RankError);
  EXPECT_THROW(build_root_system(CT::F, 3), RankError);
  EXPECT_THROW(build_root_system(CT::G, 3), InvalidType);
  EXPECT_THROW(cartan_type_from_char('H'), InvalidType);
  EXPECT_EQ(cartan_type_from_char('e'), CT::E);
}

TEST(RootSystem, CartanMatrixInvariantsAndDeterminants) {
  for (const auto& s : all_types_up_to_rank(8)) {
    const auto rs = build_root_system(s.type, s.rank);
    const auto& a = rs.cartan_matrix();
    std::vector<std::vector<long long>> m;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i][i], 2);
      m.emplace_back(a[i].begin(), a[i].end());
      for (std::size_t j = 0; j < a.size(); ++j)
        if (i != j) {
          EXPECT_TRUE(a[i][j] <= 0 && a[i][j] >= -3) << s.to_string();
          EXPECT_EQ(a[i][j] == 0, a[j][i] == 0) << s.to_string();
        }
    }
    long long expected = 0;
    switch (s.type) {
      case CT::A: expected = s.rank + 1; break;
      case CT::B: case CT::C: expected = 2; break;
      case CT::D: expected = 4; break;
      case CT::E: expected = 9 - s.rank; break;
      case CT::F: case CT::G: expected = 1; break;
    }
    EXPECT_EQ(bareiss_det(m), expected) << s.to_string();
  }
}

TEST(RootSystem, RootsAreNonnegativeAndStartWithSimpleRoots) {
  for (const auto& s : all_types_up_to_rank(8)) {
    const auto rs = build_root_system(s.type, s.rank);
    for (const auto& r : rs.positive_roots()) EXPECT_TRUE(is_positive_root(r));
    for (int i = 1; i <= rs.rank(); ++i) EXPECT_EQ(rs.positive_roots()[static_cast<std::size_t>(i - 1)], rs.simple_root(i));
    EXPECT_EQ(static_cast<int>(rs.positive_roots().size()), exponents(rs).positive_root_count()) << s.to_string();
  }
}

TEST(Exponents, TypeAMatchesUnitaryGroupDegrees) {
  for (int n = 2; n <= 10; ++n) {
    std::vector<int> expected;
    for (int g = 3; g <= 2 * n - 1; g += 2) expected.push_back(g);
    EXPECT_EQ(exponents(build_root_system(CT::A, n - 1)).degrees(), expected) << "SU(" << n << ")";
  }
}

TEST(Exponents, E7Degrees) {
  EXPECT_EQ(exponents(build_root_system(CT::E, 7)).degrees(), (std::vector<int>{3, 11, 15, 19, 23, 27, 35}));
}

TEST(Exponents, KnownTables) {
  EXPECT_EQ(exponents(build_root_system(CT::A, 2)).weyl_exponents(), (std::vector<int>{1, 2}));
  EXPECT_EQ(exponents(build_root_system(CT::E, 6)).weyl_exponents(), (std::vector<int>{1, 4, 5, 7, 8, 11}));
  EXPECT_EQ(exponents(build_root_system(CT::E, 8)).weyl_exponents(), (std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(exponents(build_root_system(CT::F, 4)).weyl_exponents(), (std::vector<int>{1, 5, 7, 11}));
  EXPECT_EQ(exponents(build_root_system(CT::G, 2)).weyl_exponents(), (std::vector<int>{1, 5}));
  EXPECT_EQ(exponents(build_root_system(CT::D, 4)).weyl_exponents(), (std::vector<int>{1, 3, 3, 5}));
  EXPECT_EQ(exponents(build_root_system(CT::B, 3)).weyl_exponents(), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(exponents(build_root_system(CT::C, 3)).weyl_exponents(), (std::vector<int>{1, 3, 5}));
}

TEST(Exponents, A2LengthFunctionFactorsThroughExponents) {
  const auto rs = build_root_system(CT::A, 2);
  const auto bf = oracle::brute_force_weyl(rs.cartan_matrix());
  ASSERT_EQ(bf.elements.size(), 6u);
  std::vector<std::int64_t> dist(4, 0);
  for (int l : bf.lengths) ++dist[static_cast<std::size_t>(l)];
  const auto length_gf = oracle::from_counts(dist);
  // (1 - t^2)(1 - t^3) / (1 - t)^2
  const auto expected = poly_exact_div(IntPolynomial::one_minus_power(2) * IntPolynomial::one_minus_power(3),
                                       IntPolynomial{1, -1} * IntPolynomial{1, -1});
  EXPECT_EQ(length_gf, expected);
  EXPECT_EQ(oracle::peel_degrees(length_gf, 2), (std::vector<int>{2, 3}));
}

TEST(WeylOrder, Examples) {
  EXPECT_EQ(weyl_order(build_root_system(CT::A, 2)), 6u);
  EXPECT_EQ(weyl_order(build_root_system(CT::A, 1)), 2u);
  EXPECT_EQ(weyl_order(build_root_system(CT::E, 7)), 2903040u);
  EXPECT_EQ(weyl_order(build_root_system(CT::E, 8)), 696729600u);
  EXPECT_EQ(weyl_order(build_root_system(CT::E, 6)), 51840u);
}

// Brute-force matrix enumeration against the exponent route and the orbit BFS.
TEST(WeylOrder, AgreesWithBruteForceEnumeration) {
  for (const auto& s : enumerable_types()) {
    const auto rs = build_root_system(s.type, s.rank);
    const auto e = exponents(rs);
    const auto bf = oracle::brute_force_weyl(rs.cartan_matrix());
    EXPECT_EQ(bf.elements.size(), e.weyl_order()) << s.to_string();
    EXPECT_EQ(bf.positive_roots.size(), rs.positive_roots().size()) << s.to_string();

    std::vector<std::int64_t> dist;
    for (int l : bf.lengths) {
      if (dist.size() <= static_cast<std::size_t>(l)) dist.resize(static_cast<std::size_t>(l) + 1, 0);
      ++dist[static_cast<std::size_t>(l)];
    }
    const auto gf = oracle::from_counts(dist);
    EXPECT_EQ(weyl_length_polynomial(rs), gf) << s.to_string();

    IntPolynomial product = IntPolynomial::one();
    for (int m : e.weyl_exponents()) product *= IntPolynomial::geometric(static_cast<std::size_t>(m + 1));
    EXPECT_EQ(gf, product) << s.to_string();
  }
}

TEST(WeylOrder, FullEnumerationRespectsBudget) {
  const auto e8 = build_root_system(CT::E, 8);
  EXPECT_THROW(weyl_length_polynomial(e8), EnumerationBudgetExceeded);
  EXPECT_THROW(weyl_length_polynomial(build_root_system(CT::E, 6), 1000), EnumerationBudgetExceeded);
  EXPECT_EQ(eval_at_one(weyl_length_polynomial(build_root_system(CT::F, 4), 1152)), 1152);
}

TEST(LeviSpec, Validation) {
  EXPECT_THROW(LeviSpec(3, {1, 1}), InvalidLevi);
  EXPECT_THROW(LeviSpec(3, {0}), InvalidLevi);
  EXPECT_THROW(LeviSpec(3, {4}), InvalidLevi);
  EXPECT_EQ(LeviSpec(3, {3, 1}).nodes(), (std::vector<int>{1, 3}));
  EXPECT_EQ(all_levi_subsets(3).size(), 8u);
}

TEST(LeviDecompose, Examples) {
  const auto a3 = build_root_system(CT::A, 3);
  const auto g = levi_decompose(a3, LeviSpec(3, {1, 3}));
  EXPECT_EQ(g.simple_components, (std::vector<SimpleType>{{CT::A, 1}, {CT::A, 1}}));
  EXPECT_EQ(g.torus_rank, 1);

  for (int n = 1; n <= 8; ++n) {
    const auto full = levi_decompose(build_root_system(CT::A, n), LeviSpec::all(n));
    EXPECT_EQ(full.simple_components, (std::vector<SimpleType>{{CT::A, n}}));
    EXPECT_EQ(full.torus_rank, 0);
  }

  const auto e7 = build_root_system(CT::E, 7);
  const auto h = levi_decompose(e7, LeviSpec(7, {1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(h.simple_components, (std::vector<SimpleType>{{CT::E, 6}}));
  EXPECT_EQ(h.torus_rank, 1);
  EXPECT_EQ(levi_exponents(h).degrees(), (std::vector<int>{1, 3, 9, 11, 15, 17, 23}));
}

TEST(LeviDecompose, RecognizesEveryType) {
  auto comps = [](CT t, int r, std::vector<int> nodes) {
    return levi_decompose(build_root_system(t, r), LeviSpec(r, std::move(nodes))).simple_components;
  };
  using V = std::vector<SimpleType>;
  EXPECT_EQ(comps(CT::F, 4, {2, 3, 4}), (V{{CT::C, 3}}));
  EXPECT_EQ(comps(CT::F, 4, {1, 2, 3}), (V{{CT::B, 3}}));
  EXPECT_EQ(comps(CT::F, 4, {1, 2, 3, 4}), (V{{CT::F, 4}}));
  EXPECT_EQ(comps(CT::B, 3, {2, 3}), (V{{CT::B, 2}}));
  EXPECT_EQ(comps(CT::C, 4, {3, 4}), (V{{CT::B, 2}}));
  EXPECT_EQ(comps(CT::C, 5, {2, 3, 4, 5}), (V{{CT::C, 4}}));
  EXPECT_EQ(comps(CT::B, 5, {1, 2, 3, 4, 5}), (V{{CT::B, 5}}));
  EXPECT_EQ(comps(CT::G, 2, {1, 2}), (V{{CT::G, 2}}));
  EXPECT_EQ(comps(CT::E, 8, {2, 3, 4, 5}), (V{{CT::D, 4}}));
  EXPECT_EQ(comps(CT::E, 8, {1, 2, 3, 4, 5, 6, 7}), (V{{CT::E, 7}}));
  EXPECT_EQ(comps(CT::E, 8, {2, 3, 4, 5, 6, 7, 8}), (V{{CT::D, 7}}));
  EXPECT_EQ(comps(CT::E, 6, {1, 3, 4, 5, 6}), (V{{CT::A, 5}}));
  EXPECT_EQ(comps(CT::D, 4, {1, 3, 4}), (V{{CT::A, 1}, {CT::A, 1}, {CT::A, 1}}));
  EXPECT_EQ(comps(CT::D, 6, {1, 2, 3, 4, 5, 6}), (V{{CT::D, 6}}));
  EXPECT_EQ(comps(CT::D, 5, {2, 3, 4, 5}), (V{{CT::D, 4}}));
  EXPECT_TRUE(comps(CT::A, 4, {}).empty());
}

// The Levi's positive roots are exactly the roots of G supported on its nodes;
// count them directly and compare with the recognized component types.
TEST(LeviDecompose, ComponentRootCountsMatchSupportCount) {
  for (const auto& s : all_types_up_to_rank(8)) {
    const auto rs = build_root_system(s.type, s.rank);
    for (const auto& levi : all_levi_subsets(rs.rank())) {
      const auto spec = levi_decompose(rs, levi);
      EXPECT_EQ(spec.total_rank(), rs.rank());
      int supported = 0;
      for (const auto& r : rs.positive_roots()) {
        bool inside = true;
        for (int i = 0; i < rs.rank(); ++i)
          if (r[static_cast<std::size_t>(i)] != 0 && !levi.contains(i + 1)) inside = false;
        supported += inside;
      }
      EXPECT_EQ(levi_exponents(spec).positive_root_count(), supported) << s.to_string() << levi.to_string();
      EXPECT_EQ(levi_exponents(spec).size(), static_cast<std::size_t>(rs.rank()));
    }
  }
}

TEST(LeviExponents, UnitaryBlocksAndTorus) {
  // S(U(p) x U(n-p)) inside SU(n): remove node p from A_{n-1}.
  for (int n = 2; n <= 8; ++n)
    for (int p = 1; p < n; ++p) {
      std::vector<int> nodes;
      for (int i = 1; i < n; ++i)
        if (i != p) nodes.push_back(i);
      const auto h = levi_decompose(build_root_system(CT::A, n - 1), LeviSpec(n - 1, nodes));
      std::vector<int> expected{1};
      for (int g = 3; g <= 2 * (n - p) - 1; g += 2) expected.push_back(g);
      for (int g = 3; g <= 2 * p - 1; g += 2) expected.push_back(g);
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(levi_exponents(h).degrees(), expected) << "n=" << n << " p=" << p;
    }
  EXPECT_EQ(levi_exponents(GroupSpec{{}, 3}).degrees(), (std::vector<int>{1, 1, 1}));
}

TEST(CosetData, Examples) {
  const auto a1 = parabolic_coset_data(build_root_system(CT::A, 1), LeviSpec(1, {}));
  ASSERT_EQ(a1.representatives.size(), 2u);
  EXPECT_EQ(a1.representatives[0].length, 0u);
  EXPECT_EQ(a1.representatives[1].length, 1u);
  EXPECT_EQ(a1.representatives[1].word, (std::vector<int>{1}));

  const auto e7 = parabolic_coset_data(build_root_system(CT::E, 7), LeviSpec(7, {1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(e7.representatives.size(), 56u);
  EXPECT_EQ(e7.group_order, 2903040u);
  EXPECT_EQ(e7.subgroup_order, 51840u);
  EXPECT_EQ(e7.max_length(), 27u);

  const auto a3 = parabolic_coset_data(build_root_system(CT::A, 3), LeviSpec(3, {1, 3}));
  ASSERT_EQ(a3.representatives.size(), 6u);
  std::vector<std::size_t> lengths;
  for (const auto& r : a3.representatives) lengths.push_back(r.length);
  EXPECT_EQ(lengths, (std::vector<std::size_t>{0, 1, 2, 2, 3, 4}));
  EXPECT_EQ(a3.representatives[2].word, (std::vector<int>{1, 2}));
  EXPECT_EQ(a3.representatives[3].word, (std::vector<int>{3, 2}));
}

TEST(CosetData, BudgetIsEnforced) {
  EXPECT_THROW(parabolic_coset_data(build_root_system(CT::E, 8), LeviSpec(8, {})), EnumerationBudgetExceeded);
  EXPECT_THROW(parabolic_coset_data(build_root_system(CT::A, 4), LeviSpec(4, {}), 100), EnumerationBudgetExceeded);
  EXPECT_NO_THROW(parabolic_coset_data(build_root_system(CT::A, 4), LeviSpec(4, {}), 120));
}

// Words must be the lexicographically smallest among reduced words of the same
// element. Checked by listing all words of each length in lex order.
TEST(CosetData, WordsAreLexMinimalReducedWords) {
  for (const auto& [t, r] : std::vector<std::pair<CT, int>>{{CT::A, 3}, {CT::B, 3}, {CT::G, 2}, {CT::C, 3}}) {
    const auto rs = build_root_system(t, r);
    const int rank = rs.rank();
    auto element_of = [&](const std::vector<int>& word) {
      oracle::Matrix m(static_cast<std::size_t>(rank * rank), 0);
      for (int k = 0; k < rank; ++k) m[k * rank + k] = 1;
      for (int letter : word) {
        oracle::Matrix s(static_cast<std::size_t>(rank * rank), 0);
        for (int k = 0; k < rank; ++k) s[k * rank + k] = 1;
        for (int j = 0; j < rank; ++j) s[(letter - 1) * rank + j] -= rs.cartan_matrix()[letter - 1][j];
        m = oracle::multiply(m, s, rank);
      }
      return m;
    };
    const auto data = parabolic_coset_data(rs, LeviSpec(rank, {}));
    for (const auto& rep : data.representatives) {
      ASSERT_EQ(rep.word.size(), rep.length);
      const auto target = element_of(rep.word);
      std::vector<int> w(rep.length, 1);
      std::vector<int> first;
      while (true) {
        if (element_of(w) == target) { first = w; break; }
        int pos = static_cast<int>(w.size()) - 1;
        while (pos >= 0 && w[pos] == rank) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
      }
      EXPECT_EQ(first, rep.word) << rs.name();
    }
  }
}

TEST(CosetData, ProductIdentityThreeWays) {
  for (const auto& s : all_types_up_to_rank(4)) {
    const auto rs = build_root_system(s.type, s.rank);
    const auto bf = oracle::brute_force_weyl(rs.cartan_matrix());
    for (const auto& levi : all_levi_subsets(rs.rank())) {
      const auto data = parabolic_coset_data(rs, levi);
      const auto w_p = levi_exponents(levi_decompose(rs, levi)).weyl_order();
      EXPECT_EQ(data.representatives.size() * w_p, weyl_order(rs));
      EXPECT_EQ(data.representatives.size() * w_p, bf.elements.size());
      std::int64_t brute = 0;
      for (auto c : bf.minimal_coset_lengths(levi.nodes())) brute += c;
      EXPECT_EQ(static_cast<std::size_t>(brute), data.representatives.size()) << rs.name() << levi.to_string();
    }
  }
}

TEST(CosetData, LengthsArePalindromicAndStartAtIdentity) {
  for (const auto& s : all_types_up_to_rank(5)) {
    const auto rs = build_root_system(s.type, s.rank);
    for (const auto& levi : all_levi_subsets(rs.rank())) {
      const auto data = parabolic_coset_data(rs, levi);
      const std::size_t top = data.max_length();
      std::vector<std::size_t> count(top + 1, 0);
      for (const auto& r : data.representatives) ++count[r.length];
      EXPECT_EQ(count[0], 1u);
      for (std::size_t l = 0; l <= top; ++l) EXPECT_EQ(count[l], count[top - l]) << rs.name() << levi.to_string();
    }
  }
}

}  // namespace
}  // namespace shodge
