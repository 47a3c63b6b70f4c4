#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace seidel;

namespace {

std::vector<std::string> names(const std::vector<Condition>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs)
    out.push_back(c.to_string());
  return out;
}

} // namespace

TEST(Triple, Normalization) {
  const Triple t(1, 6, 6);
  EXPECT_EQ(t.p(), 6);
  EXPECT_EQ(t.r(), 1);
  EXPECT_EQ(t.sum(), 13);
  EXPECT_EQ(t.product(), 36);
  EXPECT_EQ(t.to_string(), "(6,6,1)");
  EXPECT_THROW(Triple(0, 1, 1), argument_error);
  EXPECT_THROW(Triple(3, -1, 1), argument_error);
}

TEST(Divisors, Basics) {
  EXPECT_EQ(divisors(36), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(47));
  EXPECT_FALSE(is_prime(49));
}

TEST(Mates, Examples) {
  EXPECT_EQ(cospectral_mates(Triple(6, 6, 1)), (std::vector<Triple>{Triple(9, 2, 2)}));
  EXPECT_TRUE(cospectral_mates(Triple(3, 3, 3)).empty());
  EXPECT_EQ(cospectral_mates(Triple(10, 2, 2)), (std::vector<Triple>{Triple(8, 5, 1)}));
  EXPECT_TRUE(cospectral_mates(Triple(7, 4, 2)).empty());
}

TEST(Mates, SortedDescending) {
  for (std::int64_t n = 3; n <= 60; ++n)
    for (const auto& t : triples_of_order(n)) {
      const auto m = cospectral_mates(t);
      EXPECT_TRUE(std::is_sorted(m.begin(), m.end(), std::greater<>()));
    }
}

TEST(SDetermined, Examples) {
  EXPECT_FALSE(is_s_determined(Triple(6, 6, 1)));
  EXPECT_TRUE(is_s_determined(Triple(5, 1, 1)));
  EXPECT_TRUE(is_s_determined(Triple(2, 2, 2)));
}

TEST(ScanOrder, Examples) {
  EXPECT_TRUE(scan_order(12).families.empty());
  const auto r16 = scan_order(16);
  ASSERT_EQ(r16.families.size(), 1u);
  EXPECT_EQ(r16.families[0].members, (std::vector<Triple>{Triple(10, 3, 3), Triple(9, 5, 2)}));
  const auto r17 = scan_order(17);
  ASSERT_EQ(r17.families.size(), 1u);
  EXPECT_EQ(r17.families[0].members, (std::vector<Triple>{Triple(9, 4, 4), Triple(8, 6, 3)}));
  EXPECT_THROW(scan_order(2), argument_error);
  EXPECT_THROW(scan_order(10001), argument_error);
}

TEST(ScanOrder, TripleCountClosedForm) {
  for (std::int64_t n = 3; n <= 200; ++n) {
    const auto r = scan_order(n);
    EXPECT_EQ(r.total_triples, triple_count(n));
    std::int64_t in_families = 0;
    for (const auto& f : r.families) {
      EXPECT_GE(f.members.size(), 2u);
      in_families += static_cast<std::int64_t>(f.members.size());
    }
    EXPECT_EQ(r.determined_count + in_families, r.total_triples);
  }
}

TEST(ScanRange, MatchesPerOrderScan) {
  const auto rs = scan_range(3, 40, 3);
  ASSERT_EQ(rs.size(), 38u);
  for (std::size_t i = 0; i < rs.size(); ++i)
    EXPECT_EQ(rs[i], scan_order(3 + static_cast<std::int64_t>(i)));
}

TEST(Conditions, Examples) {
  EXPECT_EQ(names(classify_conditions(Triple(7, 4, 2))), (std::vector<std::string>{"PRIME_MAX"}));
  EXPECT_EQ(names(classify_conditions(Triple(8, 4, 2))), (std::vector<std::string>{"PRIME_POWERS(2)"}));
  const auto c662 = classify_conditions(Triple(6, 6, 2));
  ASSERT_EQ(c662.size(), 1u);
  EXPECT_EQ(c662[0].kind, ConditionKind::AbAbA);
  EXPECT_TRUE(c662[0].exception);
  EXPECT_TRUE(sufficient_conditions(Triple(6, 6, 2)).empty());
  EXPECT_FALSE(is_s_determined(Triple(6, 6, 2)));
  EXPECT_TRUE(sufficient_conditions(Triple(6, 6, 1)).empty());
  EXPECT_EQ(names(classify_conditions(Triple(3, 3, 3))).front(), "BALANCED");
  EXPECT_FALSE(sufficient_conditions(Triple(10, 4, 1)).empty()); // q <= 4 with r = 1
}

TEST(Conditions, SoundUpTo30) {
  for (std::int64_t n = 3; n <= 30; ++n)
    for (const auto& t : triples_of_order(n))
      if (!sufficient_conditions(t).empty())
        EXPECT_TRUE(cospectral_mates(t).empty()) << t.to_string() << " " << names(sufficient_conditions(t)).front();
}

TEST(Families, Prr) {
  const auto [a, b] = family_prr(2);
  EXPECT_EQ(a, Triple(6, 6, 1));
  EXPECT_EQ(b, Triple(9, 2, 2));
  for (std::int64_t k = 2; k <= 40; ++k) {
    const auto [x, y] = family_prr(k);
    EXPECT_EQ(x.sum(), y.sum());
    EXPECT_EQ(x.product(), y.product());
    EXPECT_NE(x, y);
  }
  EXPECT_THROW(family_prr(0), argument_error);
}

TEST(Families, Pq1) {
  EXPECT_EQ(family_pq1(5), std::make_optional(std::pair{Triple(8, 5, 1), Triple(10, 2, 2)}));
  EXPECT_EQ(family_pq1(6), std::make_optional(std::pair{Triple(6, 6, 1), Triple(9, 2, 2)}));
  EXPECT_FALSE(family_pq1(4));
  for (std::int64_t q = 5; q <= 60; ++q) {
    const auto pr = family_pq1(q);
    ASSERT_TRUE(pr);
    EXPECT_TRUE(pr->first.contains(q) && pr->first.r() == 1);
    EXPECT_EQ(pr->first.sum(), pr->second.sum());
    EXPECT_EQ(pr->first.product(), pr->second.product());
    EXPECT_NE(pr->first, pr->second);
  }
}

TEST(Families, SevenKAlpha) {
  EXPECT_EQ(family_7k_alpha(22), std::make_optional(std::pair{Triple(9, 8, 5), Triple(10, 6, 6)}));
  EXPECT_EQ(family_7k_alpha(13), std::make_optional(std::pair{Triple(6, 6, 1), Triple(9, 2, 2)}));
  EXPECT_FALSE(family_7k_alpha(15));
  EXPECT_FALSE(family_7k_alpha(18));
  EXPECT_THROW(family_7k_alpha(12), argument_error);
  for (std::int64_t n = 13; n <= 500; ++n) {
    if (n == 15 || n == 18)
      continue;
    const auto pr = family_7k_alpha(n);
    ASSERT_TRUE(pr) << n;
    EXPECT_EQ(pr->first.sum(), n);
    EXPECT_EQ(pr->second.sum(), n);
    EXPECT_EQ(pr->first.product(), pr->second.product());
    EXPECT_NE(pr->first, pr->second);
  }
}

TEST(Families, SoundAtGraphLevelUpTo30) {
  // Every generated pair is a genuine Seidel cospectral pair of graphs.
  for (std::int64_t n = 13; n <= 30; ++n) {
    const auto pr = family_7k_alpha(n);
    if (!pr)
      continue;
    EXPECT_TRUE(seidel_cospectral(complete_multipartite(pr->first.spec()), complete_multipartite(pr->second.spec())));
  }
  for (std::int64_t q = 5; q <= 9; ++q) {
    const auto pr = family_pq1(q);
    if (pr->first.sum() <= 30)
      EXPECT_TRUE(seidel_cospectral(complete_multipartite(pr->first.spec()), complete_multipartite(pr->second.spec())));
  }
}

TEST(Families, SoundAtPolynomialLevelUpTo60) {
  for (std::int64_t n = 13; n <= 60; ++n) {
    const auto pr = family_7k_alpha(n);
    if (pr)
      EXPECT_EQ(multipartite_char_poly(pr->first.spec()), multipartite_char_poly(pr->second.spec()));
  }
  for (std::int64_t k = 2; k <= 5; ++k) {
    const auto [a, b] = family_prr(k);
    EXPECT_EQ(multipartite_char_poly(a.spec()), multipartite_char_poly(b.spec()));
  }
}

TEST(ScalingMates, Examples) {
  const auto s = scaling_mates(Triple(6, 6, 1), 2);
  EXPECT_EQ(s, (std::vector<Triple>{Triple(18, 4, 4)}));
  const auto big = cospectral_mates(Triple(12, 12, 2));
  for (const auto& m : s)
    EXPECT_NE(std::find(big.begin(), big.end(), m), big.end());

  EXPECT_TRUE(scaling_mates(Triple(5, 1, 1), 2).empty());
  EXPECT_EQ(cospectral_mates(Triple(10, 2, 2)), (std::vector<Triple>{Triple(8, 5, 1)}));

  EXPECT_EQ(scaling_mates(Triple(9, 2, 2), 1), cospectral_mates(Triple(9, 2, 2)));
  EXPECT_THROW(scaling_mates(Triple(1, 1, 1), 0), argument_error);
}

TEST(ScalingMates, ContainedInMatesOfScaledTriple) {
  for (std::int64_t n = 3; n <= 30; ++n)
    for (const auto& t : triples_of_order(n))
      for (std::int64_t k = 1; k <= 4; ++k) {
        const auto big = cospectral_mates(t.scaled(k));
        for (const auto& m : scaling_mates(t, k))
          EXPECT_NE(std::find(big.begin(), big.end(), m), big.end());
      }
}
