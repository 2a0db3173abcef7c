#include "pseudocurve/cusp_combinatorics.hpp"
#include "pseudocurve/error.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace pseudocurve {
namespace {

TEST(CuspType, Validation) {
  EXPECT_TRUE(validate_cusp_type(std::vector<int>{2, 3}));
  EXPECT_FALSE(validate_cusp_type(std::vector<int>{2, 4}));
  EXPECT_TRUE(validate_cusp_type(std::vector<int>{4, 6, 7}));
  EXPECT_FALSE(validate_cusp_type(std::vector<int>{4, 6, 8, 9}));
  EXPECT_FALSE(validate_cusp_type(std::vector<int>{3, 2}));
  try {
    CuspType bad({2, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidCuspType);
    EXPECT_NE(std::string(e.what()).find("not a cusp type"), std::string::npos);
  }
}

TEST(CuspType, DivisorSequence) {
  EXPECT_EQ(divisor_sequence(CuspType({2, 3})), (std::vector<int>{2, 1}));
  EXPECT_EQ(divisor_sequence(CuspType({4, 6, 7})), (std::vector<int>{4, 2, 1}));
  EXPECT_EQ(divisor_sequence(CuspType({6, 9, 13})), (std::vector<int>{6, 3, 1}));
}

TEST(CuspType, AdmissibleExponents) {
  EXPECT_EQ(admissible_exponents(CuspType({2, 3})).exponents, (std::vector<int>{2, 3}));
  const auto a = admissible_exponents(CuspType({2, 5}));
  EXPECT_EQ(a.exponents, (std::vector<int>{2, 4, 5}));
  EXPECT_EQ(a.length(), 2);
  EXPECT_EQ(a.critical_mask, (std::vector<bool>{true, false, true}));
  EXPECT_EQ(admissible_exponents(CuspType({4, 6, 7})).length(), 2);
  EXPECT_EQ(admissible_exponents(CuspType({6, 9, 13})).exponents, (std::vector<int>{6, 9, 12, 13}));
}

TEST(CuspType, NodalNumbers) {
  EXPECT_EQ(nodal_number_formula(CuspType({2, 3})), 2);
  EXPECT_EQ(nodal_number_formula(CuspType({2, 5})), 4);
  EXPECT_EQ(nodal_number_formula(CuspType({4, 6, 7})), 16);
  EXPECT_EQ(nodal_number_formula(CuspType({6, 9, 13})), 48);
  EXPECT_EQ(nodal_number_oracle(CuspType({2, 3})), 1);
  EXPECT_EQ(nodal_number_oracle(CuspType({2, 5})), 2);
  EXPECT_EQ(nodal_number_oracle(CuspType({2, 7})), 3);
  EXPECT_EQ(nodal_number(CuspType({4, 6, 7})), 8);
  EXPECT_EQ(nodal_number(CuspType({1})), 0);
}

TEST(CuspType, SemigroupGenerators) {
  EXPECT_EQ(semigroup_generators(CuspType({4, 6, 7})), (std::vector<std::int64_t>{4, 6, 13}));
  EXPECT_EQ(semigroup_generators(CuspType({6, 9, 13})), (std::vector<std::int64_t>{6, 9, 22}));
}

TEST(CuspType, GapSieveAgreesWithIndependentCounts) {
  for (int a = 2; a <= 9; ++a) {
    for (int b = a + 1; b <= 25; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const CuspType p({a, b});
      EXPECT_EQ(nodal_number_oracle(p), testing::two_generator_gaps(a, b)) << a << "," << b;
    }
  }
  for (const auto& p : enumerate_cusp_types(20)) {
    EXPECT_EQ(nodal_number_oracle(p), testing::semigroup_gaps(semigroup_generators(p)));
  }
}

TEST(CuspType, BennequinAndEuler) {
  EXPECT_EQ(bennequin_index(1), 1);
  EXPECT_EQ(bennequin_index(0), -1);
  EXPECT_EQ(bennequin_index(8), 15);
  EXPECT_EQ(smoothing_euler(1, 1), -1);
  EXPECT_EQ(smoothing_euler(2, 0), 2);
  EXPECT_EQ(smoothing_euler(1, 0), 1);
}

TEST(CuspType, Codimensions) {
  EXPECT_EQ(cusp_stratum_codim(2, std::vector<int>{1}, 1), 2);
  EXPECT_EQ(cusp_stratum_codim(2, std::vector<int>{1, 1}, 2), 4);
  EXPECT_EQ(cusp_stratum_codim(3, std::vector<int>{2}, 1), 10);
  EXPECT_THROW(cusp_stratum_codim(2, std::vector<int>{1}, 2), Error);
  EXPECT_EQ(secondary_stratum_codim(2, std::vector<int>{0}), 0);
  EXPECT_EQ(secondary_stratum_codim(2, std::vector<int>{1}), 2);
  EXPECT_EQ(secondary_stratum_codim(3, std::vector<int>{1, 2}), 12);
  const CuspType t1[] = {CuspType({2, 3})};
  const CuspType t2[] = {CuspType({2, 5})};
  const CuspType t3[] = {CuspType({4, 6, 7})};
  EXPECT_EQ(cusp_type_stratum_codim(2, t1), 0);
  EXPECT_EQ(cusp_type_stratum_codim(2, t2), 2);
  EXPECT_EQ(cusp_type_stratum_codim(3, t3), 4);
}

TEST(CuspType, EnumerationAndStructuralInvariants) {
  const auto all = enumerate_cusp_types(30);
  EXPECT_EQ(all.size(), 777u);
  for (const auto& p : all) {
    const auto d = divisor_sequence(p);
    EXPECT_EQ(d.back(), 1);
    EXPECT_TRUE(std::is_sorted(d.rbegin(), d.rend()));
    const auto adm = admissible_exponents(p);
    int expected_length = p.length();
    for (int i = 0; i < p.length(); ++i) {
      expected_length += (p.exponents()[static_cast<std::size_t>(i) + 1] - p.exponents()[static_cast<std::size_t>(i)]) /
                         d[static_cast<std::size_t>(i)];
    }
    EXPECT_EQ(adm.length(), expected_length);
    for (std::size_t j = 1; j < adm.exponents.size(); ++j) {
      EXPECT_EQ(adm.critical_mask[j], adm.divisors[j] < adm.divisors[j - 1]);
    }
    const CuspType one[] = {p};
    const auto codim = cusp_type_stratum_codim(2, one);
    EXPECT_GE(codim, 0);
    EXPECT_EQ(codim % 2, 0);
  }
}

TEST(CuspType, TotalNodalNumber) {
  const std::int64_t deltas[] = {1, 1};
  const std::int64_t meets[] = {3};
  EXPECT_EQ(total_nodal_number(deltas, meets), 5);
}

}  // namespace
}  // namespace pseudocurve
