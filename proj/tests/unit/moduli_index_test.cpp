#include "pseudocurve/error.hpp"
#include "pseudocurve/moduli_index.hpp"

#include <gtest/gtest.h>

namespace pseudocurve {
namespace {

TEST(GenusFormula, SmoothPlaneCurves) {
  for (int d = 1; d <= 10; ++d) {
    const auto c = cp2_smooth_curve(d);
    EXPECT_EQ(c.genera.front(), static_cast<std::int64_t>(d - 1) * (d - 2) / 2) << d;
    EXPECT_TRUE(genus_formula_check(c));
  }
  EXPECT_EQ(cp2_smooth_curve(1).genera.front(), 0);
}

TEST(GenusFormula, SolveEachUnknown) {
  CurveData c;
  c.mu = 18;
  c.self_int = 36;
  c.genera = {8};
  EXPECT_EQ(genus_formula_solve(c, GenusUnknown::Delta), 2);
  c.delta = 2;
  EXPECT_TRUE(genus_formula_check(c));
  EXPECT_EQ(genus_formula_solve(c, GenusUnknown::TotalGenus), 8);
  EXPECT_EQ(genus_formula_solve(c, GenusUnknown::Mu), 18);
  EXPECT_EQ(genus_formula_solve(c, GenusUnknown::SelfIntersection), 36);
  EXPECT_EQ(genus_formula_solve(c, GenusUnknown::Components), 1);
}

TEST(GenusFormula, Inconsistent) {
  CurveData c;
  c.mu = 3;
  c.self_int = 2;
  c.genera = {0};
  EXPECT_THROW(genus_formula_solve(c, GenusUnknown::TotalGenus), Error);
  c.self_int = 1;
  c.delta = 5;
  try {
    genus_formula_solve(c, GenusUnknown::TotalGenus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GenusFormulaInconsistent);
  }
  EXPECT_EQ(parse_genus_unknown("delta"), GenusUnknown::Delta);
  EXPECT_THROW(parse_genus_unknown("nope"), Error);
}

TEST(GenusFormula, Validation) {
  CurveData c;
  EXPECT_THROW(validate(c), Error);
  c.genera = {-1};
  EXPECT_THROW(validate(c), Error);
  c.genera = {0};
  c.marked = -1;
  EXPECT_THROW(validate(c), Error);
}

TEST(Index, OperatorIndices) {
  EXPECT_EQ(gromov_operator_index(3, 2, 0), 10);
  EXPECT_EQ(gromov_operator_index(0, 1, 1), 0);
  EXPECT_EQ(gromov_operator_index(18, 2, 10), 0);
  EXPECT_EQ(d_cohomology_index({0, 1, 1}), 0);
  EXPECT_EQ(d_cohomology_index({2, 1, 0}), 6);
  EXPECT_EQ(d_cohomology_index({-1, 2, 2}), -6);
}

TEST(Index, Vanishing) {
  EXPECT_EQ(vanishing_predicate({-1, 1, 0}), (VanishingFlags{true, true}));
  EXPECT_EQ(vanishing_predicate({0, 1, 1}), (VanishingFlags{false, false}));
  EXPECT_EQ(vanishing_predicate({3, 1, 1}), (VanishingFlags{false, true}));
  try {
    vanishing_predicate({0, 2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LineBundleOnly);
  }
}

TEST(Index, ModuliIndices) {
  EXPECT_EQ(moduli_projection_index(3, 2, 0), 4);
  EXPECT_EQ(moduli_projection_index(0, 3, 1), 0);
  EXPECT_EQ(moduli_projection_index(18, 2, 10), 54);
  EXPECT_EQ(marked_moduli_index(18, 2, 10, 17), 20);
  for (int d = 1; d <= 10; ++d) {
    EXPECT_EQ(marked_moduli_index(3 * d, 2, 0, 3 * d - 1), 0);
    EXPECT_EQ(cp2_rational_rigidity_index(d), 0);
  }
  EXPECT_EQ(marked_moduli_index(7, 4, 2, 0), moduli_projection_index(7, 4, 2));
}

TEST(Index, H0AndStrata) {
  EXPECT_EQ(h0_from_h1(3, 2, 0, 0, 0).h0, 4);
  EXPECT_EQ(h0_from_h1(0, 3, 1, 0, 1).h0, 1);
  EXPECT_EQ(h0_from_h1(18, 2, 10, 18, 1).h0, 19);
  EXPECT_TRUE(h0_from_h1(0, 2, 0, 5, 0).stratum_empty());
  EXPECT_EQ(h1_stratum_codim(4, 0), 0);
  EXPECT_EQ(h1_stratum_codim(19, 1), 19);
  EXPECT_EQ(h1_stratum_codim(3, 2), 6);
}

TEST(Index, CuspCountBounds) {
  EXPECT_EQ(cusp_count_bounds(3, 0, 0), (CuspCountBounds{3, 2}));
  EXPECT_FALSE(cusp_count_bounds(3, 0, 0).feasible());
  EXPECT_EQ(cusp_count_bounds(18, 10, 17), (CuspCountBounds{1, 10}));
  EXPECT_EQ(cusp_count_bounds(0, 1, 0), (CuspCountBounds{0, 0}));
}

TEST(Index, Teichmueller) {
  EXPECT_EQ(teichmueller_dim(0), 0);
  EXPECT_EQ(teichmueller_dim(1), 1);
  EXPECT_EQ(teichmueller_dim(2), 3);
  EXPECT_EQ(teichmueller_dim(10), 27);
}

TEST(Cp2Obstruction, Anchors) {
  const auto six = cp2_multiple_component_obstruction(6);
  EXPECT_TRUE(six.obstructed);
  EXPECT_EQ(six.worst_count, 16);
  EXPECT_EQ(six.required, 17);
  const auto three = cp2_multiple_component_obstruction(3);
  EXPECT_EQ(three.worst_count, 4);
  EXPECT_TRUE(three.obstructed);
  const auto seven = cp2_multiple_component_obstruction(7);
  EXPECT_EQ(seven.worst_count, 22);
  EXPECT_FALSE(seven.obstructed);
  EXPECT_EQ(seven.worst_split, (std::vector<ComponentSplit>{{5, 1}, {1, 2}}));
  for (int d = 1; d <= 6; ++d) EXPECT_TRUE(cp2_multiple_component_obstruction(d).obstructed) << d;
  EXPECT_EQ(cp2_multiple_component_obstruction(1).worst_count, 0);
}

TEST(Cp2Obstruction, AllSplittingsDominates) {
  for (int d = 2; d <= 12; ++d) {
    const auto two = cp2_multiple_component_obstruction(d);
    const auto all = cp2_multiple_component_obstruction(d, true);
    EXPECT_GE(all.worst_count, two.worst_count) << d;
    std::int64_t total = 0;
    for (const auto& s : all.worst_split) total += static_cast<std::int64_t>(s.degree) * s.multiplicity;
    EXPECT_EQ(total, d);
  }
}

}  // namespace
}  // namespace pseudocurve
