#include "oracles.h"

#include "qlrc/css.h"
#include "qlrc/error.h"
#include "qlrc/gf.h"
#include "qlrc/grid_code.h"

#include <gtest/gtest.h>

using namespace qlrc;
using namespace qlrc::css;

namespace {

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no qlrc::Error thrown";
    return Errc::AssertionFailed;
}

grid::GridCodeRecord ex1()
{
    return grid::build_code(gf::make_field(5, 1, std::nullopt, Elem{2}), {5, 3, 0, 0});
}

}  // namespace

TEST(CssFormula, FiveByThree)
{
    const CssRecord r = css_from_formula({5, 3, 0, 0}, 5);
    EXPECT_EQ(r.n, 15u);
    EXPECT_EQ(r.k, 1);
    EXPECT_EQ(r.d, 6u);
    EXPECT_EQ(r.classical_d, 3u);
    EXPECT_FALSE(r.pure);
    EXPECT_TRUE(r.twisted);
    ASSERT_TRUE(r.locality);
    EXPECT_EQ(*r.locality, (grid::Locality{2, 2}));
}

TEST(CssFormula, EightByEight)
{
    const CssRecord r = css_from_formula({8, 8, 1, 1}, 8);
    EXPECT_EQ(r.n, 64u);
    EXPECT_EQ(r.k, 4);
    EXPECT_EQ(r.d, 16u);
    EXPECT_EQ(r.classical_d, 6u);
    EXPECT_FALSE(r.twisted);
    EXPECT_EQ(*r.locality, (grid::Locality{5, 4}));
}

TEST(CssFormula, SevenByThree)
{
    // [[21, 3, 6]]_7: (H - floor(h+a))(V - floor(v+b)) = (7-4)(3-1)
    const CssRecord r = css_from_formula({7, 3, 1, 0}, 7);
    EXPECT_EQ(r.n, 21u);
    EXPECT_EQ(r.k, 3);
    EXPECT_EQ(r.d, 6u);
}

TEST(CssFormula, Rejections)
{
    EXPECT_EQ(code_of([] { css_from_formula({3, 3, 0, 0}, 15); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { css_from_formula({5, 3, 0, 0}, 7); }), Errc::DivisibilityViolated);
    EXPECT_EQ(code_of([] { css_from_formula({5, 3, 2, 0}, 5); }), Errc::ParamRangeViolated);
}

TEST(CssFormula, QuantumDimension)
{
    for (int H = 3; H <= 9; ++H)
        for (int a = (H - 1) % 2; 2 * a < H - 1; ++a)
            for (int V = 3; V <= 9; ++V)
                for (int b = (V - 1) % 2; 2 * b < V - 1; ++b) {
                    const grid::Params p{H, V, a, b};
                    const long k = 2 * static_cast<long>(grid::delta_size_formula(p)) - H * V;
                    EXPECT_EQ(quantum_dimension_formula(p), k);
                }
}

TEST(CssBruteforce, AgreesWithFormulaOnSmallInstances)
{
    for (auto [q, p] : std::vector<std::pair<unsigned, grid::Params>>{
             {5, {5, 3, 0, 0}}, {3, {3, 3, 0, 0}}, {4, {4, 4, 1, 1}}, {7, {3, 4, 0, 1}}, {9, {3, 3, 0, 0}}}) {
        const auto rec = grid::build_code(gf::make_field_of_order(q), p);
        const CssRecord brute = css_from_grid(rec, DistanceMode::bruteforce);
        const CssRecord formula = css_from_formula(p, q);
        EXPECT_EQ(brute.n, formula.n);
        EXPECT_EQ(brute.k, formula.k);
        EXPECT_EQ(brute.d, formula.d) << q;
        EXPECT_EQ(brute.classical_d, formula.classical_d);
        EXPECT_EQ(brute.pure, formula.pure);
        EXPECT_EQ(brute.twisted, formula.twisted);
        EXPECT_EQ(brute.distance_mode, DistanceMode::bruteforce);
    }
}

TEST(CssFromCode, PlainDualRequiresContainment)
{
    // Without the grid weights the five-by-three code is not dual-containing.
    const auto rec = ex1();
    EXPECT_EQ(code_of([&] { css_from_code(rec.code, DistanceMode::bruteforce); }), Errc::NotDualContaining);
    EXPECT_EQ(code_of([&] {
                  css_from_code(rec.code, DistanceMode::formula, std::nullopt, kDefaultBudget, 0, rec.weights);
              }),
              Errc::InvalidArgument);

    const CssRecord r = css_from_code(rec.code, DistanceMode::bruteforce, std::nullopt, kDefaultBudget, 0, rec.weights);
    EXPECT_EQ(r.d, 6u);
    EXPECT_EQ(r.k, 1);
    EXPECT_TRUE(r.twisted);
    EXPECT_EQ(css_subcode(rec.code, rec.weights), rec.dual_code);
}

TEST(CssFromCode, PlainDualCodeOverGF3)
{
    const auto rec = grid::build_code(gf::make_field(3, 1), {3, 3, 0, 0});
    const CssRecord r = css_from_code(rec.code, DistanceMode::bruteforce);
    EXPECT_EQ(r.n, 9u);
    EXPECT_EQ(r.k, 1);
    EXPECT_EQ(r.d, 4u);
    EXPECT_EQ(r.classical_d, 3u);
    EXPECT_FALSE(r.twisted);
    EXPECT_EQ(css_subcode(rec.code), euclidean_dual(rec.code));
}

TEST(CssFromCode, BudgetExceeded)
{
    const auto rec = ex1();
    EXPECT_EQ(code_of([&] { css_from_grid(rec, DistanceMode::bruteforce, 10); }), Errc::BudgetExceeded);
}

TEST(HermitianLift, PlainLiftOverGF9)
{
    const auto rec = grid::build_code(gf::make_field(3, 1), {3, 3, 0, 0});
    const HermitianLift lift = hermitian_lift(rec.code);
    EXPECT_EQ(lift.fields.ext->order(), 9u);
    EXPECT_EQ(lift.lifted.dimension(), 5u);
    EXPECT_EQ(lift.hermitian_dual.dimension(), 4u);
    EXPECT_TRUE(lift.contains_dual);
    EXPECT_EQ(coset_min_weight_bruteforce(lift.lifted, lift.hermitian_dual), 4u);
}

TEST(HermitianLift, FiveByThreeNeedsTheNormTwist)
{
    const auto rec = ex1();
    EXPECT_FALSE(hermitian_lift(rec.code).contains_dual);

    const HermitianLift lift = hermitian_lift(rec.code, rec.weights);
    EXPECT_TRUE(lift.contains_dual);
    EXPECT_EQ(lift.lifted.dimension(), 8u);
    EXPECT_EQ(lift.hermitian_dual.dimension(), 7u);
    const auto& ext = *lift.fields.ext;
    for (std::size_t i = 0; i < rec.weights.size(); ++i)
        EXPECT_EQ(ext.pow(lift.twist[i], 6), lift.fields.embed(rec.weights[i]));
}
