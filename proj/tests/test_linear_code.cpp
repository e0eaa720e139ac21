#include "oracles.h"

#include "qlrc/error.h"
#include "qlrc/gf.h"
#include "qlrc/linear_code.h"

#include <gtest/gtest.h>

#include <random>

using namespace qlrc;

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

std::vector<oracle::Vec> to_oracle(const Matrix& m)
{
    std::vector<oracle::Vec> out;
    for (const Row& r : m)
        out.emplace_back(r.begin(), r.end());
    return out;
}

Matrix random_matrix(std::mt19937& rng, std::size_t k, std::size_t n, unsigned p)
{
    std::uniform_int_distribution<unsigned> dist(0, p - 1);
    Matrix m(k, Row(n));
    for (Row& r : m)
        for (Elem& x : r)
            x = dist(rng);
    return m;
}

}  // namespace

TEST(LinearCode, ConstructionErrors)
{
    auto f3 = gf::make_field(3, 1);
    auto f5 = gf::make_field(5, 1);
    EXPECT_EQ(code_of([&] { LinearCode::from_spanning_set(f3, {}); }), Errc::EmptyInput);
    EXPECT_EQ(code_of([&] {
                  LinearCode::from_spanning_set(f3, {CodeVector{f3, {1, 0}}, CodeVector{f3, {1, 0, 1}}});
              }),
              Errc::LengthMismatch);
    EXPECT_EQ(code_of([&] { LinearCode::from_spanning_set(f3, {CodeVector{f5, {1, 0}}}); }), Errc::FieldMismatch);
}

TEST(LinearCode, RankMatchesOracle)
{
    std::mt19937 rng(7);
    for (unsigned p : {2u, 3u, 5u}) {
        auto f = gf::make_field(p, 1);
        for (int trial = 0; trial < 20; ++trial) {
            Matrix m = random_matrix(rng, 1 + trial % 5, 7, p);
            auto c = LinearCode::from_rows(f, 7, m);
            EXPECT_EQ(c.dimension(), oracle::rank(to_oracle(m), p));
        }
    }
}

TEST(LinearCode, DualDimensionsAndInvolution)
{
    std::mt19937 rng(11);
    for (unsigned q : {2u, 3u, 4u, 7u, 9u}) {
        auto f = gf::make_field_of_order(q);
        for (int trial = 0; trial < 10; ++trial) {
            auto c = LinearCode::from_rows(f, 8, random_matrix(rng, 1 + trial % 6, 8, q));
            auto d = euclidean_dual(c);
            EXPECT_EQ(c.dimension() + d.dimension(), 8u);
            EXPECT_EQ(euclidean_dual(d), c);
            for (const Row& a : c.generator())
                for (const Row& b : d.generator()) {
                    Elem s = 0;
                    for (std::size_t i = 0; i < 8; ++i)
                        s = f->add(s, f->mul(a[i], b[i]));
                    EXPECT_EQ(s, 0u);
                }
        }
    }
}

TEST(LinearCode, ZeroAndFullSpace)
{
    auto f = gf::make_field(3, 1);
    auto z = LinearCode::zero(f, 4);
    auto full = LinearCode::full_space(f, 4);
    EXPECT_EQ(z.dimension(), 0u);
    EXPECT_EQ(euclidean_dual(z), full);
    EXPECT_EQ(euclidean_dual(full), z);
    EXPECT_EQ(min_distance_bruteforce(z), 0u);
    EXPECT_EQ(min_distance_bruteforce(full), 1u);
}

TEST(LinearCode, BinaryFamilyDualAtMEqualsOne)
{
    // C^perp = span{1111, 1100}, so C = {0000, 1100, 0011, 1111}.
    auto f2 = gf::make_field(2, 1);
    auto dual = LinearCode::from_rows(f2, 4, {{1, 1, 1, 1}, {1, 1, 0, 0}});
    auto c = euclidean_dual(dual);
    EXPECT_EQ(c.dimension(), 2u);
    EXPECT_TRUE(c.contains_vector(Row{1, 1, 0, 0}));
    EXPECT_TRUE(c.contains_vector(Row{0, 0, 1, 1}));
    EXPECT_FALSE(c.contains_vector(Row{1, 0, 1, 0}));
    EXPECT_EQ(min_distance_bruteforce(c), 2u);
    EXPECT_TRUE(contains(c, dual));
}

TEST(LinearCode, ContainsErrors)
{
    auto f3 = gf::make_field(3, 1);
    auto f5 = gf::make_field(5, 1);
    EXPECT_EQ(code_of([&] { contains(LinearCode::zero(f3, 3), LinearCode::zero(f5, 3)); }), Errc::FieldMismatch);
    EXPECT_EQ(code_of([&] { contains(LinearCode::zero(f3, 3), LinearCode::zero(f3, 4)); }), Errc::LengthMismatch);
}

TEST(LinearCode, MinDistanceMatchesOracle)
{
    std::mt19937 rng(3);
    for (unsigned p : {2u, 3u, 5u}) {
        auto f = gf::make_field(p, 1);
        for (int trial = 0; trial < 12; ++trial) {
            Matrix m = random_matrix(rng, 2 + trial % 4, 9, p);
            auto c = LinearCode::from_rows(f, 9, m);
            if (c.dimension() == 0)
                continue;
            EXPECT_EQ(min_distance_bruteforce(c), oracle::min_weight(to_oracle(c.generator()), p));
        }
    }
}

TEST(LinearCode, CosetWeightMatchesOracle)
{
    std::mt19937 rng(5);
    auto f = gf::make_field(3, 1);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(rng, 5, 9, 3);
        auto c = LinearCode::from_rows(f, 9, m);
        Matrix sub_rows(m.begin(), m.begin() + 2);
        auto sub = LinearCode::from_rows(f, 9, sub_rows);
        const std::size_t expect = c == sub ? 0 : oracle::coset_min_weight(to_oracle(c.generator()),
                                                                          to_oracle(sub.generator()), 3);
        EXPECT_EQ(coset_min_weight_bruteforce(c, sub), expect);
    }
}

TEST(LinearCode, ThreadedEnumerationIsDeterministic)
{
    std::mt19937 rng(13);
    auto f = gf::make_field(5, 1);
    auto c = LinearCode::from_rows(f, 12, random_matrix(rng, 6, 12, 5));
    auto sub = LinearCode::from_rows(f, 12, {c.generator()[0], c.generator()[1]});
    const WeightProfile one = weight_profile_bruteforce(c, &sub, kDefaultBudget, 1);
    const WeightProfile many = weight_profile_bruteforce(c, &sub, kDefaultBudget, 4);
    EXPECT_EQ(one.codewords, 15625u);
    EXPECT_EQ(one.codewords, many.codewords);
    EXPECT_EQ(one.min_weight, many.min_weight);
    EXPECT_EQ(one.min_weight_outside, many.min_weight_outside);
}

TEST(LinearCode, BudgetAndSubcodeErrors)
{
    auto f = gf::make_field(3, 1);
    auto full = LinearCode::full_space(f, 6);
    EXPECT_EQ(code_of([&] { min_distance_bruteforce(full, 100); }), Errc::BudgetExceeded);
    auto a = LinearCode::from_rows(f, 3, {{1, 0, 0}});
    auto b = LinearCode::from_rows(f, 3, {{0, 1, 0}});
    EXPECT_EQ(code_of([&] { weight_profile_bruteforce(a, &b); }), Errc::NotSubcode);
    EXPECT_EQ(codeword_count(full), 729u);
}

TEST(LinearCode, RestrictionAndEncoding)
{
    auto f = gf::make_field(5, 1);
    auto c = LinearCode::from_rows(f, 4, {{1, 0, 2, 3}, {0, 1, 4, 4}});
    CodeVector v = c.encode(Row{2, 3});
    EXPECT_EQ(v.values, (Row{2, 3, f->add(4, 2), f->add(1, 2)}));
    auto r = c.restrict_to(std::vector<std::size_t>{2, 3});
    EXPECT_EQ(r.length(), 2u);
    EXPECT_EQ(r.dimension(), 2u);
}

TEST(HermitianDual, AllOnesOverGF4IsSelfDual)
{
    // 1^2 * 1 + 1^2 * 1 = 0 in characteristic 2.
    auto f4 = gf::make_field(2, 2);
    auto d = LinearCode::from_rows(f4, 2, {{1, 1}});
    EXPECT_EQ(hermitian_dual(d), d);
    EXPECT_EQ(code_of([] { hermitian_dual(LinearCode::zero(gf::make_field(2, 3), 2)); }),
              Errc::NotQuadraticExtension);
}

TEST(HermitianDual, MatchesConjugatedEuclideanDual)
{
    std::mt19937 rng(17);
    auto f = gf::make_field(3, 2);
    for (int trial = 0; trial < 10; ++trial) {
        auto d = LinearCode::from_rows(f, 6, random_matrix(rng, 1 + trial % 4, 6, 9));
        auto hd = hermitian_dual(d);
        EXPECT_EQ(d.dimension() + hd.dimension(), 6u);
        for (const Row& x : d.generator())
            for (const Row& y : hd.generator()) {
                Elem s = 0;
                for (std::size_t i = 0; i < 6; ++i)
                    s = f->add(s, f->mul(f->pow(x[i], 3), y[i]));
                EXPECT_EQ(s, 0u);
            }
    }
}

TEST(TwistedDual, IsScaledEuclideanDual)
{
    std::mt19937 rng(19);
    auto f = gf::make_field(7, 1);
    const Row w{1, 2, 3, 4, 5, 6, 1};
    Row w_inv;
    for (Elem x : w)
        w_inv.push_back(f->inv(x));
    for (int trial = 0; trial < 8; ++trial) {
        auto c = LinearCode::from_rows(f, 7, random_matrix(rng, 3, 7, 7));
        auto td = twisted_dual(c, w);
        EXPECT_EQ(td, scale(euclidean_dual(c), w_inv));
        for (const Row& a : c.generator())
            for (const Row& b : td.generator()) {
                long s = 0;
                for (std::size_t i = 0; i < 7; ++i)
                    s += static_cast<long>(w[i]) * a[i] * b[i];
                EXPECT_EQ(s % 7, 0);
            }
    }
    EXPECT_EQ(code_of([&] { scale(LinearCode::zero(f, 7), Row{1, 0, 1, 1, 1, 1, 1}); }), Errc::InvalidArgument);
}
