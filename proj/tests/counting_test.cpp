#include <gtest/gtest.h>

#include "support.hpp"

using namespace skewhook;
using testing_support::syt_count_by_ideals;

namespace {

BigInt big(const char* s) { return BigInt(s); }

const Partition k765521{7, 6, 5, 5, 2, 1};
const Partition k431{4, 3, 1};

} // namespace

TEST(StraightShapes, HookLengthFormula)
{
    EXPECT_EQ(f_hlf({3, 2}), 5);
    EXPECT_EQ(f_hlf(Partition()), 1);
    EXPECT_EQ(f_hlf({6, 5, 2, 2}), 100100);
    EXPECT_EQ(hook_product({3, 2}), 24);
    EXPECT_EQ(f_bruteforce({3, 2}, Partition()), 5);
    EXPECT_EQ(f_bruteforce({6, 5, 2, 2}, Partition()), 100100);
    // staircase 4321: 768
    EXPECT_EQ(f_hlf({4, 3, 2, 1}), 768);
}

TEST(SkewShapes, SmallExampleAllMethods)
{
    const Partition lambda{4, 3}, mu{2};
    EXPECT_EQ(f_bruteforce(lambda, mu), 9);
    EXPECT_EQ(f_recursive(lambda, mu), 9);
    EXPECT_EQ(f_naruse(lambda, mu), 9);
    EXPECT_EQ(f_oo(lambda, mu), 9);
    EXPECT_EQ(f_det(lambda, mu), 9);
}

TEST(SkewShapes, EmptySkewIsOne)
{
    for (const Partition& lambda : {Partition(), Partition{1}, Partition{4, 3}, k765521}) {
        EXPECT_EQ(f_bruteforce(lambda, lambda), 1);
        EXPECT_EQ(f_recursive(lambda, lambda), 1);
        EXPECT_EQ(f_naruse(lambda, lambda), 1);
        EXPECT_EQ(f_oo(lambda, lambda), 1);
        EXPECT_EQ(f_det(lambda, lambda), 1);
    }
}

TEST(SkewShapes, NaruseTermsForSmallExample)
{
    std::vector<NaruseTerm> terms = naruse_terms({4, 3}, {2});
    ASSERT_EQ(terms.size(), 3u);
    std::multiset<BigInt> products;
    Rational sum = 0;
    for (const NaruseTerm& t : terms) {
        products.insert(t.complement_hook_product);
        sum += Rational(1, t.complement_hook_product);
    }
    EXPECT_EQ(products, (std::multiset<BigInt>{18, 72, 180}));
    EXPECT_EQ(sum * 120, Rational(9));
    EXPECT_EQ(sum, Rational(3, 40));
}

TEST(SkewShapes, MediumShapes)
{
    EXPECT_EQ(f_bruteforce({6, 5, 2, 2}, {3, 2}), 5880);
    EXPECT_EQ(f_det({6, 5, 2, 2}, {3, 2}), 5880);
    EXPECT_EQ(f_naruse({6, 5, 2, 2}, {3, 2}), 5880);
    EXPECT_EQ(f_oo({6, 5, 2, 2}, {3, 2}), 5880);
    EXPECT_EQ(f_recursive({6, 5, 2, 2}, {3, 2}), 5880);
    EXPECT_EQ(syt_count_by_ideals({6, 5, 2, 2}, {3, 2}), 5880);
}

TEST(SkewShapes, LargeExampleAgrees)
{
    const BigInt expected = big("1229162220");
    EXPECT_EQ(f_recursive(k765521, k431), expected);
    EXPECT_EQ(f_naruse(k765521, k431), expected);
    EXPECT_EQ(f_oo(k765521, k431), expected);
    EXPECT_EQ(f_det(k765521, k431), expected);
    EXPECT_EQ(syt_count_by_ideals(k765521, k431), expected);
}

TEST(SkewShapes, LargeExampleBruteForce)
{
    EXPECT_EQ(f_bruteforce(k765521, k431), big("1229162220"));
}

TEST(SkewShapes, ErrorsAndLimits)
{
    EXPECT_THROW(f_bruteforce({2}, {4, 3}), invalid_input);
    EXPECT_THROW(f_recursive({2}, {4, 3}), invalid_input);
    EXPECT_THROW(f_oo({2}, {4, 3}), invalid_input);
    EXPECT_THROW(f_det({2}, {4, 3}), invalid_input);
    EXPECT_EQ(f_naruse({2}, {4, 3}), 0);
    EXPECT_THROW(f_bruteforce({12, 11}, Partition()), size_limit_exceeded);
    // the closed forms have no size limit: 23 cells
    EXPECT_EQ(f_recursive({12, 11}, Partition()), f_hlf({12, 11}));
    EXPECT_EQ(f_det({12, 11}, Partition()), f_hlf({12, 11}));
}

TEST(SkewShapes, SkewSytEnumeration)
{
    std::set<std::vector<std::vector<int>>> seen;
    for_each_skew_syt({4, 3}, {2}, [&](const SkewSYT& t) {
        // rows and columns increase on the skew cells
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= t.outer[i]; ++j) {
                int v = t.entries[i - 1][j - 1];
                if (j <= t.inner[i])
                    continue;
                if (j > t.inner[i] + 1) {
                    EXPECT_LT(t.entries[i - 1][j - 2], v);
                }
                if (i > 1 && j > t.inner[i - 1]) {
                    EXPECT_LT(t.entries[i - 2][j - 1], v);
                }
            }
        seen.insert(t.entries);
    });
    EXPECT_EQ(seen.size(), 9u);
    std::vector<std::vector<int>> first{{0, 0, 1, 2}, {3, 4, 5}};
    EXPECT_TRUE(seen.count(first));
}

TEST(ReverseTableaux, SmallEnumerations)
{
    EXPECT_EQ(enumerate_rst(Partition(), 4).size(), 1u);
    std::vector<ReverseSSYT> one = enumerate_rst({1}, 3);
    ASSERT_EQ(one.size(), 3u);
    std::set<int> vals;
    for (const auto& t : one)
        vals.insert(t.rows[0][0]);
    EXPECT_EQ(vals, (std::set<int>{1, 2, 3}));

    std::vector<ReverseSSYT> two = enumerate_rst({2}, 2);
    std::set<std::vector<int>> rows;
    for (const auto& t : two)
        rows.insert(t.rows[0]);
    EXPECT_EQ(rows, (std::set<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}}));

    // columns strictly decrease: shape 11 needs two distinct values
    EXPECT_EQ(enumerate_rst({1, 1}, 1).size(), 0u);
    EXPECT_EQ(enumerate_rst({1, 1}, 3).size(), 3u);
}

TEST(Determinant, ExactRationalElimination)
{
    using M = std::vector<std::vector<Rational>>;
    EXPECT_EQ(determinant(M{}), Rational(1));
    EXPECT_EQ(determinant(M{{Rational(2), Rational(3)}, {Rational(4), Rational(5)}}), Rational(-2));
    EXPECT_EQ(determinant(M{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}), Rational(-1));
    EXPECT_EQ(determinant(M{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 6)}}), Rational(0));
}

TEST(CountingProperty, FiveWayAgreementUpTo8Cells)
{
    std::size_t cases = 0;
    for (int n = 0; n <= 8; ++n) {
        for_each_partition(n, [&](const Partition& lambda) {
            for (const Partition& mu : subpartitions(lambda)) {
                ++cases;
                const BigInt oracle = syt_count_by_ideals(lambda, mu);
                EXPECT_EQ(f_bruteforce(lambda, mu), oracle) << lambda << " / " << mu;
                EXPECT_EQ(f_recursive(lambda, mu), oracle) << lambda << " / " << mu;
                EXPECT_EQ(f_naruse(lambda, mu), oracle) << lambda << " / " << mu;
                EXPECT_EQ(f_oo(lambda, mu), oracle) << lambda << " / " << mu;
                EXPECT_EQ(f_det(lambda, mu), oracle) << lambda << " / " << mu;
            }
            EXPECT_EQ(f_hlf(lambda), syt_count_by_ideals(lambda, Partition()));
        });
    }
    EXPECT_EQ(cases, 862u);
}

TEST(CountingProperty, RandomMediumShapes)
{
    for (int trial = 0; trial < 40; ++trial) {
        Partition lambda = testing_support::random_partition(6, 6);
        Partition mu = testing_support::random_subpartition(lambda);
        if (lambda.size() - mu.size() > 16)
            continue;
        const BigInt oracle = syt_count_by_ideals(lambda, mu);
        EXPECT_EQ(f_recursive(lambda, mu), oracle) << lambda << " / " << mu;
        EXPECT_EQ(f_naruse(lambda, mu), oracle) << lambda << " / " << mu;
        EXPECT_EQ(f_oo(lambda, mu), oracle) << lambda << " / " << mu;
        EXPECT_EQ(f_det(lambda, mu), oracle) << lambda << " / " << mu;
    }
}
