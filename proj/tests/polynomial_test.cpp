#include <gtest/gtest.h>

#include "support.hpp"

using namespace skewhook;
using testing_support::uniform;

namespace {

const Variable X1 = Variable::x(1), X2 = Variable::x(2), X3 = Variable::x(3);
const Variable Y1 = Variable::y(1), Y2 = Variable::y(2), Y3 = Variable::y(3);

MVPoly v(Variable var) { return MVPoly(var); }

MVPoly random_poly()
{
    const Variable vars[] = {X1, Y1, X2, Y2, X3, Y3};
    MVPoly p;
    int terms = uniform(0, 5);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (const Variable& var : vars)
            if (int e = uniform(0, 3) - 1; e > 0)
                m *= Monomial(var, e);
        p.add_term(m, uniform(-5, 5));
    }
    return p;
}

// Everything below evaluates directly on integers, without going through MVPoly.

std::vector<Variable> w_set_by_definition(const Partition& lambda, const Partition& mu)
{
    const int far = 2 * (lambda.size() + mu.size()) + 4;
    const Partition lc = lambda.conjugate(), mc = mu.conjugate();
    std::vector<Variable> out;
    for (int k = 1; k <= far; ++k) {
        bool hit = false;
        for (int i = 1; i <= far + k && !hit; ++i)
            hit = lambda[k] - k == mu[i] - i;
        if (!hit)
            out.push_back(Variable::x(k));
        hit = false;
        for (int j = 1; j <= far + k && !hit; ++j)
            hit = lc[k] - k == mc[j] - j;
        if (!hit)
            out.push_back(Variable::y(k));
    }
    return out;
}

struct Point {
    std::vector<BigInt> a, b; // a[i] stands for x_i, b[j] for y_j, 1-based
    const BigInt& operator()(const Variable& var) const
    {
        return var.kind == VarKind::x ? a[var.index] : b[var.index];
    }
};

Point random_point(int n)
{
    Point p;
    for (int i = 0; i <= n; ++i) {
        p.a.push_back(uniform(-9, 9));
        p.b.push_back(uniform(-9, 9));
    }
    return p;
}

BigInt diagram_value(const std::vector<Cell>& d, const Point& pt)
{
    BigInt r = 1;
    for (const Cell& c : d)
        r *= pt.a[c.row] + pt.b[c.col];
    return r;
}

BigInt generating_value(const Partition& lambda, const Partition& mu, const Point& pt)
{
    BigInt s = 0;
    for (const auto& d : testing_support::excited_by_closure(lambda, mu))
        s += diagram_value(d, pt);
    return s;
}

} // namespace

TEST(Polynomial, RenderingFollowsVariableOrder)
{
    MVPoly p = v(X1) * v(X1) * v(Y1) + 2 * v(X1) * v(X2) - 3;
    EXPECT_EQ(p.str(), "x1^2*y1 + 2*x1*x2 - 3");
    EXPECT_EQ(MVPoly().str(), "0");
    EXPECT_EQ(MVPoly(-1).str(), "-1");
    EXPECT_EQ((v(Y2) - v(X3)).str(), "y2 - x3");
    EXPECT_EQ((v(Y1) + v(X1)).str(), "x1 + y1");
    EXPECT_EQ(Monomial().str(), "1");
    EXPECT_LT(X1, Y1);
    EXPECT_LT(Y1, X2);
    EXPECT_EQ(Variable::parse("y12"), Variable::y(12));
    EXPECT_THROW(Variable::parse("z1"), invalid_input);
    EXPECT_THROW(Variable::parse("x0"), invalid_input);
    EXPECT_THROW(Variable::x(0), invalid_input);
}

TEST(Polynomial, CancellationLeavesEmptyMap)
{
    MVPoly p = (v(X1) + v(Y2)) * (v(X1) - v(Y2));
    EXPECT_EQ(p, v(X1) * v(X1) - v(Y2) * v(Y2));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).term_count(), 0u);
    EXPECT_EQ(MVPoly(0).term_count(), 0u);
}

TEST(Polynomial, DegreeAndHomogeneity)
{
    MVPoly p = v(X1) * v(Y1) + v(X2) * v(X2);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_TRUE(p.is_homogeneous(2));
    EXPECT_FALSE((p + 1).is_homogeneous(2));
    EXPECT_EQ(MVPoly().degree(), -1);
    EXPECT_EQ((p + 1).at_all_ones(), 3);
}

TEST(Polynomial, Division)
{
    MVPoly d = v(X2) + v(Y2) - 2;
    MVPoly q = v(X1) * v(Y3) + 4 * v(Y1) - 7;
    DivisionResult r = divide(q * d, d);
    EXPECT_TRUE(r.remainder.is_zero());
    EXPECT_EQ(r.quotient, q);

    DivisionResult s = divide(q * d + v(X3), d);
    EXPECT_FALSE(s.remainder.is_zero());
    EXPECT_EQ(s.quotient * d + s.remainder, q * d + v(X3));
    EXPECT_THROW(divide(q, MVPoly()), invalid_input);
}

TEST(PolynomialProperty, RingLaws)
{
    for (int trial = 0; trial < 300; ++trial) {
        MVPoly a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * MVPoly(1), a);
        EXPECT_TRUE((a * MVPoly()).is_zero());
        EXPECT_EQ(-(-a), a);
        const MVPoly ab = a * b;
        for (const auto& [m, coeff] : ab.terms())
            EXPECT_NE(coeff, 0);
        // evaluation is a ring homomorphism
        auto at = [](const Variable& var) { return Rational(var.order_key() - 3, 2); };
        EXPECT_EQ((a * b + c).evaluate(at), a.evaluate(at) * b.evaluate(at) + c.evaluate(at));
        if (!b.is_zero() && (b.terms().begin()->second == 1 || b.terms().begin()->second == -1)) {
            DivisionResult r = divide(a * b, b);
            EXPECT_TRUE(r.remainder.is_zero());
            EXPECT_EQ(r.quotient, a);
        }
    }
}

TEST(Identities, GeneratingPolynomialSmallExample)
{
    MVPoly expected = linear(X1, Y1) * linear(X1, Y2) + linear(X1, Y1) * linear(X2, Y3) + linear(X2, Y2) * linear(X2, Y3);
    EXPECT_EQ(excited_generating_poly({4, 3}, {2}), expected);
    EXPECT_EQ(excited_generating_poly({4, 3}, Partition()), MVPoly(1));
    EXPECT_TRUE(excited_generating_poly({2}, {4, 3}).is_zero());
}

TEST(Identities, LinearFactor)
{
    EXPECT_EQ(lemma_w_linear({4, 3}, {2}), v(X1) + v(Y1));
    EXPECT_TRUE(lemma_w_linear({4, 3}, {4, 3}).is_zero());
    MVPoly expected;
    for (int k : {1, 2, 3, 5})
        expected += v(Variable::x(k));
    for (int k : {1, 2, 3, 6})
        expected += v(Variable::y(k));
    EXPECT_EQ(lemma_w_linear({7, 6, 5, 5, 2, 1}, {4, 3, 1}), expected);
}

TEST(Identities, DisplayedSmallIdentity)
{
    MVPoly g = linear(X1, Y1) * linear(X1, Y2) + linear(X1, Y1) * linear(X2, Y3) + linear(X2, Y2) * linear(X2, Y3);
    MVPoly lhs = linear(X1, Y1) * g;
    MVPoly rhs = linear(X1, Y1) * linear(X1, Y2) * linear(X1, Y3) + linear(X1, Y1) * linear(X1, Y2) * linear(X2, Y1)
        + linear(X1, Y1) * linear(X2, Y3) * linear(X2, Y1);
    PolyPair s = thm1_sides({4, 3}, {2});
    EXPECT_EQ(s.lhs, lhs);
    EXPECT_EQ(s.rhs, rhs);
    EXPECT_EQ(lhs, rhs);
    EXPECT_TRUE(verify_thm1({4, 3}, {2}));
}

TEST(Identities, NumericSmallExample)
{
    IntPair e = eq2_sides({4, 3}, {2});
    EXPECT_EQ(e.lhs, 135);
    EXPECT_EQ(e.rhs, 135);
    EXPECT_EQ(hook_sum({4, 3}, {2}), 27);
    EXPECT_TRUE(verify_eq2({4, 3}, {4, 3}));
    EXPECT_EQ(eq2_sides({4, 3}, {4, 3}).lhs, 0);
    EXPECT_THROW(eq2_sides({2}, {4, 3}), invalid_input);

    LemmaWCheck w = lemma_w_check({4, 3}, {2});
    EXPECT_EQ(w.variable_sum, HalfInt::from_int(5));
    EXPECT_EQ(w.size_difference, 5);
    LemmaWCheck big = lemma_w_check({7, 6, 5, 5, 2, 1}, {4, 3, 1});
    EXPECT_EQ(big.variable_sum, HalfInt::from_int(18));
    EXPECT_TRUE(big.holds());
    // valid for arbitrary pairs, including mu not inside lambda
    EXPECT_TRUE(verify_lemma_w({2}, {4, 3}));
}

TEST(Identities, NonHomogeneousVariant)
{
    const Partition lambda{4, 3}, mu{2};
    PolyPair s = eq3_sides(lambda, mu);
    EXPECT_NE(s.lhs, s.rhs);
    EXPECT_EQ(specialize(s.lhs, lambda), Rational(135));
    EXPECT_EQ(specialize(s.rhs, lambda), Rational(135));
    EXPECT_TRUE(s.rhs.is_homogeneous(3));
    EXPECT_FALSE(s.lhs.is_homogeneous(3));
    DivisionResult r = divide(s.lhs - s.rhs, v(X2) + v(Y2) - 2);
    EXPECT_TRUE(r.remainder.is_zero());
    EXPECT_EQ(r.quotient, excited_generating_poly(lambda, mu));
}

TEST(Identities, SpecializationValues)
{
    const Partition lambda{4, 3};
    EXPECT_EQ(specialize(MVPoly(7), lambda), Rational(7));
    EXPECT_EQ(specialize(v(X1), lambda), Rational(7, 2));
    EXPECT_EQ(specialize(v(X3), lambda), Rational(-5, 2)); // lambda_3 = 0
    EXPECT_EQ(specialize(v(Y3), lambda), Rational(-1, 2));
    EXPECT_EQ(specialize(lemma_w_linear(lambda, {2}), lambda), Rational(5));
}

TEST(Identities, LargeExample)
{
    const Partition lambda{7, 6, 5, 5, 2, 1}, mu{4, 3, 1};
    MVPoly g = excited_generating_poly(lambda, mu);
    EXPECT_EQ(g.at_all_ones(), 14080);
    EXPECT_TRUE(g.is_homogeneous(8));
    PolyPair s = thm1_sides(lambda, mu);
    EXPECT_EQ(s.rhs.at_all_ones(), 112640);
    EXPECT_EQ(s.lhs.at_all_ones(), 112640);
    EXPECT_TRUE(s.rhs.is_homogeneous(9));
    EXPECT_EQ(s.lhs, s.rhs);
    IntPair e = eq2_sides(lambda, mu);
    EXPECT_EQ(e.lhs, e.rhs);
    EXPECT_EQ(e.lhs, BigInt("2912371200"));
    EXPECT_EQ(specialize(g, lambda), Rational(hook_sum(lambda, mu)));
}

TEST(IdentitiesProperty, AllPairsIn4x4Box)
{
    for (const Partition& lambda : partitions_in_box(4, 4)) {
        for (const Partition& mu : subpartitions(lambda)) {
            PolyPair s = thm1_sides(lambda, mu);
            ASSERT_EQ(s.lhs, s.rhs) << lambda << " / " << mu;
            EXPECT_TRUE(s.rhs.is_homogeneous(mu.size() + 1));
            MVPoly g = excited_generating_poly(lambda, mu);
            EXPECT_TRUE(g.is_homogeneous(mu.size()));
            EXPECT_EQ(specialize(g, lambda), Rational(hook_sum(lambda, mu)));
            EXPECT_EQ(specialize(s.lhs, lambda), specialize(s.rhs, lambda));
            EXPECT_TRUE(verify_eq2(lambda, mu));
            EXPECT_TRUE(verify_lemma_w(lambda, mu));
            EXPECT_EQ(var_set_W(mu, lambda), w_set_by_definition(lambda, mu)) << lambda << " / " << mu;
        }
    }
}

TEST(IdentitiesProperty, MuOutsideLambdaIsZeroEqualsZero)
{
    const std::vector<std::pair<Partition, Partition>> pairs{{{2}, {4, 3}}, {{3, 3}, {1, 1, 1}}, {Partition(), {1}}};
    for (const auto& [lambda, mu] : pairs) {
        PolyPair s = thm1_sides(lambda, mu);
        EXPECT_TRUE(s.lhs.is_zero());
        EXPECT_TRUE(s.rhs.is_zero());
        EXPECT_TRUE(verify_lemma_w(lambda, mu));
    }
}

TEST(IdentitiesProperty, RandomIntegerPoints)
{
    // both sides evaluated from the definition at random points, against the library polynomials
    for (int trial = 0; trial < 60; ++trial) {
        Partition lambda = testing_support::random_partition(5, 5);
        Partition mu = testing_support::random_subpartition(lambda);
        const int n = 2 * (lambda.size() + mu.size()) + 4;
        Point pt = random_point(n);
        BigInt lin = 0;
        for (const Variable& var : w_set_by_definition(lambda, mu))
            lin += pt(var);
        BigInt lhs = lin * generating_value(lambda, mu, pt);
        BigInt rhs = 0;
        for (const Partition& nu : covers_within(mu, lambda))
            rhs += generating_value(lambda, nu, pt);
        EXPECT_EQ(lhs, rhs) << lambda << " / " << mu;

        PolyPair s = thm1_sides(lambda, mu);
        auto at = [&](const Variable& var) { return Rational(pt(var)); };
        EXPECT_EQ(s.lhs.evaluate(at), Rational(lhs));
        EXPECT_EQ(s.rhs.evaluate(at), Rational(rhs));
    }
}
