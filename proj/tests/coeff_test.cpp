#include "askey/int_poly.hpp"
#include "askey/laurent.hpp"
#include "askey/ratq.hpp"
#include "askey/specialize.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace askey;
using askey::gen::Rng;

namespace {

const RatQ q = RatQ::q();
const RatQ qi = RatQ::q_pow(-1);

IntPoly poly(std::vector<long> cs) {
    std::vector<mpz_class> v(cs.begin(), cs.end());
    return IntPoly(std::move(v));
}

} // namespace

TEST(IntPoly, GcdOfProducts) {
    const IntPoly a = poly({1, 1});     // 1 + q
    const IntPoly b = poly({-1, 0, 1}); // q^2 - 1
    const IntPoly c = poly({2, 0, 3});  // 3q^2 + 2
    EXPECT_EQ(gcd(a * c, b * c), a * c);
    EXPECT_EQ(gcd(a.scaled(6), a.scaled(4)), a.scaled(2));
    EXPECT_EQ(gcd(IntPoly::q_pow(3), IntPoly::q_pow(5) + IntPoly::q_pow(2)), IntPoly::q_pow(2));
    EXPECT_EQ(gcd(poly({1, 1}), poly({1, 2})), IntPoly(1));
}

TEST(IntPoly, ExactDivision) {
    const IntPoly a = poly({3, -1, 4, 1});
    const IntPoly b = poly({-5, 9, 2});
    EXPECT_EQ(divexact(a * b, b), a);
    EXPECT_EQ(divexact(a * b, a), b);
}

TEST(RatQ, Examples) {
    const RatQ sum = q + qi;
    EXPECT_EQ(sum, RatQ(poly({1, 0, 1}), IntPoly::q_pow(1)));
    EXPECT_EQ((q - qi) * (q + qi), RatQ::q_pow(2) - RatQ::q_pow(-2));
    EXPECT_THROW(RatQ().inv(), DivisionByZero);
    EXPECT_THROW(RatQ(1) / RatQ(), DivisionByZero);
}

TEST(RatQ, CanonicalForm) {
    // (q^2 - 1)/(q - 1) reduces to q + 1
    const RatQ r(poly({-1, 0, 1}), poly({-1, 1}));
    EXPECT_EQ(r.num(), poly({1, 1}));
    EXPECT_EQ(r.den(), IntPoly(1));
    // sign moves to the numerator
    const RatQ s(IntPoly(1), poly({0, -2}));
    EXPECT_EQ(s.num(), IntPoly(-1));
    EXPECT_EQ(s.den(), poly({0, 2}));
    // zero is unique
    const RatQ z = q - q;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.den(), IntPoly(1));
    EXPECT_EQ(RatQ(IntPoly(), poly({1, 7})), RatQ());
}

TEST(RatQ, FieldAxiomsOnRandomValues) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const RatQ u = gen::random_ratq(rng);
        const RatQ v = gen::random_ratq(rng);
        const RatQ w = gen::random_ratq(rng);
        EXPECT_EQ((u + v) + w, u + (v + w));
        EXPECT_EQ(u * (v + w), u * v + u * w);
        EXPECT_EQ(u * v, v * u);
        if (!u.is_zero()) {
            EXPECT_EQ(u * u.inv(), RatQ(1));
        }
        // the fast and slow paths must agree on canonical form
        const RatQ via_slow = RatQ(u.num() * v.den() + v.num() * u.den(), u.den() * v.den());
        EXPECT_EQ(u + v, via_slow);
    }
}

TEST(RatQ, SpecializeIsRingHomomorphism) {
    Rng rng(5);
    const mpq_class qv(7, 3);
    for (int i = 0; i < 100; ++i) {
        const RatQ u = gen::random_ratq(rng);
        const RatQ v = gen::random_ratq(rng);
        mpq_class su, sv;
        try {
            su = specialize(u, qv);
            sv = specialize(v, qv);
        } catch (const PoleAtSpecialization&) {
            continue;
        }
        EXPECT_EQ(specialize(u * v, qv), su * sv);
        EXPECT_EQ(specialize(u + v, qv), su + sv);
    }
}

TEST(Specialize, Examples) {
    EXPECT_EQ(specialize(q + qi, mpq_class(2)), mpq_class(5, 2));
    EXPECT_THROW(specialize(q - qi, mpq_class(1)), ForbiddenSpecialization);
    EXPECT_THROW(specialize(q, mpq_class(-1)), ForbiddenSpecialization);
    EXPECT_THROW(specialize(q, mpq_class(0)), ForbiddenSpecialization);

    const LaurentABC aq2 = LaurentABC::a().scaled(RatQ::q_pow(2));
    const LaurentABC v = specialize(aq2, Bindings{mpq_class(3), mpq_class(1, 2), {}, {}});
    ASSERT_TRUE(v.is_scalar());
    EXPECT_EQ(v.scalar_value().constant_value(), mpq_class(9, 2));
    EXPECT_THROW(specialize(aq2, Bindings{{}, mpq_class(0), {}, {}}), ZeroBinding);
}

TEST(Specialize, PartialBindingLeavesResidue) {
    // a q^2 + b with only a bound: symbolic in q and b
    const LaurentABC u = LaurentABC::a().scaled(RatQ::q_pow(2)) + LaurentABC::b();
    const LaurentABC r = specialize(u, Bindings{{}, mpq_class(2), {}, {}});
    EXPECT_EQ(r, LaurentABC(RatQ::q_pow(2) * RatQ(2)) + LaurentABC::b());
}

TEST(Laurent, Examples) {
    EXPECT_EQ(LaurentABC::a() * LaurentABC::a(-1), LaurentABC(1));
    const LaurentABC bb = LaurentABC::b() + LaurentABC::b(-1);
    const LaurentABC cc = LaurentABC::c() + LaurentABC::c(-1);
    LaurentABC expected;
    for (int sb : {1, -1})
        for (int sc : {1, -1}) expected.add_term({0, sb, sc}, RatQ(1));
    EXPECT_EQ(bb * cc, expected);
    EXPECT_TRUE((LaurentABC::a() - LaurentABC::a()).is_zero());
}

TEST(Laurent, RingAxioms) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const LaurentABC u = gen::random_abc(rng);
        const LaurentABC v = gen::random_abc(rng);
        const LaurentABC w = gen::random_abc(rng);
        EXPECT_EQ(u * v, v * u);
        EXPECT_EQ((u * v) * w, u * (v * w));
        EXPECT_EQ(u * (v + w), u * v + u * w);
        const LaurentABC uv = u * v;
        for (const auto& [e, c] : uv.terms()) EXPECT_FALSE(c.is_zero());
    }
}
