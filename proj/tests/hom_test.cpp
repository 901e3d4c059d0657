#include "askey/hom.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace askey;
using namespace askey::gen;

namespace {

const RatQ q = RatQ::q();
const RatQ qi = RatQ::q_pow(-1);
const RatQ d1 = q - qi;
const RatQ d2 = RatQ::q_pow(2) - RatQ::q_pow(-2);

bool all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.passed()) return false;
    return true;
}

const Check& find(const std::vector<Check>& cs, const std::string& id) {
    for (const auto& c : cs)
        if (c.id == id) return c;
    throw std::runtime_error("no check " + id);
}

} // namespace

TEST(Natural, Generators) {
    EXPECT_EQ(natural(delta::A()), parse_tensor("x*a + y*a^-1 + nz*b*c^-1"));
    EXPECT_EQ(natural(delta::B()), parse_tensor("y*b + z*b^-1 + nx*c*a^-1"));
    EXPECT_EQ(natural(delta::C()), parse_tensor("z*c + x*c^-1 + ny*a*b^-1"));
    EXPECT_EQ(natural(delta::one()), tensor_scalar(LaurentABC(1)));
    EXPECT_EQ(natural(delta::alpha()), parse_tensor(hom::alpha_form));
    // the off-diagonal term of A written as a commutator
    EXPECT_EQ(natural(delta::A()), parse_tensor("x*a + y*a^-1 + (x*y - y*x)/(q - q^-1)*b*c^-1"));
}

TEST(Natural, TheoremMain) {
    const auto cs = hom::check_theorem_main();
    ASSERT_EQ(cs.size(), 6u);
    for (const auto& c : cs) EXPECT_TRUE(c.passed()) << c.id << ": " << c.residual;
}

TEST(Natural, TheoremMain2) {
    const Check c = hom::check_theorem_main2();
    EXPECT_TRUE(c.passed()) << c.residual;
}

TEST(Natural, MutationDroppedOmegaTerm) {
    const Check c = hom::check_theorem_main2(NaturalImages::standard(), Mutation::DroppedOmegaTerm);
    EXPECT_FALSE(c.passed());
    EXPECT_EQ(c.residual, to_string(tensor(u::Lambda() * u::Lambda())));
}

TEST(Natural, MutationPerturbedA) {
    const auto cs = hom::check_theorem_main(NaturalImages::mutated(Mutation::PerturbedA));
    EXPECT_FALSE(find(cs, "main.relation2").passed());
    EXPECT_FALSE(find(cs, "main.relation3").passed());
}

TEST(Natural, PropMotiv) {
    const std::vector<std::array<mpq_class, 3>> triples = {
        {mpq_class(1), mpq_class(1), mpq_class(1)},
        {mpq_class(2), mpq_class(3), mpq_class(5)},
        {mpq_class(-1, 2), mpq_class(7, 3), mpq_class(-4)},
    };
    for (const auto& [a, b, c] : triples) EXPECT_TRUE(all_pass(hom::check_prop_motiv(a, b, c)));
    EXPECT_THROW(hom::check_prop_motiv(0, 1, 1), ZeroBinding);
    EXPECT_THROW(hom::check_prop_motiv(1, 1, 0), ZeroBinding);
}

TEST(Natural, Homomorphism) {
    Rng rng(4242);
    for (int n = 0; n < 100; ++n) {
        const DeltaElement u = random_delta(rng), v = random_delta(rng);
        ASSERT_EQ(natural(u * v), natural(u) * natural(v));
    }
}

TEST(Natural, ReorderingRulesOracle) {
    using namespace delta;
    const TensorElement a = natural(A()), b = natural(B()), c = natural(C());
    const TensorElement al = natural(alpha()), be = natural(beta()), ga = natural(gamma());
    EXPECT_EQ(b * a, (a * b).scaled(RatQ::q_pow(2)) - ga.scaled(q * d1) + c.scaled(q * d2));
    EXPECT_EQ(c * b, (b * c).scaled(RatQ::q_pow(2)) - al.scaled(q * d1) + a.scaled(q * d2));
    EXPECT_EQ(c * a, (a * c).scaled(RatQ::q_pow(-2)) + be.scaled(qi * d1) - b.scaled(qi * d2));
}

TEST(Natural, CentralImages) {
    for (const auto& g : {delta::alpha(), delta::beta(), delta::gamma(), delta::Omega()}) {
        const TensorElement v = natural(g);
        for (const auto& w : {tensor(u::e()), tensor(u::f()), tensor(u::k(1)), tensor(u::k(-1))})
            EXPECT_EQ(v * w, w * v);
    }
}

TEST(Natural, GradedImages) {
    EXPECT_EQ(degrees(natural(delta::A())), (std::vector<int>{0, 1}));
    EXPECT_EQ(degrees(natural(delta::B())), (std::vector<int>{-1, 0}));
    EXPECT_EQ(degrees(natural(delta::C())), (std::vector<int>{-1, 0, 1}));
}

TEST(Natural, Diagrams) {
    EXPECT_EQ(hom::diagram_monomials(2, 1).size(), 27u * 4u + 27u - 4u);
    EXPECT_EQ(hom::diagram_monomials(2, 0).size(), 27u + 27u - 1u);
    const auto cs = hom::check_diagrams(2, 0);
    ASSERT_EQ(cs.size(), 2u);
    for (const auto& c : cs) EXPECT_TRUE(c.passed()) << c.id << " " << c.note << ": " << c.residual;
}

TEST(Natural, DiagramGenerators) {
    using namespace delta;
    EXPECT_EQ(natural(sigma(A())), sigma_tilde(natural(A())));
    EXPECT_EQ(natural(sigma(gamma())), sigma_tilde(natural(gamma())));
    EXPECT_EQ(natural(rho(C())), rho_tilde(natural(C())));
    EXPECT_EQ(natural(rho(C())), natural(A()));
}

TEST(Injectivity, DegreeOne) {
    const auto r = hom::injectivity_rank(1, std::nullopt);
    EXPECT_EQ(r.monomials, 7u);
    EXPECT_EQ(r.rank, 7u);
}

TEST(Injectivity, SymbolicDegreeTwo) {
    const auto r = hom::injectivity_rank(2, std::nullopt);
    EXPECT_EQ(r.monomials, 28u);
    EXPECT_TRUE(r.full());
}

TEST(Injectivity, SpecializedDegreeThree) {
    for (const mpq_class& qv : {mpq_class(2), mpq_class(3, 2)}) {
        const auto r = hom::injectivity_rank(3, qv);
        EXPECT_EQ(r.monomials, 84u);
        EXPECT_TRUE(r.full()) << qv.get_str();
    }
}

TEST(Injectivity, DuplicatedImageDetected) {
    const auto r = hom::injectivity_rank(1, mpq_class(2), NaturalImages::mutated(Mutation::DuplicatedImage));
    EXPECT_EQ(r.monomials, 7u);
    EXPECT_LT(r.rank, 7u);
    EXPECT_THROW(hom::injectivity_rank(2, mpq_class(1)), ForbiddenSpecialization);
}

TEST(Injectivity, SeededQ) {
    for (std::uint64_t s = 0; s < 50; ++s) EXPECT_NO_THROW(check_q_value(hom::q_from_seed(s)));
    EXPECT_EQ(hom::q_from_seed(7), hom::q_from_seed(7));
}
