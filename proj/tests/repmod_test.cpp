#include "askey/repmod.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace askey;
using namespace askey::gen;

TEST(Module, BuildExamples) {
    const ModuleRep m = build_module(1, 1, 2);
    EXPECT_EQ(m.k(0, 0), 2);
    EXPECT_EQ(m.k(1, 1), mpq_class(1, 2));
    EXPECT_EQ(m.k(0, 1), 0);

    const ModuleRep t = build_module(0, -1, 3);
    EXPECT_EQ(t.k(0, 0), -1);
    EXPECT_TRUE(t.e.is_zero());
    EXPECT_TRUE(t.f.is_zero());

    EXPECT_THROW(build_module(2, 1, 1), ForbiddenSpecialization);
    EXPECT_THROW(build_module(2, 1, -1), ForbiddenSpecialization);
    EXPECT_THROW(build_module(2, 1, 0), ForbiddenSpecialization);
}

TEST(Module, ChevalleyRelations) {
    for (const auto& m : repmod::module_family(5, repmod::standard_q_values()))
        EXPECT_TRUE(repmod::chevalley_check(m).passed()) << repmod::module_tag(m);
}

TEST(Module, CasimirScalar) {
    for (const auto& m : repmod::module_family(5, repmod::standard_q_values()))
        EXPECT_TRUE(repmod::casimir_scalar_check(m).passed()) << repmod::module_tag(m);
    // n = 1, q = 2: q^2 + q^-2 = 17/4
    const ModuleRep m = build_module(1, 1, 2);
    EXPECT_EQ(represent(u::Lambda(), m), QMatrix::identity(2, 2, mpq_class(17, 4)));
    EXPECT_EQ(represent(u::k(1) * u::k(-1), m), QMatrix::identity(2, 2));
}

TEST(Module, RepresentIsHomomorphism) {
    Rng rng(31);
    const ModuleRep m = build_module(3, -1, mpq_class(3, 2));
    for (int n = 0; n < 100; ++n) {
        UElement u, v;
        for (int i = 0; i < 3; ++i) {
            u.add_term({uniform(rng, 0, 2), uniform(rng, -2, 2), uniform(rng, 0, 2)}, random_laurent_q(rng, 2));
            v.add_term({uniform(rng, 0, 2), uniform(rng, -2, 2), uniform(rng, 0, 2)}, random_laurent_q(rng, 2));
        }
        ASSERT_EQ(represent(u * v, m), represent(u, m) * represent(v, m));
    }
}

TEST(Module, PoleAtSpecialization) {
    // 1/(q - 2) has a pole at q = 2
    const UElement u = u::scalar(RatQ(IntPoly(1), IntPoly({-2, 1})));
    EXPECT_THROW(represent(u, build_module(1, 1, 2)), PoleAtSpecialization);
    EXPECT_NO_THROW(represent(u, build_module(1, 1, 3)));
}

TEST(Module, MatrixContextAgreesWithRepresent) {
    const ModuleRep m = build_module(4, 1, mpq_class(-2));
    const MatrixContext ctx{LetterMatrices::from_module(m), {}, {}, {}};
    for (const char* s : {"x", "y", "z", "nx", "ny", "nz", "Lam", "Phi", "e*f - f*e", "x*y*z^2 - K^3"})
        EXPECT_EQ(evaluate_matrix(s, ctx), represent(parse_u(s), m)) << s;
}

TEST(Module, RegistryNumeric) {
    const ModuleRep m22 = build_module(2, 1, 2);
    const ModuleRep m33 = build_module(3, -1, mpq_class(3, 2));
    for (const auto& ident : full_registry()) {
        EXPECT_TRUE(repmod::numeric_identity_check(ident, m22).passed()) << ident.id;
        EXPECT_TRUE(repmod::numeric_identity_check(ident, m33).passed()) << ident.id;
    }
}

TEST(Module, MutatedIdentityDetected) {
    const ModuleRep m = build_module(2, 1, 2);
    for (const auto& ident : u_identity_registry(Mutation::RelationSignFlip)) {
        if (ident.id == "prod.xy") {
            EXPECT_FALSE(repmod::numeric_identity_check(ident, m).passed());
        }
    }
    for (const auto& ident : grading_registry()) {
        if (ident.id == "firsttable.x.deg1") {
            EXPECT_FALSE(repmod::numeric_identity_check(ident, m, Mutation::WrongGradingDegree).passed());
        }
    }
}

TEST(Module, NaturalNumeric) {
    const ModuleRep m = build_module(2, 1, 2);
    for (const auto& c : repmod::natural_checks(m, 3, 5, 7)) EXPECT_TRUE(c.passed()) << c.id;
    const ModuleRep m2 = build_module(3, -1, mpq_class(3, 2));
    for (const auto& c : repmod::natural_checks(m2, mpq_class(-1, 2), 2, mpq_class(5, 3))) EXPECT_TRUE(c.passed()) << c.id;
}

TEST(Module, NaturalNumericMutations) {
    const ModuleRep m = build_module(2, 1, 2);
    auto failed = [](const std::vector<Check>& cs, const std::string& id) {
        for (const auto& c : cs)
            if (c.id == id) return !c.passed();
        return false;
    };
    EXPECT_TRUE(failed(repmod::natural_checks(m, 3, 5, 7, Mutation::DroppedOmegaTerm), "module.main2.omega"));
    EXPECT_TRUE(failed(repmod::natural_checks(m, 3, 5, 7, Mutation::PerturbedA), "module.main.relation2"));
}

TEST(Module, DiagramsNumeric) {
    const ModuleRep m = build_module(2, -1, mpq_class(3, 2));
    for (const auto& c : repmod::diagram_checks(m, 3, mpq_class(-2, 5), 7)) EXPECT_TRUE(c.passed()) << c.id << c.note;
}
