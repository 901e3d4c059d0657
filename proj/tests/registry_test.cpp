#include "askey/registry.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace askey;

TEST(Registry, IdsUnique) {
    std::set<std::string> ids;
    for (const auto& i : full_registry()) EXPECT_TRUE(ids.insert(i.id).second) << i.id;
}

TEST(Registry, CalculusSize) {
    // prod, double, qcom, xvx, xnxcom, dcas, nxny, comnxny
    EXPECT_EQ(detail::calculus_identities(Mutation::None).size(), 42u);
    EXPECT_EQ(detail::sixforms_identities().size(), 6u);
    EXPECT_EQ(grading_registry().size(), 35u);
}

TEST(Registry, AllSymbolicIdentitiesHold) {
    for (const auto& i : full_registry()) {
        const Check c = check_identity(i);
        EXPECT_TRUE(c.passed()) << i.id << ": " << c.residual;
    }
}

TEST(Registry, SignFlipDetected) {
    int failures = 0;
    for (const auto& i : u_identity_registry(Mutation::RelationSignFlip))
        if (!check_identity(i).passed()) ++failures;
    EXPECT_EQ(failures, 1);
}

TEST(Registry, WrongDegreeDetected) {
    int failures = 0;
    for (const auto& i : grading_registry())
        if (!check_identity(i, Mutation::WrongGradingDegree).passed()) ++failures;
    EXPECT_GT(failures, 0);
}
