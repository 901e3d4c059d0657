#include "askey/tensor.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace askey;
using namespace askey::gen;

namespace {

const RatQ q = RatQ::q();
const RatQ qi = RatQ::q_pow(-1);

LaurentABC m(int a, int b, int c) { return LaurentABC::monomial({a, b, c}); }
TensorElement T(const UElement& v, const LaurentABC& l = LaurentABC(1)) { return tensor(v, l); }

TensorElement tpow(const TensorElement& v, int n) {
    TensorElement r = tensor_scalar(LaurentABC(1));
    for (int i = 0; i < n; ++i) r *= v;
    return r;
}

TensorElement theta_inv() { return tensor(u::y(), m(-1, 0, 0)); }
TensorElement vartheta_inv() { return tensor(u::y(), m(0, 1, 0)); }

int min_degree(const TensorElement& v) { return degrees(v).front(); }
int max_degree(const TensorElement& v) { return degrees(v).back(); }

} // namespace

TEST(Tensor, Multiplication) {
    EXPECT_EQ(t::theta() * theta_inv(), tensor_scalar(LaurentABC(1)));
    EXPECT_EQ(t::R() * t::vartheta(), (t::vartheta() * t::R()).scaled(RatQ::q_pow(2)));
    EXPECT_EQ(tensor_scalar(m(1, 0, 0)) * T(u::e()), T(u::e(), m(1, 0, 0)));
}

TEST(Tensor, NamedElements) {
    EXPECT_EQ(t_named("Anat"),
              T(u::x(), m(1, 0, 0)) + T(u::y(), m(-1, 0, 0)) + T(u::nu_z(), m(0, 1, -1)));
    EXPECT_EQ(t_named("R"), T(u::nu_z(), m(0, 1, -1)) - T(u::nu_z() * u::y_inv(), m(1, 0, 0)).scaled(qi));
    EXPECT_EQ(t_named("theta"), T(u::y_inv(), m(1, 0, 0)));
    // alternate commutator form of nu_z, nu_x, nu_y in the images
    const RatQ dinv = q_minus_qinv().inv();
    const UElement x = u::x(), y = u::y(), z = u::z();
    EXPECT_EQ(t::Cnat(), T(z, m(0, 0, 1)) + T(x, m(0, 0, -1)) + T((z * x - x * z).scaled(dinv), m(1, -1, 0)));
    EXPECT_EQ(t::Bnat(), T(y, m(0, 1, 0)) + T(z, m(0, -1, 0)) + T((y * z - z * y).scaled(dinv), m(-1, 0, 1)));
    EXPECT_THROW(t_named("nope"), AlgebraError);
}

TEST(Tensor, Omeganat) {
    const LaurentABC sa = m(1, 0, 0) + m(-1, 0, 0), sb = m(0, 1, 0) + m(0, -1, 0), sc = m(0, 0, 1) + m(0, 0, -1);
    const RatQ s = q + qi;
    const TensorElement expected = tensor_scalar(LaurentABC(s * s)) - tensor_scalar(sa * sa) - tensor_scalar(sb * sb) -
                                   tensor_scalar(sc * sc) - T(u::Lambda(), sa * sb * sc) -
                                   T(u::Lambda() * u::Lambda());
    EXPECT_EQ(t::Omeganat(), expected);
}

TEST(Tensor, AbcTable) {
    const UElement y = u::y(), yi = u::y_inv(), nx = u::nu_x(), nz = u::nu_z(), lam = u::Lambda();
    const TensorElement A = t::Anat(), B = t::Bnat(), C = t::Cnat();

    EXPECT_TRUE(t_grade_project(A, -1).is_zero());
    EXPECT_EQ(t_grade_project(A, 0), T(y, m(-1, 0, 0)) + T(yi, m(1, 0, 0)));
    EXPECT_EQ(t_grade_project(A, 1), T(nz, m(0, 1, -1)) - T(nz * yi, m(1, 0, 0)).scaled(qi));

    EXPECT_EQ(t_grade_project(B, -1), T(nx, m(-1, 0, 1)) - T(yi * nx, m(0, -1, 0)).scaled(qi));
    EXPECT_EQ(t_grade_project(B, 0), T(y, m(0, 1, 0)) + T(yi, m(0, -1, 0)));
    EXPECT_TRUE(t_grade_project(B, 1).is_zero());

    EXPECT_EQ(t_grade_project(C, -1),
              T(yi * yi * nx, m(1, -1, 0)).scaled(RatQ::q_pow(-2)) - T(yi * nx, m(0, 0, 1)).scaled(qi));
    EXPECT_EQ(t_grade_project(C, 0), T(yi, m(0, 0, 1) + m(0, 0, -1)) + T(yi * lam, m(1, -1, 0)) -
                                         T(yi * yi, m(1, -1, 0)).scaled(q + qi));
    EXPECT_EQ(t_grade_project(C, 1),
              T(nz * yi * yi, m(1, -1, 0)).scaled(RatQ::q_pow(-2)) - T(nz * yi, m(0, 0, -1)).scaled(qi));

    for (const auto& v : {A, B, C}) {
        EXPECT_GE(min_degree(v), -1);
        EXPECT_LE(max_degree(v), 1);
    }
    for (const auto& v : {t::alphanat(), t::betanat(), t::gammanat(), t::Omeganat()})
        EXPECT_EQ(degrees(v), std::vector<int>{0});
}

TEST(Tensor, CommLemma) {
    const TensorElement R = t::R(), L = t::L(), th = t::theta(), vt = t::vartheta();
    for (const auto& v : {R, L, th, vt}) EXPECT_FALSE(v.is_zero());
    EXPECT_EQ(R * vt, (vt * R).scaled(RatQ::q_pow(2)));
    EXPECT_EQ(L * th, (th * L).scaled(RatQ::q_pow(-2)));
    EXPECT_EQ(t_grade_project(t::Anat(), 0), th + theta_inv());
    EXPECT_EQ(t_grade_project(t::Bnat(), 0), vt + vartheta_inv());
    EXPECT_EQ(t_grade_project(t::Cnat(), 1), (R * vt).scaled(-qi));
    EXPECT_EQ(t_grade_project(t::Cnat(), -1), (th * L).scaled(-qi));
    EXPECT_EQ(t::R(), t_grade_project(t::Anat(), 1));
    EXPECT_EQ(t::L(), t_grade_project(t::Bnat(), -1));
}

TEST(Tensor, AprojLemma) {
    const TensorElement R = t::R(), L = t::L(), th = t::theta(), vt = t::vartheta();
    for (int i = 0; i <= 3; ++i) {
        const TensorElement Ai = tpow(t::Anat(), i), Bi = tpow(t::Bnat(), i), Ci = tpow(t::Cnat(), i);
        EXPECT_GE(min_degree(Ai), 0);
        EXPECT_LE(max_degree(Ai), i);
        EXPECT_EQ(t_grade_project(Ai, 0), tpow(th + theta_inv(), i));
        EXPECT_EQ(t_grade_project(Ai, i), tpow(R, i));

        EXPECT_GE(min_degree(Bi), -i);
        EXPECT_LE(max_degree(Bi), 0);
        EXPECT_EQ(t_grade_project(Bi, -i), tpow(L, i));
        EXPECT_EQ(t_grade_project(Bi, 0), tpow(vt + vartheta_inv(), i));

        EXPECT_GE(min_degree(Ci), -i);
        EXPECT_LE(max_degree(Ci), i);
        const RatQ sign = i % 2 ? RatQ(-1) : RatQ(1);
        EXPECT_EQ(t_grade_project(Ci, -i), (tpow(L, i) * tpow(th, i)).scaled(sign * RatQ::q_pow(i * i)));
        EXPECT_EQ(t_grade_project(Ci, i), (tpow(R, i) * tpow(vt, i)).scaled(sign * RatQ::q_pow(-i * i)));
    }
}

TEST(Tensor, ThreeprojLemma) {
    const TensorElement R = t::R(), L = t::L(), th = t::theta(), vt = t::vartheta();
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j)
            for (int k = 0; i + j + k <= 4; ++k) {
                const TensorElement v = tpow(t::Anat(), i) * tpow(t::Bnat(), j) * tpow(t::Cnat(), k);
                EXPECT_GE(min_degree(v), -j - k);
                EXPECT_LE(max_degree(v), i + k);
                const RatQ sign = k % 2 ? RatQ(-1) : RatQ(1);
                const TensorElement low =
                    (tpow(L, j + k) *
                     tpow(th.scaled(RatQ::q_pow(2 * j + 2 * k)) + theta_inv().scaled(RatQ::q_pow(-2 * j - 2 * k)), i) *
                     tpow(th, k))
                        .scaled(sign * RatQ::q_pow(k * k));
                const TensorElement high =
                    (tpow(R, i + k) *
                     tpow(vt.scaled(RatQ::q_pow(-2 * k)) + vartheta_inv().scaled(RatQ::q_pow(2 * k)), j) *
                     tpow(vt, k))
                        .scaled(sign * RatQ::q_pow(-k * k));
                EXPECT_EQ(t_grade_project(v, -j - k), low) << i << j << k;
                EXPECT_EQ(t_grade_project(v, i + k), high) << i << j << k;
            }
}

TEST(SigmaTilde, Generators) {
    const LaurentABC u1 = m(-1, -1, 1);
    EXPECT_EQ(sigma_tilde(T(u::e())), T(u::f(), u1));
    EXPECT_EQ(sigma_tilde(T(u::f())), T(u::e(), m(1, 1, -1)));
    EXPECT_EQ(sigma_tilde(T(u::k(1))), T(u::k(-1)));
    EXPECT_EQ(sigma_tilde(T(u::k(-1))), T(u::k(1)));
    EXPECT_EQ(sigma_tilde(tensor_scalar(m(1, 0, 0))), tensor_scalar(m(0, 1, 0)));
    EXPECT_EQ(sigma_tilde(tensor_scalar(m(0, 0, 1))), tensor_scalar(m(0, 0, 1)));
}

TEST(SigmaTilde, AutformTable) {
    const UElement y = u::y(), yi = u::y_inv(), nx = u::nu_x(), nz = u::nu_z(), lam = u::Lambda();
    const LaurentABC w = m(-1, -1, 1), wi = m(1, 1, -1);
    EXPECT_EQ(sigma_tilde(T(u::x())), T(y) + T(nx, w));
    EXPECT_EQ(sigma_tilde(T(y)), T(yi));
    EXPECT_EQ(sigma_tilde(T(u::z())), T(y) + T(nz, wi));
    EXPECT_EQ(sigma_tilde(T(nx)), T(nz * yi, wi).scaled(-qi));
    EXPECT_EQ(sigma_tilde(T(u::nu_y())),
              T(nz * y, wi).scaled(-q) + T(y * lam) - T(y * y).scaled(q + qi) - T(y * nx, w).scaled(q));
    EXPECT_EQ(sigma_tilde(T(nz)), T(yi * nx, w).scaled(-qi));
    EXPECT_EQ(sigma_tilde(T(lam)), T(lam));
}

TEST(SigmaTilde, Abgam) {
    EXPECT_EQ(sigma_tilde(t::alphanat()), t::betanat());
    EXPECT_EQ(sigma_tilde(t::betanat()), t::alphanat());
    EXPECT_EQ(sigma_tilde(t::gammanat()), t::gammanat());
    EXPECT_EQ(sigma_tilde(t::Anat()), t::Bnat());
    EXPECT_EQ(sigma_tilde(t::Bnat()), t::Anat());
}

TEST(SigmaTilde, InvolutionAndHomomorphism) {
    Rng rng(4242);
    for (int n = 0; n < 100; ++n) {
        const TensorElement u = random_tensor(rng), v = random_tensor(rng);
        ASSERT_EQ(sigma_tilde(sigma_tilde(u)), u);
        ASSERT_EQ(sigma_tilde(u * v), sigma_tilde(u) * sigma_tilde(v));
    }
}

TEST(SigmaTilde, SwapsDegrees) {
    Rng rng(5);
    for (int n = 0; n < 30; ++n) {
        const TensorElement v = random_tensor(rng);
        for (int deg : degrees(v))
            EXPECT_EQ(sigma_tilde(t_grade_project(v, deg)), t_grade_project(sigma_tilde(v), -deg));
    }
}

TEST(RhoTilde, Generators) {
    EXPECT_EQ(rho_tilde(T(u::x())), T(u::y()));
    EXPECT_EQ(rho_tilde(T(u::y())), T(u::z()));
    EXPECT_EQ(rho_tilde(T(u::z())), T(u::x()));
    EXPECT_EQ(rho_tilde(tensor_scalar(m(1, 2, 3))), tensor_scalar(m(3, 1, 2)));
    EXPECT_EQ(rho_tilde(T(u::Lambda())), T(u::Lambda()));
    EXPECT_THROW(rho_tilde(T(u::y_inv())), NotInUPrime);
}

TEST(RhoTilde, Rhomove) {
    EXPECT_EQ(rho_tilde(t::Anat()), t::Bnat());
    EXPECT_EQ(rho_tilde(t::Bnat()), t::Cnat());
    EXPECT_EQ(rho_tilde(t::Cnat()), t::Anat());
    EXPECT_EQ(rho_tilde(t::alphanat()), t::betanat());
    EXPECT_EQ(rho_tilde(t::betanat()), t::gammanat());
    EXPECT_EQ(rho_tilde(t::gammanat()), t::alphanat());
    EXPECT_EQ(rho_tilde(T(u::nu_x())), T(u::nu_y()));
    EXPECT_EQ(rho_tilde(T(u::nu_y())), T(u::nu_z()));
    EXPECT_EQ(rho_tilde(T(u::nu_z())), T(u::nu_x()));
}

TEST(RhoTilde, OrderThreeAndHomomorphism) {
    Rng rng(31337);
    for (int n = 0; n < 100; ++n) {
        const TensorElement u = random_uprime(rng), v = random_uprime(rng);
        ASSERT_EQ(rho_tilde(rho_tilde(rho_tilde(u))), u);
        if (n < 30) {
            ASSERT_EQ(rho_tilde(u * v), rho_tilde(u) * rho_tilde(v));
        }
    }
}
