#pragma once

#include "askey/delta_action.hpp"
#include "askey/equitable.hpp"
#include "askey/hom.hpp"
#include "askey/linalg.hpp"
#include "askey/mutation.hpp"
#include "askey/omega_basis.hpp"
#include "askey/random.hpp"
#include "askey/registry.hpp"
#include "askey/repmod.hpp"
#include "askey/report.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace askey {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int bound = 2;          // injectivity degree bound (symbolic); specialized runs use bound + 1
    int central_degree = 1; // diagram monomials compared exactly beyond the pure ones
    int random_count = 100; // random elements per property check
    Mutation mutation = Mutation::None;
};

namespace suites {

/// Accumulates checks; each one is charged the wall time since the previous.
class Checks {
public:
    template <class T>
    void eq(std::string id, const T& stated, const T& computed, std::string note = {}) {
        push(equality_check(std::move(id), stated, computed, std::move(note)));
    }
    void truth(std::string id, bool ok, std::string note = {}) { push(bool_check(std::move(id), ok, std::move(note))); }
    void push(Check c) {
        const auto now = std::chrono::steady_clock::now();
        if (c.ms == 0.0) c.ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        out_.push_back(std::move(c));
    }
    void push(std::vector<Check> cs) {
        for (auto& c : cs) out_.push_back(std::move(c));
        last_ = std::chrono::steady_clock::now();
    }
    std::vector<Check> take() { return std::move(out_); }

private:
    std::vector<Check> out_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

/// One check standing for many instances: passes iff all do, and reports the
/// first failure.
inline Check aggregate(std::string id, const std::vector<Check>& parts, const std::string& unit) {
    Check out{std::move(id), Status::Pass, {}, std::to_string(parts.size()) + " " + unit, 0.0};
    for (const auto& p : parts) {
        out.ms += p.ms;
        if (!p.passed() && out.status == Status::Pass) {
            out.status = Status::Fail;
            out.residual = p.residual;
            out.note = p.note;
        }
    }
    return out;
}

namespace detail {

inline TensorElement tpow(const TensorElement& v, int n) {
    TensorElement r = tensor_scalar(LaurentABC(1));
    for (int i = 0; i < n; ++i) r *= v;
    return r;
}

inline TensorElement T(const UElement& v, const LaurentABC& l = LaurentABC(1)) { return tensor(v, l); }
inline LaurentABC m(int a, int b, int c) { return LaurentABC::monomial({a, b, c}); }

inline std::size_t pbw_rank(const std::vector<UElement>& vs) {
    std::map<PbwMono, std::size_t> col;
    for (const auto& v : vs)
        for (const auto& [mono, c] : v.terms()) col.try_emplace(mono, 0);
    std::size_t idx = 0;
    for (auto& [mono, n] : col) n = idx++;
    Matrix<RatQ> a(vs.size(), std::vector<RatQ>(col.size()));
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (const auto& [mono, c] : vs[r].terms()) a[r][col.at(mono)] = c;
    return rank_over_ratq(a);
}

} // namespace detail

// ---------------------------------------------------------------------------

inline std::vector<Check> u_identities(const SuiteOptions& opt) {
    Checks out;
    for (const auto& ident : u_identity_registry(opt.mutation)) out.push(check_identity(ident, opt.mutation));

    const UElement lam = u::Lambda();
    const std::array<std::pair<const char*, UElement>, 6> gens{{
        {"e", u::e()}, {"f", u::f()}, {"k", u::k(1)}, {"x", u::x()}, {"z", u::z()}, {"ny", u::nu_y()}}};
    for (const auto& [name, v] : gens) out.eq(std::string("u.lambda-central.") + name, lam * v, v * lam);

    gen::Rng rng(opt.seed);
    const std::array<UElement, 7> letters{u::e(), u::f(), u::k(1), u::k(-1), u::x(), u::z(), u::nu_y()};
    bool confluent = true;
    std::string at;
    for (int n = 0; n < 2 * opt.random_count && confluent; ++n) {
        const int len = gen::uniform(rng, 1, 6);
        std::vector<UElement> word;
        for (int i = 0; i < len; ++i)
            word.push_back(letters[gen::uniform(rng, 0, 6)].scaled(gen::random_laurent_q(rng, 1)));
        UElement left = u::one(), right = u::one();
        for (const auto& w : word) left = left * w;
        for (auto it = word.rbegin(); it != word.rend(); ++it) right = *it * right;
        if (left != right) {
            confluent = false;
            at = "word " + std::to_string(n);
        }
    }
    out.truth("u.confluence", confluent,
              confluent ? std::to_string(2 * opt.random_count) + " random words, both association orders" : at);

    bool equitable_ok = true;
    for (int n = 0; n < opt.random_count / 2 && equitable_ok; ++n) {
        UElement v;
        for (int i = 0; i < 3; ++i) v += letters[gen::uniform(rng, 0, 6)] * letters[gen::uniform(rng, 0, 6)];
        equitable_ok = from_equitable(to_equitable(v)) == v;
    }
    out.truth("u.equitable-round-trip", equitable_ok);
    out.truth("u.uprime.y-inverse", !in_u_prime(u::y_inv()));
    out.truth("u.uprime.ny", in_u_prime(u::nu_y()));
    return out.take();
}

// ---------------------------------------------------------------------------

inline std::vector<Check> grading(const SuiteOptions& opt) {
    using detail::m;
    using detail::T;
    using detail::tpow;
    Checks out;
    for (const auto& ident : grading_registry()) out.push(check_identity(ident, opt.mutation));

    const int shift = opt.mutation == Mutation::WrongGradingDegree ? 1 : 0;
    auto proj = [shift](const TensorElement& v, int n) { return t_grade_project(v, n + shift); };
    auto uproj = [shift](const UElement& v, int n) { return grade_project(v, n + shift); };

    const RatQ q = RatQ::q(), qi = RatQ::q_pow(-1);
    const UElement y = u::y(), yi = u::y_inv(), nx = u::nu_x(), nz = u::nu_z(), lam = u::Lambda();
    const TensorElement A = t::Anat(), B = t::Bnat(), C = t::Cnat(), zero;
    const TensorElement R = t::R(), L = t::L(), th = t::theta(), vt = t::vartheta();
    const TensorElement th_inv = T(y, m(-1, 0, 0)), vt_inv = T(y, m(0, 1, 0));

    out.eq("grading.abctable.A.deg-1", zero, proj(A, -1));
    out.eq("grading.abctable.A.deg0", T(y, m(-1, 0, 0)) + T(yi, m(1, 0, 0)), proj(A, 0));
    out.eq("grading.abctable.A.deg1", T(nz, m(0, 1, -1)) - T(nz * yi, m(1, 0, 0)).scaled(qi), proj(A, 1));
    out.eq("grading.abctable.B.deg-1", T(nx, m(-1, 0, 1)) - T(yi * nx, m(0, -1, 0)).scaled(qi), proj(B, -1));
    out.eq("grading.abctable.B.deg0", T(y, m(0, 1, 0)) + T(yi, m(0, -1, 0)), proj(B, 0));
    out.eq("grading.abctable.B.deg1", zero, proj(B, 1));
    out.eq("grading.abctable.C.deg-1",
           T(yi * yi * nx, m(1, -1, 0)).scaled(RatQ::q_pow(-2)) - T(yi * nx, m(0, 0, 1)).scaled(qi), proj(C, -1));
    out.eq("grading.abctable.C.deg0",
           T(yi, m(0, 0, 1) + m(0, 0, -1)) + T(yi * lam, m(1, -1, 0)) - T(yi * yi, m(1, -1, 0)).scaled(q + qi),
           proj(C, 0));
    out.eq("grading.abctable.C.deg1",
           T(nz * yi * yi, m(1, -1, 0)).scaled(RatQ::q_pow(-2)) - T(nz * yi, m(0, 0, -1)).scaled(qi), proj(C, 1));
    for (const auto& [name, v] : {std::pair{"A", A}, std::pair{"B", B}, std::pair{"C", C}})
        out.eq(std::string("grading.abctable.") + name + ".outside", v,
               proj(v, -1) + proj(v, 0) + proj(v, 1));
    for (const auto& [name, v] : {std::pair{"alpha", t::alphanat()}, std::pair{"beta", t::betanat()},
                                  std::pair{"gamma", t::gammanat()}, std::pair{"Omega", t::Omeganat()}})
        out.eq(std::string("grading.abctable.") + name + ".homogeneous", v, proj(v, 0));

    out.truth("grading.comm.nonzero", !R.is_zero() && !L.is_zero() && !th.is_zero() && !vt.is_zero());
    out.eq("grading.comm.rl1", (vt * R).scaled(RatQ::q_pow(2)), R * vt);
    out.eq("grading.comm.rl2", (th * L).scaled(RatQ::q_pow(-2)), L * th);
    out.eq("grading.comm.A0", th + th_inv, proj(A, 0));
    out.eq("grading.comm.B0", vt + vt_inv, proj(B, 0));
    out.eq("grading.comm.A1", R, proj(A, 1));
    out.eq("grading.comm.B-1", L, proj(B, -1));
    out.eq("grading.comm.rl3.high", (R * vt).scaled(-qi), proj(C, 1));
    out.eq("grading.comm.rl3.low", (th * L).scaled(-qi), proj(C, -1));

    for (int i = 0; i <= 3; ++i) {
        const std::string tag = "grading.aproj.i=" + std::to_string(i);
        const TensorElement Ai = tpow(A, i), Bi = tpow(B, i), Ci = tpow(C, i);
        const RatQ sign = i % 2 ? RatQ(-1) : RatQ(1);
        out.truth(tag + ".range", degrees(Ai).front() >= 0 && degrees(Ai).back() <= i &&
                                      degrees(Bi).front() >= -i && degrees(Bi).back() <= 0 &&
                                      degrees(Ci).front() >= -i && degrees(Ci).back() <= i);
        out.eq(tag + ".A0", tpow(th + th_inv, i), proj(Ai, 0));
        out.eq(tag + ".Ai", tpow(R, i), proj(Ai, i));
        out.eq(tag + ".B-i", tpow(L, i), proj(Bi, -i));
        out.eq(tag + ".B0", tpow(vt + vt_inv, i), proj(Bi, 0));
        out.eq(tag + ".C-i", (tpow(L, i) * tpow(th, i)).scaled(sign * RatQ::q_pow(i * i)), proj(Ci, -i));
        out.eq(tag + ".Ci", (tpow(R, i) * tpow(vt, i)).scaled(sign * RatQ::q_pow(-i * i)), proj(Ci, i));
    }

    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j)
            for (int k = 0; i + j + k <= 4; ++k) {
                const std::string tag =
                    "grading.threeproj.ijk=" + std::to_string(i) + std::to_string(j) + std::to_string(k);
                const TensorElement v = tpow(A, i) * tpow(B, j) * tpow(C, k);
                const RatQ sign = k % 2 ? RatQ(-1) : RatQ(1);
                const TensorElement low =
                    (tpow(L, j + k) *
                     tpow(th.scaled(RatQ::q_pow(2 * j + 2 * k)) + th_inv.scaled(RatQ::q_pow(-2 * j - 2 * k)), i) *
                     tpow(th, k))
                        .scaled(sign * RatQ::q_pow(k * k));
                const TensorElement high =
                    (tpow(R, i + k) * tpow(vt.scaled(RatQ::q_pow(-2 * k)) + vt_inv.scaled(RatQ::q_pow(2 * k)), j) *
                     tpow(vt, k))
                        .scaled(sign * RatQ::q_pow(-k * k));
                out.truth(tag + ".range", degrees(v).front() >= -j - k && degrees(v).back() <= i + k);
                out.eq(tag + ".low", low, proj(v, -j - k));
                out.eq(tag + ".high", high, proj(v, i + k));
            }

    // Spanning sets of U_n and U_-n at exponent bound 2.
    for (int n = 0; n <= 2; ++n) {
        std::vector<UElement> alt_pos, alt_neg, un_pos, un_neg;
        for (int s = -2; s <= 2; ++s)
            for (int t = 0; t <= 2; ++t) {
                const UElement lt = lam.pow(t);
                alt_pos.push_back(u::e().pow(n) * u::k(s) * lt);
                alt_neg.push_back(u::k(s) * lt * u::f().pow(n));
                un_pos.push_back(nz.pow(n) * u::k(s) * lt);
                un_neg.push_back(u::k(s) * lt * nx.pow(n));
            }
        auto spot = [&](const std::string& id, const std::vector<UElement>& vs, int deg) {
            bool homogeneous = true;
            for (const auto& v : vs) homogeneous = homogeneous && uproj(v, deg) == v;
            const std::size_t r = detail::pbw_rank(vs);
            Check c = bool_check(id, homogeneous && r == vs.size(),
                                 "rank " + std::to_string(r) + " of " + std::to_string(vs.size()) +
                                     (homogeneous ? ", all in degree " : ", not all in degree ") +
                                     std::to_string(deg));
            out.push(std::move(c));
        };
        const std::string ns = std::to_string(n);
        spot("grading.basisalt.n=" + ns, alt_pos, n);
        spot("grading.basisalt.n=-" + ns, alt_neg, -n);
        spot("grading.unbasis.n=" + ns, un_pos, n);
        spot("grading.unbasis.n=-" + ns, un_neg, -n);
    }

    gen::Rng rng(opt.seed);
    bool mult = true;
    for (int n = 0; n < opt.random_count / 2 && mult; ++n) {
        const int m1 = gen::uniform(rng, -2, 2), m2 = gen::uniform(rng, -2, 2);
        const UElement prod = gen::random_homogeneous(rng, m1) * gen::random_homogeneous(rng, m2);
        mult = uproj(prod, m1 + m2) == prod;
    }
    out.truth("grading.multiplicative", mult, std::to_string(opt.random_count / 2) + " random pairs");

    bool weights = uproj(nx, -1) == nx && uproj(y, 0) == y && uproj(yi, 0) == yi && uproj(nz, 1) == nz;
    out.truth("grading.weightlist", weights);
    return out.take();
}

// ---------------------------------------------------------------------------

inline std::vector<Check> tensor(const SuiteOptions& opt) {
    using detail::m;
    using detail::T;
    Checks out;
    const RatQ q = RatQ::q(), qi = RatQ::q_pow(-1);
    const UElement y = u::y(), yi = u::y_inv(), nx = u::nu_x(), nz = u::nu_z(), lam = u::Lambda();
    const LaurentABC w = m(-1, -1, 1), wi = m(1, 1, -1);

    const LaurentABC sa = m(1, 0, 0) + m(-1, 0, 0), sb = m(0, 1, 0) + m(0, -1, 0), sc = m(0, 0, 1) + m(0, 0, -1);
    const RatQ s = q + qi;
    out.eq("tensor.omeganat",
           tensor_scalar(LaurentABC(s * s)) - tensor_scalar(sa * sa) - tensor_scalar(sb * sb) -
               tensor_scalar(sc * sc) - T(lam, sa * sb * sc) - T(lam * lam),
           t::Omeganat());

    out.eq("tensor.sigma.e", T(u::f(), w), sigma_tilde(T(u::e())));
    out.eq("tensor.sigma.f", T(u::e(), wi), sigma_tilde(T(u::f())));
    out.eq("tensor.sigma.k", T(u::k(-1)), sigma_tilde(T(u::k(1))));
    out.eq("tensor.sigma.kinv", T(u::k(1)), sigma_tilde(T(u::k(-1))));
    out.eq("tensor.sigma.a", tensor_scalar(m(0, 1, 0)), sigma_tilde(tensor_scalar(m(1, 0, 0))));
    out.eq("tensor.sigma.c", tensor_scalar(m(0, 0, 1)), sigma_tilde(tensor_scalar(m(0, 0, 1))));

    out.eq("tensor.autform.x", T(y) + T(nx, w), sigma_tilde(T(u::x())));
    out.eq("tensor.autform.y", T(yi), sigma_tilde(T(y)));
    out.eq("tensor.autform.z", T(y) + T(nz, wi), sigma_tilde(T(u::z())));
    out.eq("tensor.autform.nx", T(nz * yi, wi).scaled(-qi), sigma_tilde(T(nx)));
    out.eq("tensor.autform.ny",
           T(nz * y, wi).scaled(-q) + T(y * lam) - T(y * y).scaled(q + qi) - T(y * nx, w).scaled(q),
           sigma_tilde(T(u::nu_y())));
    out.eq("tensor.autform.nz", T(yi * nx, w).scaled(-qi), sigma_tilde(T(nz)));
    out.eq("tensor.autform.Lam", T(lam), sigma_tilde(T(lam)));

    out.eq("tensor.abgam.alpha", t::betanat(), sigma_tilde(t::alphanat()));
    out.eq("tensor.abgam.beta", t::alphanat(), sigma_tilde(t::betanat()));
    out.eq("tensor.abgam.gamma", t::gammanat(), sigma_tilde(t::gammanat()));
    out.eq("tensor.abgam.A", t::Bnat(), sigma_tilde(t::Anat()));
    out.eq("tensor.abgam.B", t::Anat(), sigma_tilde(t::Bnat()));

    out.eq("tensor.rho.x", T(u::y()), rho_tilde(T(u::x())));
    out.eq("tensor.rho.y", T(u::z()), rho_tilde(T(u::y())));
    out.eq("tensor.rho.z", T(u::x()), rho_tilde(T(u::z())));
    out.eq("tensor.rho.abc", tensor_scalar(m(3, 1, 2)), rho_tilde(tensor_scalar(m(1, 2, 3))));
    out.eq("tensor.rhomove.A", t::Bnat(), rho_tilde(t::Anat()));
    out.eq("tensor.rhomove.B", t::Cnat(), rho_tilde(t::Bnat()));
    out.eq("tensor.rhomove.C", t::Anat(), rho_tilde(t::Cnat()));
    out.eq("tensor.rhomove.alpha", t::betanat(), rho_tilde(t::alphanat()));
    out.eq("tensor.rhomove.beta", t::gammanat(), rho_tilde(t::betanat()));
    out.eq("tensor.rhomove.gamma", t::alphanat(), rho_tilde(t::gammanat()));
    out.eq("tensor.rhomove.nx", T(u::nu_y()), rho_tilde(T(nx)));
    out.eq("tensor.rhomove.ny", T(nz), rho_tilde(T(u::nu_y())));
    out.eq("tensor.rhomove.nz", T(nx), rho_tilde(T(nz)));
    out.eq("tensor.rhomove.Lam", T(lam), rho_tilde(T(lam)));

    bool raised = false;
    try {
        (void)rho_tilde(T(yi));
    } catch (const NotInUPrime&) {
        raised = true;
    }
    out.truth("tensor.rho.not-in-uprime", raised, "rho~(y^-1 (x) 1) raises NotInUPrime");

    const std::vector<TensorElement> sigma_gens{T(u::e()), T(u::f()), T(u::k(1)), T(u::k(-1)),
                                                tensor_scalar(m(1, 0, 0)), tensor_scalar(m(0, 1, 0)),
                                                tensor_scalar(m(0, 0, 1))};
    bool ok = true;
    for (const auto& g : sigma_gens) ok = ok && sigma_tilde(sigma_tilde(g)) == g;
    out.truth("tensor.sigma.involution.generators", ok);
    const std::vector<TensorElement> rho_gens{T(u::x()), T(u::y()), T(u::z()), tensor_scalar(m(1, 0, 0)),
                                              tensor_scalar(m(0, 1, 0)), tensor_scalar(m(0, 0, 1))};
    ok = true;
    for (const auto& g : rho_gens) ok = ok && rho_tilde(rho_tilde(rho_tilde(g))) == g;
    out.truth("tensor.rho.order3.generators", ok);

    gen::Rng rng(opt.seed);
    const std::string count = std::to_string(opt.random_count) + " random elements";
    bool inv = true, hom = true;
    for (int n = 0; n < opt.random_count; ++n) {
        const TensorElement a = gen::random_tensor(rng), b = gen::random_tensor(rng);
        inv = inv && sigma_tilde(sigma_tilde(a)) == a;
        hom = hom && sigma_tilde(a * b) == sigma_tilde(a) * sigma_tilde(b);
    }
    out.truth("tensor.sigma.involution.random", inv, count);
    out.truth("tensor.sigma.homomorphism", hom, count);

    bool order = true, rhom = true;
    for (int n = 0; n < opt.random_count; ++n) {
        const TensorElement a = gen::random_uprime(rng), b = gen::random_uprime(rng);
        order = order && rho_tilde(rho_tilde(rho_tilde(a))) == a;
        if (n < opt.random_count / 3) rhom = rhom && rho_tilde(a * b) == rho_tilde(a) * rho_tilde(b);
    }
    out.truth("tensor.rho.order3.random", order, count);
    out.truth("tensor.rho.homomorphism", rhom, std::to_string(opt.random_count / 3) + " random pairs");

    bool swaps = true;
    for (int n = 0; n < opt.random_count / 3; ++n) {
        const TensorElement v = gen::random_tensor(rng);
        for (int deg : degrees(v))
            swaps = swaps && sigma_tilde(t_grade_project(v, deg)) == t_grade_project(sigma_tilde(v), -deg);
    }
    out.truth("tensor.sigma.swaps-degrees", swaps);
    return out.take();
}

// ---------------------------------------------------------------------------

inline std::vector<Check> delta(const SuiteOptions& opt) {
    using namespace askey::delta;
    Checks out;
    const RatQ q = RatQ::q(), qi = RatQ::q_pow(-1);
    const RatQ d1 = q - qi, d2 = RatQ::q_pow(2) - RatQ::q_pow(-2);

    const auto rel = relation_residuals();
    for (std::size_t i = 0; i < rel.size(); ++i)
        out.push(residual_check("delta.relation" + std::to_string(i + 1), rel[i]));

    out.eq("delta.reorder.BA", (A() * B()).scaled(RatQ::q_pow(2)) - gamma().scaled(q * d1) + C().scaled(q * d2),
           B() * A());
    out.eq("delta.reorder.CB", (B() * C()).scaled(RatQ::q_pow(2)) - alpha().scaled(q * d1) + A().scaled(q * d2),
           C() * B());
    out.eq("delta.reorder.CA", (A() * C()).scaled(RatQ::q_pow(-2)) + beta().scaled(qi * d1) - B().scaled(qi * d2),
           C() * A());

    const std::array<std::pair<const char*, DeltaElement>, 4> central{
        {{"alpha", alpha()}, {"beta", beta()}, {"gamma", gamma()}, {"Omega", Omega()}}};
    const std::array<std::pair<const char*, DeltaElement>, 3> gens{{{"A", A()}, {"B", B()}, {"C", C()}}};
    for (const auto& [cn, c] : central)
        for (const auto& [gn, g] : gens) out.eq(std::string("delta.central.") + cn + "." + gn, g * c, c * g);

    out.eq("delta.psl2.rho.A", B(), rho(A()));
    out.eq("delta.psl2.rho.B", C(), rho(B()));
    out.eq("delta.psl2.rho.C", A(), rho(C()));
    out.eq("delta.psl2.sigma.A", B(), sigma(A()));
    out.eq("delta.psl2.sigma.B", A(), sigma(B()));
    out.eq("delta.psl2.sigma.gamma", gamma(), sigma(gamma()));
    out.eq("delta.psl2.sigma.C", gamma().scaled(q) - (A() * B()).scaled(q) - C().scaled(RatQ::q_pow(2)), sigma_C());
    out.eq("delta.psl2.sigma.alpha", beta(), sigma_alpha_derived());
    out.eq("delta.psl2.sigma.beta", alpha(), sigma_beta_derived());
    bool preserved = true;
    for (const auto& r : rel) preserved = preserved && sigma(r).is_zero() && rho(r).is_zero();
    out.truth("delta.psl2.relations-preserved", preserved);
    out.eq("delta.psl2.omega-fixed.rho", Omega(), rho(Omega()));
    out.eq("delta.psl2.omega-fixed.sigma", Omega(), sigma(Omega()));

    bool group = true;
    std::string at;
    const auto monos = hom::delta_monomials_upto(2);
    for (const auto& mono : monos) {
        const DeltaElement d = DeltaElement::monomial(mono);
        if (rho(rho(rho(d))) != d || sigma(sigma(d)) != d) {
            group = false;
            at = "at " + to_string(d);
            break;
        }
    }
    out.truth("delta.psl2.group-relations", group, group ? std::to_string(monos.size()) + " monomials" : at);

    const OmegaExpansion abc_expected = {
        {{0, 0, 0, 1, 0, 0, 0}, qi},
        {{2, 0, 0, 0, 0, 0, 0}, -q},
        {{0, 2, 0, 0, 0, 0, 0}, -RatQ::q_pow(-3)},
        {{0, 0, 2, 0, 0, 0, 0}, -q},
        {{1, 0, 0, 0, 1, 0, 0}, RatQ(1)},
        {{0, 1, 0, 0, 0, 1, 0}, RatQ::q_pow(-2)},
        {{0, 0, 1, 0, 0, 0, 1}, RatQ(1)},
    };
    out.truth("delta.omega-basis.ABC", to_omega_basis(A() * B() * C()) == abc_expected);

    gen::Rng rng(opt.seed);
    bool round = true;
    for (int n = 0; n < 15 && round; ++n) {
        DeltaElement d;
        for (int i = 0; i < 2; ++i)
            d.add_term({gen::uniform(rng, 0, 2), gen::uniform(rng, 0, 2), gen::uniform(rng, 0, 2),
                        gen::uniform(rng, 0, 1), 0, 0},
                       gen::random_laurent_q(rng, 2));
        round = from_omega_basis(to_omega_basis(d)) == d;
    }
    out.truth("delta.omega-basis.round-trip", round, "15 random elements");

    bool assoc = true;
    for (int n = 0; n < opt.random_count / 10 && assoc; ++n) {
        const DeltaElement x = gen::random_delta(rng), y = gen::random_delta(rng), z = gen::random_delta(rng);
        assoc = (x * y) * z == x * (y * z);
    }
    out.truth("delta.associativity", assoc, std::to_string(opt.random_count / 10) + " random triples");
    return out.take();
}

// ---------------------------------------------------------------------------

inline std::vector<Check> hom(const SuiteOptions& opt) {
    Checks out;
    const NaturalImages im = NaturalImages::mutated(opt.mutation);
    out.push(hom::check_theorem_main(im));
    out.push(hom::check_theorem_main2(im, opt.mutation));

    const std::vector<std::array<mpq_class, 3>> triples = {
        {mpq_class(1), mpq_class(1), mpq_class(1)},
        {mpq_class(2), mpq_class(3), mpq_class(5)},
        {mpq_class(-1, 2), mpq_class(7, 3), mpq_class(-4)},
    };
    for (const auto& [a, b, c] : triples) out.push(hom::check_prop_motiv(a, b, c));

    NaturalMap nat(im);
    out.eq("natural.image-A", parse_tensor("x*a + y*a^-1 + nz*b*c^-1"), nat(delta::A()));
    out.eq("natural.image-B", parse_tensor("y*b + z*b^-1 + nx*c*a^-1"), nat(delta::B()));
    out.eq("natural.image-C", parse_tensor("z*c + x*c^-1 + ny*a*b^-1"), nat(delta::C()));
    bool central = true;
    for (const auto& g : {delta::alpha(), delta::beta(), delta::gamma(), delta::Omega()}) {
        const TensorElement v = nat(g);
        for (const auto& w : {tensor(u::e()), tensor(u::f()), tensor(u::k(1)), tensor(u::k(-1))})
            central = central && v * w == w * v;
    }
    out.truth("natural.central-images", central);

    gen::Rng rng(opt.seed);
    bool homo = true;
    std::string at;
    const int pairs = opt.random_count / 5;
    for (int n = 0; n < pairs && homo; ++n) {
        const DeltaElement a = gen::random_delta(rng), b = gen::random_delta(rng);
        if (nat(a * b) != nat(a) * nat(b)) {
            homo = false;
            at = "at " + to_string(a) + " ; " + to_string(b);
        }
    }
    out.truth("natural.homomorphism", homo, homo ? std::to_string(pairs) + " random pairs" : at);

    out.push(hom::injectivity_rank_check(opt.bound, std::nullopt, im));
    std::vector<mpq_class> qs = {mpq_class(2), mpq_class(3, 2)};
    const mpq_class seeded = hom::q_from_seed(opt.seed);
    if (seeded != qs[0] && seeded != qs[1]) qs.push_back(seeded);
    for (const auto& qv : qs) out.push(hom::injectivity_rank_check(opt.bound + 1, qv, im));
    return out.take();
}

// ---------------------------------------------------------------------------

inline std::vector<Check> diagrams(const SuiteOptions& opt) {
    Checks out;
    const NaturalImages im = NaturalImages::mutated(opt.mutation);
    out.push(hom::check_diagrams(2, opt.central_degree, im));
    out.eq("diagram.omega-fixed.rho", delta::Omega(), delta::rho(delta::Omega()));
    out.eq("diagram.omega-fixed.sigma", delta::Omega(), delta::sigma(delta::Omega()));

    struct Case {
        int n, eps;
        mpq_class q, a, b, c;
    };
    const std::vector<Case> cases = {
        {2, 1, mpq_class(2), mpq_class(2), mpq_class(3), mpq_class(5)},
        {3, -1, mpq_class(3, 2), mpq_class(-1, 2), mpq_class(7, 3), mpq_class(-4)},
    };
    std::vector<Check> sig, rho;
    for (const auto& cs : cases) {
        auto r = timed_all(
            [&] { return repmod::diagram_checks(build_module(cs.n, cs.eps, cs.q), cs.a, cs.b, cs.c, 2); });
        sig.push_back(r[0]);
        rho.push_back(r[1]);
    }
    out.push(aggregate("module.diagram.sigma", sig, "modules, 729 monomials each"));
    out.push(aggregate("module.diagram.rho", rho, "modules, 729 monomials each"));
    return out.take();
}

// ---------------------------------------------------------------------------

inline std::vector<Check> modules(const SuiteOptions& opt) {
    Checks out;
    const auto family = repmod::module_family(5, repmod::standard_q_values());
    const std::string unit = "modules";

    std::vector<Check> chev, cas;
    for (const auto& m : family) {
        chev.push_back(timed([&] { return repmod::chevalley_check(m); }));
        cas.push_back(timed([&] { return repmod::casimir_scalar_check(m); }));
    }
    out.push(aggregate("module.chevalley", chev, unit));
    out.push(aggregate("module.casimir-scalar", cas, unit));

    for (const auto& ident : full_registry(opt.mutation)) {
        std::vector<Check> parts;
        parts.reserve(family.size());
        for (const auto& m : family)
            parts.push_back(timed([&] { return repmod::numeric_identity_check(ident, m, opt.mutation); }));
        out.push(aggregate("module.registry." + ident.id, parts, unit));
    }

    const std::vector<std::array<mpq_class, 3>> triples = {
        {mpq_class(2), mpq_class(3), mpq_class(5)},
        {mpq_class(-1, 2), mpq_class(7, 3), mpq_class(-4)},
    };
    std::map<std::string, std::vector<Check>> nat;
    for (const auto& m : family)
        if (m.n <= 3)
            for (const auto& [a, b, c] : triples)
                for (auto& ch : timed_all([&] { return repmod::natural_checks(m, a, b, c, opt.mutation); }))
                    nat[ch.id].push_back(std::move(ch));
    for (const auto& [id, parts] : nat) out.push(aggregate(id, parts, "module and parameter choices"));
    return out.take();
}

} // namespace suites

/// Suite names accepted by run_suite, in the order "all" runs them.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"u-identities", "grading", "tensor", "delta",
                                                   "hom",          "diagrams", "modules"};
    return names;
}

inline std::vector<Check> suite_checks(std::string_view name, const SuiteOptions& opt) {
    if (name == "u-identities") return suites::u_identities(opt);
    if (name == "grading") return suites::grading(opt);
    if (name == "tensor") return suites::tensor(opt);
    if (name == "delta") return suites::delta(opt);
    if (name == "hom") return suites::hom(opt);
    if (name == "diagrams") return suites::diagrams(opt);
    if (name == "modules") return suites::modules(opt);
    throw AlgebraError("unknown suite: " + std::string(name));
}

/// Runs a suite (or "all") and returns its checks sorted by id.
inline Report run_suite(std::string_view name, const SuiteOptions& opt = {}) {
    Report r;
    r.suite = std::string(name);
    r.seed = opt.seed;
    if (name == "all") {
        for (const auto& n : suite_names()) r.append(suite_checks(n, opt));
    } else {
        r.append(suite_checks(name, opt));
    }
    r.sort();
    return r;
}

} // namespace askey
