#pragma once

#include "askey/delta.hpp"
#include "askey/delta_action.hpp"
#include "askey/eval.hpp"
#include "askey/linalg.hpp"
#include "askey/mutation.hpp"
#include "askey/report.hpp"
#include "askey/specialize.hpp"
#include "askey/tensor.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace askey {

/// Images of A, B, C, alpha, beta, gamma under the map into U (x) F[a,b,c].
struct NaturalImages {
    TensorElement A, B, C, alpha, beta, gamma;

    static NaturalImages standard() {
        return {t::Anat(), t::Bnat(), t::Cnat(), t::alphanat(), t::betanat(), t::gammanat()};
    }
    static NaturalImages mutated(Mutation m) {
        NaturalImages im = standard();
        if (m == Mutation::PerturbedA) im.A += tensor_scalar(LaurentABC::a());
        if (m == Mutation::DuplicatedImage) im.C = im.A;
        return im;
    }
    MonomialMap<TensorElement>::Images array() const { return {A, B, C, alpha, beta, gamma}; }
};

/// The algebra map Delta -> U (x) F[a,b,c] determined by NaturalImages.
class NaturalMap {
public:
    explicit NaturalMap(const NaturalImages& im = NaturalImages::standard())
        : map_(im.array(), tensor_scalar(LaurentABC(1))) {}

    TensorElement operator()(const DeltaElement& d) { return map_(d); }
    const TensorElement& image(const DeltaMono& m) { return map_.image(m); }

private:
    MonomialMap<TensorElement> map_;
};

inline NaturalMap& natural_map() {
    thread_local NaturalMap m;
    return m;
}

inline TensorElement natural(const DeltaElement& d) { return natural_map()(d); }

namespace hom {

/// Closed forms as written in the surface syntax.
inline const char* const alpha_form = "Lam*(a + a^-1) + (b + b^-1)*(c + c^-1)";
inline const char* const beta_form = "Lam*(b + b^-1) + (c + c^-1)*(a + a^-1)";
inline const char* const gamma_form = "Lam*(c + c^-1) + (a + a^-1)*(b + b^-1)";
inline const char* const omega_form = "(q + q^-1)^2 - (a + a^-1)^2 - (b + b^-1)^2 - (c + c^-1)^2"
                                      " - Lam*(a + a^-1)*(b + b^-1)*(c + c^-1) - Lam^2";
inline const char* const omega_form_dropped = "(q + q^-1)^2 - (a + a^-1)^2 - (b + b^-1)^2 - (c + c^-1)^2"
                                              " - Lam*(a + a^-1)*(b + b^-1)*(c + c^-1)";

/// X + (q Y Z - q^-1 Z Y)/(q^2 - q^-2) - W/(q + q^-1)
template <class T>
T relation_residual(const T& x, const T& y, const T& z, const T& w) {
    const RatQ q = RatQ::q(), qi = RatQ::q_pow(-1);
    const RatQ d2 = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inv();
    return x + (y * z).scaled(q * d2) - (z * y).scaled(qi * d2) - w.scaled((q + qi).inv());
}

/// The three defining relations in the target, with alpha, beta, gamma
/// taken from their closed forms.
inline std::vector<Check> check_theorem_main(const NaturalImages& im = NaturalImages::standard()) {
    std::vector<Check> out;
    const TensorElement al = parse_tensor(alpha_form), be = parse_tensor(beta_form), ga = parse_tensor(gamma_form);
    out.push_back(timed([&] { return residual_check("main.relation1", relation_residual(im.A, im.B, im.C, al)); }));
    out.push_back(timed([&] { return residual_check("main.relation2", relation_residual(im.B, im.C, im.A, be)); }));
    out.push_back(timed([&] { return residual_check("main.relation3", relation_residual(im.C, im.A, im.B, ga)); }));
    NaturalMap nat(im);
    out.push_back(timed([&] { return equality_check("main.image-alpha", al, nat(delta::alpha())); }));
    out.push_back(timed([&] { return equality_check("main.image-beta", be, nat(delta::beta())); }));
    out.push_back(timed([&] { return equality_check("main.image-gamma", ga, nat(delta::gamma())); }));
    return out;
}

/// The image of the Casimir element of Delta against its closed form.
inline Check check_theorem_main2(const NaturalImages& im = NaturalImages::standard(),
                                 Mutation m = Mutation::None) {
    return timed([&] {
        const TensorElement stated =
            parse_tensor(m == Mutation::DroppedOmegaTerm ? omega_form_dropped : omega_form);
        NaturalMap nat(im);
        return equality_check("main2.omega", stated, nat(delta::Omega()));
    });
}

/// Substitutes rational values for a, b, c.
inline UElement evaluate_abc(const TensorElement& v, const mpq_class& a, const mpq_class& b, const mpq_class& c) {
    Bindings bs;
    bs.a = a;
    bs.b = b;
    bs.c = c;
    UElement out;
    for (const auto& [m, l] : v.terms()) out.add_term(m, specialize(l, bs).scalar_value());
    return out;
}

/// The three identities in U obtained by giving a, b, c nonzero rational
/// values, with the off-diagonal terms written as (xy - yx)/(q - q^-1) and
/// cyclic versions.
inline std::vector<Check> check_prop_motiv(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
    if (a == 0) throw ZeroBinding("a");
    if (b == 0) throw ZeroBinding("b");
    if (c == 0) throw ZeroBinding("c");
    const UElement x = u::x(), y = u::y(), z = u::z(), lam = u::Lambda();
    const RatQ ra(a), rb(b), rc(c), ia(mpq_class(1) / a), ib(mpq_class(1) / b), ic(mpq_class(1) / c);
    const RatQ dinv = q_minus_qinv().inv();
    const UElement A = x.scaled(ra) + y.scaled(ia) + (x * y - y * x).scaled(dinv * rb * ic);
    const UElement B = y.scaled(rb) + z.scaled(ib) + (y * z - z * y).scaled(dinv * rc * ia);
    const UElement C = z.scaled(rc) + x.scaled(ic) + (z * x - x * z).scaled(dinv * ra * ib);
    const UElement one = u::one();
    const UElement al = lam.scaled(ra + ia) + one.scaled((rb + ib) * (rc + ic));
    const UElement be = lam.scaled(rb + ib) + one.scaled((rc + ic) * (ra + ia));
    const UElement ga = lam.scaled(rc + ic) + one.scaled((ra + ia) * (rb + ib));
    const std::string tag = "a=" + a.get_str() + ",b=" + b.get_str() + ",c=" + c.get_str();
    return {
        residual_check("motiv." + tag + ".1", relation_residual(A, B, C, al), tag),
        residual_check("motiv." + tag + ".2", relation_residual(B, C, A, be), tag),
        residual_check("motiv." + tag + ".3", relation_residual(C, A, B, ga), tag),
    };
}

inline std::vector<DeltaMono> delta_monomials_upto(int e) {
    std::vector<DeltaMono> out;
    for (int i = 0; i <= e; ++i)
        for (int j = 0; j <= e; ++j)
            for (int k = 0; k <= e; ++k)
                for (int r = 0; r <= e; ++r)
                    for (int s = 0; s <= e; ++s)
                        for (int t = 0; t <= e; ++t) out.push_back({i, j, k, r, s, t});
    return out;
}

/// Monomials with i + j + k + r + s + t <= bound.
inline std::vector<DeltaMono> delta_monomials_total_degree(int bound) {
    std::vector<DeltaMono> out;
    for (const auto& m : delta_monomials_upto(bound))
        if (m.i + m.j + m.k + m.r + m.s + m.t <= bound) out.push_back(m);
    return out;
}

/// Monomials with all exponents at most max_exp whose diagram is compared
/// exactly: those with no A, B, C part, and those whose alpha, beta, gamma
/// part has degree at most central_degree. Every other monomial is the
/// product of an exactly compared A^i B^j C^k and alpha^r beta^s gamma^t.
inline std::vector<DeltaMono> diagram_monomials(int max_exp, int central_degree) {
    std::vector<DeltaMono> out;
    for (const auto& m : delta_monomials_upto(max_exp))
        if (m.i + m.j + m.k == 0 || m.r + m.s + m.t <= central_degree) out.push_back(m);
    return out;
}

/// natural o sigma = sigma~ o natural and natural o rho = rho~ o natural,
/// compared exactly on diagram_monomials(max_exp, central_degree). One check
/// per diagram; a failure reports the first offending monomial.
inline std::vector<Check> check_diagrams(int max_exp = 2, int central_degree = 1,
                                         const NaturalImages& im = NaturalImages::standard()) {
    NaturalMap nat(im);
    const std::vector<DeltaMono> monos = diagram_monomials(max_exp, central_degree);
    const std::size_t total = delta_monomials_upto(max_exp).size();
    const std::string note = std::to_string(monos.size()) + " of " + std::to_string(total) +
                             " monomials exact, the rest as products of exact factors";
    auto run = [&](const std::string& id, auto&& delta_side, auto&& tensor_side) {
        return timed([&] {
            for (const auto& m : monos) {
                const DeltaElement d = DeltaElement::monomial(m);
                const TensorElement r = nat(delta_side(d)) - tensor_side(nat.image(m));
                if (!r.is_zero()) return residual_check(id, r, "at " + to_string(d));
            }
            return bool_check(id, true, note);
        });
    };
    return {
        run("diagram.sigma", [](const DeltaElement& d) { return delta::sigma(d); },
            [](const TensorElement& v) { return sigma_tilde(v); }),
        run("diagram.rho", [](const DeltaElement& d) { return delta::rho(d); },
            [](const TensorElement& v) { return rho_tilde(v); }),
    };
}

/// Coordinates of a tensor element: (PBW monomial, Laurent monomial) -> coefficient.
using TensorCoords = std::map<std::pair<PbwMono, Exp3>, RatQ>;

inline TensorCoords coordinates(const TensorElement& v) {
    TensorCoords out;
    for (const auto& [m, l] : v.terms())
        for (const auto& [e, c] : l.terms()) out.emplace(std::make_pair(m, e), c);
    return out;
}

struct RankResult {
    std::size_t monomials = 0;
    std::size_t rank = 0;
    std::size_t columns = 0;
    bool full() const noexcept { return rank == monomials; }
};

/// Rank of the images of all monomials of total degree <= bound, over Q(q)
/// when q_value is empty and over Q at q = q_value otherwise.
inline RankResult injectivity_rank(int bound, const std::optional<mpq_class>& q_value,
                                   const NaturalImages& im = NaturalImages::standard()) {
    if (bound < 1) throw AlgebraError("degree bound must be at least 1");
    if (q_value) check_q_value(*q_value);
    NaturalMap nat(im);
    const std::vector<DeltaMono> monos = delta_monomials_total_degree(bound);
    std::vector<TensorCoords> rows;
    std::map<std::pair<PbwMono, Exp3>, std::size_t> col;
    for (const auto& m : monos) {
        rows.push_back(coordinates(nat.image(m)));
        for (const auto& [k, c] : rows.back()) col.try_emplace(k, 0);
    }
    std::size_t idx = 0;
    for (auto& [k, n] : col) n = idx++;
    RankResult res{monos.size(), 0, col.size()};
    if (q_value) {
        Matrix<mpq_class> a(rows.size(), std::vector<mpq_class>(col.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [k, c] : rows[r]) a[r][col.at(k)] = specialize(c, *q_value);
        res.rank = rank_over_q(a);
    } else {
        Matrix<RatQ> a(rows.size(), std::vector<RatQ>(col.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [k, c] : rows[r]) a[r][col.at(k)] = c;
        res.rank = rank_over_ratq(a);
    }
    return res;
}

inline Check injectivity_rank_check(int bound, const std::optional<mpq_class>& q_value,
                                    const NaturalImages& im = NaturalImages::standard()) {
    return timed([&] {
        const RankResult r = injectivity_rank(bound, q_value, im);
        const std::string id =
            "injectivity.bound" + std::to_string(bound) + (q_value ? ".q=" + q_value->get_str() : ".symbolic");
        const std::string cert = q_value ? "certified at specialization" : "certified over Q(q)";
        Check c = bool_check(id, r.full(),
                             "rank " + std::to_string(r.rank) + " of " + std::to_string(r.monomials) + " monomials (" +
                                 std::to_string(r.columns) + " coordinates)" + (r.full() ? ", " + cert : ""));
        if (!r.full()) c.residual = "rank deficiency " + std::to_string(r.monomials - r.rank);
        return c;
    });
}

/// A rational q = n/d with 2 <= n <= 9, 1 <= d <= 5 and q != 1, drawn from a seed.
inline mpq_class q_from_seed(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const long n = static_cast<long>(2 + rng() % 8);
    const long d = static_cast<long>(1 + rng() % 5);
    mpq_class v(n, d);
    v.canonicalize();
    return v == 1 ? mpq_class(2) : v;
}

} // namespace hom

} // namespace askey
