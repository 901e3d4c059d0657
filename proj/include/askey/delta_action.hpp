#pragma once

#include "askey/delta.hpp"
#include "askey/error.hpp"

#include <array>
#include <map>
#include <string_view>
#include <vector>

namespace askey {

/// Evaluates Delta elements under the algebra map determined by the images
/// of A, B, C, alpha, beta, gamma. Target needs +, * and scaled(RatQ).
/// Powers and the products A^i B^j C^k and alpha^r beta^s gamma^t are cached.
template <class Target>
class MonomialMap {
public:
    using Images = std::array<Target, 6>;

    MonomialMap(Images images, Target one) : images_(std::move(images)), one_(std::move(one)) {}

    const Images& images() const noexcept { return images_; }

    Target operator()(const DeltaElement& d) {
        Target out{};
        for (const auto& [m, c] : d.terms()) out += image(m).scaled(c);
        return out;
    }

    const Target& image(const DeltaMono& m) {
        if (auto it = mono_.find(m); it != mono_.end()) return it->second;
        Target v = abc_part({m.i, m.j, m.k}) * central_part({m.r, m.s, m.t});
        return mono_.emplace(m, std::move(v)).first->second;
    }

private:
    const Target& power(std::size_t g, int n) {
        auto& cache = powers_[g];
        if (cache.empty()) cache.push_back(one_);
        while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * images_[g]);
        return cache[static_cast<std::size_t>(n)];
    }
    const Target& abc_part(const std::array<int, 3>& e) {
        if (auto it = abc_.find(e); it != abc_.end()) return it->second;
        Target v = power(0, e[0]) * power(1, e[1]) * power(2, e[2]);
        return abc_.emplace(e, std::move(v)).first->second;
    }
    const Target& central_part(const std::array<int, 3>& e) {
        if (auto it = central_.find(e); it != central_.end()) return it->second;
        Target v = power(3, e[0]) * power(4, e[1]) * power(5, e[2]);
        return central_.emplace(e, std::move(v)).first->second;
    }

    Images images_;
    Target one_;
    std::array<std::vector<Target>, 6> powers_;
    std::map<std::array<int, 3>, Target> abc_, central_;
    std::map<DeltaMono, Target> mono_;
};

namespace delta {

/// The images of alpha and beta under sigma, computed from the relations
/// rather than assumed: applying sigma to
///   A + (qBC - q^-1 CB)/(q^2 - q^-2) = alpha/(q + q^-1)
///   B + (qCA - q^-1 AC)/(q^2 - q^-2) = beta/(q + q^-1)
/// with A <-> B and C -> sigma(C).
inline DeltaElement sigma_C() {
    const RatQ q = RatQ::q(), qi = RatQ::q_pow(-1);
    const RatQ d2inv = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inv();
    return gamma().scaled((q + qi).inv()) - (B() * A()).scaled(q * d2inv) + (A() * B()).scaled(qi * d2inv);
}

inline DeltaElement sigma_alpha_derived() {
    const RatQ q = RatQ::q(), qi = RatQ::q_pow(-1);
    const RatQ d2inv = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inv();
    const DeltaElement sc = sigma_C();
    return (B() + (A() * sc).scaled(q * d2inv) - (sc * A()).scaled(qi * d2inv)).scaled(q + qi);
}

inline DeltaElement sigma_beta_derived() {
    const RatQ q = RatQ::q(), qi = RatQ::q_pow(-1);
    const RatQ d2inv = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inv();
    const DeltaElement sc = sigma_C();
    return (A() + (sc * B()).scaled(q * d2inv) - (B() * sc).scaled(qi * d2inv)).scaled(q + qi);
}

inline MonomialMap<DeltaElement>& rho_map() {
    thread_local MonomialMap<DeltaElement> m({B(), C(), A(), beta(), gamma(), alpha()}, one());
    return m;
}

inline MonomialMap<DeltaElement>& sigma_map() {
    thread_local MonomialMap<DeltaElement> m({B(), A(), sigma_C(), sigma_alpha_derived(), sigma_beta_derived(), gamma()},
                                             one());
    return m;
}

inline DeltaElement rho(const DeltaElement& d) { return rho_map()(d); }
inline DeltaElement sigma(const DeltaElement& d) { return sigma_map()(d); }

/// Applies a word over {rho, sigma}, rightmost letter first, as in
/// composition of maps: "rho sigma" means rho(sigma(d)).
inline DeltaElement psl2_act(std::string_view word, const DeltaElement& d) {
    std::vector<std::string_view> letters;
    std::size_t pos = 0;
    while (pos < word.size()) {
        while (pos < word.size() && (word[pos] == ' ' || word[pos] == '*' || word[pos] == ',')) ++pos;
        std::size_t end = pos;
        while (end < word.size() && word[end] != ' ' && word[end] != '*' && word[end] != ',') ++end;
        if (end > pos) letters.push_back(word.substr(pos, end - pos));
        pos = end;
    }
    DeltaElement out = d;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (*it == "rho")
            out = rho(out);
        else if (*it == "sigma")
            out = sigma(out);
        else
            throw AlgebraError("unknown group generator: " + std::string(*it));
    }
    return out;
}

} // namespace delta

} // namespace askey
