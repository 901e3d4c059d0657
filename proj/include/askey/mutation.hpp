#pragma once

#include "askey/error.hpp"

#include <array>
#include <string>
#include <string_view>

namespace askey {

/// Deliberate faults used to confirm that the suites detect errors.
enum class Mutation {
    None,
    RelationSignFlip,  // one sign flipped in a registered identity
    DroppedOmegaTerm,  // Lambda^2 (x) 1 dropped from the stated image of Omega
    DuplicatedImage,   // the image of C replaced by the image of A
    PerturbedA,        // 1 (x) a added to the image of A
    WrongGradingDegree // projections taken one degree too high
};

inline constexpr std::array<std::pair<Mutation, std::string_view>, 6> mutation_names{{
    {Mutation::None, "none"},
    {Mutation::RelationSignFlip, "sign-flip"},
    {Mutation::DroppedOmegaTerm, "drop-omega-term"},
    {Mutation::DuplicatedImage, "duplicate-image"},
    {Mutation::PerturbedA, "perturb-a"},
    {Mutation::WrongGradingDegree, "wrong-degree"},
}};

inline std::string_view mutation_name(Mutation m) {
    for (const auto& [k, n] : mutation_names)
        if (k == m) return n;
    return "none";
}

inline Mutation parse_mutation(std::string_view name) {
    for (const auto& [k, n] : mutation_names)
        if (n == name) return k;
    throw AlgebraError("unknown mutation: " + std::string(name));
}

} // namespace askey
