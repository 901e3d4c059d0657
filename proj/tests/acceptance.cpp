// Acceptance criteria 1-12: one PASS/FAIL line each, nonzero exit on any failure.

#include "askey/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace askey;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::string detail;
    double seconds = 0.0;
};

/// Checks whose id starts with one of the prefixes.
std::vector<Check> select(const std::vector<Check>& cs, const std::vector<std::string>& prefixes) {
    std::vector<Check> out;
    for (const auto& c : cs)
        for (const auto& p : prefixes)
            if (c.id.rfind(p, 0) == 0) {
                out.push_back(c);
                break;
            }
    return out;
}

std::vector<Check> select_exact(const std::vector<Check>& cs, const std::vector<std::string>& ids) {
    std::vector<Check> out;
    for (const auto& c : cs)
        for (const auto& id : ids)
            if (c.id == id) out.push_back(c);
    return out;
}

/// All selected checks pass and there are at least `min_count` of them.
Outcome all_pass(const std::vector<Check>& cs, std::size_t min_count) {
    Outcome o;
    std::size_t failed = 0;
    std::string first;
    for (const auto& c : cs) {
        o.seconds += c.ms / 1000.0;
        if (!c.passed()) {
            if (failed++ == 0) first = c.id + (c.residual.empty() ? "" : ": " + c.residual.substr(0, 200));
        }
    }
    o.ok = failed == 0 && cs.size() >= min_count;
    o.detail = std::to_string(cs.size()) + (cs.size() == 1 ? " check" : " checks");
    if (failed) o.detail += ", " + std::to_string(failed) + " failed, first " + first;
    if (cs.size() < min_count) o.detail += ", expected at least " + std::to_string(min_count);
    return o;
}

Outcome within(Outcome o, double limit_s) {
    if (o.seconds >= limit_s) {
        o.ok = false;
        o.detail += ", over the " + std::to_string(static_cast<int>(limit_s)) + " s limit";
    }
    return o;
}

Outcome merge(Outcome a, const Outcome& b) {
    a.ok = a.ok && b.ok;
    a.detail += "; " + b.detail;
    a.seconds += b.seconds;
    return a;
}

std::size_t failures(const std::vector<Check>& cs) {
    std::size_t n = 0;
    for (const auto& c : cs) n += c.passed() ? 0 : 1;
    return n;
}

} // namespace

int main() {
    const SuiteOptions opt;
    std::map<std::string, std::vector<Check>> suite;
    std::map<std::string, double> wall;
    for (const auto& name : suite_names()) {
        const auto t0 = Clock::now();
        suite[name] = run_suite(name, opt).checks;
        wall[name] = seconds_since(t0);
    }

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

    criteria.emplace_back("equitable relations and identity calculus", [&] {
        const auto eq = select(suite["u-identities"], {"equitable.xy", "equitable.yz", "equitable.zx"});
        const auto calc = select(suite["u-identities"], {"prod.", "double.", "qcom.", "xvx.", "xnxcom.", "dcas.",
                                                         "nxny.", "comnxny."});
        Outcome o = merge(all_pass(eq, 3), all_pass(calc, 30));
        o.seconds = wall["u-identities"];
        return within(o, 5.0);
    });
    criteria.emplace_back("six forms of Lambda", [&] { return all_pass(select(suite["u-identities"], {"sixforms."}), 6); });
    criteria.emplace_back("relations and central images under the homomorphism", [&] {
        const auto t0 = Clock::now();
        Outcome o = all_pass(hom::check_theorem_main(), 6);
        o.seconds = seconds_since(t0);
        return within(o, 10.0);
    });
    criteria.emplace_back("image of the Casimir element", [&] {
        const auto t0 = Clock::now();
        Outcome o = all_pass({hom::check_theorem_main2()}, 1);
        o.seconds = seconds_since(t0);
        return within(o, 30.0);
    });
    criteria.emplace_back("specializations of a, b, c", [&] { return all_pass(select(suite["hom"], {"motiv."}), 9); });
    criteria.emplace_back("grading tables and projections", [&] {
        return all_pass(select(suite["grading"], {"firsttable.", "grading.abctable.", "grading.comm.",
                                                  "grading.aproj.", "grading.threeproj."}),
                        35 + 16 + 9 + 28 + 105);
    });
    criteria.emplace_back("e^t f^t products and graded bases", [&] {
        return merge(all_pass(select(suite["u-identities"], {"ident.t"}), 4),
                     all_pass(select(suite["grading"], {"grading.basisalt.", "grading.unbasis."}), 12));
    });
    criteria.emplace_back("automorphisms of the tensor algebra", [&] {
        return all_pass(select(suite["tensor"],
                               {"tensor.sigma.involution.", "tensor.rho.order3.", "tensor.autform.",
                                "tensor.abgam.", "tensor.rhomove.", "tensor.rho.not-in-uprime"}),
                        2 + 2 + 7 + 5 + 10 + 1);
    });
    criteria.emplace_back("commuting diagrams and fixed Casimir", [&] {
        Outcome o = merge(all_pass(select(suite["diagrams"], {"diagram.", "module.diagram."}), 6),
                          all_pass(select(suite["delta"], {"delta.psl2.omega-fixed.", "delta.psl2.group-relations"}), 3));
        o.seconds = wall["diagrams"];
        return o;
    });
    criteria.emplace_back("injectivity rank checks", [&] {
        const auto cs = select_exact(suite["hom"], {"injectivity.bound2.symbolic", "injectivity.bound3.q=2",
                                              "injectivity.bound3.q=3/2"});
        Outcome o = all_pass(cs, 3);
        return within(o, 300.0);
    });
    criteria.emplace_back("numeric oracle on L(n, eps)", [&] {
        const auto reg = select(suite["modules"], {"module.registry."});
        return merge(all_pass(reg, full_registry().size()),
                     all_pass(select(suite["modules"], {"module.casimir-scalar", "module.chevalley"}), 2));
    });
    criteria.emplace_back("mutation sensitivity", [&] {
        const auto t0 = Clock::now();
        SuiteOptions m = opt;
        std::vector<std::pair<std::string, std::size_t>> found;

        m.mutation = Mutation::RelationSignFlip;
        found.emplace_back("sign-flip", failures(run_suite("u-identities", m).checks));

        found.emplace_back("drop-omega-term", failures({hom::check_theorem_main2(NaturalImages::standard(),
                                                                                  Mutation::DroppedOmegaTerm)}));

        found.emplace_back("duplicate-image",
                           failures({hom::injectivity_rank_check(
                               opt.bound, std::nullopt, NaturalImages::mutated(Mutation::DuplicatedImage))}));

        const auto perturbed = hom::check_theorem_main(NaturalImages::mutated(Mutation::PerturbedA));
        found.emplace_back("perturb-a", failures(select(perturbed, {"main.relation2", "main.relation3"})) == 2 ? 2 : 0);

        m.mutation = Mutation::WrongGradingDegree;
        found.emplace_back("wrong-degree", failures(run_suite("grading", m).checks));

        Outcome o;
        for (const auto& [name, n] : found) {
            if (!o.detail.empty()) o.detail += ", ";
            o.detail += name + " " + (n ? "detected (" + std::to_string(n) + ")" : "MISSED");
            o.ok = o.ok && n > 0;
        }
        o.seconds = seconds_since(t0);
        return o;
    });

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome o = criteria[i].second();
        all_ok = all_ok && o.ok;
        std::printf("%s  %2zu  %-52s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.seconds, o.detail.c_str());
    }
    std::printf("%s\n", all_ok ? "all acceptance criteria pass" : "some acceptance criteria FAIL");
    return all_ok ? 0 : 1;
}
