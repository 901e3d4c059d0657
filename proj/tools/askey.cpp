#include "askey/eval.hpp"
#include "askey/hom.hpp"
#include "askey/printer.hpp"
#include "askey/repmod.hpp"
#include "askey/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#ifndef ASKEY_VERSION
#define ASKEY_VERSION "0.0.0"
#endif

namespace {

using namespace askey;

constexpr int exit_fail = 1;
constexpr int exit_error = 2;

std::string superscript(const std::string& digits) {
    static const char* const sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char ch : digits) out += ch == '-' ? "⁻" : sup[ch - '0'];
    return out;
}

/// Greek letters, subscripts and superscript exponents for display.
std::string unicode(const std::string& s) {
    static const std::map<std::string, std::string> names = {
        {"Lam", "Λ"}, {"Phi", "Φ"},  {"nx", "ν_x"}, {"ny", "ν_y"}, {"nz", "ν_z"}, {"al", "α"},
        {"be", "β"},  {"ga", "γ"},   {"Om", "Ω"},   {"K", "k⁻¹"},  {"Y", "y⁻¹"}};
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isalpha(ch)) {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            const std::string word = s.substr(i, j - i);
            const auto it = names.find(word);
            out += it == names.end() ? word : it->second;
            i = j;
        } else if (s[i] == '^') {
            std::size_t j = i + 1;
            bool paren = j < s.size() && s[j] == '(';
            if (paren) ++j;
            std::size_t k = j;
            if (k < s.size() && s[k] == '-') ++k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            if (k > j && (!paren || (k < s.size() && s[k] == ')'))) {
                out += superscript(s.substr(j, k - j));
                i = paren ? k + 1 : k;
            } else {
                out += '^';
                ++i;
            }
        } else if (s[i] == '*') {
            out += "·";
            ++i;
        } else {
            out += s[i++];
        }
    }
    return out;
}

struct Display {
    bool pretty = false;
    std::string operator()(const UElement& v) const { return pretty ? unicode(to_string(v)) : to_string(v); }
    std::string operator()(const DeltaElement& v) const { return pretty ? unicode(to_string(v)) : to_string(v); }
    std::string operator()(const TensorElement& v) const {
        return pretty ? unicode(to_pretty_string(v)) : to_string(v);
    }
};

/// Prints the expression with a caret under the offending position.
void report_position(const std::string& expr, std::size_t pos) {
    std::cerr << "  " << expr << "\n  " << std::string(std::min(pos, expr.size()), ' ') << "^\n";
}

mpq_class parse_rational(const std::string& text, const char* what) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0 || v.get_den() == 0)
        throw CLI::ValidationError(std::string(what) + " must be a rational number like 3/2");
    v.canonicalize();
    return v;
}

std::uint64_t effective_seed(std::uint64_t flag) {
    const char* env = std::getenv("UAW_SEED");
    if (!env || !*env) return flag;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw CLI::ValidationError("UAW_SEED must be a nonnegative integer");
    return v;
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << ms;
    return os.str();
}

void print_json(const Report& r, bool timings) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["status"] = status_name(c.status);
        if (c.status == Status::Fail) cj["residual"] = c.residual;
        cj["ms"] = timings ? std::round(c.ms * 1000.0) / 1000.0 : 0.0;
        j["checks"].push_back(std::move(cj));
    }
    j["seed"] = r.seed;
    j["version"] = ASKEY_VERSION;
    std::cout << j.dump(2) << "\n";
}

void print_table(const Report& r, bool timings) {
    std::size_t width = 2;
    for (const auto& c : r.checks) width = std::max(width, c.id.size());
    for (const auto& c : r.checks) {
        std::cout << std::left << std::setw(5) << status_name(c.status) << " " << std::setw(static_cast<int>(width))
                  << c.id;
        if (timings) std::cout << " " << std::right << std::setw(10) << format_ms(c.ms) << " ms";
        if (!c.note.empty()) std::cout << "  " << c.note;
        std::cout << "\n";
        if (c.status == Status::Fail && !c.residual.empty()) std::cout << "      residual: " << c.residual << "\n";
    }
    std::cout << r.suite << " (seed " << r.seed << "): " << r.count(Status::Pass) << " passed, "
              << r.count(Status::Fail) << " failed, " << r.count(Status::Skip) << " skipped\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in the universal Askey-Wilson algebra and U_q(sl2)"};
    app.set_version_flag("--version", std::string(ASKEY_VERSION));
    app.require_subcommand(1);

    std::string expr;
    bool pretty = false;
    int rc = 0;

    // normalize
    std::string algebra = "u";
    auto* normalize = app.add_subcommand("normalize", "Print the canonical basis expansion of an expression");
    normalize->add_option("--algebra", algebra, "u, tensor or delta")
        ->check(CLI::IsMember({"u", "tensor", "delta"}))
        ->capture_default_str();
    normalize->add_option("expr", expr, "Expression")->required();
    normalize->add_flag("--unicode", pretty, "Pretty Unicode output");

    // check
    std::string suite;
    std::uint64_t seed = 1;
    int bound = 2;
    bool json = false, timings = false;
    std::string mutate = "none";
    auto* check = app.add_subcommand("check", "Run a verification suite");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    check->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
    check->add_option("--seed", seed, "Seed for random elements (UAW_SEED overrides)")->capture_default_str();
    check->add_option("--bound", bound, "Injectivity degree bound")->check(CLI::Range(1, 6))->capture_default_str();
    check->add_flag("--json", json, "Emit the report as JSON");
    check->add_flag("--timings", timings, "Include wall times");
    check->add_option("--mutate", mutate)->group("");

    // map
    auto* map = app.add_subcommand("map", "Apply the homomorphism Delta -> U (x) F[a,b,c]");
    map->add_option("expr", expr, "Delta expression")->required();
    map->add_flag("--unicode", pretty, "Pretty Unicode output");

    // project
    int degree = 0;
    std::string proj_algebra = "u";
    auto* project = app.add_subcommand("project", "Homogeneous component of a given degree");
    project->add_option("--degree", degree, "Degree")->required();
    project->add_option("--algebra", proj_algebra, "u or tensor")
        ->check(CLI::IsMember({"u", "tensor"}))
        ->capture_default_str();
    project->add_option("expr", expr, "Expression")->required();
    project->add_flag("--unicode", pretty, "Pretty Unicode output");

    // act
    std::string automorphism;
    auto* act = app.add_subcommand("act", "Apply an automorphism");
    act->add_option("--auto", automorphism,
                    "sigma~ or rho~ on U (x) F[a,b,c]; rho, sigma or a word such as 'rho sigma' on Delta")
        ->required();
    act->add_option("expr", expr, "Expression")->required();
    act->add_flag("--unicode", pretty, "Pretty Unicode output");

    // module-eval
    int mod_n = 1, mod_eps = 1;
    std::string mod_q = "2", mod_a, mod_b, mod_c;
    auto* module_eval = app.add_subcommand("module-eval", "Matrix of an expression on the module L(n, eps)");
    module_eval->add_option("--n", mod_n, "Highest weight")->check(CLI::Range(0, 64))->capture_default_str();
    module_eval->add_option("--eps", mod_eps, "Sign, 1 or -1")->check(CLI::IsMember({1, -1}))->capture_default_str();
    module_eval->add_option("--q", mod_q, "Rational value of q")->capture_default_str();
    module_eval->add_option("--a", mod_a, "Rational value of a");
    module_eval->add_option("--b", mod_b, "Rational value of b");
    module_eval->add_option("--c", mod_c, "Rational value of c");
    module_eval->add_option("expr", expr, "Expression in U (with a, b, c if given)")->required();

    CLI11_PARSE(app, argc, argv);
    const Display show{pretty};

    try {
        if (*normalize) {
            if (algebra == "u") std::cout << show(parse_u(expr)) << "\n";
            if (algebra == "tensor") std::cout << show(parse_tensor(expr)) << "\n";
            if (algebra == "delta") std::cout << show(parse_delta(expr)) << "\n";
        } else if (*check) {
            SuiteOptions opt;
            opt.seed = effective_seed(seed);
            opt.bound = bound;
            opt.mutation = parse_mutation(mutate);
            const Report r = run_suite(suite, opt);
            if (json)
                print_json(r, timings);
            else
                print_table(r, timings);
            rc = r.ok() ? 0 : exit_fail;
        } else if (*map) {
            std::cout << show(natural(parse_delta(expr))) << "\n";
        } else if (*project) {
            if (proj_algebra == "u")
                std::cout << show(grade_project(parse_u(expr), degree)) << "\n";
            else
                std::cout << show(t_grade_project(parse_tensor(expr), degree)) << "\n";
        } else if (*act) {
            if (automorphism == "sigma~" || automorphism == "sigma_tilde")
                std::cout << show(sigma_tilde(parse_tensor(expr))) << "\n";
            else if (automorphism == "rho~" || automorphism == "rho_tilde")
                std::cout << show(rho_tilde(parse_tensor(expr))) << "\n";
            else
                std::cout << show(delta::psl2_act(automorphism, parse_delta(expr))) << "\n";
        } else if (*module_eval) {
            const ModuleRep m = build_module(mod_n, mod_eps, parse_rational(mod_q, "--q"));
            MatrixContext ctx{LetterMatrices::from_module(m), {}, {}, {}};
            if (!mod_a.empty()) ctx.a = parse_rational(mod_a, "--a");
            if (!mod_b.empty()) ctx.b = parse_rational(mod_b, "--b");
            if (!mod_c.empty()) ctx.c = parse_rational(mod_c, "--c");
            for (const auto* v : {&ctx.a, &ctx.b, &ctx.c})
                if (*v && **v == 0) throw ZeroBinding(v == &ctx.a ? "a" : v == &ctx.b ? "b" : "c");
            std::cout << to_string(evaluate_matrix(expr, ctx)) << "\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        report_position(expr, e.position());
        return exit_error;
    } catch (const ContextError& e) {
        std::cerr << "error: " << e.what() << "\n";
        report_position(expr, e.position());
        return exit_error;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return rc;
}
