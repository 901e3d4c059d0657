#pragma once

#include "askey/printer.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace askey {

enum class Status { Pass, Fail, Skip };

inline const char* status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
    }
    return "fail";
}

/// One verified statement. `residual` holds the serialized difference of the
/// two sides when the check fails; `note` is free-form context.
struct Check {
    std::string id;
    Status status = Status::Pass;
    std::string residual;
    std::string note;
    double ms = 0.0;

    bool passed() const noexcept { return status != Status::Fail; }
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
    }
    std::size_t count(Status s) const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
    }
    void append(std::vector<Check> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    }
    void sort() {
        std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    }
};

/// Pass iff the residual is zero.
template <class T>
Check residual_check(std::string id, const T& residual, std::string note = {}) {
    Check c{std::move(id), residual.is_zero() ? Status::Pass : Status::Fail, {}, std::move(note), 0.0};
    if (!residual.is_zero()) c.residual = to_string(residual);
    return c;
}

/// Compares stated against computed; the residual is stated - computed.
template <class T>
Check equality_check(std::string id, const T& stated, const T& computed, std::string note = {}) {
    return residual_check(std::move(id), stated - computed, std::move(note));
}

inline Check bool_check(std::string id, bool ok, std::string note = {}) {
    return Check{std::move(id), ok ? Status::Pass : Status::Fail, {}, std::move(note), 0.0};
}

/// Runs f and stores its wall time in the returned check.
template <class F>
Check timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c = f();
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

/// Like timed, for a function producing several checks; the time is shared
/// out evenly.
template <class F>
std::vector<Check> timed_all(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> cs = f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& c : cs) c.ms = cs.empty() ? 0.0 : ms / static_cast<double>(cs.size());
    return cs;
}

} // namespace askey
