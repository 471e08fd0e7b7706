#pragma once

#include "atomlab/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace atomlab {

/// One batch-verification scenario: a named, self-contained check that
/// recomputes a documented fact and compares against the frozen expectation.
struct Scenario {
    std::string name;
    std::string claim;   // the mathematical statement being checked
    int needed_depth;    // minimum truncation depth for a meaningful run
    std::function<std::pair<json, json>(int depth, Budget& budget)> run; // (expected, actual)
};

const std::vector<Scenario>& verification_scenarios();

struct VerifyOptions {
    int depth = 10;
    std::uint64_t budget = 1'000'000;
    bool corrupt_one = false; // self-test hook: flips one expected value
};

/// Runs the suite, returning the full deterministic report. Scenarios whose
/// needed depth exceeds the requested one report "unknown", never "fail".
json run_verification(const VerifyOptions& opts);

/// True iff no scenario failed (unknowns are allowed).
bool verification_passed(const json& report);

} // namespace atomlab
