#pragma once

// Check catalog and runner shared by the CLI and the acceptance binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prime_field.hpp"

namespace akschur {

enum class Status { pass, fail, skipped, inconclusive };
std::string to_string(Status s);

struct CheckResult {
    std::string id;
    std::string suite;
    std::string anchor;
    Status status = Status::skipped;
    nlohmann::json values = nlohmann::json::object();
    std::string detail;
    double seconds = 0;
};

enum class Exactness { exact, specialized, both };

struct RunConfig {
    int n = 2;
    int r = 2;
    std::vector<int> m_parts{2, 2};
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    std::vector<std::string> suites;  // empty = all
    std::vector<std::string> ids;     // empty = all in the selected suites
    Exactness exactness = Exactness::both;
    double time_budget = 0;  // seconds, 0 = none
    int workers = 0;         // 0 = AKSCHUR_WORKERS or hardware concurrency
    std::size_t dense_cap = 64;
};

struct CatalogEntry {
    std::string id;
    std::string suite;
    std::string anchor;  // the statement checked, as a formula
    std::string mode;    // exact | specialized | formal
    std::function<CheckResult(const RunConfig&)> fn;
};

const std::vector<CatalogEntry>& catalog();

struct RunReport {
    RunConfig config;
    std::vector<CheckResult> checks;
    bool cap_hit = false;
    double seconds = 0;

    int exit_code() const;  // 0 pass, 1 failure, 3 cap or budget hit
    nlohmann::json to_json(bool with_timing = true) const;
};

RunReport run(const RunConfig& cfg);

// Validation of a configuration; returns an error message or empty.
std::string validate(const RunConfig& cfg);

}  // namespace akschur
