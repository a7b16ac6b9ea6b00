#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cob/expr.hpp"

namespace cob {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure: inputs, both sides, difference
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool ok() const;
    std::size_t passed() const;
    std::string to_string(bool verbose) const;
};

const std::vector<std::string>& suite_names();  // excludes "all"
SuiteReport run_suite(const std::string& name);
std::vector<SuiteReport> run_all();

// --- deterministic corpus ------------------------------------------------------

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::int64_t below(std::int64_t n);  // uniform in [0, n)
};

// generator pools by name; closed ones stay inside N
const std::vector<std::string>& closed_pool();
const std::vector<std::string>& full_pool();

// a random composable chain of exactly `layers` whiskered generators starting
// at `source`
ExprPtr random_expr(Rng& rng, ObjectSig source, int layers,
                    const std::vector<std::string>& pool);

ObjectSig random_closed_object(Rng& rng);
ObjectSig random_object(Rng& rng);

}  // namespace cob
