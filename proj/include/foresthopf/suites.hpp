#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "foresthopf/coproduct.hpp"

namespace foresthopf {

// Exhaustive law checks over the enumerated forest basis. Every suite is a
// pure per-index kernel over a flat index space, scanned either by the serial
// reference loop or by the OpenMP driver; both report the counterexample of
// smallest index, so results are identical and deterministic.

struct SuiteOptions {
    std::size_t max_vertices = 5;
    std::vector<std::string> alphabet = {"x", "y"};
    int threads = 0;           // 0 = all available, 1 = serial reference
    bool mutate_delta = false; // self-test: corrupt delta_eps inside the law suites
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    bool passed = true;
    std::string counterexample;  // empty when passed
    double seconds = 0.0;
};

// Kernel contract: empty string means the case passed.
using CheckKernel = std::function<std::string(std::uint64_t)>;

struct ScanOutcome {
    std::uint64_t cases = 0;
    bool passed = true;
    std::string counterexample;
};

ScanOutcome scan_serial(std::uint64_t count, const CheckKernel& kernel);
ScanOutcome scan_parallel(std::uint64_t count, const CheckKernel& kernel, int threads);

const std::vector<std::string>& suite_names();  // excludes "all"

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

// name == "all" runs every suite in order.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opts);

}  // namespace foresthopf
