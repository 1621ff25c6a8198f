#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g2forge {

enum class CheckStatus { Pass, Fail, Finding };
std::string status_name(CheckStatus s);

struct Check {
    std::string id;
    std::string anchor;  // the displayed statement the check reproduces, or "property"
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    double millis = 0;   // not serialized to JSON
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
};

struct SuiteOptions {
    std::uint64_t seed = 7;
    int word_length = 4;   // products of P_beta generators
    int probe_length = 3;  // constraint-family probe
};

struct VerificationReport {
    std::string version;
    std::uint64_t seed = 0;
    std::vector<SuiteReport> suites;

    bool any_fail() const;
    std::vector<std::string> failing_ids() const;
    std::string json() const;  // byte-stable for a fixed seed
    std::string text(bool timings = true) const;
};

extern const char* const kVersion;

// core, roots, kostant, triform, lattice, phin, arthur
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
VerificationReport run_verify(const SuiteOptions& opts, const std::vector<std::string>& names = suite_names());

struct ManifestEntry {
    std::string suite, id;
};
// every check that reproduces a displayed statement
const std::vector<ManifestEntry>& coverage_manifest();
// "missing: x", "duplicate: x", "unlisted: x" for anchored checks outside the manifest
std::vector<std::string> coverage_problems(const VerificationReport& r);

}  // namespace g2forge
