#pragma once

#include <string>
#include <vector>

namespace klms {

/// Outcome of a verification sweep: how many checks ran, how many failed,
/// and a capped sample of failure descriptions.
struct VerifyReport {
    std::string suite;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> samples;

    static constexpr size_t kMaxSamples = 10;

    void count(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (samples.size() < kMaxSamples) samples.push_back(what);
        }
    }

    void absorb(const VerifyReport& other) {
        checks += other.checks;
        failures += other.failures;
        for (const std::string& s : other.samples)
            if (samples.size() < kMaxSamples) samples.push_back(s);
    }

    bool ok() const { return failures == 0; }

    std::string summary() const {
        std::string s = suite + ": " + std::to_string(checks) + " checks, " +
                        std::to_string(failures) + " failures";
        for (const std::string& f : samples) s += "\n  " + f;
        return s;
    }
};

} // namespace klms
