#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace vstring {

struct VerifyOptions {
    std::size_t count = 1000;
    int max_arrows = 6;
    std::uint64_t seed = 7;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct PropertyTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
};

// Everything needed to reproduce one falsified property: rerunning with
// count 1 and `seed` replays the item, and `diagram` names the input.
struct PropertyFailure {
    std::string property;
    std::size_t item = 0;
    std::uint64_t seed = 0;
    std::string diagram;
    std::string detail;
};

struct VerifyReport {
    std::vector<PropertyTally> tallies;
    std::vector<PropertyFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

// Property names, in report order.
const std::vector<std::string>& verification_properties();

// Runs every library invariant on `count` seeded random diagrams with at
// most `max_arrows` arrows. Items are independent and may run on several
// threads; the report is identical for any thread count.
VerifyReport run_verification(const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace vstring
