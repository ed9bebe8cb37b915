#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skewbrace {

struct ClaimResult {
    std::string id;
    bool pass = false;
    std::string detail;  // expected/actual on failure
};

struct VerifyReport {
    std::vector<ClaimResult> claims;
    bool all_pass = false;
};

// Runs every claim of every fixture in the manifest, then the global
// enumeration claims.  Seed and sample overrides fall back to the
// manifest values.
VerifyReport run_manifest(const std::string& manifest_path,
                          std::optional<std::uint64_t> seed = std::nullopt,
                          std::optional<std::uint64_t> samples = std::nullopt);

}  // namespace skewbrace
