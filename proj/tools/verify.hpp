#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "seshadri/serialize.hpp"

namespace seshadri::cli {

struct VerifyReport {
  std::int64_t cases = 0;
  std::int64_t checks = 0;
  std::vector<std::string> failures;
};

/// Runs the invariant suite over A1, A2, A3, B2, G2 with lambda coordinates
/// in {0, 1, 2} and m <= 3. Failures are collected, not thrown.
VerifyReport run_verify(std::uint64_t seed, std::ostream* log = nullptr);

Json to_json(const VerifyReport& report);

}  // namespace seshadri::cli
