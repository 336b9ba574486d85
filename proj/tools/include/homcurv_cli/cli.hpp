#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homcurv/curvature.hpp"

namespace homcurv::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs one invocation. args excludes the program name. Results go to `out`
/// (or to --out files), diagnostics and error JSON to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// normal | diag:t0,t1,... | sample:SEED | file:PATH
MetricEndo parse_metric_spec(const HomogeneousSpace& space, std::string_view spec,
                             std::uint64_t decomposition_seed);

/// FILE | random:SEED
Plane parse_plane_spec(const HomogeneousSpace& space, std::string_view spec);

/// Default seed: HOMCURV_SEED if set, else 0. Throws InvalidArgument on a malformed value.
std::uint64_t default_seed();

}  // namespace homcurv::cli
