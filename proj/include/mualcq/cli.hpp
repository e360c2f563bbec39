// cli.hpp - the command-line front end as a library function.
//
// Exit codes:
//   0   success; satisfiable; implication holds up to the bound
//   1   implication refuted; `check` found a problem; `suite` found a violation
//   2   satisfiability unknown up to the bound
//   64  usage error (bad flags, unreadable file, missing valuation, caps)
//   65  malformed input (concept, TBox or model text; unsupported constructs)
//   70  internal error, including disagreeing implication strategies
//
// Settings read from the environment when the flag is absent:
//   MUALCQ_MAX_DOMAIN       --max
//   MUALCQ_BRUTE_FORCE_CAP  --cap
//   MUALCQ_SEED             --seed
//   MUALCQ_OUTPUT           --format (text | structured)

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mualcq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitInternal = 70;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mualcq
