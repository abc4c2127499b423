#pragma once

#include <map>
#include <optional>
#include <string>

#include "coxdet/bigint.hpp"

namespace coxdet {

// Per-character tally for one group, plus how it was obtained
// ("closed" or "enumeration"). Counts serialize as decimal strings.
struct CountReport {
  std::string group;             // "A", "B", "D", "I2", "F4", "H3", ...
  std::optional<long long> n;    // rank, or the dihedral parameter; absent for exceptionals
  std::string method;
  std::map<std::string, BigInt> counts;
};

/// {"group":"B","n":6,"method":"closed","counts":{"triv":"33",...}}
std::string to_json(const CountReport& report);

CountReport count_report_from_json(std::string_view text);

}  // namespace coxdet
