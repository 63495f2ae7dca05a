#pragma once

#include <set>
#include <string>

#include "defensibility/asset_system.hpp"
#include "defensibility/defense_allocation.hpp"
#include "defensibility/threat.hpp"

namespace defensibility {

/// Largest system size the exhaustive defense search accepts by default;
/// C(20,10) = 184756 subsets keeps the search well under a second.
inline constexpr std::size_t kDefaultOracleCap = 20;

/// Defend the `defense_effort` highest-defender-value assets that are not
/// already in `pre_defended` (ties by system order). The baseline is carried
/// along in the returned allocation. Requires effort + baseline <= n.
DefenseAllocation reflexive_defense(const AssetSystem& system, int defense_effort,
                                    const std::set<std::string>& pre_defended = {});

/// Defend the `defense_effort` assets most likely to be attacked when no
/// defense is in place. For optimizing attackers that is the attacker's
/// strike order extended past `attack_effort`; for stochastic threats the
/// strike probabilities, ties toward the higher defender value.
DefenseAllocation predictive_defense(const AssetSystem& system, const ThreatModel& threat,
                                     int attack_effort, int defense_effort);

struct OracleResult {
    DefenseAllocation defense;
    double residual_value = 0.0;
};

/// Exhaustive search over all C(n - |pre_defended|, defense_effort) defense
/// subsets. For each candidate the attacker's best response (deterministic
/// threats) or the expected survival (stochastic threats) is evaluated
/// directly, independent of the strategy helpers above. Returns a subset
/// maximizing the defender's expected residual value; among maximizers the
/// lexicographically smallest id set wins. Refuses systems larger than
/// `oracle_cap` assets.
OracleResult optimal_defense_bruteforce(const AssetSystem& system, const ThreatModel& threat,
                                        int attack_effort, int defense_effort,
                                        const std::set<std::string>& pre_defended = {},
                                        std::size_t oracle_cap = kDefaultOracleCap);

}  // namespace defensibility
