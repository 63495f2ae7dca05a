#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "defensibility/asset_system.hpp"
#include "defensibility/defense_allocation.hpp"

namespace defensibility {

enum class ThreatKind {
    OptimalSameValue,       ///< optimizer targeting by the defender's values
    OptimalDifferentValue,  ///< optimizer targeting by its own values
    UniformRandom,          ///< strikes each asset with equal probability a/n
    StationaryStochastic,   ///< fixed per-asset strike probabilities
};

/// Which valuation an optimizing attacker ranks targets by.
enum class Targeting { DefenderValues, AttackerValues };

/// Description of the threat a system faces. Optimizing threats observe the
/// defense and strike the best undefended targets; stochastic threats strike
/// with fixed probabilities regardless of the defense.
class ThreatModel {
public:
    static ThreatModel optimal_same_value();
    static ThreatModel optimal_different_value();
    static ThreatModel uniform_random();

    /// Per-asset strike probabilities, given in system order (descending
    /// defender value). Each must lie in [0,1].
    static ThreatModel stationary_stochastic(std::vector<double> attack_probabilities);

    ThreatKind kind() const noexcept { return kind_; }
    bool is_deterministic() const noexcept {
        return kind_ == ThreatKind::OptimalSameValue || kind_ == ThreatKind::OptimalDifferentValue;
    }

    /// Only meaningful for StationaryStochastic.
    const std::vector<double>& attack_probabilities() const;

    /// Stable short name: "optimal", "mismatch", "random" or "stochastic".
    std::string_view name() const noexcept;

private:
    ThreatModel(ThreatKind kind, std::vector<double> probabilities);

    ThreatKind kind_;
    std::vector<double> probabilities_;
};

/// Attack probabilities A_i and survival probabilities s_i per asset, in
/// system order. Survival follows s_i = (1 - A_i) + A_i * B_i with B_i the
/// defense indicator, so defended assets always survive. For deterministic
/// attackers `attacked_indices` lists the struck assets (A_i is 0 or 1).
struct AttackOutcome {
    std::vector<double> attack_probabilities;
    std::vector<double> survival_probabilities;
    std::optional<std::vector<std::size_t>> attacked_indices;
};

/// Deterministic optimizing attack: strikes the `attack_effort` undefended
/// assets of highest targeting value (all of them if fewer remain). Ties are
/// broken toward the higher defender value, then system order. Targeting by
/// attacker values requires the system to carry them.
AttackOutcome optimal_attack(const AssetSystem& system, const DefenseAllocation& defense,
                             int attack_effort, Targeting targeting);

/// Uniform random strike probabilities A_i = a/n for every asset, defended
/// or not. Requires 0 <= a <= n: a uniform selection of a distinct targets
/// is impossible otherwise. Survival is reported for the undefended
/// baseline; combine with survival() to apply a defense.
AttackOutcome uniform_random_probabilities(const AssetSystem& system, int attack_effort);

/// Survival per asset given attack probabilities and a defense:
/// 1 where defended, 1 - A_i elsewhere.
std::vector<double> survival(const AssetSystem& system,
                             std::span<const double> attack_probabilities,
                             const DefenseAllocation& defense);

/// Full outcome of a threat against a defended system; dispatches on kind.
/// Stochastic threats keep their probabilities on defended assets (the
/// strike is wasted); `attack_effort` is ignored by stationary threats.
AttackOutcome threat_outcome(const AssetSystem& system, const ThreatModel& threat,
                             const DefenseAllocation& defense, int attack_effort);

}  // namespace defensibility
