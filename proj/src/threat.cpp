#include "defensibility/threat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace defensibility {

ThreatModel::ThreatModel(ThreatKind kind, std::vector<double> probabilities)
    : kind_(kind), probabilities_(std::move(probabilities)) {}

ThreatModel ThreatModel::optimal_same_value() {
    return ThreatModel(ThreatKind::OptimalSameValue, {});
}

ThreatModel ThreatModel::optimal_different_value() {
    return ThreatModel(ThreatKind::OptimalDifferentValue, {});
}

ThreatModel ThreatModel::uniform_random() {
    return ThreatModel(ThreatKind::UniformRandom, {});
}

ThreatModel ThreatModel::stationary_stochastic(std::vector<double> attack_probabilities) {
    for (double p : attack_probabilities) {
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            throw ValidationError("stationary attack probabilities must lie in [0,1]");
        }
    }
    return ThreatModel(ThreatKind::StationaryStochastic, std::move(attack_probabilities));
}

const std::vector<double>& ThreatModel::attack_probabilities() const {
    if (kind_ != ThreatKind::StationaryStochastic) {
        throw ValidationError("attack probabilities are only defined for stationary threats");
    }
    return probabilities_;
}

std::string_view ThreatModel::name() const noexcept {
    switch (kind_) {
        case ThreatKind::OptimalSameValue: return "optimal";
        case ThreatKind::OptimalDifferentValue: return "mismatch";
        case ThreatKind::UniformRandom: return "random";
        case ThreatKind::StationaryStochastic: return "stochastic";
    }
    return "unknown";
}

namespace {

double targeting_value(const AssetSystem& system, std::size_t index, Targeting targeting) {
    return targeting == Targeting::DefenderValues ? system.asset(index).defender_value
                                                  : system.attacker_value(index);
}

}  // namespace

AttackOutcome optimal_attack(const AssetSystem& system, const DefenseAllocation& defense,
                             int attack_effort, Targeting targeting) {
    if (attack_effort < 0) {
        throw ValidationError("attack effort must be nonnegative");
    }
    if (targeting == Targeting::AttackerValues && !system.has_attacker_values()) {
        throw ValidationError("targeting by attacker values requires a system with attacker values");
    }

    const std::size_t n = system.size();
    const std::vector<char> defended = defense.mask(system);

    // Strike order: targeting value descending, ties toward the higher
    // defender value (worst case for the defender), then system order.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        const double tl = targeting_value(system, lhs, targeting);
        const double tr = targeting_value(system, rhs, targeting);
        if (tl != tr) {
            return tl > tr;
        }
        return system.asset(lhs).defender_value > system.asset(rhs).defender_value;
    });

    AttackOutcome outcome;
    outcome.attack_probabilities.assign(n, 0.0);
    outcome.survival_probabilities.assign(n, 1.0);

    std::vector<std::size_t> struck;
    for (std::size_t index : order) {
        if (struck.size() == static_cast<std::size_t>(attack_effort)) {
            break;
        }
        if (defended[index]) {
            continue;
        }
        struck.push_back(index);
        outcome.attack_probabilities[index] = 1.0;
        outcome.survival_probabilities[index] = 0.0;
    }
    std::sort(struck.begin(), struck.end());
    outcome.attacked_indices = std::move(struck);
    return outcome;
}

AttackOutcome uniform_random_probabilities(const AssetSystem& system, int attack_effort) {
    const int n = static_cast<int>(system.size());
    if (attack_effort < 0) {
        throw ValidationError("attack effort must be nonnegative");
    }
    if (attack_effort > n) {
        throw ValidationError("uniform random attack effort " + std::to_string(attack_effort) +
                              " exceeds the asset count " + std::to_string(n));
    }
    const double p = static_cast<double>(attack_effort) / static_cast<double>(n);
    AttackOutcome outcome;
    outcome.attack_probabilities.assign(system.size(), p);
    outcome.survival_probabilities.assign(system.size(), 1.0 - p);
    return outcome;
}

std::vector<double> survival(const AssetSystem& system,
                             std::span<const double> attack_probabilities,
                             const DefenseAllocation& defense) {
    if (attack_probabilities.size() != system.size()) {
        throw ValidationError("attack probability count does not match the asset count");
    }
    for (double p : attack_probabilities) {
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            throw ValidationError("attack probabilities must lie in [0,1]");
        }
    }
    const std::vector<char> defended = defense.mask(system);
    std::vector<double> result(system.size());
    for (std::size_t i = 0; i < system.size(); ++i) {
        result[i] = defended[i] ? 1.0 : 1.0 - attack_probabilities[i];
    }
    return result;
}

AttackOutcome threat_outcome(const AssetSystem& system, const ThreatModel& threat,
                             const DefenseAllocation& defense, int attack_effort) {
    switch (threat.kind()) {
        case ThreatKind::OptimalSameValue:
            return optimal_attack(system, defense, attack_effort, Targeting::DefenderValues);
        case ThreatKind::OptimalDifferentValue:
            return optimal_attack(system, defense, attack_effort, Targeting::AttackerValues);
        case ThreatKind::UniformRandom: {
            AttackOutcome outcome = uniform_random_probabilities(system, attack_effort);
            outcome.survival_probabilities = survival(system, outcome.attack_probabilities, defense);
            return outcome;
        }
        case ThreatKind::StationaryStochastic: {
            const std::vector<double>& probabilities = threat.attack_probabilities();
            AttackOutcome outcome;
            outcome.attack_probabilities = probabilities;
            outcome.survival_probabilities = survival(system, probabilities, defense);
            return outcome;
        }
    }
    throw ValidationError("unknown threat kind");
}

}  // namespace defensibility
