#include "defensibility/asset_system.hpp"

#include <algorithm>
#include <cmath>

namespace defensibility {

AssetSystem::AssetSystem(std::vector<Asset> assets) : assets_(std::move(assets)) {
    if (assets_.empty()) {
        throw ValidationError("asset system must contain at least one asset");
    }

    std::size_t with_attacker = 0;
    for (const Asset& asset : assets_) {
        if (!std::isfinite(asset.defender_value)) {
            throw ValidationError("defender value of '" + asset.id + "' is not finite");
        }
        if (asset.defender_value < 0.0) {
            throw ValidationError("defender value of '" + asset.id + "' is negative");
        }
        if (asset.attacker_value) {
            if (!std::isfinite(*asset.attacker_value)) {
                throw ValidationError("attacker value of '" + asset.id + "' is not finite");
            }
            if (*asset.attacker_value < 0.0) {
                throw ValidationError("attacker value of '" + asset.id + "' is negative");
            }
            ++with_attacker;
        }
    }
    if (with_attacker != 0 && with_attacker != assets_.size()) {
        throw ValidationError(
            "attacker values must be present on every asset or on none");
    }
    has_attacker_values_ = with_attacker == assets_.size();

    std::stable_sort(assets_.begin(), assets_.end(), [](const Asset& lhs, const Asset& rhs) {
        return lhs.defender_value > rhs.defender_value;
    });

    for (std::size_t i = 0; i < assets_.size(); ++i) {
        auto [it, inserted] = index_.emplace(assets_[i].id, i);
        if (!inserted) {
            throw ValidationError("duplicate asset id '" + assets_[i].id + "'");
        }
    }

    total_value_ = 0.0;
    for (const Asset& asset : assets_) {
        total_value_ += asset.defender_value;
    }
}

double AssetSystem::attacker_value(std::size_t index) const {
    if (!has_attacker_values_) {
        throw ValidationError("system carries no attacker values");
    }
    return *assets_.at(index).attacker_value;
}

double AssetSystem::value_at_rank(std::size_t rank) const noexcept {
    if (rank == 0 || rank > assets_.size()) {
        return 0.0;
    }
    return assets_[rank - 1].defender_value;
}

std::optional<std::size_t> AssetSystem::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<double> AssetSystem::defender_values() const {
    std::vector<double> values;
    values.reserve(assets_.size());
    for (const Asset& asset : assets_) {
        values.push_back(asset.defender_value);
    }
    return values;
}

AssetSystem build_system(std::vector<Asset> raw_assets) {
    return AssetSystem(std::move(raw_assets));
}

}  // namespace defensibility
