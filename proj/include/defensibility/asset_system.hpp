#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "defensibility/errors.hpp"

namespace defensibility {

/// One valuable asset: a stable identifier, the defender's valuation in
/// system-specific units, and optionally the attacker's valuation in the
/// attacker's own units.
struct Asset {
    std::string id;
    double defender_value = 0.0;
    std::optional<double> attacker_value;
};

/// An immutable ordered collection of assets.
///
/// Construction sorts assets by defender value, descending, with ties kept
/// in input order, and caches the total value U (the system value with no
/// attack and no defense). Either every asset carries an attacker value or
/// none does. Instances are safe to share across threads.
class AssetSystem {
public:
    /// Validates and builds a system. Rejects: empty input, negative or
    /// non-finite values, duplicate ids, and attacker values present on
    /// some but not all assets.
    explicit AssetSystem(std::vector<Asset> assets);

    std::size_t size() const noexcept { return assets_.size(); }

    /// Total defender value U = sum of all defender values.
    double total_value() const noexcept { return total_value_; }

    const std::vector<Asset>& assets() const noexcept { return assets_; }
    const Asset& asset(std::size_t index) const { return assets_.at(index); }

    bool has_attacker_values() const noexcept { return has_attacker_values_; }

    /// Attacker value of the asset at `index`; requires attacker values.
    double attacker_value(std::size_t index) const;

    /// Defender value at 1-based rank; returns 0 for ranks past the end so
    /// that partial sums over ranks b+1..b+a stay defined when b+a exceeds
    /// the asset count.
    double value_at_rank(std::size_t rank) const noexcept;

    std::optional<std::size_t> index_of(const std::string& id) const;
    bool contains(const std::string& id) const { return index_of(id).has_value(); }

    /// Defender values in system order (descending).
    std::vector<double> defender_values() const;

private:
    std::vector<Asset> assets_;
    std::unordered_map<std::string, std::size_t> index_;
    double total_value_ = 0.0;
    bool has_attacker_values_ = false;
};

/// Convenience constructor from (id, defender_value[, attacker_value])
/// tuples; equivalent to AssetSystem{...}.
AssetSystem build_system(std::vector<Asset> raw_assets);

}  // namespace defensibility
