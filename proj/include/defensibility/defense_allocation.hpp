#pragma once

#include <set>
#include <string>
#include <vector>

#include "defensibility/asset_system.hpp"

namespace defensibility {

/// A binary, perfect defense: the set of defended asset ids plus an optional
/// baseline of pre-existing defenses. The two sets are disjoint and both must
/// be subsets of the system's ids. Defended assets keep their full value.
class DefenseAllocation {
public:
    DefenseAllocation() = default;

    DefenseAllocation(const AssetSystem& system, std::set<std::string> defended,
                      std::set<std::string> pre_defended = {});

    const std::set<std::string>& defended_ids() const noexcept { return defended_; }
    const std::set<std::string>& pre_defended_ids() const noexcept { return pre_defended_; }

    /// Count of all protected assets (newly defended plus baseline).
    std::size_t total_defended() const noexcept { return defended_.size() + pre_defended_.size(); }

    /// Per-asset indicator in system order: nonzero where the asset is
    /// defended (either set).
    std::vector<char> mask(const AssetSystem& system) const;

private:
    std::set<std::string> defended_;
    std::set<std::string> pre_defended_;
};

}  // namespace defensibility
