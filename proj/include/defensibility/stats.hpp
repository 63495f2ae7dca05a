#pragma once

#include <span>

namespace defensibility {

/// Adjusted Fisher-Pearson sample skewness:
///   g1 * sqrt(n*(n-1)) / (n-2),  g1 = m3 / m2^(3/2)
/// with m2, m3 the biased central moments. Requires at least three values
/// and nonzero variance. Invariant under positive affine rescaling.
double skewness(std::span<const double> values);

}  // namespace defensibility
