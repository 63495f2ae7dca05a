#include "defensibility/stats.hpp"

#include <cmath>

#include "defensibility/errors.hpp"

namespace defensibility {

double skewness(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 3) {
        throw ValidationError("skewness requires at least three values");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ValidationError("skewness input contains a non-finite value");
        }
    }

    const double count = static_cast<double>(n);
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= count;

    double m2 = 0.0;
    double m3 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= count;
    m3 /= count;

    const double stddev = std::sqrt(m2);
    if (stddev <= 1e-12 * std::max(1.0, std::abs(mean))) {
        throw ValidationError("skewness is undefined for zero-variance values");
    }

    const double g1 = m3 / (m2 * stddev);
    return g1 * std::sqrt(count * (count - 1.0)) / (count - 2.0);
}

}  // namespace defensibility
