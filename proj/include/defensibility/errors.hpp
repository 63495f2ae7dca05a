#pragma once

#include <stdexcept>

namespace defensibility {

/// Thrown when an input violates a model precondition: malformed datasets,
/// invalid effort ranges, probabilities outside [0,1], and the like.
/// The message identifies the specific violation.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace defensibility
