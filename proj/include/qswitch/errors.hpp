#pragma once

#include <stdexcept>
#include <string>

namespace qswitch {

// Thrown when a request exceeds a documented size limit (exhaustive sweeps,
// dense-matrix dimensions, register widths). The message names the limit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qswitch
