#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gradpos {

/// Thrown when an enumeration would exceed the configured resource bound
/// (see max_ideals_bound), or when exact integer arithmetic would overflow.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration bound for ideals/antichains.  Overridable via the
/// GRADPOS_MAX_IDEALS environment variable; defaults to 10^6.
inline std::size_t max_ideals_bound() {
    if (const char* s = std::getenv("GRADPOS_MAX_IDEALS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

} // namespace gradpos
