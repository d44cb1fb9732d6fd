#ifndef OURO_ERRORS_HPP
#define OURO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ouro {

// Misconfigured heap geometry (non-power-of-two sizes, impossible splits...).
// Thrown from constructors and factories; never from the alloc/free hot path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Handle decodes to an out-of-range or unassigned location.
class InvalidHandleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A page bit was already free when released. Always a caller bug; never
// silently ignored.
class DoubleFreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// encode/decode index outside the arena grid.
class RangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A lane failed to reach a group rendezvous within the configured bound.
class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant broke (bitmap/queue state impossible under the
// documented protocol). Indicates memory corruption or an allocator bug.
class CorruptionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ouro

#endif // OURO_ERRORS_HPP
