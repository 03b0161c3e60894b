#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace veritop {

// Contract violation: a caller broke a documented precondition.
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A resource cap was exceeded (e.g. exact matcher over its vertex limit).
// Maps to CLI exit code 3.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration could not be parsed or validated. Maps to CLI exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Replay integrity failure: transcript does not match its manifest/config.
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void contract_fail(const std::string& msg) {
    throw contract_error(msg);
}

#define VT_REQUIRE(cond, msg)            \
    do {                                 \
        if (!(cond)) {                   \
            ::veritop::contract_fail(msg); \
        }                                \
    } while (0)

// Internal invariant check, always on. These guard soundness-critical
// postconditions (e.g. decoded correction reproduces the syndrome).
#define VT_ASSERT(cond, msg)                                            \
    do {                                                                \
        if (!(cond)) {                                                  \
            throw std::logic_error(std::string("internal invariant: ") + (msg)); \
        }                                                               \
    } while (0)

}  // namespace veritop
