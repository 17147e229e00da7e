#pragma once

#include <cstdint>
#include <stdexcept>

namespace sunweave {

// Raised when a randomized or backtracking search exhausts its budget
// without finding a witness. The message names the stuck constraint.
struct SearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSeed = 1069;

}  // namespace sunweave
