#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hypex {

using Rng = std::mt19937_64;

// Sub-seed for one pipeline stage: a splitmix64 chain over the base seed and
// the bytes of the stage name. Stage names used by the experiment runner are
// "removal", "negatives", "split" and "diagnostics".
std::uint64_t derive_seed(std::uint64_t base, std::string_view stage) noexcept;

// Sub-seed for the i-th parallel worker of a stage.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

}  // namespace hypex
