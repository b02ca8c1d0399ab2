#pragma once

#include <random>

#include "arthur/params.hpp"

namespace arthur {

struct RandomParamOptions {
    int maxRank = 6;
    bool goodParityOnly = false;
    bool forceRepeatedBlocks = false;
    bool regular = false;  // implies goodParityOnly
};

// Random quasi-split classical group of rank 1..maxRank.
GroupDescriptor random_quasi_split_group(std::mt19937_64& rng, int maxRank);

// Random valid parameter for a random quasi-split group. The generator
// fills the standard-representation dimension exactly, respecting the
// parity rules of §4.1.
ArthurParameter random_parameter(std::mt19937_64& rng, const RandomParamOptions& opts);

}  // namespace arthur
