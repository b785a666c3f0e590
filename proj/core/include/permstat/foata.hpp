#pragma once

#include <vector>

#include "permstat/signed_permutation.hpp"

namespace permstat {

/// Second fundamental transformation on words over a linearly ordered
/// alphabet (here: nonzero integers in the usual order).  Sends maj to inv
/// and is a bijection on each rearrangement class.
LetterWord phi(const LetterWord& r);

/// Right-to-left variant: reverse, apply phi, reverse back.
LetterWord rtl_phi(const LetterWord& r);

/// maj(r) = sum of the descent positions of r.
int maj(const LetterWord& r);

/// Step-by-step record of phi.  steps[i] holds the compartments of r'_{i+1}
/// as divided when the letter x_{i+2} is adjoined, so a word of length m
/// yields m-1 steps followed by the result.
struct PhiTrace {
    std::vector<std::vector<LetterWord>> steps;
    LetterWord result;
};

PhiTrace phi_trace(const LetterWord& r);

}  // namespace permstat
