#ifndef ZKFI_POSEIDON_HPP_
#define ZKFI_POSEIDON_HPP_

#include <initializer_list>
#include <span>
#include <vector>

#include "zkfi/field.hpp"

namespace zkfi {

// Round parameters for one state width, generated with the Grain LFSR
// procedure used by the standard circom parameter set (alpha = 5, 8 full
// rounds, width-dependent partial rounds).
struct PoseidonParams {
    unsigned t = 0;
    unsigned fullRounds = 0;
    unsigned partialRounds = 0;
    std::vector<Fq> roundConstants;  // (fullRounds + partialRounds) * t, flat
    std::vector<Fq> mds;             // t * t, row-major
};

// Parameters for state width t in [2, 7], generated once and cached.
const PoseidonParams& poseidonParams(unsigned t);

// Poseidon hash of 1..6 field elements (state width = arity + 1).
// Throws Error{UnsupportedWidth} outside that range.
Fq poseidon(std::span<const Fq> inputs);
Fq poseidon(std::initializer_list<Fq> inputs);

}  // namespace zkfi

#endif
