#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arthur/params.hpp"

namespace arthur {

// A(psi) as presented by (9.1.3)/(9.1.4): one Z/2 generator z_r per
// discrete block and one u_m per unipotent summand, modulo identification
// of generators belonging to identical summands. The quotient is an
// F_2-vector space whose basis is the set of generator classes.
struct ComponentGroup {
    int numDiscrete = 0;
    int numUnipotent = 0;
    std::vector<std::pair<int, int>> relations;  // identified generator pairs
    std::vector<int> classOf;                    // generator index -> class id
    int numClasses = 0;

    int num_generators() const { return numDiscrete + numUnipotent; }
    std::string generator_name(int g) const;
    std::vector<std::string> generator_names() const;
};

// Element of the quotient, as a parity bit per generator class.
struct CgElement {
    std::vector<int> classBits;

    bool is_identity() const;
    friend bool operator==(const CgElement&, const CgElement&) = default;
};

// Character of the quotient: a sign per generator class.
struct CgCharacter {
    std::vector<int> classValues;  // +1 / -1

    int operator()(const CgElement& x) const;
    friend bool operator==(const CgCharacter&, const CgCharacter&) = default;
};

int character_value_on_generator(const ComponentGroup& a, const CgCharacter& eta, int g);
CgElement element_from_generator_bits(const ComponentGroup& a, const std::vector<int>& bits);

ComponentGroup component_group(const ParityDecomposition& d);
ComponentGroup component_group_from(const std::vector<Block>& blocks,
                                    const std::vector<Summand>& unipotent);

// s_psi per (8.1.5), applied blockwise: the coordinate on a generator is
// nontrivial exactly when its SL2 dimension is even.
CgElement s_element(const ComponentGroup& a, const ParityDecomposition& d);
CgElement s_element_from(const ComponentGroup& a, const std::vector<Block>& blocks,
                         const std::vector<Summand>& unipotent);

// All 2^{numClasses} characters in canonical (lexicographic) order.
std::vector<CgCharacter> characters(const ComponentGroup& a);

// Lemma 8.1: A(psi_G) = Z/2<z_1> x A(psi_{G'}) when the first block is not
// identified with anything. Throws when z_1 participates in a relation.
struct FirstBlockSplit {
    ComponentGroup zFactor;    // single generator z_1
    ComponentGroup remainder;  // everything else, reindexed
};
FirstBlockSplit split_first_block(const ComponentGroup& a, const std::vector<Block>& blocks);

// eta = (eta_d, eta') along the split above.
std::pair<int, CgCharacter> factor_character(const ComponentGroup& a, const FirstBlockSplit& split,
                                             const CgCharacter& eta);

}  // namespace arthur
