#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arthur/groups.hpp"
#include "arthur/rational.hpp"

namespace arthur {

enum class SummandKind { W, V };

// One irreducible constituent of Std_G . psi: a W_R-irreducible W(s,eps)
// (dimension 1) or V(s,t) (dimension 2), tensored with the algebraic
// SL_2(C)-representation R[a].
struct Summand {
    SummandKind kind = SummandKind::W;
    GaussRat s;
    int eps = 0;  // W only, 0 or 1
    int t = 0;    // V only, >= 1
    int a = 1;    // dimension of R[a]

    int dim() const { return kind == SummandKind::W ? a : 2 * a; }

    static Summand w(GaussRat s, int eps, int a) { return {SummandKind::W, std::move(s), eps, 0, a}; }
    static Summand v(GaussRat s, int t, int a) { return {SummandKind::V, std::move(s), 0, t, a}; }

    std::string to_string() const;

    friend bool operator==(const Summand&, const Summand&) = default;
    friend bool operator<(const Summand& x, const Summand& y);
};

struct ArthurParameter {
    GroupDescriptor group;
    std::vector<Summand> summands;

    int total_dim() const;
    ArthurParameter canonical() const;  // summands sorted
};

// A discrete good-parity block V(0,t) x R[a].
struct Block {
    int t = 0;
    int a = 0;
    friend auto operator<=>(const Block&, const Block&) = default;
};

// The six-sum decomposition of §4.1: bad-parity / continuous part psi_mp
// (with a chosen rho half), unipotent good-parity part, and the discrete
// good-parity blocks sorted per (9.1.1).
struct ParityDecomposition {
    std::vector<Summand> mp;
    std::vector<Summand> mpRho;  // chosen half of mp with mp = rho + rho*
    std::vector<Summand> bpU;    // W(0,eps) x R[a'] of good parity
    std::vector<Block> bpDisc;   // t_r >= t_{r+1}, ties broken by a_r >= a_{r+1}
};

struct Violation {
    std::string message;
};

// Checks the ArthurParameter invariants and reports the first failure:
// total dimension N, self-duality of the multiset, even multiplicity of
// bad-parity self-dual summands.
std::optional<Violation> validate(const ArthurParameter& psi);

// Definition 4.1 for a summand with s = 0: the parity of a-1 (kind W) or
// t+a-1 (kind V) must match the group's good parity class.
bool good_parity(const Summand& s, const GroupDescriptor& g);

ParityDecomposition decompose(const ArthurParameter& psi);

// Composition with (2.2.1): each summand x R[a] splits into the a twists
// with s-shifts a-1-2j. Result has a = 1 throughout.
std::vector<Summand> langlands_parameter(const ArthurParameter& psi);
std::vector<Summand> langlands_parameter(std::span<const Summand> summands);

// Multiset of the N entries: V(s,t) contributes (s+t)/2 and (s-t)/2,
// W(s,eps) contributes s.
std::vector<GaussRat> infinitesimal_character(const ArthurParameter& psi);
std::vector<GaussRat> infinitesimal_character(std::span<const Summand> summands);

// Regularity (9.1.6): t_r - a_r + 1 > t_{r+1} + a_{r+1} - 1 for all r, and
// t_R - a_R + 1 > max a'_m - 1 (0 on empty bpU).
bool is_regular(const ParityDecomposition& d);

// Condition (8.1.2): (t - (c-1))/2 exceeds |Re lambda'_i| for every entry
// of the infinitesimal character of the remaining parameter.
bool dominance_gap_ok(Block b, std::span<const Summand> tail);

enum class WChar { Triv, Sgn };

struct EpsilonTwist {
    WChar epsilon = WChar::Triv;
    Family gPrimeFamily = Family::Symplectic;
    int gPrimeRank = 0;
};

// §9.1: for symplectic groups, epsilon_psi = sgn exactly when the number
// of blocks with even t_r is odd; trivial otherwise.
EpsilonTwist epsilon_twist(const ParityDecomposition& d, const GroupDescriptor& g);

// Unipotent part of psi_{G'}: bpU with every eps flipped when the twist
// is sgn.
std::vector<Summand> twisted_unipotent_part(const ParityDecomposition& d, WChar epsilon);

}  // namespace arthur
