#pragma once

#include <vector>

#include "arthur/groups.hpp"
#include "arthur/rational.hpp"
#include "arthur/rootdata.hpp"

namespace arthur {

// A character of Z/2 = {+1,-1}, kept as an exponent parity.
struct SignCharacter {
    long long exponent = 0;

    bool is_trivial() const { return ((exponent % 2) + 2) % 2 == 0; }
    int eval(int pm1) const { return pm1 == 1 || is_trivial() ? 1 : -1; }
};

// Eq. (7.1.2): S_i = sgn^{i + c(c-1)/2 + (n-c)c}.
SignCharacter S_character(int i, int c, int n);

// Eq. (8.1.7) in closed form; equals S_character(i,c,n) evaluated at
// s_d = (-1)^{c+1}.
int S_eval_at_sd(int i, int c, int n);

// §7.1: the constant value of the differential of epsilon_U on U_c.
// Cases A1, B, CD give b; case A2 gives a+1.
Rat epsilon_U_differential(RhoCase gCase, bool blockInSecondFactor, int a, int b, int c);

// Definition 7.3: the constant differential of xi_u, always an integer.
long long xi_u_differential(RhoCase gCase, int n, int c);

// §8.1: the differential of xi_{i,t} is (floor(t/2), ..., floor(t/2)).
long long xi_block_differential(int i, int a, int t);

// Cartan shape of a c-Levi U(i,c-i) x G': circle, complex and split factor
// counts, with c = r1 + 2 m1 and n - c = r2 + 2 m2 + s2.
struct CartanShape {
    int r1 = 0, m1 = 0;          // unitary factor
    int r2 = 0, m2 = 0, s2 = 0;  // classical factor

    int unitary_rank() const { return r1 + 2 * m1; }
    int classical_rank() const { return r2 + 2 * m2 + s2; }
    int total_rank() const { return unitary_rank() + classical_rank(); }

    friend bool operator==(const CartanShape&, const CartanShape&) = default;
};

// Appendix §10.3 computed from scratch: enumerate the sigma-pairs of
// complex roots in n \ n_L, accumulate (alpha + sigma(alpha))/2, and read
// off the residual sign on each R^x coordinate. The closed form says the
// result is sgn^c on every split factor.
std::vector<int> torsion_bruteforce(RhoCase gCase, const CartanShape& shape);

// Minimal stand-in for a standard representation's parameter: the Cartan
// shape, exact discrete/continuous parameters, and the R^x sign flags that
// all the twist characters act on.
struct StandardLabel {
    CartanShape shape;
    std::vector<Rat> discreteParams;    // r1 unitary entries then r2 classical
    std::vector<int> splitFlags;        // +1/-1, length s2
    std::vector<Rat> continuousParams;  // m1 + m2 entries

    friend bool operator==(const StandardLabel&, const StandardLabel&) = default;
};

// §7.1 epsilon_2: identity for c even, flips every R^x flag for c odd.
StandardLabel epsilon2_label(StandardLabel x, int c);

// §7.2 epsilon~_1: tensoring by sgn_{H_1}^c when H_1 is orthogonal.
StandardLabel epsilon_tilde1_label(StandardLabel x, Family h1Family, int c);

// Prop. 10.4 / (10.2.10) at the label level: shift the unitary discrete
// parameters by rho_V and apply the §10.3 torsion to the split flags.
StandardLabel induce_label(const StandardLabel& labelL, RhoCase gCase, int n, int c);

}  // namespace arthur
