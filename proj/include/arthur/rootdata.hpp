#pragma once

#include <vector>

#include "arthur/groups.hpp"
#include "arthur/rational.hpp"

namespace arthur {

// Classical root systems in the usual coordinates (e_i basis). Agl is the
// gl-type system e_i - e_j used for the unitary-factor blocks.
enum class RootFamily { B, C, D, Agl };

// Which rho / rho_V closed form applies: the group families of §3.1.
// A = symplectic, B = odd orthogonal, CD = even orthogonal.
enum class RhoCase { A, B, CD };

RootFamily root_family_of(Family f);
RootFamily root_family_of(RhoCase c);
RhoCase rho_case_of(const GroupDescriptor& g);

// Canonical positive system, coordinate vectors sorted lexicographically.
// D of rank 1 is the trivial system; rank 0 is empty for every family.
std::vector<std::vector<int>> positive_roots(RootFamily family, int rank);

// All roots (positives and their negatives).
std::vector<std::vector<int>> all_roots(RootFamily family, int rank);

// Half sum of positive roots, exact.
std::vector<Rat> rho(RootFamily family, int rank);

// rho_V = rho_G - rho_L for the c-Levi U_c x G_{n-c}, in closed form:
// the first c entries are n-(c-1)/2 (A), n-c/2 (B), n-1-(c-1)/2 (CD),
// the rest are zero.
std::vector<Rat> rho_v_closed(RhoCase c, int n, int cLevi);

// Complex dimension of the algebraic group: n(2n+1) for Sp_2n, m(m-1)/2
// for SO_m, c^2 for a unitary factor of rank c.
long long dim_complex(const GroupDescriptor& g);

}  // namespace arthur
