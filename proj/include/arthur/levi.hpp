#pragma once

#include <map>
#include <utility>
#include <vector>

#include "arthur/groups.hpp"

namespace arthur {

using SignVector = std::vector<int>;  // entries +1 / -1

// The base point (6.1.1): alternating signs ending in -1.
SignVector t_star(int n);

// §6.1: the pure-inner-form class of sigma_t, read off from the counts of
// +1 / -1 in the componentwise product t . t_*.
GroupDescriptor inner_form_class(const GroupDescriptor& quasiSplitG, const SignVector& t);

// Distribution of the 2^n members of a discrete-series superpacket over
// the pure inner forms. For the even orthogonal groups without discrete
// series the §6.2 rank-extension applies: T_*[2] is the 2-torsion of the
// anisotropic factor (rank n-1) and signatures gain (+1,+1).
std::map<GroupDescriptor, int> superpacket_distribution(const GroupDescriptor& quasiSplitG);

// One representative L_i = U(i, c-i) x G'_i of Sigma_dQ.
struct LeviDescriptor {
    int i = 0;
    int c = 0;
    GroupDescriptor unitary;    // U(i, c-i)
    GroupDescriptor classical;  // G'_i

    friend bool operator==(const LeviDescriptor&, const LeviDescriptor&) = default;
};

// Representatives per (6.3.1)/(6.3.2), sorted by i: the full range 0..c for
// Sp; for SO(p,q) exactly the i with 2i <= p and 2(c-i) <= q, and then
// G'_i = SO(p-2i, q-2(c-i)).
std::vector<LeviDescriptor> c_levi_representatives(const GroupDescriptor& g, int c);

// Remark 6.4: the index of the distinguished representative L_*.
int distinguished_index(int c, int n);

// §6.3: split t.t_* into the first c and last n-c coordinates; the unitary
// factor count pair swaps when n-c is odd.
struct LeviSignature {
    std::pair<int, int> unitarySignature;
    SignVector classicalPart;  // the last n-c coordinates of t.t_*
};
LeviSignature levi_signature_of(const SignVector& t, int c, int n);

// Cohomological induction degree (5.4.4)/(8.1.8):
// d_i = (dim G - dim L)/2 - (q(G) - q(L_i)).
long long induction_degree(const GroupDescriptor& g, const LeviDescriptor& levi);

// All pure-inner-form class descriptors attached to a quasi-split group:
// {Sp(2n)} for the symplectic family, the signatures with p odd for the
// odd orthogonal family, and for even orthogonal both the even-even and
// odd-odd signatures of the given quasi-split type.
std::vector<GroupDescriptor> pure_inner_forms(const GroupDescriptor& quasiSplitG);

}  // namespace arthur
