#pragma once

#include <compare>
#include <string>

namespace arthur {

// The four families of §3.1 (cases A, B, C/D) plus the unitary factors.
enum class Family {
    Symplectic,      // Sp(2n), split, dual SO(2n+1,C)
    OddOrthogonal,   // SO(p,q), p+q = 2n+1, dual Sp(2n,C)
    EvenOrthogonal,  // SO(p,q), p+q = 2n, dual SO(2n,C)
    Unitary,         // U(p,q)
};

// Quasi-split type of an even orthogonal group, derived from the signature.
enum class SplitType { Split, QuasiSplit };  // "d" / "qd"

// One classical group: a family, a rank, and (except for Sp) a signature.
// SO(p,q) and SO(q,p) are distinct descriptors: they label distinct classes
// of pure inner forms even though the underlying groups are isomorphic.
struct GroupDescriptor {
    Family family = Family::Symplectic;
    int rank = 0;
    int p = 0;
    int q = 0;

    static GroupDescriptor symplectic(int n);
    static GroupDescriptor odd_orthogonal(int p, int q);
    static GroupDescriptor even_orthogonal(int p, int q);
    static GroupDescriptor so(int p, int q);  // dispatch on parity of p+q
    static GroupDescriptor unitary(int p, int q);

    bool is_orthogonal() const { return family == Family::OddOrthogonal || family == Family::EvenOrthogonal; }
    bool quasi_split() const;
    SplitType split_type() const;  // even orthogonal only

    std::string name() const;

    friend auto operator<=>(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// N of §3.1: the dimension of the standard representation of the L-group.
int standard_rep_dim(const GroupDescriptor& g);

// Good parity residue: 1 mod 2 when the dual group is symplectic (odd
// orthogonal case), 0 mod 2 when it is orthogonal.
int good_parity_class(const GroupDescriptor& g);

// q(G) = (dim G - dim K)/2 - c(G), evaluated in closed form per family.
// Sp(2n) -> n(n+1)/2; SO(p,q) -> floor(pq/2); U(p,q) -> pq.
long long q_invariant(const GroupDescriptor& g);

// Kottwitz sign e(G) = (-1)^{q(G)-q(G*)}.
int kottwitz_sign(const GroupDescriptor& g);

// Which quasi-split pure inner form a signature belongs to: Split when
// p = q (mod 4), QuasiSplit when p = q+2 (mod 4). Throws if p+q is odd.
SplitType derive_even_so_type(int p, int q);

// The quasi-split form in the same pure-inner-form family as g.
GroupDescriptor quasi_split_form(const GroupDescriptor& g);

// Canonical quasi-split descriptor for an abstract family member, used by
// the endoscopy tables: Sp_{2n}; SO_{2n+1}; SO^d_{2n} = SO(n,n);
// SO^{qd}_{2n} = SO(n-1,n+1); U_n.
GroupDescriptor quasi_split_symplectic(int n);
GroupDescriptor quasi_split_odd_so(int n);
GroupDescriptor quasi_split_even_so(int n, SplitType alpha);
GroupDescriptor quasi_split_unitary(int n);

}  // namespace arthur
