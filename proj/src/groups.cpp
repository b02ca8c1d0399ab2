#include "arthur/groups.hpp"

#include <cstdlib>
#include <stdexcept>

namespace arthur {

GroupDescriptor GroupDescriptor::symplectic(int n) {
    if (n < 0) throw std::invalid_argument("Sp: negative rank");
    return {Family::Symplectic, n, 0, 0};
}

GroupDescriptor GroupDescriptor::odd_orthogonal(int p, int q) {
    if (p < 0 || q < 0 || (p + q) % 2 != 1) throw std::invalid_argument("SO odd: bad signature");
    return {Family::OddOrthogonal, (p + q - 1) / 2, p, q};
}

GroupDescriptor GroupDescriptor::even_orthogonal(int p, int q) {
    if (p < 0 || q < 0 || (p + q) % 2 != 0) throw std::invalid_argument("SO even: bad signature");
    return {Family::EvenOrthogonal, (p + q) / 2, p, q};
}

GroupDescriptor GroupDescriptor::so(int p, int q) {
    return (p + q) % 2 == 1 ? odd_orthogonal(p, q) : even_orthogonal(p, q);
}

GroupDescriptor GroupDescriptor::unitary(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("U: bad signature");
    return {Family::Unitary, p + q, p, q};
}

bool GroupDescriptor::quasi_split() const {
    switch (family) {
        case Family::Symplectic: return true;
        case Family::OddOrthogonal: return std::abs(p - q) == 1;
        case Family::EvenOrthogonal:
            // SO(n,n) is split; SO(n-1,n+1) and SO(n+1,n-1) are the
            // quasi-split non-split classes (tori included for rank <= 1).
            return p == q || std::abs(p - q) == 2;
        case Family::Unitary: return std::abs(p - q) <= 1;
    }
    return false;
}

SplitType GroupDescriptor::split_type() const {
    if (family != Family::EvenOrthogonal) throw std::invalid_argument("split_type: even orthogonal only");
    return derive_even_so_type(p, q);
}

std::string GroupDescriptor::name() const {
    switch (family) {
        case Family::Symplectic: return "Sp(" + std::to_string(2 * rank) + ")";
        case Family::OddOrthogonal:
        case Family::EvenOrthogonal:
            return "SO(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Family::Unitary: return "U(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "?";
}

int standard_rep_dim(const GroupDescriptor& g) {
    switch (g.family) {
        case Family::Symplectic: return 2 * g.rank + 1;
        case Family::OddOrthogonal:
        case Family::EvenOrthogonal: return 2 * g.rank;
        case Family::Unitary: throw std::invalid_argument("standard_rep_dim: not defined for unitary groups");
    }
    return 0;
}

int good_parity_class(const GroupDescriptor& g) {
    switch (g.family) {
        case Family::OddOrthogonal: return 1;
        case Family::Symplectic:
        case Family::EvenOrthogonal: return 0;
        case Family::Unitary: throw std::invalid_argument("good_parity_class: not defined for unitary groups");
    }
    return 0;
}

long long q_invariant(const GroupDescriptor& g) {
    long long p = g.p, q = g.q, n = g.rank;
    switch (g.family) {
        case Family::Symplectic: return n * (n + 1) / 2;
        case Family::OddOrthogonal:
        case Family::EvenOrthogonal: return p * q / 2;
        case Family::Unitary: return p * q;
    }
    return 0;
}

int kottwitz_sign(const GroupDescriptor& g) {
    long long diff = q_invariant(g) - q_invariant(quasi_split_form(g));
    return diff % 2 == 0 ? 1 : -1;
}

SplitType derive_even_so_type(int p, int q) {
    if ((p + q) % 2 != 0) throw std::invalid_argument("derive_even_so_type: p+q must be even");
    int r = ((p - q) % 4 + 4) % 4;
    return r == 0 ? SplitType::Split : SplitType::QuasiSplit;
}

GroupDescriptor quasi_split_form(const GroupDescriptor& g) {
    switch (g.family) {
        case Family::Symplectic: return g;
        case Family::OddOrthogonal: return quasi_split_odd_so(g.rank);
        case Family::EvenOrthogonal: return quasi_split_even_so(g.rank, g.split_type());
        case Family::Unitary: return quasi_split_unitary(g.rank);
    }
    return g;
}

GroupDescriptor quasi_split_symplectic(int n) { return GroupDescriptor::symplectic(n); }

GroupDescriptor quasi_split_odd_so(int n) {
    // The class of the quasi-split group per the choice (6.1.1):
    // SO(n+1,n) for n even, SO(n,n+1) for n odd; in both cases p is odd.
    return n % 2 == 0 ? GroupDescriptor::odd_orthogonal(n + 1, n)
                      : GroupDescriptor::odd_orthogonal(n, n + 1);
}

GroupDescriptor quasi_split_even_so(int n, SplitType alpha) {
    if (alpha == SplitType::Split) return GroupDescriptor::even_orthogonal(n, n);
    if (n < 1) throw std::invalid_argument("SO^qd requires rank >= 1");
    return GroupDescriptor::even_orthogonal(n - 1, n + 1);
}

GroupDescriptor quasi_split_unitary(int n) { return GroupDescriptor::unitary(n / 2, n - n / 2); }

}  // namespace arthur
