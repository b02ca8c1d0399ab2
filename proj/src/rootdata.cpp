#include "arthur/rootdata.hpp"

#include <algorithm>
#include <stdexcept>

namespace arthur {

RootFamily root_family_of(Family f) {
    switch (f) {
        case Family::Symplectic: return RootFamily::C;
        case Family::OddOrthogonal: return RootFamily::B;
        case Family::EvenOrthogonal: return RootFamily::D;
        case Family::Unitary: return RootFamily::Agl;
    }
    throw std::invalid_argument("root_family_of: bad family");
}

RootFamily root_family_of(RhoCase c) {
    switch (c) {
        case RhoCase::A: return RootFamily::C;
        case RhoCase::B: return RootFamily::B;
        case RhoCase::CD: return RootFamily::D;
    }
    throw std::invalid_argument("root_family_of: bad case");
}

RhoCase rho_case_of(const GroupDescriptor& g) {
    switch (g.family) {
        case Family::Symplectic: return RhoCase::A;
        case Family::OddOrthogonal: return RhoCase::B;
        case Family::EvenOrthogonal: return RhoCase::CD;
        case Family::Unitary: break;
    }
    throw std::invalid_argument("rho_case_of: classical groups only");
}

std::vector<std::vector<int>> positive_roots(RootFamily family, int rank) {
    if (rank < 0) throw std::invalid_argument("positive_roots: negative rank");
    std::vector<std::vector<int>> roots;
    auto vec = [rank](int i, int ci, int j, int cj) {
        std::vector<int> v(rank, 0);
        v[i] = ci;
        if (j >= 0) v[j] += cj;
        return v;
    };
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            roots.push_back(vec(i, 1, j, -1));  // e_i - e_j
            if (family != RootFamily::Agl) roots.push_back(vec(i, 1, j, 1));
        }
        if (family == RootFamily::B) roots.push_back(vec(i, 1, -1, 0));
        if (family == RootFamily::C) roots.push_back(vec(i, 2, -1, 0));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::vector<int>> all_roots(RootFamily family, int rank) {
    auto roots = positive_roots(family, rank);
    std::size_t n = roots.size();
    roots.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<int> neg = roots[k];
        for (int& x : neg) x = -x;
        roots.push_back(std::move(neg));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rat> rho(RootFamily family, int rank) {
    std::vector<Rat> half(rank, Rat(0));
    for (const auto& r : positive_roots(family, rank))
        for (int i = 0; i < rank; ++i) half[i] += Rat(r[i], 2);
    return half;
}

std::vector<Rat> rho_v_closed(RhoCase c, int n, int cLevi) {
    if (cLevi < 0 || cLevi > n) throw std::invalid_argument("rho_v_closed: need 0 <= c <= n");
    Rat head;
    switch (c) {
        case RhoCase::A: head = Rat(n) - Rat(cLevi - 1, 2); break;
        case RhoCase::B: head = Rat(n) - Rat(cLevi, 2); break;
        case RhoCase::CD: head = Rat(n - 1) - Rat(cLevi - 1, 2); break;
    }
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < cLevi; ++i) out[i] = head;
    return out;
}

long long dim_complex(const GroupDescriptor& g) {
    long long n = g.rank;
    switch (g.family) {
        case Family::Symplectic: return n * (2 * n + 1);
        case Family::OddOrthogonal: {
            long long m = 2 * n + 1;
            return m * (m - 1) / 2;
        }
        case Family::EvenOrthogonal: {
            long long m = 2 * n;
            return m * (m - 1) / 2;
        }
        case Family::Unitary: return n * n;
    }
    return 0;
}

}  // namespace arthur
