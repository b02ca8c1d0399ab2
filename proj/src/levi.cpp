#include "arthur/levi.hpp"

#include <stdexcept>

#include "arthur/rootdata.hpp"

namespace arthur {

SignVector t_star(int n) {
    SignVector t(n);
    for (int j = 1; j <= n; ++j) t[j - 1] = (n - j + 1) % 2 == 0 ? 1 : -1;
    return t;
}

namespace {

// Even orthogonal quasi-split groups without discrete series: SO^d with n
// odd and SO^qd with n even (§6.2).
bool lacks_discrete_series(const GroupDescriptor& g) {
    if (g.family != Family::EvenOrthogonal) return false;
    bool split = g.split_type() == SplitType::Split;
    return split ? g.rank % 2 == 1 : g.rank % 2 == 0;
}

std::pair<int, int> plus_minus_counts(const SignVector& t, const SignVector& base) {
    int n1 = 0, nm1 = 0;
    for (std::size_t j = 0; j < t.size(); ++j) (t[j] * base[j] > 0 ? n1 : nm1)++;
    return {n1, nm1};
}

}  // namespace

GroupDescriptor inner_form_class(const GroupDescriptor& g, const SignVector& t) {
    if (static_cast<int>(t.size()) != g.rank) throw std::invalid_argument("inner_form_class: |t| != rank");
    auto [n1, nm1] = plus_minus_counts(t, t_star(g.rank));
    switch (g.family) {
        case Family::Symplectic: return g;
        case Family::OddOrthogonal: return GroupDescriptor::odd_orthogonal(2 * n1 + 1, 2 * nm1);
        case Family::EvenOrthogonal: return GroupDescriptor::even_orthogonal(2 * n1, 2 * nm1);
        case Family::Unitary: return GroupDescriptor::unitary(n1, nm1);
    }
    throw std::invalid_argument("inner_form_class: bad family");
}

std::map<GroupDescriptor, int> superpacket_distribution(const GroupDescriptor& g) {
    std::map<GroupDescriptor, int> dist;
    if (g.rank == 0) {
        dist[g] = 1;
        return dist;
    }
    if (lacks_discrete_series(g)) {
        // §6.2: run the rank n-1 group of the same type and shift signatures.
        GroupDescriptor inner = quasi_split_even_so(g.rank - 1, g.split_type());
        for (const auto& [form, count] : superpacket_distribution(inner))
            dist[GroupDescriptor::even_orthogonal(form.p + 1, form.q + 1)] += count;
        return dist;
    }
    int n = g.rank;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        SignVector t(n);
        for (int j = 0; j < n; ++j) t[j] = (mask >> j) & 1 ? -1 : 1;
        dist[inner_form_class(g, t)]++;
    }
    return dist;
}

std::vector<LeviDescriptor> c_levi_representatives(const GroupDescriptor& g, int c) {
    if (c < 0 || c > g.rank) throw std::invalid_argument("c_levi_representatives: need 0 <= c <= n");
    std::vector<LeviDescriptor> reps;
    switch (g.family) {
        case Family::Symplectic:
            for (int i = 0; i <= c; ++i)
                reps.push_back({i, c, GroupDescriptor::unitary(i, c - i),
                                GroupDescriptor::symplectic(g.rank - c)});
            break;
        case Family::OddOrthogonal:
        case Family::EvenOrthogonal:
            for (int i = 0; i <= c; ++i) {
                if (2 * i > g.p || 2 * (c - i) > g.q) continue;
                reps.push_back({i, c, GroupDescriptor::unitary(i, c - i),
                                GroupDescriptor::so(g.p - 2 * i, g.q - 2 * (c - i))});
            }
            break;
        case Family::Unitary:
            throw std::invalid_argument("c_levi_representatives: classical groups only");
    }
    return reps;
}

int distinguished_index(int c, int n) {
    if (c < 0 || c > n) throw std::invalid_argument("distinguished_index: need 0 <= c <= n");
    if (c % 2 == 0) return c / 2;
    return (n - c) % 2 == 0 ? (c - 1) / 2 : (c + 1) / 2;
}

LeviSignature levi_signature_of(const SignVector& t, int c, int n) {
    if (static_cast<int>(t.size()) != n) throw std::invalid_argument("levi_signature_of: |t| != n");
    if (c < 0 || c > n) throw std::invalid_argument("levi_signature_of: need 0 <= c <= n");
    SignVector base = t_star(n);
    int n1U = 0, nm1U = 0;
    LeviSignature out;
    for (int j = 0; j < n; ++j) {
        int prod = t[j] * base[j];
        if (j < c)
            (prod > 0 ? n1U : nm1U)++;
        else
            out.classicalPart.push_back(prod);
    }
    out.unitarySignature = (n - c) % 2 == 0 ? std::pair{n1U, nm1U} : std::pair{nm1U, n1U};
    return out;
}

long long induction_degree(const GroupDescriptor& g, const LeviDescriptor& levi) {
    long long dimL = dim_complex(levi.unitary) + dim_complex(levi.classical);
    long long dimDiff = dim_complex(g) - dimL;
    if (dimDiff % 2 != 0) throw std::invalid_argument("induction_degree: odd dimension difference");
    long long qL = q_invariant(levi.unitary) + q_invariant(levi.classical);
    long long d = dimDiff / 2 - (q_invariant(g) - qL);
    if (d < 0) throw std::invalid_argument("induction_degree: negative degree, inconsistent input");
    return d;
}

std::vector<GroupDescriptor> pure_inner_forms(const GroupDescriptor& g) {
    std::vector<GroupDescriptor> forms;
    switch (g.family) {
        case Family::Symplectic:
            forms.push_back(g);
            break;
        case Family::OddOrthogonal:
            for (int p = 1; p <= 2 * g.rank + 1; p += 2)
                forms.push_back(GroupDescriptor::odd_orthogonal(p, 2 * g.rank + 1 - p));
            break;
        case Family::EvenOrthogonal: {
            SplitType alpha = g.split_type();
            for (int p = 0; p <= 2 * g.rank; ++p) {
                int q = 2 * g.rank - p;
                if (derive_even_so_type(p, q) == alpha)
                    forms.push_back(GroupDescriptor::even_orthogonal(p, q));
            }
            break;
        }
        case Family::Unitary:
            for (int p = 0; p <= g.rank; ++p)
                forms.push_back(GroupDescriptor::unitary(p, g.rank - p));
            break;
    }
    return forms;
}

}  // namespace arthur
