#include "arthur/endoscopy.hpp"

#include <stdexcept>

#include "arthur/characters.hpp"

namespace arthur {

namespace {

SplitType flip(SplitType a) { return a == SplitType::Split ? SplitType::QuasiSplit : SplitType::Split; }

SplitType alpha_c(SplitType a, int c) { return c % 2 == 0 ? a : flip(a); }

// Rank-0 even orthogonal groups are trivial; their type is d (the neutral
// element of {d, qd}).
GroupDescriptor even_so_factor(int rank, SplitType a) {
    return quasi_split_even_so(rank, rank == 0 ? SplitType::Split : a);
}

}  // namespace

std::vector<EndoscopicDatum> elliptic_endoscopic_data(const GroupDescriptor& g) {
    if (!g.quasi_split()) throw std::invalid_argument("elliptic_endoscopic_data: quasi-split input only");
    std::vector<EndoscopicDatum> data;
    int n = g.rank;
    switch (g.family) {
        case Family::Symplectic:
            // H = Sp_2a x SO^alpha_2b, (b,alpha) != (1,d), alpha = d when b = 0.
            for (int b = 0; b <= n; ++b) {
                int a = n - b;
                for (SplitType alpha : {SplitType::Split, SplitType::QuasiSplit}) {
                    if (b == 0 && alpha != SplitType::Split) continue;
                    if (b == 1 && alpha == SplitType::Split) continue;
                    EndoscopicDatum d;
                    d.h1 = quasi_split_symplectic(a);
                    d.h2 = even_so_factor(b, alpha);
                    d.plusFirst = true;  // the odd eigenspace of x is the +1 one
                    d.stdTwistH1 = alpha == SplitType::QuasiSplit;
                    data.push_back(d);
                }
            }
            break;
        case Family::OddOrthogonal:
            // H = SO_{2a+1} x SO_{2b+1}, unordered; canonical form a >= b.
            for (int a = n; 2 * a >= n; --a) {
                EndoscopicDatum d;
                d.h1 = quasi_split_odd_so(a);
                d.h2 = quasi_split_odd_so(n - a);
                data.push_back(d);
            }
            break;
        case Family::EvenOrthogonal: {
            SplitType alpha = g.split_type();
            // H = SO^beta_2a x SO^gamma_2b with alpha = beta.gamma, unordered.
            auto key = [](int rank, SplitType t) { return 2 * rank + (t == SplitType::QuasiSplit ? 1 : 0); };
            for (int a = n; a >= 0; --a) {
                int b = n - a;
                for (SplitType beta : {SplitType::Split, SplitType::QuasiSplit}) {
                    SplitType gamma = alpha == SplitType::Split ? beta : flip(beta);
                    if (a == 0 && beta != SplitType::Split) continue;
                    if (b == 0 && gamma != SplitType::Split) continue;
                    if (a == 1 && beta == SplitType::Split) continue;
                    if (b == 1 && gamma == SplitType::Split) continue;
                    if (key(a, beta) < key(b, gamma)) continue;  // unordered pair, keep one
                    EndoscopicDatum d;
                    d.h1 = even_so_factor(a, beta);
                    d.h2 = even_so_factor(b, gamma);
                    data.push_back(d);
                }
            }
            break;
        }
        case Family::Unitary:
            throw std::invalid_argument("elliptic_endoscopic_data: families A/B/CD only");
    }
    return data;
}

EndoscopicLevi c_levi_of_endoscopic(EndoCase c, const EndoscopicDatum& datum, int cLevi,
                                    const GroupDescriptor& g) {
    EndoscopicLevi out;
    out.unitary = quasi_split_unitary(cLevi);
    int n = g.rank;
    switch (c) {
        case EndoCase::A1: {
            int a = datum.h1.rank;
            if (cLevi > a) throw std::invalid_argument("c_levi_of_endoscopic: c exceeds rank of H1");
            out.h1Prime = quasi_split_symplectic(a - cLevi);
            out.h2 = datum.h2;
            out.gPrime = quasi_split_symplectic(n - cLevi);
            break;
        }
        case EndoCase::A2: {
            // The block sits in the even orthogonal factor.
            int b = datum.h2.rank;
            if (cLevi > b) throw std::invalid_argument("c_levi_of_endoscopic: c exceeds rank of H1");
            out.h1Prime = even_so_factor(b - cLevi, alpha_c(datum.h2.split_type(), cLevi));
            out.h2 = datum.h1;
            out.gPrime = quasi_split_symplectic(n - cLevi);
            break;
        }
        case EndoCase::B: {
            int a = datum.h1.rank;
            if (cLevi > a) throw std::invalid_argument("c_levi_of_endoscopic: c exceeds rank of H1");
            out.h1Prime = quasi_split_odd_so(a - cLevi);
            out.h2 = datum.h2;
            out.gPrime = quasi_split_odd_so(n - cLevi);
            break;
        }
        case EndoCase::CD: {
            int a = datum.h1.rank;
            if (cLevi > a) throw std::invalid_argument("c_levi_of_endoscopic: c exceeds rank of H1");
            out.h1Prime = even_so_factor(a - cLevi, alpha_c(datum.h1.split_type(), cLevi));
            out.h2 = datum.h2;
            out.gPrime = even_so_factor(n - cLevi, alpha_c(g.split_type(), cLevi));
            break;
        }
    }
    return out;
}

int transfer_sign(int i, int c, int n, int xD) {
    if (xD == 1) return 1;
    if (xD != -1) throw std::invalid_argument("transfer_sign: x_d must be +1 or -1");
    return S_character(i, c, n).eval(-1);
}

std::pair<WChar, WChar> twist_table(Family gFamily, EndoShape shape, int cParity) {
    if (gFamily == Family::Unitary) throw std::invalid_argument("twist_table: families A/B/CD only");
    if (gFamily != Family::Symplectic) return {WChar::Triv, WChar::Triv};
    if (cParity % 2 == 0) return {WChar::Triv, WChar::Triv};
    switch (shape) {
        case EndoShape::SpSOd:
        case EndoShape::SpSOqd: return {WChar::Triv, WChar::Sgn};
        case EndoShape::SOdSp:
        case EndoShape::SOqdSp: return {WChar::Sgn, WChar::Sgn};
    }
    throw std::invalid_argument("twist_table: unrecognized shape");
}

EndoShape endo_shape(const EndoscopicDatum& datum) {
    if (datum.h1.family == Family::Symplectic && datum.h2.family == Family::EvenOrthogonal)
        return datum.h2.split_type() == SplitType::Split ? EndoShape::SpSOd : EndoShape::SpSOqd;
    if (datum.h1.family == Family::EvenOrthogonal && datum.h2.family == Family::Symplectic)
        return datum.h1.split_type() == SplitType::Split ? EndoShape::SOdSp : EndoShape::SOqdSp;
    throw std::invalid_argument("endo_shape: not a symplectic-family datum");
}

}  // namespace arthur
