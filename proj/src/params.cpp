#include "arthur/params.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arthur {

std::string Summand::to_string() const {
    std::string head = kind == SummandKind::W ? "W(" : "V(";
    head += gauss_to_string(s);
    head += ',';
    head += std::to_string(kind == SummandKind::W ? eps : t);
    head += ")xR[";
    head += std::to_string(a);
    head += ']';
    return head;
}

bool operator<(const Summand& x, const Summand& y) {
    auto key = [](const Summand& z) {
        return std::tuple(z.kind == SummandKind::V ? 0 : 1, -z.t, -z.a, z.s, z.eps);
    };
    return key(x) < key(y);
}

int ArthurParameter::total_dim() const {
    int d = 0;
    for (const auto& s : summands) d += s.dim();
    return d;
}

ArthurParameter ArthurParameter::canonical() const {
    ArthurParameter out = *this;
    std::sort(out.summands.begin(), out.summands.end());
    return out;
}

bool good_parity(const Summand& s, const GroupDescriptor& g) {
    if (!s.s.is_zero()) throw std::invalid_argument("good_parity: requires s = 0");
    int val = s.kind == SummandKind::W ? (s.a - 1) : (s.t + s.a - 1);
    return ((val % 2) + 2) % 2 == good_parity_class(g);
}

namespace {

bool self_dual(const Summand& s) { return s.s.is_zero(); }

Summand dual_of(const Summand& s) {
    Summand d = s;
    d.s = s.s.negated();
    return d;
}

}  // namespace

std::optional<Violation> validate(const ArthurParameter& psi) {
    for (const auto& s : psi.summands) {
        if (s.a < 1) return Violation{"summand " + s.to_string() + ": SL2 dimension must be >= 1"};
        if (s.kind == SummandKind::V && s.t < 1)
            return Violation{"summand " + s.to_string() + ": t must be >= 1"};
        if (s.kind == SummandKind::W && s.eps != 0 && s.eps != 1)
            return Violation{"summand " + s.to_string() + ": eps must be 0 or 1"};
    }
    int n = standard_rep_dim(psi.group);
    if (psi.total_dim() != n)
        return Violation{"total dimension " + std::to_string(psi.total_dim()) + " differs from N = " +
                         std::to_string(n)};
    std::map<Summand, int> mult;
    for (const auto& s : psi.summands) ++mult[s];
    for (const auto& [s, m] : mult) {
        auto it = mult.find(dual_of(s));
        if (it == mult.end() || it->second != m)
            return Violation{"multiset is not self-dual at " + s.to_string()};
    }
    for (const auto& [s, m] : mult) {
        if (self_dual(s) && !good_parity(s, psi.group) && m % 2 != 0)
            return Violation{"bad-parity summand " + s.to_string() + " has odd multiplicity " +
                             std::to_string(m)};
    }
    return std::nullopt;
}

ParityDecomposition decompose(const ArthurParameter& psi) {
    if (auto v = validate(psi)) throw std::invalid_argument("decompose: " + v->message);
    ParityDecomposition d;
    std::map<Summand, int> mult;
    for (const auto& s : psi.summands) ++mult[s];

    for (const auto& [s, m] : mult) {
        if (self_dual(s) && good_parity(s, psi.group)) {
            for (int k = 0; k < m; ++k) {
                if (s.kind == SummandKind::V)
                    d.bpDisc.push_back({s.t, s.a});
                else
                    d.bpU.push_back(s);
            }
        } else {
            for (int k = 0; k < m; ++k) d.mp.push_back(s);
            if (self_dual(s)) {
                // Bad parity, even multiplicity: rho takes half the copies.
                for (int k = 0; k < m / 2; ++k) d.mpRho.push_back(s);
            } else {
                // s != 0: rho takes the representative with s "positive".
                GaussRat pos = s.s;
                bool positive = pos.im > 0 || (pos.im == 0 && pos.re > 0);
                if (positive)
                    for (int k = 0; k < m; ++k) d.mpRho.push_back(s);
            }
        }
    }
    std::sort(d.bpDisc.begin(), d.bpDisc.end(), [](const Block& x, const Block& y) {
        if (x.t != y.t) return x.t > y.t;
        return x.a > y.a;
    });
    std::sort(d.bpU.begin(), d.bpU.end());
    std::sort(d.mp.begin(), d.mp.end());
    std::sort(d.mpRho.begin(), d.mpRho.end());
    return d;
}

std::vector<Summand> langlands_parameter(std::span<const Summand> summands) {
    std::vector<Summand> out;
    for (const auto& s : summands) {
        for (int j = 0; j < s.a; ++j) {
            Summand piece = s;
            piece.a = 1;
            piece.s = piece.s + GaussRat(s.a - 1 - 2 * j);
            out.push_back(piece);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Summand> langlands_parameter(const ArthurParameter& psi) {
    return langlands_parameter(std::span<const Summand>(psi.summands));
}

std::vector<GaussRat> infinitesimal_character(std::span<const Summand> summands) {
    std::vector<GaussRat> entries;
    for (const auto& s : langlands_parameter(summands)) {
        if (s.kind == SummandKind::W) {
            // The s-slot carries twice the twist exponent, so gamma(s, eps)
            // has infinitesimal character s/2.
            entries.push_back(GaussRat{s.s.re / 2, s.s.im / 2});
        } else {
            entries.push_back(s.s + GaussRat{Rat(s.t, 2), Rat(0)});
            entries.push_back(s.s - GaussRat{Rat(s.t, 2), Rat(0)});
        }
    }
    std::sort(entries.begin(), entries.end());
    return entries;
}

std::vector<GaussRat> infinitesimal_character(const ArthurParameter& psi) {
    return infinitesimal_character(std::span<const Summand>(psi.summands));
}

bool is_regular(const ParityDecomposition& d) {
    const auto& b = d.bpDisc;
    for (std::size_t r = 0; r + 1 < b.size(); ++r)
        if (!(b[r].t - b[r].a + 1 > b[r + 1].t + b[r + 1].a - 1)) return false;
    if (!b.empty()) {
        int maxU = 0;
        for (const auto& s : d.bpU) maxU = std::max(maxU, s.a - 1);
        if (!(b.back().t - b.back().a + 1 > maxU)) return false;
    }
    return true;
}

bool dominance_gap_ok(Block blk, std::span<const Summand> tail) {
    Rat gap = Rat(blk.t - (blk.a - 1), 2);
    for (const auto& entry : infinitesimal_character(tail)) {
        Rat re = entry.re < 0 ? -entry.re : entry.re;
        if (!(gap > re)) return false;
    }
    return true;
}

EpsilonTwist epsilon_twist(const ParityDecomposition& d, const GroupDescriptor& g) {
    if (g.family == Family::Unitary) throw std::invalid_argument("epsilon_twist: classical groups only");
    int c = 0;
    for (const auto& b : d.bpDisc) c += b.a;
    EpsilonTwist out;
    out.gPrimeFamily = g.family;
    out.gPrimeRank = g.rank - c;
    if (g.family == Family::Symplectic) {
        int f = 0;
        for (const auto& b : d.bpDisc)
            if (b.t % 2 == 0) ++f;
        out.epsilon = f % 2 == 1 ? WChar::Sgn : WChar::Triv;
    }
    return out;
}

std::vector<Summand> twisted_unipotent_part(const ParityDecomposition& d, WChar epsilon) {
    std::vector<Summand> out = d.bpU;
    if (epsilon == WChar::Sgn)
        for (auto& s : out) s.eps = 1 - s.eps;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arthur
