#include "arthur/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "arthur/characters.hpp"
#include "arthur/compgroup.hpp"
#include "arthur/dsl.hpp"
#include "arthur/endoscopy.hpp"
#include "arthur/json_out.hpp"
#include "arthur/packets.hpp"
#include "arthur/randgen.hpp"
#include "arthur/rootdata.hpp"

namespace arthur {

namespace {

class Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

CheckResult finish(int id, std::string name, bool pass, std::string detail, const Timer& timer) {
    return {id, std::move(name), pass, std::move(detail), timer.ms()};
}

}  // namespace

CheckResult check_rho_shift(int maxRank) {
    Timer timer;
    int checked = 0;
    for (RhoCase gc : {RhoCase::A, RhoCase::B, RhoCase::CD}) {
        RootFamily fam = root_family_of(gc);
        for (int n = 1; n <= maxRank; ++n) {
            auto rhoG = rho(fam, n);
            for (int c = 1; c <= n; ++c) {
                auto closed = rho_v_closed(gc, n, c);
                auto rhoU = rho(RootFamily::Agl, c);
                auto rhoT = rho(fam, n - c);
                for (int k = 0; k < n; ++k) {
                    Rat levi = k < c ? rhoU[k] : rhoT[k - c];
                    if (closed[k] != rhoG[k] - levi)
                        return finish(1, "rho-shift oracle", false,
                                      "mismatch at case/" + std::to_string(n) + "/" +
                                          std::to_string(c),
                                      timer);
                }
                ++checked;
            }
        }
    }
    return finish(1, "rho-shift oracle", true,
                  std::to_string(checked) + " (family,n,c) triples, exact", timer);
}

CheckResult check_torsion(int maxTotalRank) {
    Timer timer;
    int checked = 0;
    for (RhoCase gc : {RhoCase::A, RhoCase::B, RhoCase::CD}) {
        for (int n = 1; n <= maxTotalRank; ++n) {
            for (int r1 = 0; r1 <= n; ++r1)
                for (int m1 = 0; r1 + 2 * m1 <= n; ++m1)
                    for (int r2 = 0; r1 + 2 * m1 + r2 <= n; ++r2)
                        for (int m2 = 0; r1 + 2 * m1 + r2 + 2 * m2 <= n; ++m2) {
                            int s2 = n - r1 - 2 * m1 - r2 - 2 * m2;
                            CartanShape shape{r1, m1, r2, m2, s2};
                            int c = shape.unitary_rank();
                            auto bits = torsion_bruteforce(gc, shape);
                            for (int b : bits)
                                if (b != c % 2)
                                    return finish(2, "torsion oracle (appendix)", false,
                                                  "shape (" + std::to_string(r1) + "," +
                                                      std::to_string(m1) + "," + std::to_string(r2) +
                                                      "," + std::to_string(m2) + "," +
                                                      std::to_string(s2) + ") disagrees with sgn^c",
                                                  timer);
                            ++checked;
                        }
        }
    }
    return finish(2, "torsion oracle (appendix)", true,
                  std::to_string(checked) + " shapes vs sgn^c, exact", timer);
}

CheckResult check_sign_consistency(int maxRank) {
    Timer timer;
    long long checked = 0;
    for (int n = 0; n <= maxRank; ++n)
        for (int c = 0; c <= n; ++c)
            for (int i = 0; i <= c; ++i) {
                int sd = c % 2 == 0 ? -1 : 1;  // s_d = (-1)^{c+1}
                if (S_character(i, c, n).eval(sd) != S_eval_at_sd(i, c, n))
                    return finish(3, "sign consistency (7.1.2) vs (8.1.7)", false,
                                  "mismatch at i=" + std::to_string(i) + " c=" + std::to_string(c) +
                                      " n=" + std::to_string(n),
                                  timer);
                ++checked;
            }
    return finish(3, "sign consistency (7.1.2) vs (8.1.7)", true,
                  std::to_string(checked) + " triples, exact", timer);
}

namespace {

long long packet_size(const PacketTable& t) {
    long long total = 0;
    for (const auto& e : t.entries) total += static_cast<long long>(e.data.size());
    return total;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return b;
}

// Discrete-type parameter: n distinct blocks V(0,t_r) x R[1] of the right
// parity, plus one W(0,0) x R[1] for the symplectic family.
ArthurParameter discrete_type_parameter(const GroupDescriptor& g) {
    ArthurParameter psi;
    psi.group = g;
    int parity = good_parity_class(g);
    for (int r = 0; r < g.rank; ++r) {
        int t = 2 * (g.rank - r) - (parity == 1 ? 1 : 0);
        psi.summands.push_back(Summand::v(GaussRat{}, t, 1));
    }
    if (g.family == Family::Symplectic) psi.summands.push_back(Summand::w(GaussRat{}, 0, 1));
    return psi;
}

}  // namespace

CheckResult check_packet_counts(int maxSpRank, int maxSoRank) {
    Timer timer;
    int groups = 0;
    auto run_family = [&](const GroupDescriptor& qs) -> std::string {
        auto dist = superpacket_distribution(qs);
        auto family = build_packet_family(discrete_type_parameter(qs));
        long long total = 0;
        for (const auto& [form, table] : family) {
            long long want = dist.count(form) ? dist.at(form) : 0;
            long long got = packet_size(table);
            if (got != want)
                return form.name() + ": packet has " + std::to_string(got) + ", superpacket says " +
                       std::to_string(want);
            if (form.is_orthogonal() && want != 0) {
                int n1 = form.family == Family::OddOrthogonal ? (form.p - 1) / 2 : form.p / 2;
                if (want != binomial(qs.rank, n1)) return form.name() + ": binomial mismatch";
            }
            total += got;
        }
        if (total != (1LL << qs.rank)) return qs.name() + ": total != 2^n";
        ++groups;
        return "";
    };
    for (int n = 1; n <= maxSpRank; ++n)
        if (auto msg = run_family(quasi_split_symplectic(n)); !msg.empty())
            return finish(4, "packet counts vs superpacket", false, msg, timer);
    for (int n = 1; n <= maxSoRank; ++n) {
        if (auto msg = run_family(quasi_split_odd_so(n)); !msg.empty())
            return finish(4, "packet counts vs superpacket", false, msg, timer);
        // the even orthogonal type with discrete series at this rank
        SplitType alpha = n % 2 == 0 ? SplitType::Split : SplitType::QuasiSplit;
        if (auto msg = run_family(quasi_split_even_so(n, alpha)); !msg.empty())
            return finish(4, "packet counts vs superpacket", false, msg, timer);
    }
    return finish(4, "packet counts vs superpacket", true,
                  std::to_string(groups) + " quasi-split groups, all forms, exact", timer);
}

CheckResult check_descent(std::uint64_t seed, int trials) {
    Timer timer;
    std::mt19937_64 rng(seed);
    RandomParamOptions opts;
    opts.maxRank = 6;
    opts.goodParityOnly = true;
    opts.forceRepeatedBlocks = true;
    int survivors = 0;
    for (int k = 0; k < trials; ++k) {
        ArthurParameter psi = random_parameter(rng, opts);
        ParityDecomposition d = decompose(psi);
        ComponentGroup cg = component_group(d);
        for (const auto& iv : index_set(d.bpDisc, psi.group)) {
            if (!vanishing_filter(iv, d.bpDisc)) continue;
            auto values = multi_sign(iv, d.bpDisc, psi.group.rank);
            for (auto [x, y] : cg.relations) {
                if (x >= cg.numDiscrete || y >= cg.numDiscrete) continue;
                if (values[x] != values[y])
                    return finish(5, "descent: S_i trivial on (9.1.3) kernel", false,
                                  "violation for " + render_param(psi), timer);
            }
            ++survivors;
        }
    }
    return finish(5, "descent: S_i trivial on (9.1.3) kernel", true,
                  std::to_string(trials) + " parameters, " + std::to_string(survivors) +
                      " survivors, zero violations",
                  timer);
}

namespace {

// Minimal regular t-assignment for a given block shape over a unipotent
// remainder, largest block first.
std::vector<Block> minimal_regular_blocks(const std::vector<int>& shape, int parity, int maxU) {
    std::vector<int> sizes = shape;
    std::sort(sizes.begin(), sizes.end());
    std::vector<Block> blocks;
    int floorVal = maxU;  // t - a + 1 must exceed this
    for (int a : sizes) {
        int t = floorVal + a;
        if (((t + a - 1) % 2 + 2) % 2 != parity) ++t;
        blocks.push_back({t, a});
        floorVal = t + a - 1;
    }
    std::reverse(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<std::vector<int>> compositions_up_to(int maxSum, int maxParts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == maxParts) return;
        for (int a = 1; a <= remaining; ++a) {
            cur.push_back(a);
            self(self, remaining - a);
            cur.pop_back();
        }
    };
    rec(rec, maxSum);
    return out;
}

// A few unipotent fillings of the given dimension and parity class.
std::vector<std::vector<Summand>> unipotent_fillings(int dim, int parity) {
    std::vector<std::vector<Summand>> choices;
    if (dim == 0) {
        choices.push_back({});
        return choices;
    }
    int unit = parity == 1 ? 2 : 1;
    if (dim % unit == 0) {
        std::vector<Summand> flat;
        for (int k = 0; k < dim / unit; ++k) flat.push_back(Summand::w(GaussRat{}, k % 2, unit));
        choices.push_back(flat);
    }
    int big = parity == 1 ? 4 : 3;
    if (dim >= big && (dim - big) % unit == 0) {
        std::vector<Summand> mixed;
        mixed.push_back(Summand::w(GaussRat{}, 0, big));
        for (int k = 0; k < (dim - big) / unit; ++k) mixed.push_back(Summand::w(GaussRat{}, 0, unit));
        choices.push_back(mixed);
    }
    return choices;
}

}  // namespace

CheckResult check_recursion(int maxTotalRank) {
    Timer timer;
    int packetsChecked = 0;
    std::vector<GroupDescriptor> groups;
    for (int n = 1; n <= maxTotalRank; ++n) {
        groups.push_back(quasi_split_symplectic(n));
        groups.push_back(quasi_split_odd_so(n));
        groups.push_back(quasi_split_even_so(n, SplitType::Split));
        groups.push_back(quasi_split_even_so(n, SplitType::QuasiSplit));
    }
    for (const auto& g : groups) {
        // Exhaustive shapes for small rank, single blocks for large rank.
        int shapeCap = g.rank <= 5 ? 4 : 1;
        for (const auto& shape : compositions_up_to(std::min(g.rank, 6), shapeCap)) {
            int c = 0;
            for (int a : shape) c += a;
            if (c > g.rank) continue;
            int rest = standard_rep_dim(g) - 2 * c;
            int parity = good_parity_class(g);
            for (const auto& unip : unipotent_fillings(rest, parity)) {
                int maxU = 0;
                for (const auto& s : unip) maxU = std::max(maxU, s.a - 1);
                ArthurParameter psi;
                psi.group = g;
                for (const auto& b : minimal_regular_blocks(shape, parity, maxU))
                    psi.summands.push_back(Summand::v(GaussRat{}, b.t, b.a));
                for (const auto& s : unip) psi.summands.push_back(s);
                if (validate(psi)) continue;
                ParityDecomposition d = decompose(psi);
                if (!is_regular(d)) continue;

                PacketFamily direct = build_packet_family(psi);
                EpsilonTwist twist = epsilon_twist(d, g);
                PacketFamily folded = unipotent_base_family(
                    quasi_split_form(direct.begin()->second.gPrimeQuasiSplit),
                    twisted_unipotent_part(d, twist.epsilon));
                for (auto it = d.bpDisc.rbegin(); it != d.bpDisc.rend(); ++it) {
                    int blocksLeft = static_cast<int>(d.bpDisc.rend() - it) - 1;
                    int rankHere = g.rank;
                    for (int r = 0; r < blocksLeft; ++r) rankHere -= d.bpDisc[r].a;
                    GroupDescriptor ambient;
                    switch (g.family) {
                        case Family::Symplectic: ambient = quasi_split_symplectic(rankHere); break;
                        case Family::OddOrthogonal: ambient = quasi_split_odd_so(rankHere); break;
                        default: {
                            int cBelow = 0;
                            for (int r = 0; r < blocksLeft; ++r) cBelow += d.bpDisc[r].a;
                            SplitType alpha = g.split_type();
                            if (cBelow % 2 != 0)
                                alpha = alpha == SplitType::Split ? SplitType::QuasiSplit
                                                                  : SplitType::Split;
                            ambient = quasi_split_even_so(rankHere, alpha);
                            break;
                        }
                    }
                    folded = add_block(folded, *it, ambient);
                }
                for (const auto& [form, table] : direct) {
                    auto it = folded.find(form);
                    if (it == folded.end() || !same_packet(table, it->second))
                        return finish(6, "recursion: build_packet = fold of add_block", false,
                                      "mismatch for " + form.name() + ", " + render_param(psi),
                                      timer);
                    ++packetsChecked;
                }
            }
        }
    }
    return finish(6, "recursion: build_packet = fold of add_block", true,
                  std::to_string(packetsChecked) + " packets, structural equality", timer);
}

namespace {

// Independent generator for criterion 7: enumerate the raw constraint
// space, canonicalize by sorting the factor pair, and compare as sets.
std::set<std::string> endoscopy_bruteforce_keys(const GroupDescriptor& g) {
    std::set<std::string> keys;
    int n = g.rank;
    auto key_of = [](const GroupDescriptor& h1, const GroupDescriptor& h2, bool unordered) {
        std::string k1 = h1.name(), k2 = h2.name();
        if (unordered && k2 > k1) std::swap(k1, k2);
        return k1 + "|" + k2;
    };
    switch (g.family) {
        case Family::Symplectic:
            for (int b = 0; b <= n; ++b)
                for (SplitType alpha : {SplitType::Split, SplitType::QuasiSplit}) {
                    if (b == 0 && alpha != SplitType::Split) continue;
                    if (b == 1 && alpha == SplitType::Split) continue;
                    keys.insert(key_of(quasi_split_symplectic(n - b), quasi_split_even_so(b, alpha),
                                       false));
                }
            break;
        case Family::OddOrthogonal:
            for (int a = 0; a <= n; ++a)
                keys.insert(key_of(quasi_split_odd_so(a), quasi_split_odd_so(n - a), true));
            break;
        case Family::EvenOrthogonal: {
            SplitType alpha = g.split_type();
            for (int a = 0; a <= n; ++a)
                for (SplitType beta : {SplitType::Split, SplitType::QuasiSplit})
                    for (SplitType gamma : {SplitType::Split, SplitType::QuasiSplit}) {
                        int b = n - a;
                        bool same = beta == gamma;
                        if ((alpha == SplitType::Split) != same) continue;
                        if (a == 0 && beta != SplitType::Split) continue;
                        if (b == 0 && gamma != SplitType::Split) continue;
                        if (a == 1 && beta == SplitType::Split) continue;
                        if (b == 1 && gamma == SplitType::Split) continue;
                        keys.insert(key_of(quasi_split_even_so(a, beta), quasi_split_even_so(b, gamma),
                                           true));
                    }
            break;
        }
        case Family::Unitary: break;
    }
    return keys;
}

}  // namespace

CheckResult check_endoscopy(int maxRank) {
    Timer timer;
    int lists = 0;
    for (int n = 1; n <= maxRank; ++n) {
        std::vector<GroupDescriptor> gs = {quasi_split_symplectic(n), quasi_split_odd_so(n),
                                           quasi_split_even_so(n, SplitType::Split),
                                           quasi_split_even_so(n, SplitType::QuasiSplit)};
        for (const auto& g : gs) {
            auto data = elliptic_endoscopic_data(g);
            std::set<std::string> got;
            for (const auto& d : data) {
                std::string k1 = d.h1.name(), k2 = d.h2.name();
                bool unordered = g.family != Family::Symplectic;
                if (unordered && k2 > k1) std::swap(k1, k2);
                if (!got.insert(k1 + "|" + k2).second)
                    return finish(7, "endoscopic data vs brute force", false,
                                  g.name() + ": duplicate datum", timer);
            }
            if (got != endoscopy_bruteforce_keys(g))
                return finish(7, "endoscopic data vs brute force", false,
                              g.name() + ": set mismatch", timer);
            if (g.family == Family::Symplectic &&
                static_cast<int>(data.size()) != 2 * n)
                return finish(7, "endoscopic data vs brute force", false,
                              g.name() + ": count != 2n", timer);
            ++lists;
        }
    }
    return finish(7, "endoscopic data vs brute force", true,
                  std::to_string(lists) + " groups, exact set equality", timer);
}

CheckResult check_compgroup_algebra(std::uint64_t seed, int trials) {
    Timer timer;
    std::mt19937_64 rng(seed);
    RandomParamOptions opts;
    opts.maxRank = 7;
    opts.goodParityOnly = true;
    for (int k = 0; k < trials; ++k) {
        ArthurParameter psi = random_parameter(rng, opts);
        ParityDecomposition d = decompose(psi);
        ComponentGroup cg = component_group(d);
        auto chars = characters(cg);
        if (static_cast<long long>(chars.size()) != (1LL << cg.numClasses))
            return finish(8, "component-group algebra", false, "character count != 2^rank", timer);
        // perfect pairing: distinct elements are separated by characters
        std::set<std::vector<int>> valueVectors;
        for (std::uint32_t mask = 0; mask < (1u << cg.numClasses); ++mask) {
            CgElement x;
            for (int j = 0; j < cg.numClasses; ++j) x.classBits.push_back((mask >> j) & 1);
            std::vector<int> values;
            for (const auto& eta : chars) values.push_back(eta(x));
            if (!valueVectors.insert(values).second)
                return finish(8, "component-group algebra", false, "degenerate pairing", timer);
        }
        // homomorphism property on random pairs
        for (int rep = 0; rep < 4; ++rep) {
            CgElement x, y;
            for (int j = 0; j < cg.numClasses; ++j) {
                x.classBits.push_back(static_cast<int>(rng() & 1));
                y.classBits.push_back(static_cast<int>(rng() & 1));
            }
            CgElement xy;
            for (int j = 0; j < cg.numClasses; ++j)
                xy.classBits.push_back(x.classBits[j] ^ y.classBits[j]);
            for (const auto& eta : chars)
                if (eta(xy) != eta(x) * eta(y))
                    return finish(8, "component-group algebra", false, "not multiplicative", timer);
        }
        // (8.1.6) factorization whenever the first block splits off
        if (d.bpDisc.size() >= 1 && !(d.bpDisc.size() >= 2 && d.bpDisc[0] == d.bpDisc[1])) {
            auto split = split_first_block(cg, d.bpDisc);
            CgElement s = s_element(cg, d);
            int sD = d.bpDisc[0].a % 2 == 0 ? -1 : 1;  // value eta_d takes on s_d
            for (const auto& eta : chars) {
                auto [etaD, etaRest] = factor_character(cg, split, eta);
                // eta'(s_{psi_G'}) via the remainder bits
                std::vector<int> restBits;
                for (std::size_t r = 1; r < d.bpDisc.size(); ++r)
                    restBits.push_back(d.bpDisc[r].a % 2 == 0 ? 1 : 0);
                for (const auto& u : d.bpU) restBits.push_back(u.a % 2 == 0 ? 1 : 0);
                CgElement sRest = element_from_generator_bits(split.remainder, restBits);
                int lhs = eta(s);
                int rhs = (sD == -1 ? etaD : 1) * etaRest(sRest);
                if (lhs != rhs)
                    return finish(8, "component-group algebra", false, "(8.1.6) fails", timer);
            }
        }
    }
    return finish(8, "component-group algebra", true,
                  std::to_string(trials) + " random decompositions, zero violations", timer);
}

CheckResult check_multiplicity_one(std::uint64_t seed, int trials) {
    Timer timer;
    std::mt19937_64 rng(seed);
    int regularCount = 0, irregularCount = 0;
    for (int k = 0; k < trials; ++k) {
        RandomParamOptions opts;
        opts.maxRank = 5;
        opts.goodParityOnly = true;
        opts.regular = k % 2 == 0;
        ArthurParameter psi = random_parameter(rng, opts);
        ParityDecomposition d = decompose(psi);
        PacketTable table = build_packet(psi);
        auto report = multiplicity_one_check(table);
        if (is_regular(d)) {
            if (!report.pass || report.weaklyFairCaveat || !table.regular)
                return finish(9, "multiplicity one / range flags", false,
                              "regular packet misflagged: " + render_param(psi), timer);
            for (const auto& e : table.entries)
                for (const auto& datum : e.data)
                    if (datum.range != Range::Good)
                        return finish(9, "multiplicity one / range flags", false,
                                      "regular datum not in good range", timer);
            ++regularCount;
        } else {
            if (!report.weaklyFairCaveat || table.regular)
                return finish(9, "multiplicity one / range flags", false,
                              "irregular packet not flagged weakly-fair: " + render_param(psi),
                              timer);
            for (const auto& e : table.entries)
                for (const auto& datum : e.data)
                    if (datum.range != Range::WeaklyFair)
                        return finish(9, "multiplicity one / range flags", false,
                                      "irregular datum not flagged weakly-fair", timer);
            if (!report.pass)
                return finish(9, "multiplicity one / range flags", false,
                              "datum-level multiplicity failure: " + render_param(psi), timer);
            ++irregularCount;
        }
    }
    return finish(9, "multiplicity one / range flags", true,
                  std::to_string(regularCount) + " regular + " + std::to_string(irregularCount) +
                      " weakly-fair packets, zero misclassifications",
                  timer);
}

CheckResult check_twist_table() {
    Timer timer;
    struct Case {
        EndoShape shape;
        int cParity;
        WChar h1, h2;
    };
    const Case table[] = {
        {EndoShape::SpSOd, 0, WChar::Triv, WChar::Triv},
        {EndoShape::SOdSp, 0, WChar::Triv, WChar::Triv},
        {EndoShape::SpSOqd, 0, WChar::Triv, WChar::Triv},
        {EndoShape::SOqdSp, 0, WChar::Triv, WChar::Triv},
        {EndoShape::SpSOd, 1, WChar::Triv, WChar::Sgn},
        {EndoShape::SOdSp, 1, WChar::Sgn, WChar::Sgn},
        {EndoShape::SpSOqd, 1, WChar::Triv, WChar::Sgn},
        {EndoShape::SOqdSp, 1, WChar::Sgn, WChar::Sgn},
    };
    for (const auto& c : table) {
        auto [h1, h2] = twist_table(Family::Symplectic, c.shape, c.cParity);
        if (h1 != c.h1 || h2 != c.h2)
            return finish(10, "twist table (8.3.8)-(8.3.15)", false, "symplectic case mismatch",
                          timer);
    }
    for (Family fam : {Family::OddOrthogonal, Family::EvenOrthogonal})
        for (auto shape : {EndoShape::SpSOd, EndoShape::SOdSp, EndoShape::SpSOqd, EndoShape::SOqdSp})
            for (int cp : {0, 1}) {
                auto [h1, h2] = twist_table(fam, shape, cp);
                if (h1 != WChar::Triv || h2 != WChar::Triv)
                    return finish(10, "twist table (8.3.8)-(8.3.15)", false,
                                  "orthogonal case not (triv,triv)", timer);
            }
    return finish(10, "twist table (8.3.8)-(8.3.15)", true, "all cases verbatim", timer);
}

CheckResult check_cli_roundtrip(std::uint64_t seed, int trials) {
    Timer timer;
    std::mt19937_64 rng(seed);
    RandomParamOptions opts;
    opts.maxRank = 6;
    for (int k = 0; k < trials; ++k) {
        ArthurParameter psi = random_parameter(rng, opts);
        std::string text = render_param(psi);
        auto back = parse_param(text, psi.group);
        if (std::holds_alternative<ParamError>(back))
            return finish(11, "CLI round trip / stability", false,
                          "render not parseable: " + text, timer);
        if (!(std::get<ArthurParameter>(back).summands == psi.canonical().summands))
            return finish(11, "CLI round trip / stability", false, "round trip changed " + text,
                          timer);
    }
    // byte stability of the JSON rendering
    std::mt19937_64 rng2(seed);
    RandomParamOptions gp;
    gp.maxRank = 4;
    gp.goodParityOnly = true;
    for (int k = 0; k < 20; ++k) {
        ArthurParameter psi = random_parameter(rng2, gp);
        std::string once = to_json(build_packet(psi)).dump(2);
        std::string twice = to_json(build_packet(psi)).dump(2);
        if (once != twice)
            return finish(11, "CLI round trip / stability", false, "JSON not byte-stable", timer);
    }
    return finish(11, "CLI round trip / stability", true,
                  std::to_string(trials) + " round trips + byte-stable JSON", timer);
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed, int maxRank) {
    auto cap = [&](int dflt) { return maxRank > 0 ? std::min(maxRank, dflt) : dflt; };
    std::vector<CheckResult> results;
    results.push_back(check_rho_shift(cap(12)));
    results.push_back(check_torsion(cap(6)));
    results.push_back(check_sign_consistency(cap(25)));
    results.push_back(check_packet_counts(cap(8), cap(10)));
    results.push_back(check_descent(seed));
    results.push_back(check_recursion(cap(10)));
    results.push_back(check_endoscopy(cap(10)));
    results.push_back(check_compgroup_algebra(seed));
    results.push_back(check_multiplicity_one(seed));
    results.push_back(check_twist_table());
    results.push_back(check_cli_roundtrip(seed));
    return results;
}

}  // namespace arthur
