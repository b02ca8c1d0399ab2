#include "arthur/randgen.hpp"

#include <algorithm>

namespace arthur {

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Smallest t >= tMin with t + a - 1 of the given parity.
int good_t(int tMin, int a, int parityClass) {
    int t = std::max(1, tMin);
    if (((t + a - 1) % 2 + 2) % 2 != parityClass) ++t;
    return t;
}

// Random good-parity unipotent summand dimensions: a-1 must have the
// parity of the class, so a is odd for classes A/CD and even for B.
int good_w_dim(std::mt19937_64& rng, int parityClass, int budget) {
    std::vector<int> choices;
    for (int a = parityClass == 1 ? 2 : 1; a <= budget && a <= 5; a += 2) choices.push_back(a);
    return choices.empty() ? 0 : choices[rand_int(rng, 0, static_cast<int>(choices.size()) - 1)];
}

}  // namespace

GroupDescriptor random_quasi_split_group(std::mt19937_64& rng, int maxRank) {
    int n = rand_int(rng, 1, maxRank);
    switch (rand_int(rng, 0, 2)) {
        case 0: return quasi_split_symplectic(n);
        case 1: return quasi_split_odd_so(n);
        default:
            return quasi_split_even_so(n, rand_int(rng, 0, 1) == 0 ? SplitType::Split
                                                                   : SplitType::QuasiSplit);
    }
}

ArthurParameter random_parameter(std::mt19937_64& rng, const RandomParamOptions& opts) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        GroupDescriptor g = random_quasi_split_group(rng, opts.maxRank);
        int parity = good_parity_class(g);
        int budget = standard_rep_dim(g);
        std::vector<Summand> summands;
        std::vector<Block> blocks;
        bool ok = true;

        auto push_block = [&](int t, int a) {
            summands.push_back(Summand::v(GaussRat{}, t, a));
            blocks.push_back({t, a});
            budget -= 2 * a;
        };

        if (opts.forceRepeatedBlocks) {
            int a = rand_int(rng, 1, std::max(1, std::min(2, budget / 4)));
            if (budget < 4 * a) continue;
            int t = good_t(rand_int(rng, 1, 6), a, parity);
            push_block(t, a);
            push_block(t, a);
        }

        while (budget > 0 && ok) {
            int kind = rand_int(rng, 0, opts.goodParityOnly || opts.regular ? 1 : 3);
            switch (kind) {
                case 0: {  // good-parity discrete block
                    if (budget < 2) break;
                    int a = rand_int(rng, 1, std::min(3, budget / 2));
                    int t = good_t(rand_int(rng, 1, 9), a, parity);
                    push_block(t, a);
                    break;
                }
                case 1: {  // good-parity unipotent summand
                    int a = good_w_dim(rng, parity, budget);
                    if (a == 0) break;
                    summands.push_back(Summand::w(GaussRat{}, rand_int(rng, 0, 1), a));
                    budget -= a;
                    break;
                }
                case 2: {  // bad-parity self-dual pair
                    bool w = rand_int(rng, 0, 1) == 0;
                    if (w) {
                        int a = parity == 1 ? 1 : 2;  // a-1 of the wrong parity
                        if (budget < 2 * a) break;
                        int eps = rand_int(rng, 0, 1);
                        summands.push_back(Summand::w(GaussRat{}, eps, a));
                        summands.push_back(Summand::w(GaussRat{}, eps, a));
                        budget -= 2 * a;
                    } else {
                        int a = rand_int(rng, 1, 2);
                        if (budget < 4 * a) break;
                        int t = good_t(rand_int(rng, 1, 5), a, 1 - parity);
                        summands.push_back(Summand::v(GaussRat{}, t, a));
                        summands.push_back(Summand::v(GaussRat{}, t, a));
                        budget -= 4 * a;
                    }
                    break;
                }
                default: {  // pair with s in iR^x
                    GaussRat s{Rat(0), Rat(rand_int(rng, 1, 4), rand_int(rng, 1, 2))};
                    bool w = rand_int(rng, 0, 1) == 0;
                    if (w) {
                        if (budget < 2) break;
                        int eps = rand_int(rng, 0, 1);
                        summands.push_back(Summand::w(s, eps, 1));
                        summands.push_back(Summand::w(s.negated(), eps, 1));
                        budget -= 2;
                    } else {
                        if (budget < 4) break;
                        int t = rand_int(rng, 1, 5);
                        summands.push_back(Summand::v(s, t, 1));
                        summands.push_back(Summand::v(s.negated(), t, 1));
                        budget -= 4;
                    }
                    break;
                }
            }
            // Terminal fill so the dimension comes out exactly.
            if (budget == 1) {
                if (parity == 1) {
                    ok = false;
                } else {
                    summands.push_back(Summand::w(GaussRat{}, rand_int(rng, 0, 1), 1));
                    budget = 0;
                }
            }
        }
        if (!ok || budget != 0) continue;

        if (opts.regular) {
            // Reassign the t's from the bottom up so (9.1.6) holds.
            std::sort(blocks.begin(), blocks.end(),
                      [](const Block& x, const Block& y) { return x.a < y.a; });
            int maxU = 0;
            for (const auto& s : summands)
                if (s.kind == SummandKind::W) maxU = std::max(maxU, s.a - 1);
            std::vector<Summand> rebuilt;
            for (const auto& s : summands)
                if (s.kind == SummandKind::W) rebuilt.push_back(s);
            int prevFloor = maxU;  // t - a + 1 must exceed this
            std::vector<Block> sorted;
            for (const auto& b : blocks) {
                int t = good_t(prevFloor + b.a + rand_int(rng, 0, 2), b.a, parity);
                while (t - b.a + 1 <= prevFloor) t += 2;
                sorted.push_back({t, b.a});
                prevFloor = t + b.a - 1;
                rebuilt.push_back(Summand::v(GaussRat{}, t, b.a));
            }
            summands = rebuilt;
        }

        ArthurParameter psi{g, summands};
        if (opts.forceRepeatedBlocks) {
            // The regular pass would have separated them; keep as built.
            ParityDecomposition d = decompose(psi);
            bool repeated = false;
            for (std::size_t r = 0; r + 1 < d.bpDisc.size(); ++r)
                if (d.bpDisc[r] == d.bpDisc[r + 1]) repeated = true;
            if (!repeated) continue;
        }
        if (!validate(psi)) return psi.canonical();
    }
    throw std::runtime_error("random_parameter: could not build a valid parameter");
}

}  // namespace arthur
