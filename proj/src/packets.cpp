#include "arthur/packets.hpp"

#include <algorithm>
#include <stdexcept>

#include "arthur/characters.hpp"
#include "arthur/rootdata.hpp"

namespace arthur {

namespace {

int sum_a(const std::vector<Block>& blocks) {
    int c = 0;
    for (const auto& b : blocks) c += b.a;
    return c;
}

GroupDescriptor quasi_split_g_prime(const GroupDescriptor& g, int c) {
    int nPrime = g.rank - c;
    switch (g.family) {
        case Family::Symplectic: return quasi_split_symplectic(nPrime);
        case Family::OddOrthogonal: return quasi_split_odd_so(nPrime);
        case Family::EvenOrthogonal: {
            if (nPrime == 0) return GroupDescriptor::even_orthogonal(0, 0);
            SplitType alpha = quasi_split_form(g).split_type();
            SplitType flipped = alpha == SplitType::Split ? SplitType::QuasiSplit : SplitType::Split;
            return quasi_split_even_so(nPrime, c % 2 == 0 ? alpha : flipped);
        }
        case Family::Unitary: break;
    }
    throw std::invalid_argument("quasi_split_g_prime: classical groups only");
}

GroupDescriptor base_form_of(const GroupDescriptor& g, const std::vector<Block>& blocks,
                             const std::vector<int>& iv) {
    if (g.family == Family::Symplectic) return GroupDescriptor::symplectic(g.rank - sum_a(blocks));
    int sumI = 0, sumCoI = 0;
    for (std::size_t r = 0; r < blocks.size(); ++r) {
        sumI += iv[r];
        sumCoI += blocks[r].a - iv[r];
    }
    return GroupDescriptor::so(g.p - 2 * sumI, g.q - 2 * sumCoI);
}

struct RawDatum {
    std::vector<int> iv;
    std::vector<int> baseEta;
};

std::vector<Summand> flip_w_eps(std::vector<Summand> ws, bool flip) {
    if (flip)
        for (auto& s : ws) s.eps = 1 - s.eps;
    std::sort(ws.begin(), ws.end());
    return ws;
}

// Shared tail of build_packet and add_block: given the raw (i-vector, base
// character) pairs, compute signs, degrees and Levi data and group by the
// character of A(psi_G).
//
// `wPart` is the unipotent part of the parameter being built; `twistedU`
// is the unipotent part of psi_{G'} (the epsilon_psi-twisted one), which
// is what A(psi_{G'}) is presented from.
PacketTable assemble(const GroupDescriptor& g, const std::vector<Block>& blocks,
                     const std::vector<Summand>& wPart, const std::vector<Summand>& twistedU,
                     WChar epsilon, bool regular, std::vector<RawDatum> raws) {
    PacketTable table;
    table.group = g;
    table.epsilonPsi = epsilon;
    table.regular = regular;
    int c = sum_a(blocks);
    table.gPrimeQuasiSplit = quasi_split_g_prime(g, c);

    // A rank-0 G' has a trivial dual group, so A(psi_{G'}) is trivial no
    // matter how many unipotent summands remain. For positive rank the
    // one-generator-per-summand presentation is an assumption on the
    // unipotent theory, flagged in the output.
    bool rankZeroBase = table.gPrimeQuasiSplit.rank == 0;
    std::vector<Summand> uGens = rankZeroBase ? std::vector<Summand>{} : twistedU;
    table.unipotentStructureAssumed = !uGens.empty();
    table.cg = component_group_from(blocks, uGens);
    for (const auto& b : blocks) table.sPsiGen.push_back(b.a % 2 == 0 ? 1 : 0);
    for (const auto& s : uGens) table.sPsiGen.push_back(s.a % 2 == 0 ? 1 : 0);

    ArthurParameter psi;
    psi.group = g;
    for (const auto& b : blocks) psi.summands.push_back(Summand::v(GaussRat{}, b.t, b.a));
    for (const auto& s : wPart) psi.summands.push_back(s);
    table.parameter = psi.canonical();

    std::vector<InductionDatum> data;
    for (auto& raw : raws) {
        InductionDatum d;
        d.indexVector = raw.iv;
        d.blocks = blocks;
        for (std::size_t r = 0; r < blocks.size(); ++r) {
            d.leviChain.push_back(GroupDescriptor::unitary(raw.iv[r], blocks[r].a - raw.iv[r]));
            d.blockCharacters.push_back(blocks[r].t / 2);
        }
        d.baseForm = base_form_of(g, blocks, raw.iv);
        d.baseEta = std::move(raw.baseEta);
        d.signValues = multi_sign(raw.iv, blocks, g.rank);
        d.range = regular ? Range::Good : Range::WeaklyFair;

        long long dimL = dim_complex(d.baseForm);
        long long qL = q_invariant(d.baseForm);
        for (std::size_t r = 0; r < blocks.size(); ++r) {
            dimL += static_cast<long long>(blocks[r].a) * blocks[r].a;
            qL += static_cast<long long>(raw.iv[r]) * (blocks[r].a - raw.iv[r]);
        }
        long long dimDiff = dim_complex(g) - dimL;
        d.degree = dimDiff / 2 - (q_invariant(g) - qL);
        if (dimDiff % 2 != 0 || d.degree < 0)
            throw std::logic_error("assemble: inconsistent induction degree");
        data.push_back(std::move(d));
    }
    std::sort(data.begin(), data.end(), [](const InductionDatum& x, const InductionDatum& y) {
        if (x.indexVector != y.indexVector) return x.indexVector < y.indexVector;
        return x.baseEta < y.baseEta;
    });

    std::size_t numBlocks = blocks.size();
    for (const auto& eta : characters(table.cg)) {
        PacketEntry entry;
        for (int gi = 0; gi < table.cg.num_generators(); ++gi)
            entry.etaGen.push_back(character_value_on_generator(table.cg, eta, gi));
        for (const auto& d : data) {
            bool match = true;
            for (std::size_t r = 0; r < d.signValues.size() && match; ++r)
                if (entry.etaGen[r] != d.signValues[r]) match = false;
            for (std::size_t m = 0; m < d.baseEta.size() && match; ++m)
                if (entry.etaGen[numBlocks + m] != d.baseEta[m]) match = false;
            if (match) entry.data.push_back(d);
        }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

// eta' values per unipotent generator, for every character of A(psi_{G'}).
std::vector<std::vector<int>> base_eta_values(const GroupDescriptor& gPrimeQS,
                                              const std::vector<Summand>& twistedU) {
    if (gPrimeQS.rank == 0 || twistedU.empty()) return {{}};
    ComponentGroup baseCg = component_group_from({}, twistedU);
    std::vector<std::vector<int>> out;
    for (const auto& eta : characters(baseCg)) {
        std::vector<int> vals;
        for (int m = 0; m < baseCg.num_generators(); ++m)
            vals.push_back(character_value_on_generator(baseCg, eta, m));
        out.push_back(std::move(vals));
    }
    return out;
}

}  // namespace

bool same_packet(const PacketTable& a, const PacketTable& b) {
    return a.group == b.group && a.parameter.group == b.parameter.group &&
           a.parameter.summands == b.parameter.summands && a.cg.classOf == b.cg.classOf &&
           a.cg.numDiscrete == b.cg.numDiscrete && a.cg.numUnipotent == b.cg.numUnipotent &&
           a.sPsiGen == b.sPsiGen && a.epsilonPsi == b.epsilonPsi && a.regular == b.regular &&
           a.gPrimeQuasiSplit == b.gPrimeQuasiSplit && a.entries == b.entries;
}

std::vector<std::vector<int>> index_set(const std::vector<Block>& blocks, const GroupDescriptor& g) {
    std::vector<std::vector<int>> out;
    bool orthogonal = g.is_orthogonal();
    std::vector<int> iv(blocks.size(), 0);
    while (true) {
        bool admissible = true;
        if (orthogonal) {
            int sumI = 0, sumCoI = 0;
            for (std::size_t r = 0; r < blocks.size(); ++r) {
                sumI += iv[r];
                sumCoI += blocks[r].a - iv[r];
            }
            admissible = 2 * sumI <= g.p && 2 * sumCoI <= g.q;
        }
        if (admissible) out.push_back(iv);
        // odometer increment over the box prod [0, a_r]
        std::size_t r = blocks.size();
        for (;;) {
            if (r == 0) return out;
            --r;
            if (iv[r] < blocks[r].a) {
                ++iv[r];
                std::fill(iv.begin() + r + 1, iv.end(), 0);
                break;
            }
            iv[r] = 0;
        }
    }
}

bool vanishing_filter(const std::vector<int>& iv, const std::vector<Block>& blocks) {
    for (std::size_t r = 0; r + 1 < blocks.size(); ++r)
        if (blocks[r] == blocks[r + 1] && iv[r] != blocks[r + 1].a - iv[r + 1]) return false;
    return true;
}

std::vector<int> multi_sign(const std::vector<int>& iv, const std::vector<Block>& blocks, int n) {
    if (iv.size() != blocks.size()) throw std::invalid_argument("multi_sign: size mismatch");
    std::vector<int> values;
    int prefix = 0;
    for (std::size_t r = 0; r < blocks.size(); ++r) {
        values.push_back(S_character(iv[r], blocks[r].a, n - prefix).eval(-1));
        prefix += blocks[r].a;
    }
    return values;
}

std::vector<int> multi_sign_alt(const std::vector<int>& iv, const std::vector<Block>& blocks) {
    if (iv.size() != blocks.size()) throw std::invalid_argument("multi_sign_alt: size mismatch");
    std::vector<int> values;
    long long before = 0;
    for (std::size_t r = 0; r < blocks.size(); ++r) {
        long long a = blocks[r].a, i = iv[r];
        long long expo = i * (before + 1) + (a - i) * before + a * (a + 1) / 2;
        values.push_back(expo % 2 == 0 ? 1 : -1);
        before += a;
    }
    return values;
}

PacketTable build_packet(const ArthurParameter& psi) {
    if (psi.group.family == Family::Unitary)
        throw std::invalid_argument("build_packet: unsupported family");
    ParityDecomposition d = decompose(psi);
    if (!d.mp.empty())
        throw std::invalid_argument("build_packet: bad-parity residue present; good parity required");
    EpsilonTwist twist = epsilon_twist(d, psi.group);
    std::vector<Summand> twistedU = twisted_unipotent_part(d, twist.epsilon);
    GroupDescriptor gPrimeQS = quasi_split_g_prime(psi.group, sum_a(d.bpDisc));

    std::vector<RawDatum> raws;
    auto etas = base_eta_values(gPrimeQS, twistedU);
    for (const auto& iv : index_set(d.bpDisc, psi.group)) {
        if (!vanishing_filter(iv, d.bpDisc)) continue;
        for (const auto& eta : etas) raws.push_back({iv, eta});
    }
    return assemble(psi.group, d.bpDisc, d.bpU, twistedU, twist.epsilon, is_regular(d),
                    std::move(raws));
}

PacketFamily build_packet_family(const ArthurParameter& psi) {
    PacketFamily family;
    for (const auto& form : pure_inner_forms(quasi_split_form(psi.group))) {
        ArthurParameter onForm = psi;
        onForm.group = form;
        family.emplace(form, build_packet(onForm));
    }
    return family;
}

PacketFamily unipotent_base_family(const GroupDescriptor& gPrimeQuasiSplit,
                                   const std::vector<Summand>& unipotent) {
    ArthurParameter psi;
    psi.group = gPrimeQuasiSplit;
    psi.summands = unipotent;
    return build_packet_family(psi);
}

PacketFamily add_block(const PacketFamily& base, Block blk, const GroupDescriptor& quasiSplitG) {
    if (base.empty()) throw std::invalid_argument("add_block: empty base family");
    const PacketTable& anyBase = base.begin()->second;
    if (!dominance_gap_ok(blk, anyBase.parameter.summands))
        throw std::domain_error("add_block: gap condition (8.1.2) fails for this block");

    ParityDecomposition innerD = decompose(anyBase.parameter);
    if (!innerD.bpDisc.empty()) {
        const Block& first = innerD.bpDisc.front();
        if (blk.t < first.t || (blk.t == first.t && blk.a < first.a))
            throw std::invalid_argument("add_block: block violates the (9.1.1) ordering");
    }
    std::vector<Block> fullBlocks;
    fullBlocks.push_back(blk);
    fullBlocks.insert(fullBlocks.end(), innerD.bpDisc.begin(), innerD.bpDisc.end());

    // If G is symplectic and t is even, psi' = (Std_{G'} . psi_{G'}) (x) sgn:
    // the W-part regains one sgn twist and epsilon_psi flips.
    bool flip = quasiSplitG.family == Family::Symplectic && blk.t % 2 == 0;
    std::vector<Summand> wPart = flip_w_eps(innerD.bpU, flip);
    WChar epsilon = anyBase.epsilonPsi;
    if (flip) epsilon = epsilon == WChar::Triv ? WChar::Sgn : WChar::Triv;
    std::vector<Summand> twistedU = flip_w_eps(innerD.bpU, anyBase.epsilonPsi == WChar::Sgn);

    ParityDecomposition fullD;
    fullD.bpDisc = fullBlocks;
    fullD.bpU = wPart;

    PacketFamily out;
    for (const auto& form : pure_inner_forms(quasiSplitG)) {
        std::vector<RawDatum> raws;
        for (const auto& rep : c_levi_representatives(form, blk.a)) {
            auto it = base.find(rep.classical);
            if (it == base.end())
                throw std::logic_error("add_block: missing base form " + rep.classical.name());
            for (const auto& entry : it->second.entries) {
                for (const auto& datum : entry.data) {
                    if (!datum.blocks.empty() && datum.blocks.front() == blk &&
                        rep.i != blk.a - datum.indexVector.front())
                        continue;  // Lemma 9.2
                    RawDatum raw;
                    raw.iv.reserve(datum.indexVector.size() + 1);
                    raw.iv.push_back(rep.i);
                    raw.iv.insert(raw.iv.end(), datum.indexVector.begin(), datum.indexVector.end());
                    raw.baseEta = datum.baseEta;
                    raws.push_back(std::move(raw));
                }
            }
        }
        out.emplace(form, assemble(form, fullBlocks, wPart, twistedU, epsilon, is_regular(fullD),
                                   std::move(raws)));
    }
    return out;
}

std::vector<StableTerm> stable_sum(const PacketTable& packet, std::optional<CgElement> x) {
    CgElement s = element_from_generator_bits(packet.cg, packet.sPsiGen);
    if (x) {
        if (x->classBits.size() != s.classBits.size())
            throw std::invalid_argument("stable_sum: x does not live in A(psi)");
        for (std::size_t k = 0; k < s.classBits.size(); ++k) s.classBits[k] ^= x->classBits[k];
    }
    std::vector<StableTerm> terms;
    auto etas = characters(packet.cg);
    for (std::size_t e = 0; e < packet.entries.size(); ++e) {
        int coeff = etas[e](s);
        for (const auto& d : packet.entries[e].data) terms.push_back({&d, coeff});
    }
    return terms;
}

MultiplicityOneReport multiplicity_one_check(const PacketTable& packet) {
    MultiplicityOneReport report;
    report.weaklyFairCaveat = !packet.regular;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> seen;  // (iv, baseEta)
    for (const auto& entry : packet.entries) {
        for (std::size_t k = 0; k < entry.data.size(); ++k) {
            for (std::size_t l = k + 1; l < entry.data.size(); ++l) {
                if (entry.data[k] == entry.data[l]) {
                    report.detail = "duplicate datum within one eta";
                    return report;
                }
            }
            seen.emplace_back(entry.data[k].indexVector, entry.data[k].baseEta);
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        report.detail = "datum attached to more than one eta";
        return report;
    }
    report.pass = true;
    report.detail = packet.regular ? "multiplicity one"
                                   : "multiplicity one at the datum level; weakly fair range, "
                                     "irreducibility not asserted";
    return report;
}

}  // namespace arthur
