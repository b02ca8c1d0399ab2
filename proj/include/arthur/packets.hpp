#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arthur/compgroup.hpp"
#include "arthur/groups.hpp"
#include "arthur/levi.hpp"
#include "arthur/params.hpp"

namespace arthur {

enum class Range { Good, WeaklyFair };

// One member of the packet: the cohomological-induction datum
// S_i x R~_i((x_r xi_{i_r,t_r}) x piA(psi_G', G'_i)) of (9.1.5).
struct InductionDatum {
    std::vector<int> indexVector;            // i_1..i_R
    std::vector<Block> blocks;               // (t_r, a_r), sorted per (9.1.1)
    std::vector<GroupDescriptor> leviChain;  // U(i_r, a_r - i_r) factors
    GroupDescriptor baseForm;                // G'_i
    std::vector<long long> blockCharacters;  // floor(t_r/2)
    std::vector<int> baseEta;                // +1/-1 per unipotent generator
    std::vector<int> signValues;             // S_i on z_1..z_R, +1/-1
    long long degree = 0;
    Range range = Range::Good;
    bool vanished = false;

    friend bool operator==(const InductionDatum&, const InductionDatum&) = default;
};

struct PacketEntry {
    std::vector<int> etaGen;  // +1/-1 per generator of A(psi_G)
    std::vector<InductionDatum> data;

    friend bool operator==(const PacketEntry&, const PacketEntry&) = default;
};

// The map eta -> multiset of non-vanished data of Theorem 9.3, together
// with the presentation data needed to read it.
struct PacketTable {
    GroupDescriptor group;
    ArthurParameter parameter;  // canonical form
    ComponentGroup cg;
    std::vector<int> sPsiGen;  // 0/1 support bits per generator
    WChar epsilonPsi = WChar::Triv;
    bool regular = true;
    GroupDescriptor gPrimeQuasiSplit;  // ambient quasi-split G'
    bool unipotentStructureAssumed = false;
    std::vector<PacketEntry> entries;  // canonical character order
};

bool same_packet(const PacketTable& a, const PacketTable& b);

// Definition 9.1 with the (6.3.2) signature constraints. Family A: the
// full box 0 <= i_r <= a_r; SO(p,q): additionally 2 sum i_r <= p and
// 2 sum (a_r - i_r) <= q.
std::vector<std::vector<int>> index_set(const std::vector<Block>& blocks, const GroupDescriptor& g);

// Lemma 9.2: for consecutive equal blocks the induction vanishes unless
// i_r = a_{r+1} - i_{r+1}.
bool vanishing_filter(const std::vector<int>& iv, const std::vector<Block>& blocks);

// S_i of §9.1: the value on z_r is S_{i_r} with c = a_r and n replaced by
// n - a_1 - ... - a_{r-1}.
std::vector<int> multi_sign(const std::vector<int>& iv, const std::vector<Block>& blocks, int n);

// §9.2: the character obtained with the alternative quasi-split reference
// form, eps_r = i_r(a_{<r}+1) + (a_r-i_r)a_{<r} + a_r(a_r+1)/2.
std::vector<int> multi_sign_alt(const std::vector<int>& iv, const std::vector<Block>& blocks);

// Theorem 9.3 for one form. psi must be good parity (empty psi_mp).
PacketTable build_packet(const ArthurParameter& psi);

// All pure inner forms at once, keyed by form descriptor.
using PacketFamily = std::map<GroupDescriptor, PacketTable>;
PacketFamily build_packet_family(const ArthurParameter& psiOnQuasiSplit);

// The R = 0 seed: one datum per character of A(psi_{G'}) wrapping the
// opaque unipotent label. `unipotent` is the already-twisted psi_{G'} part.
PacketFamily unipotent_base_family(const GroupDescriptor& gPrimeQuasiSplit,
                                   const std::vector<Summand>& unipotent);

// One step of Theorem 8.3: add a single discrete block on top of a family
// of packets for the smaller group. Throws when the (8.1.2) gap condition
// fails against the remaining parameter.
PacketFamily add_block(const PacketFamily& base, Block blk, const GroupDescriptor& quasiSplitG);

// Eq. (8.1.10)/(3.2.2): the signed combination with coefficients
// eta(s_psi x).
struct StableTerm {
    const InductionDatum* datum;
    int coefficient;
};
std::vector<StableTerm> stable_sum(const PacketTable& packet, std::optional<CgElement> x = {});

struct MultiplicityOneReport {
    bool pass = false;
    bool weaklyFairCaveat = false;
    std::string detail;
};
MultiplicityOneReport multiplicity_one_check(const PacketTable& packet);

}  // namespace arthur
