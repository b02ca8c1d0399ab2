#include "arthur/compgroup.hpp"

#include <numeric>
#include <stdexcept>

namespace arthur {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void finalize_classes(ComponentGroup& a) {
    int n = a.num_generators();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [x, y] : a.relations) {
        int rx = find_root(parent, x), ry = find_root(parent, y);
        if (rx != ry) parent[ry] = rx;
    }
    a.classOf.assign(n, -1);
    a.numClasses = 0;
    for (int g = 0; g < n; ++g) {
        int r = find_root(parent, g);
        if (a.classOf[r] == -1) a.classOf[r] = a.numClasses++;
        a.classOf[g] = a.classOf[r];
    }
}

}  // namespace

std::string ComponentGroup::generator_name(int g) const {
    if (g < numDiscrete) return "z" + std::to_string(g + 1);
    return "u" + std::to_string(g - numDiscrete + 1);
}

std::vector<std::string> ComponentGroup::generator_names() const {
    std::vector<std::string> names;
    for (int g = 0; g < num_generators(); ++g) names.push_back(generator_name(g));
    return names;
}

bool CgElement::is_identity() const {
    for (int b : classBits)
        if (b) return false;
    return true;
}

int CgCharacter::operator()(const CgElement& x) const {
    if (x.classBits.size() != classValues.size())
        throw std::invalid_argument("character/element class count mismatch");
    int v = 1;
    for (std::size_t k = 0; k < classValues.size(); ++k)
        if (x.classBits[k]) v *= classValues[k];
    return v;
}

int character_value_on_generator(const ComponentGroup& a, const CgCharacter& eta, int g) {
    return eta.classValues.at(a.classOf.at(g));
}

CgElement element_from_generator_bits(const ComponentGroup& a, const std::vector<int>& bits) {
    if (static_cast<int>(bits.size()) != a.num_generators())
        throw std::invalid_argument("element_from_generator_bits: size mismatch");
    CgElement e;
    e.classBits.assign(a.numClasses, 0);
    for (int g = 0; g < a.num_generators(); ++g) e.classBits[a.classOf[g]] ^= bits[g] & 1;
    return e;
}

ComponentGroup component_group_from(const std::vector<Block>& blocks,
                                    const std::vector<Summand>& unipotent) {
    ComponentGroup a;
    a.numDiscrete = static_cast<int>(blocks.size());
    a.numUnipotent = static_cast<int>(unipotent.size());
    for (std::size_t r = 0; r + 1 < blocks.size(); ++r)
        if (blocks[r] == blocks[r + 1]) a.relations.emplace_back(static_cast<int>(r), static_cast<int>(r + 1));
    for (std::size_t m = 0; m + 1 < unipotent.size(); ++m)
        if (unipotent[m].eps == unipotent[m + 1].eps && unipotent[m].a == unipotent[m + 1].a)
            a.relations.emplace_back(a.numDiscrete + static_cast<int>(m),
                                     a.numDiscrete + static_cast<int>(m) + 1);
    finalize_classes(a);
    return a;
}

ComponentGroup component_group(const ParityDecomposition& d) {
    return component_group_from(d.bpDisc, d.bpU);
}

CgElement s_element_from(const ComponentGroup& a, const std::vector<Block>& blocks,
                         const std::vector<Summand>& unipotent) {
    std::vector<int> bits;
    for (const auto& b : blocks) bits.push_back(b.a % 2 == 0 ? 1 : 0);
    for (const auto& s : unipotent) bits.push_back(s.a % 2 == 0 ? 1 : 0);
    return element_from_generator_bits(a, bits);
}

CgElement s_element(const ComponentGroup& a, const ParityDecomposition& d) {
    return s_element_from(a, d.bpDisc, d.bpU);
}

std::vector<CgCharacter> characters(const ComponentGroup& a) {
    if (a.numClasses >= 31) throw std::invalid_argument("characters: group too large to enumerate");
    std::vector<CgCharacter> out;
    int k = a.numClasses;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        CgCharacter eta;
        eta.classValues.resize(k);
        for (int j = 0; j < k; ++j) eta.classValues[j] = (mask >> (k - 1 - j)) & 1 ? -1 : 1;
        out.push_back(std::move(eta));
    }
    return out;
}

FirstBlockSplit split_first_block(const ComponentGroup& a, const std::vector<Block>& blocks) {
    if (blocks.empty() || a.numDiscrete == 0)
        throw std::invalid_argument("split_first_block: no discrete block");
    if (blocks.size() >= 2 && blocks[0] == blocks[1])
        throw std::invalid_argument("split_first_block: first block participates in a relation");
    for (auto [x, y] : a.relations)
        if (x == 0 || y == 0)
            throw std::invalid_argument("split_first_block: first block participates in a relation");

    FirstBlockSplit out;
    out.zFactor.numDiscrete = 1;
    finalize_classes(out.zFactor);
    out.remainder.numDiscrete = a.numDiscrete - 1;
    out.remainder.numUnipotent = a.numUnipotent;
    for (auto [x, y] : a.relations) out.remainder.relations.emplace_back(x - 1, y - 1);
    finalize_classes(out.remainder);
    return out;
}

std::pair<int, CgCharacter> factor_character(const ComponentGroup& a, const FirstBlockSplit& split,
                                             const CgCharacter& eta) {
    int etaD = character_value_on_generator(a, eta, 0);
    CgCharacter rest;
    rest.classValues.assign(split.remainder.numClasses, 1);
    for (int g = 1; g < a.num_generators(); ++g)
        rest.classValues[split.remainder.classOf[g - 1]] = character_value_on_generator(a, eta, g);
    return {etaD, rest};
}

}  // namespace arthur
