#include "arthur/json_out.hpp"

#include <sstream>

#include "arthur/dsl.hpp"

namespace arthur {

namespace {

Json eta_json(const ComponentGroup& cg, const std::vector<int>& etaGen) {
    Json obj = Json::object();
    for (int g = 0; g < cg.num_generators(); ++g) obj[cg.generator_name(g)] = etaGen[g];
    return obj;
}

Json summands_json(const std::vector<Summand>& summands) {
    Json arr = Json::array();
    for (const auto& s : summands) arr.push_back(s.to_string());
    return arr;
}

const char* wchar_name(WChar w) { return w == WChar::Triv ? "triv" : "sgn"; }

}  // namespace

Json to_json(const ParityDecomposition& d, const ArthurParameter& psi) {
    Json out;
    out["group"] = psi.group.name();
    out["parameter"] = render_param(psi);
    out["mp"] = summands_json(d.mp);
    out["mp_rho"] = summands_json(d.mpRho);
    out["bp_unipotent"] = summands_json(d.bpU);
    Json blocks = Json::array();
    for (const auto& b : d.bpDisc) blocks.push_back(Json::array({b.t, b.a}));
    out["bp_discrete"] = blocks;
    out["regular"] = is_regular(d);
    if (psi.group.family != Family::Unitary)
        out["epsilon_psi"] = wchar_name(epsilon_twist(d, psi.group).epsilon);
    return out;
}

Json compgroup_json(const ArthurParameter& psi) {
    ParityDecomposition d = decompose(psi);
    ComponentGroup cg = component_group(d);
    Json out;
    out["group"] = psi.group.name();
    out["parameter"] = render_param(psi);
    out["generators"] = cg.generator_names();
    Json rels = Json::array();
    for (auto [x, y] : cg.relations)
        rels.push_back(Json::array({cg.generator_name(x), cg.generator_name(y)}));
    out["relations"] = rels;
    out["rank"] = cg.numClasses;
    Json sPsi = Json::object();
    CgElement s = s_element(cg, d);
    for (int g = 0; g < cg.num_generators(); ++g) {
        int bit = g < cg.numDiscrete ? (d.bpDisc[g].a % 2 == 0 ? 1 : 0)
                                     : (d.bpU[g - cg.numDiscrete].a % 2 == 0 ? 1 : 0);
        sPsi[cg.generator_name(g)] = bit;
    }
    out["s_psi"] = sPsi;
    out["s_psi_is_identity"] = s.is_identity();
    Json chars = Json::array();
    for (const auto& eta : characters(cg)) {
        std::vector<int> vals;
        for (int g = 0; g < cg.num_generators(); ++g)
            vals.push_back(character_value_on_generator(cg, eta, g));
        chars.push_back(eta_json(cg, vals));
    }
    out["characters"] = chars;
    return out;
}

Json to_json(const std::vector<EndoscopicDatum>& data, const GroupDescriptor& g) {
    Json out;
    out["group"] = g.name();
    Json arr = Json::array();
    for (const auto& d : data) {
        Json item;
        item["h1"] = d.h1.name();
        item["h2"] = d.h2.name();
        if (d.h1.family == Family::EvenOrthogonal)
            item["h1_type"] = d.h1.split_type() == SplitType::Split ? "d" : "qd";
        if (d.h2.family == Family::EvenOrthogonal)
            item["h2_type"] = d.h2.split_type() == SplitType::Split ? "d" : "qd";
        item["x_plus_factor"] = d.plusFirst ? 1 : 2;
        item["std_twist_h1"] = d.stdTwistH1;
        arr.push_back(item);
    }
    out["data"] = arr;
    return out;
}

Json levi_json(const GroupDescriptor& g, int c) {
    Json out;
    out["group"] = g.name();
    out["c"] = c;
    Json reps = Json::array();
    for (const auto& rep : c_levi_representatives(g, c)) {
        Json item;
        item["i"] = rep.i;
        item["levi"] = rep.unitary.name() + " x " + rep.classical.name();
        item["degree"] = induction_degree(g, rep);
        reps.push_back(item);
    }
    out["representatives"] = reps;
    out["distinguished_index"] = distinguished_index(c, g.rank);
    Json dist = Json::object();
    for (const auto& [form, count] : superpacket_distribution(quasi_split_form(g)))
        dist[form.name()] = count;
    out["superpacket"] = dist;
    return out;
}

Json to_json(const PacketTable& packet) {
    Json out;
    out["group"] = packet.group.name();
    out["parameter"] = render_param(packet.parameter);
    out["epsilon_psi"] = wchar_name(packet.epsilonPsi);
    out["regular"] = packet.regular;
    out["g_prime"] = packet.gPrimeQuasiSplit.name();
    if (packet.unipotentStructureAssumed) out["unipotent_component_group_assumed"] = true;

    Json cg;
    cg["generators"] = packet.cg.generator_names();
    Json rels = Json::array();
    for (auto [x, y] : packet.cg.relations)
        rels.push_back(Json::array({packet.cg.generator_name(x), packet.cg.generator_name(y)}));
    cg["relations"] = rels;
    out["component_group"] = cg;

    Json sPsi = Json::object();
    for (int g = 0; g < packet.cg.num_generators(); ++g)
        sPsi[packet.cg.generator_name(g)] = packet.sPsiGen[g];
    out["s_psi"] = sPsi;

    Json entries = Json::array();
    for (const auto& entry : packet.entries) {
        Json e;
        e["eta"] = eta_json(packet.cg, entry.etaGen);
        Json data = Json::array();
        for (const auto& d : entry.data) {
            Json item;
            item["i_vector"] = d.indexVector;
            Json levi = Json::array();
            for (const auto& u : d.leviChain) levi.push_back(u.name());
            levi.push_back(d.baseForm.name());
            item["levi"] = levi;
            item["block_characters"] = d.blockCharacters;
            item["base_form"] = d.baseForm.name();
            Json baseEta = Json::object();
            for (std::size_t m = 0; m < d.baseEta.size(); ++m)
                baseEta["u" + std::to_string(m + 1)] = d.baseEta[m];
            item["base_eta"] = baseEta;
            item["degree"] = d.degree;
            item["range"] = d.range == Range::Good ? "good" : "weakly_fair";
            data.push_back(item);
        }
        e["data"] = data;
        entries.push_back(e);
    }
    out["entries"] = entries;
    return out;
}

std::string pretty_packet(const PacketTable& packet) {
    std::ostringstream os;
    os << "packet for " << packet.group.name() << ", parameter " << render_param(packet.parameter)
       << "\n";
    os << "  epsilon_psi = " << (packet.epsilonPsi == WChar::Triv ? "triv" : "sgn")
       << ", regular = " << (packet.regular ? "yes" : "no") << ", G' = "
       << packet.gPrimeQuasiSplit.name() << "\n";
    os << "  A(psi): ";
    auto names = packet.cg.generator_names();
    for (std::size_t k = 0; k < names.size(); ++k) os << (k ? " " : "") << names[k];
    if (names.empty()) os << "(trivial)";
    os << ", rank " << packet.cg.numClasses << "\n";
    for (const auto& entry : packet.entries) {
        os << "  eta";
        for (std::size_t g = 0; g < entry.etaGen.size(); ++g)
            os << " " << names[g] << (entry.etaGen[g] == 1 ? "=+1" : "=-1");
        if (entry.etaGen.empty()) os << " (trivial)";
        os << ":\n";
        for (const auto& d : entry.data) {
            os << "    i = (";
            for (std::size_t r = 0; r < d.indexVector.size(); ++r)
                os << (r ? "," : "") << d.indexVector[r];
            os << ")  levi =";
            for (const auto& u : d.leviChain) os << " " << u.name() << " x";
            os << " " << d.baseForm.name() << "  degree " << d.degree << "  "
               << (d.range == Range::Good ? "good" : "weakly-fair") << "\n";
        }
        if (entry.data.empty()) os << "    (empty)\n";
    }
    return os.str();
}

}  // namespace arthur
