#include "arthur/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>

#include "arthur/checks.hpp"
#include "arthur/dsl.hpp"
#include "arthur/json_out.hpp"
#include "arthur/packets.hpp"

namespace arthur {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitCheckFailed = 4;

struct CliFailure {
    int code;
    std::string message;
};

GroupDescriptor need_group(const std::string& text) {
    auto parsed = parse_group(text);
    if (auto* err = std::get_if<ParseError>(&parsed))
        throw CliFailure{kExitParse, "group '" + text + "': " + err->message + " at position " +
                                         std::to_string(err->position)};
    return std::get<GroupDescriptor>(parsed);
}

ArthurParameter need_param(const std::string& text, const GroupDescriptor& g) {
    auto parsed = parse_param(text, g);
    if (auto* err = std::get_if<ParamError>(&parsed)) {
        if (err->syntax)
            throw CliFailure{kExitParse, "parameter: " + err->message + " at position " +
                                             std::to_string(err->position)};
        throw CliFailure{kExitInvalid, "parameter invalid: " + err->message};
    }
    return std::get<ArthurParameter>(parsed);
}

void emit(std::ostream& out, const Json& json, const std::string& format,
          const std::string& prettyText) {
    if (format == "pretty" && !prettyText.empty())
        out << prettyText;
    else
        out << json.dump(2) << "\n";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic calculator for Arthur packets of real classical groups"};
    app.require_subcommand(1);

    std::string groupText, paramText, format = "json";
    int cValue = -1, maxRank = 0, checkTrials = 0;
    std::uint64_t seed = 20240915;

    auto addCommon = [&](CLI::App* sub, bool needsParam) {
        sub->add_option("--group", groupText, "group, e.g. Sp(6), SO(3,2), U(2,1)")->required();
        if (needsParam)
            sub->add_option("--param", paramText, "parameter, e.g. V(0,3)xR[1]+V(0,1)xR[1]")
                ->required();
        sub->add_option("--format", format, "json or pretty")
            ->check(CLI::IsMember({"json", "pretty"}));
    };

    CLI::App* packet = app.add_subcommand("packet", "construct the packet table");
    addCommon(packet, true);
    CLI::App* decomposeCmd = app.add_subcommand("decompose", "parameter decomposition");
    addCommon(decomposeCmd, true);
    CLI::App* compgroup = app.add_subcommand("compgroup", "component group A(psi)");
    addCommon(compgroup, true);
    CLI::App* levi = app.add_subcommand("levi", "c-Levi representatives and superpacket");
    addCommon(levi, false);
    levi->add_option("--c", cValue, "rank of the unitary factor")->required();
    CLI::App* endoscopy = app.add_subcommand("endoscopy", "elliptic endoscopic data");
    addCommon(endoscopy, false);
    CLI::App* check = app.add_subcommand("check", "run the oracle/invariant suite");
    check->add_option("--max-rank", maxRank, "cap the exhaustive ranges");
    check->add_option("--seed", seed, "seed for the randomized suites");
    check->add_option("--trials", checkTrials, "unused; reserved")->group("");

    std::vector<const char*> argv;
    argv.push_back("arpacket");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (packet->parsed()) {
            GroupDescriptor g = need_group(groupText);
            ArthurParameter psi = need_param(paramText, g);
            PacketTable table = build_packet(psi);
            emit(out, to_json(table), format, pretty_packet(table));
        } else if (decomposeCmd->parsed()) {
            GroupDescriptor g = need_group(groupText);
            ArthurParameter psi = need_param(paramText, g);
            emit(out, to_json(decompose(psi), psi), format, "");
        } else if (compgroup->parsed()) {
            GroupDescriptor g = need_group(groupText);
            ArthurParameter psi = need_param(paramText, g);
            emit(out, compgroup_json(psi), format, "");
        } else if (levi->parsed()) {
            GroupDescriptor g = need_group(groupText);
            if (cValue < 0 || cValue > g.rank)
                throw CliFailure{kExitUnsupported, "need 0 <= c <= rank"};
            emit(out, levi_json(g, cValue), format, "");
        } else if (endoscopy->parsed()) {
            GroupDescriptor g = need_group(groupText);
            emit(out, to_json(elliptic_endoscopic_data(g), g), format, "");
        } else if (check->parsed()) {
            auto results = run_all_checks(seed, maxRank);
            bool allPass = true;
            for (const auto& r : results) {
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " (" << r.detail
                    << ") (" << std::fixed << std::setprecision(0) << r.millis << " ms)\n";
                allPass = allPass && r.pass;
            }
            out << (allPass ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
            if (!allPass) return kExitCheckFailed;
        }
    } catch (const CliFailure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsupported;
    }
    return kExitOk;
}

}  // namespace arthur
