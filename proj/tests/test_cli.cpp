#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "arthur/cli.hpp"
#include "arthur/dsl.hpp"
#include "arthur/randgen.hpp"

using namespace arthur;

namespace {

int run(std::initializer_list<std::string> args, std::string* outText = nullptr) {
    std::ostringstream out, err;
    int code = cli_run(std::vector<std::string>(args), out, err);
    if (outText) *outText = out.str();
    return code;
}

}  // namespace

TEST_CASE("group parsing") {
    CHECK(std::get<GroupDescriptor>(parse_group("Sp(6)")) == GroupDescriptor::symplectic(3));
    CHECK(std::get<GroupDescriptor>(parse_group("SO(3,2)")) ==
          GroupDescriptor::odd_orthogonal(3, 2));
    auto so22 = std::get<GroupDescriptor>(parse_group("SO(2, 2)"));
    CHECK(so22.family == Family::EvenOrthogonal);
    CHECK(so22.split_type() == SplitType::Split);
    CHECK(std::get<GroupDescriptor>(parse_group(" U( 2 , 1 ) ")) ==
          GroupDescriptor::unitary(2, 1));

    CHECK(std::holds_alternative<ParseError>(parse_group("Sp(5)")));
    CHECK(std::holds_alternative<ParseError>(parse_group("Sp(6")));
    CHECK(std::holds_alternative<ParseError>(parse_group("GL(3)")));
    CHECK(std::holds_alternative<ParseError>(parse_group("SO(0,0)")));
}

TEST_CASE("parameter parsing") {
    auto sp6 = GroupDescriptor::symplectic(3);
    auto ok = parse_param("V(0,9)xR[2] + V(0,6)xR[1] + W(0,1)xR[1]", sp6);
    REQUIRE(std::holds_alternative<ArthurParameter>(ok));
    CHECK(std::get<ArthurParameter>(ok).total_dim() == 7);

    auto so = GroupDescriptor::odd_orthogonal(3, 2);
    CHECK(std::holds_alternative<ArthurParameter>(parse_param("V(0,3)xR[1]+V(0,1)xR[1]", so)));

    // '*' is accepted as the product sign, as are imaginary s values
    auto withStar = parse_param("V(2i,1)*R[1] + V(-2i,1)*R[1] + W(0,0)xR[1]",
                                GroupDescriptor::symplectic(2));
    CHECK(std::holds_alternative<ArthurParameter>(withStar));

    auto syntax = parse_param("V(0,9)xR[2] +", sp6);
    REQUIRE(std::holds_alternative<ParamError>(syntax));
    CHECK(std::get<ParamError>(syntax).syntax);

    auto invalid = parse_param("W(0,0)xR[2]", GroupDescriptor::symplectic(1));
    REQUIRE(std::holds_alternative<ParamError>(invalid));
    CHECK_FALSE(std::get<ParamError>(invalid).syntax);
}

TEST_CASE("render/parse round trip") {
    std::mt19937_64 rng(99);
    RandomParamOptions opts;
    opts.maxRank = 6;
    for (int k = 0; k < 300; ++k) {
        ArthurParameter psi = random_parameter(rng, opts);
        std::string text = render_param(psi);
        auto back = parse_param(text, psi.group);
        REQUIRE_MESSAGE(std::holds_alternative<ArthurParameter>(back), text);
        CHECK(std::get<ArthurParameter>(back).summands == psi.canonical().summands);
    }
}

TEST_CASE("exit codes per error class") {
    std::string out;
    CHECK(run({"packet", "--group", "SO(3,2)", "--param", "V(0,3)xR[1]+V(0,1)xR[1]"}, &out) == 0);
    CHECK(out.find("\"entries\"") != std::string::npos);

    // 1: syntax errors
    CHECK(run({"packet", "--group", "SO(3;2)", "--param", "V(0,3)xR[1]"}) == 1);
    CHECK(run({"packet", "--group", "SO(3,2)", "--param", "V(0,3)xR["}) == 1);
    // 2: well-formed but invalid parameter (dimension 2 < N = 4)
    CHECK(run({"packet", "--group", "SO(3,2)", "--param", "V(0,3)xR[1]"}) == 2);
    // 3: unsupported input (unitary packet construction)
    CHECK(run({"levi", "--group", "Sp(4)", "--c", "7"}) == 3);
    CHECK(run({"packet", "--group", "U(2,1)", "--param", "V(0,3)xR[1]"}) == 3);
}

TEST_CASE("subcommands emit JSON") {
    std::string out;
    CHECK(run({"decompose", "--group", "Sp(4)", "--param",
               "V(0,4)xR[1]+V(0,2)xR[1]+W(0,0)xR[1]"},
              &out) == 0);
    CHECK(out.find("\"bp_discrete\"") != std::string::npos);

    CHECK(run({"compgroup", "--group", "Sp(4)", "--param",
               "V(0,4)xR[1]+V(0,2)xR[1]+W(0,0)xR[1]"},
              &out) == 0);
    CHECK(out.find("\"generators\"") != std::string::npos);

    CHECK(run({"levi", "--group", "SO(3,2)", "--c", "1"}, &out) == 0);
    CHECK(out.find("\"superpacket\"") != std::string::npos);

    CHECK(run({"endoscopy", "--group", "Sp(4)"}, &out) == 0);
    CHECK(out.find("\"data\"") != std::string::npos);

    CHECK(run({"packet", "--group", "SO(3,2)", "--param", "V(0,3)xR[1]+V(0,1)xR[1]", "--format",
               "pretty"},
              &out) == 0);
    CHECK(out.find("packet for SO(3,2)") != std::string::npos);
}

TEST_CASE("JSON output is byte-stable") {
    std::string a, b;
    auto args = {std::string("packet"), std::string("--group"), std::string("Sp(6)"),
                 std::string("--param"), std::string("V(0,9)xR[2]+V(0,6)xR[1]+W(0,1)xR[1]")};
    CHECK(run(args, &a) == 0);
    CHECK(run(args, &b) == 0);
    CHECK(a == b);
}

TEST_CASE("imaginary parameters survive the round trip") {
    ArthurParameter psi;
    psi.group = GroupDescriptor::even_orthogonal(2, 2);
    psi.summands = {Summand::v(GaussRat{Rat(0), Rat(3, 2)}, 1, 1),
                    Summand::v(GaussRat{Rat(0), Rat(-3, 2)}, 1, 1)};
    REQUIRE_FALSE(validate(psi).has_value());
    std::string text = render_param(psi);
    auto back = parse_param(text, psi.group);
    REQUIRE(std::holds_alternative<ArthurParameter>(back));
    CHECK(std::get<ArthurParameter>(back).summands == psi.canonical().summands);
}
