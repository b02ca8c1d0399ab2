#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arthur/params.hpp"
#include "arthur/randgen.hpp"

using namespace arthur;

namespace {

ArthurParameter sp4_discrete() {
    ArthurParameter psi;
    psi.group = GroupDescriptor::symplectic(2);
    psi.summands = {Summand::v(GaussRat{}, 4, 1), Summand::v(GaussRat{}, 2, 1),
                    Summand::w(GaussRat{}, 0, 1)};
    return psi;
}

GaussRat imag(long long num, long long den = 1) { return GaussRat{Rat(0), Rat(num, den)}; }

}  // namespace

TEST_CASE("validate accepts and rejects per §4.1") {
    CHECK_FALSE(validate(sp4_discrete()).has_value());

    ArthurParameter shortDim = sp4_discrete();
    shortDim.summands.pop_back();  // total dim 4, N = 5
    CHECK(validate(shortDim).has_value());

    ArthurParameter badParity;
    badParity.group = GroupDescriptor::odd_orthogonal(3, 2);
    badParity.summands = {Summand::w(GaussRat{}, 0, 2), Summand::v(GaussRat{}, 1, 1)};
    // W(0,0)xR[2] has good parity for SO(3,2); make it bad with R[1] x2 + odd copy
    badParity.summands = {Summand::w(GaussRat{}, 0, 1), Summand::w(GaussRat{}, 0, 1),
                          Summand::w(GaussRat{}, 0, 1), Summand::w(GaussRat{}, 1, 1)};
    CHECK(validate(badParity).has_value());  // odd multiplicity of bad-parity W(0,0)xR[1]

    ArthurParameter notSelfDual;
    notSelfDual.group = GroupDescriptor::even_orthogonal(2, 2);  // N = 4
    notSelfDual.summands = {Summand::v(imag(1), 1, 1), Summand::v(imag(2), 1, 1)};
    CHECK(validate(notSelfDual).has_value());
}

TEST_CASE("good parity per Definition 4.1") {
    auto sp = GroupDescriptor::symplectic(5);
    CHECK(good_parity(Summand::v(GaussRat{}, 9, 2), sp));        // 9+2-1 = 10 even
    CHECK_FALSE(good_parity(Summand::w(GaussRat{}, 1, 2), sp));  // a-1 = 1 odd
    CHECK(good_parity(Summand::w(GaussRat{}, 0, 1), sp));
    auto so = GroupDescriptor::odd_orthogonal(3, 2);
    CHECK(good_parity(Summand::v(GaussRat{}, 3, 1), so));  // 3+1-1 = 3 odd
    CHECK_THROWS_AS(good_parity(Summand::v(imag(1), 3, 1), so), std::invalid_argument);
}

TEST_CASE("decompose splits the six sums") {
    ArthurParameter psi;
    psi.group = GroupDescriptor::symplectic(6);  // N = 13
    psi.summands = {
        Summand::v(GaussRat{}, 3, 2),   // good parity discrete (3+2-1 = 4)
        Summand::w(GaussRat{}, 0, 2),   // bad parity pair
        Summand::w(GaussRat{}, 0, 2),
        Summand::v(imag(2), 1, 1),      // imaginary pair
        Summand::v(imag(-2), 1, 1),
        Summand::w(GaussRat{}, 1, 1),   // good parity unipotent
    };
    REQUIRE_FALSE(validate(psi).has_value());
    auto d = decompose(psi);
    CHECK(d.bpDisc == std::vector<Block>{{3, 2}});
    REQUIRE(d.bpU.size() == 1);
    CHECK(d.bpU[0].a == 1);
    CHECK(d.mp.size() == 4);
    CHECK(d.mpRho.size() == 2);  // one W copy + the +2i member
    // partition property: recombination gives back the input
    std::vector<Summand> recombined = d.mp;
    for (const auto& b : d.bpDisc) recombined.push_back(Summand::v(GaussRat{}, b.t, b.a));
    for (const auto& s : d.bpU) recombined.push_back(s);
    std::sort(recombined.begin(), recombined.end());
    auto canon = psi.canonical().summands;
    CHECK(recombined == canon);
}

TEST_CASE("decompose sorts blocks per (9.1.1)") {
    ArthurParameter psi;
    psi.group = GroupDescriptor::symplectic(6);  // N = 13
    psi.summands = {Summand::v(GaussRat{}, 4, 1), Summand::v(GaussRat{}, 9, 2),
                    Summand::v(GaussRat{}, 4, 3), Summand::w(GaussRat{}, 0, 1)};
    auto d = decompose(psi);
    CHECK(d.bpDisc == std::vector<Block>{{9, 2}, {4, 3}, {4, 1}});
}

TEST_CASE("langlands parameter shifts") {
    auto lang = langlands_parameter(std::vector<Summand>{Summand::v(GaussRat{}, 3, 2)});
    REQUIRE(lang.size() == 2);
    CHECK(lang[0].s == GaussRat{Rat(1), Rat(0)});
    CHECK(lang[1].s == GaussRat{Rat(-1), Rat(0)});
    auto lang3 = langlands_parameter(std::vector<Summand>{Summand::w(GaussRat{}, 1, 3)});
    std::vector<Rat> shifts;
    for (const auto& s : lang3) shifts.push_back(s.s.re);
    std::sort(shifts.begin(), shifts.end());
    CHECK(shifts == std::vector<Rat>{Rat(-2), Rat(0), Rat(2)});
    auto same = langlands_parameter(std::vector<Summand>{Summand::v(GaussRat{}, 5, 1)});
    CHECK(same[0].s == GaussRat{});
}

TEST_CASE("infinitesimal character entries") {
    auto ch = infinitesimal_character(std::vector<Summand>{Summand::v(GaussRat{}, 3, 2)});
    std::vector<Rat> re;
    for (const auto& e : ch) re.push_back(e.re);
    std::sort(re.begin(), re.end());
    CHECK(re == std::vector<Rat>{Rat(-2), Rat(-1), Rat(1), Rat(2)});

    auto chW = infinitesimal_character(std::vector<Summand>{Summand::w(GaussRat{}, 1, 3)});
    std::vector<Rat> reW;
    for (const auto& e : chW) reW.push_back(e.re);
    std::sort(reW.begin(), reW.end());
    CHECK(reW == std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});

    CHECK(infinitesimal_character(std::vector<Summand>{Summand::w(GaussRat{}, 0, 1)}) ==
          std::vector<GaussRat>{GaussRat{}});
}

TEST_CASE("infinitesimal character is self-dual and has N entries") {
    std::mt19937_64 rng(7);
    RandomParamOptions opts;
    opts.maxRank = 6;
    for (int k = 0; k < 100; ++k) {
        ArthurParameter psi = random_parameter(rng, opts);
        auto ch = infinitesimal_character(psi);
        CHECK(static_cast<int>(ch.size()) == standard_rep_dim(psi.group));
        std::vector<GaussRat> neg;
        for (const auto& e : ch) neg.push_back(e.negated());
        std::sort(neg.begin(), neg.end());
        CHECK(neg == ch);
        // dimension preserved by the (2.2.1) passage
        int dim = 0;
        for (const auto& s : langlands_parameter(psi)) dim += s.dim();
        CHECK(dim == psi.total_dim());
    }
}

TEST_CASE("regularity (9.1.6)") {
    ParityDecomposition d;
    d.bpDisc = {{9, 2}, {6, 1}};
    d.bpU = {Summand::w(GaussRat{}, 0, 1)};
    CHECK(is_regular(d));  // 8 > 6 and 6 > 0
    d.bpDisc = {{5, 2}, {4, 1}};
    d.bpU.clear();
    CHECK_FALSE(is_regular(d));  // 4 > 4 fails
    d.bpDisc = {{3, 2}};
    CHECK(is_regular(d));  // t - a + 1 = 2 > 0
    d.bpDisc = {{1, 2}};
    CHECK_FALSE(is_regular(d));
}

TEST_CASE("dominance gap (8.1.2)") {
    // inf char {±3, 0} from V(0,6)xR[1] + W(0,0)xR[1]
    std::vector<Summand> tail = {Summand::v(GaussRat{}, 6, 1), Summand::w(GaussRat{}, 0, 1)};
    CHECK(dominance_gap_ok({9, 2}, tail));        // 4 > 3
    std::vector<Summand> tail2 = {Summand::v(GaussRat{}, 4, 1)};  // inf char ±2
    CHECK_FALSE(dominance_gap_ok({5, 2}, tail2));  // 2 > 2 fails
    CHECK(dominance_gap_ok({1, 1}, {}));           // empty tail
}

TEST_CASE("regularity implies the chained gap condition") {
    std::mt19937_64 rng(11);
    RandomParamOptions opts;
    opts.maxRank = 6;
    opts.regular = true;
    for (int k = 0; k < 100; ++k) {
        ArthurParameter psi = random_parameter(rng, opts);
        auto d = decompose(psi);
        REQUIRE(is_regular(d));
        for (std::size_t r = 0; r < d.bpDisc.size(); ++r) {
            std::vector<Summand> tail = d.bpU;
            for (std::size_t j = r + 1; j < d.bpDisc.size(); ++j)
                tail.push_back(Summand::v(GaussRat{}, d.bpDisc[j].t, d.bpDisc[j].a));
            CHECK(dominance_gap_ok(d.bpDisc[r], tail));
        }
    }
}

TEST_CASE("epsilon twist per §9.1") {
    ParityDecomposition d;
    d.bpDisc = {{9, 1}, {6, 1}};
    auto sp = GroupDescriptor::symplectic(4);
    CHECK(epsilon_twist(d, sp).epsilon == WChar::Sgn);  // f = 1
    d.bpDisc = {{9, 1}, {7, 1}};
    CHECK(epsilon_twist(d, sp).epsilon == WChar::Triv);
    CHECK(epsilon_twist(d, GroupDescriptor::odd_orthogonal(3, 2)).epsilon == WChar::Triv);
    CHECK(epsilon_twist(d, sp).gPrimeRank == 2);
    // the twist flips the unipotent eps bits
    d.bpU = {Summand::w(GaussRat{}, 0, 1)};
    auto twisted = twisted_unipotent_part(d, WChar::Sgn);
    CHECK(twisted[0].eps == 1);
}
