#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arthur/levi.hpp"

using namespace arthur;

TEST_CASE("t_star alternates and ends in -1") {
    CHECK(t_star(2) == SignVector{1, -1});
    CHECK(t_star(3) == SignVector{-1, 1, -1});
    for (int n = 1; n <= 10; ++n) CHECK(t_star(n).back() == -1);
}

TEST_CASE("inner form classes per §6.1") {
    auto so5 = quasi_split_odd_so(2);
    CHECK(so5 == GroupDescriptor::odd_orthogonal(3, 2));
    CHECK(inner_form_class(so5, {1, 1}) == GroupDescriptor::odd_orthogonal(3, 2));
    CHECK(inner_form_class(so5, t_star(2)) == GroupDescriptor::odd_orthogonal(5, 0));
    auto sp = GroupDescriptor::symplectic(4);
    CHECK(inner_form_class(sp, {1, -1, -1, 1}) == sp);
    auto u2 = quasi_split_unitary(2);
    CHECK(inner_form_class(u2, {1, 1}) == GroupDescriptor::unitary(1, 1));
}

TEST_CASE("superpacket distributions") {
    auto sp = superpacket_distribution(GroupDescriptor::symplectic(2));
    CHECK(sp.size() == 1);
    CHECK(sp.at(GroupDescriptor::symplectic(2)) == 4);

    auto so5 = superpacket_distribution(quasi_split_odd_so(2));
    CHECK(so5.at(GroupDescriptor::odd_orthogonal(5, 0)) == 1);
    CHECK(so5.at(GroupDescriptor::odd_orthogonal(3, 2)) == 2);
    CHECK(so5.at(GroupDescriptor::odd_orthogonal(1, 4)) == 1);

    auto rank0 = superpacket_distribution(GroupDescriptor::symplectic(0));
    CHECK(rank0.at(GroupDescriptor::symplectic(0)) == 1);
}

namespace {
long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return b;
}
}  // namespace

TEST_CASE("superpacket counts are binomial") {
    for (int n = 1; n <= 9; ++n) {
        long long total = 0;
        for (const auto& [form, count] : superpacket_distribution(quasi_split_odd_so(n))) {
            CHECK(count == binomial(n, (form.p - 1) / 2));
            total += count;
        }
        CHECK(total == 1LL << n);
    }
    for (int n = 2; n <= 9; ++n) {
        SplitType alpha = n % 2 == 0 ? SplitType::Split : SplitType::QuasiSplit;
        long long total = 0;
        for (const auto& [form, count] : superpacket_distribution(quasi_split_even_so(n, alpha))) {
            CHECK(count == binomial(n, form.p / 2));
            total += count;
        }
        CHECK(total == 1LL << n);
    }
}

TEST_CASE("rank extension for even SO without discrete series") {
    // SO^d_6: signature classes are odd-odd, counts from rank 2
    auto dist = superpacket_distribution(quasi_split_even_so(3, SplitType::Split));
    long long total = 0;
    for (const auto& [form, count] : dist) {
        CHECK(form.p % 2 == 1);
        CHECK(form.q % 2 == 1);
        CHECK(form.split_type() == SplitType::Split);
        total += count;
    }
    CHECK(total == 4);  // 2^{n-1}
    CHECK(dist.at(GroupDescriptor::even_orthogonal(3, 3)) == 2);
}

TEST_CASE("c-Levi representatives") {
    auto sp6 = GroupDescriptor::symplectic(3);
    auto reps = c_levi_representatives(sp6, 2);
    REQUIRE(reps.size() == 3);
    for (int i = 0; i <= 2; ++i) {
        CHECK(reps[i].i == i);
        CHECK(reps[i].unitary == GroupDescriptor::unitary(i, 2 - i));
        CHECK(reps[i].classical == GroupDescriptor::symplectic(1));
    }

    auto so32 = GroupDescriptor::odd_orthogonal(3, 2);
    auto reps32 = c_levi_representatives(so32, 1);
    REQUIRE(reps32.size() == 2);
    CHECK(reps32[0].unitary == GroupDescriptor::unitary(0, 1));
    CHECK(reps32[0].classical == GroupDescriptor::odd_orthogonal(3, 0));
    CHECK(reps32[1].unitary == GroupDescriptor::unitary(1, 0));
    CHECK(reps32[1].classical == GroupDescriptor::odd_orthogonal(1, 2));

    auto so21 = GroupDescriptor::odd_orthogonal(2, 1);
    auto reps21 = c_levi_representatives(so21, 1);
    REQUIRE(reps21.size() == 1);  // i = 0 violates 2(c-i) <= q
    CHECK(reps21[0].unitary == GroupDescriptor::unitary(1, 0));
    CHECK(reps21[0].classical == GroupDescriptor::odd_orthogonal(0, 1));
}

TEST_CASE("representative count matches the (6.3.2) inequalities") {
    for (int p = 1; p <= 9; p += 2)
        for (int q = 0; p + q <= 11; q += 2) {
            auto g = GroupDescriptor::odd_orthogonal(p, q);
            for (int c = 0; c <= g.rank; ++c) {
                int count = 0;
                for (int i = 0; i <= c; ++i)
                    if (2 * i <= p && 2 * (c - i) <= q) ++count;
                CHECK(static_cast<int>(c_levi_representatives(g, c).size()) == count);
            }
        }
}

TEST_CASE("distinguished representative per Remark 6.4") {
    CHECK(distinguished_index(2, 5) == 1);
    CHECK(distinguished_index(3, 5) == 1);  // n - c = 2 even
    CHECK(distinguished_index(3, 6) == 2);  // n - c = 3 odd
    for (int n = 0; n <= 10; ++n)
        for (int c = 0; c <= n; ++c) {
            int i = distinguished_index(c, n);
            CHECK(i >= 0);
            CHECK(i <= c);
            // the distinguished index is admissible for the quasi-split form
            auto reps = c_levi_representatives(quasi_split_odd_so(n), c);
            bool found = false;
            for (const auto& rep : reps) found = found || rep.i == i;
            CHECK(found);
        }
}

TEST_CASE("levi signature split and swap") {
    // t = all ones, n = 4, c = 2: t.t_* alternates, so the unitary part has
    // one +1 and one -1; n - c even keeps the order.
    auto sig = levi_signature_of({1, 1, 1, 1}, 2, 4);
    CHECK(sig.unitarySignature == std::pair{1, 1});
    CHECK(sig.classicalPart == SignVector{1, -1});
    // n - c odd swaps the unitary counts
    auto sig2 = levi_signature_of({1, 1, 1}, 2, 3);
    auto sig3 = levi_signature_of({1, 1, 1}, 2, 3);
    CHECK(sig2.unitarySignature == sig3.unitarySignature);
    SignVector t{1, 1, 1};
    SignVector base = t_star(3);
    int n1 = 0;
    for (int j = 0; j < 2; ++j)
        if (t[j] * base[j] > 0) ++n1;
    CHECK(sig2.unitarySignature == std::pair{2 - n1, n1});  // swapped
    // c = 0: unitary part empty
    CHECK(levi_signature_of({1, -1}, 0, 2).unitarySignature == std::pair{0, 0});
}

TEST_CASE("induction degrees") {
    auto sp1 = GroupDescriptor::symplectic(1);
    LeviDescriptor l{1, 1, GroupDescriptor::unitary(1, 0), GroupDescriptor::symplectic(0)};
    CHECK(induction_degree(sp1, l) == 0);

    auto so21 = GroupDescriptor::odd_orthogonal(2, 1);
    LeviDescriptor l2{1, 1, GroupDescriptor::unitary(1, 0), GroupDescriptor::odd_orthogonal(0, 1)};
    CHECK(induction_degree(so21, l2) == 0);

    // G = L gives degree 0
    LeviDescriptor self{0, 0, GroupDescriptor::unitary(0, 0), sp1};
    CHECK(induction_degree(sp1, self) == 0);

    // degrees are nonnegative for every representative
    for (int n = 1; n <= 6; ++n) {
        auto sp = GroupDescriptor::symplectic(n);
        for (int c = 0; c <= n; ++c)
            for (const auto& rep : c_levi_representatives(sp, c))
                CHECK(induction_degree(sp, rep) >= 0);
        for (int p = 1; p <= 2 * n + 1; p += 2) {
            auto so = GroupDescriptor::odd_orthogonal(p, 2 * n + 1 - p);
            for (int c = 0; c <= n; ++c)
                for (const auto& rep : c_levi_representatives(so, c))
                    CHECK(induction_degree(so, rep) >= 0);
        }
    }
}

TEST_CASE("superpacket distribution agrees with the c-Levi forms") {
    // every classical factor produced by c_levi_representatives is a
    // §6.1-classified form of the smaller quasi-split group
    for (int n = 2; n <= 6; ++n) {
        auto so = quasi_split_odd_so(n);
        for (int c = 0; c <= n; ++c)
            for (const auto& rep : c_levi_representatives(so, c)) {
                CHECK(rep.classical.p % 2 == 1);
                CHECK(rep.classical.rank == n - c);
            }
    }
}
