#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "desalg/bidigare.hpp"

using namespace desalg;

namespace {

DescentElem<Rat> random_descent_elem(int n, std::mt19937_64& rng) {
    DescentElem<Rat> x(n);
    for (const Composition& alpha : enumerate_compositions(n))
        if (rng() % 2) x.add_coord(alpha, Rat(static_cast<long long>(rng() % 9) - 4));
    return x;
}

} // namespace

TEST_CASE("rho on basis elements") {
    // B_(n) maps to the unit face
    for (int n = 1; n <= 5; ++n) {
        DescentElem<Rat> x(n);
        x.add_coord(Composition({n}), Rat(1));
        CHECK(rho(x) == FaceElem<Rat>::unit(n));
    }
    // rho(B_(2,1)) for n = 3 is the sum of the three faces of type (2,1)
    DescentElem<Rat> x(3);
    x.add_coord(Composition({2, 1}), Rat(1));
    CHECK(rho(x) == btilde<Rat>(Composition({2, 1})));
}

TEST_CASE("rho sends the w0 expansion to w0tilde") {
    for (int n = 1; n <= 5; ++n) {
        const auto x = from_group_algebra(GroupElem<Rat>::longest_word_elem(n));
        REQUIRE(x.has_value());
        CHECK(rho(*x) == w0tilde<Rat>(n));
        // and the B-coordinates are the alternating signs
        for (const auto& [alpha, c] : x->coords)
            CHECK(c == Rat(((n - alpha.length()) % 2 == 0) ? 1 : -1));
        CHECK(x->coords.size() == enumerate_compositions(n).size());
    }
}

TEST_CASE("rho_inv") {
    for (int n = 1; n <= 5; ++n) {
        for (const Composition& alpha : enumerate_compositions(n)) {
            const auto x = rho_inv(btilde<Rat>(alpha));
            CHECK(x.coords.size() == 1);
            CHECK(x.coords.at(alpha) == Rat(1));
        }
        CHECK(rho_inv(w0tilde<Rat>(n)) ==
              *from_group_algebra(GroupElem<Rat>::longest_word_elem(n)));
    }
    // a single non-orbit face is rejected with a diagnostic
    CHECK_THROWS_WITH_AS(rho_inv(FaceElem<Rat>::of_face(Face::parse(3, "1,2|3"))),
                         doctest::Contains("not S_n-invariant"), std::invalid_argument);
    // unequal coefficients within one type are rejected
    FaceElem<Rat> bad(3);
    bad.add_term(Face::parse(3, "1,2|3"), Rat(1));
    bad.add_term(Face::parse(3, "1,3|2"), Rat(2));
    bad.add_term(Face::parse(3, "2,3|1"), Rat(1));
    CHECK_THROWS_AS(rho_inv(bad), std::invalid_argument);
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(0x0d1);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const DescentElem<Rat> x = random_descent_elem(n, rng);
        CHECK(rho_inv(rho(x)) == x);
        const auto back = from_group_algebra(to_group_algebra(x));
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
}

TEST_CASE("membership test") {
    // A single transposition is outside the descent algebra whenever its
    // descent class has more than one member: (1 2) = [2,1,3] shares the
    // descent set {1} with [3,1,2], so no B-combination isolates it.
    const auto none = from_group_algebra(GroupElem<Rat>::of_permutation(Permutation({2, 1, 3})));
    CHECK(!none.has_value());
    // (1 3) = [3,2,1] is the longest word of S_3 and is D_{1,2}, hence inside.
    const auto w0_coords =
        from_group_algebra(GroupElem<Rat>::of_permutation(Permutation({3, 2, 1})));
    CHECK(w0_coords.has_value());
    CHECK(from_group_algebra(GroupElem<Rat>::identity(4)).has_value());
    CHECK(from_group_algebra(GroupElem<Rat>::longest_word_elem(4)).has_value());
    // top-to-random is not in the descent algebra, but its antipode is
    CHECK(!from_group_algebra(top_to_random<Rat>(4, 1)).has_value());
    CHECK(from_group_algebra(antipode(top_to_random<Rat>(4, 1))).has_value());
}

TEST_CASE("rho is an algebra anti-morphism, exhaustively for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const Composition& alpha : enumerate_compositions(n))
            for (const Composition& beta : enumerate_compositions(n)) {
                const GroupElem<Rat> prod =
                    basis_B_comp<Rat>(alpha) * basis_B_comp<Rat>(beta);
                const auto coords = from_group_algebra(prod);
                REQUIRE(coords.has_value()); // the B-span is closed under products
                CHECK(rho(*coords) == btilde<Rat>(beta) * btilde<Rat>(alpha));
            }
    }
}

TEST_CASE("rho anti-morphism on random pairs, n = 5") {
    std::mt19937_64 rng(0x5005);
    const auto comps = enumerate_compositions(5);
    for (int trial = 0; trial < 6; ++trial) {
        const Composition& alpha = comps[rng() % comps.size()];
        const Composition& beta = comps[rng() % comps.size()];
        const auto coords =
            from_group_algebra(basis_B_comp<Rat>(alpha) * basis_B_comp<Rat>(beta));
        REQUIRE(coords.has_value());
        CHECK(rho(*coords) == btilde<Rat>(beta) * btilde<Rat>(alpha));
    }
}

TEST_CASE("conjugation transport: w0~ B~_alpha w0~ = B~_rev(alpha), n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const FaceElem<Rat> w0t = w0tilde<Rat>(n);
        for (const Composition& alpha : enumerate_compositions(n)) {
            const FaceElem<Rat> bt = btilde<Rat>(alpha);
            CHECK(w0t * bt * w0t == btilde<Rat>(rev(alpha)));
            const FaceElem<Rat> sq = (w0t * bt) * (w0t * bt);
            CHECK(sq == btilde<Rat>(rev(alpha)) * bt);
        }
    }
}

TEST_CASE("rho image is invariant under the action") {
    std::mt19937_64 rng(0x1a5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const FaceElem<Rat> y = rho(random_descent_elem(n, rng));
        const Permutation w = Permutation::unrank(n, rng() % factorial(n));
        CHECK(act(w, y) == y);
    }
}

TEST_CASE("b * P_id = rho_inv(b) * P_id on the btilde basis, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const FaceElem<Rat> pid = FaceElem<Rat>::of_face(Face::singletons(n));
        for (const Composition& alpha : enumerate_compositions(n)) {
            const FaceElem<Rat> b = btilde<Rat>(alpha);
            // right-hand side: the group-algebra element rho^{-1}(b) = B_alpha
            // acting on P_id through the linearized S_n action
            FaceElem<Rat> rhs(n);
            to_group_algebra(rho_inv(b)).for_each([&](std::uint64_t r, const Rat& c) {
                rhs.add_term(act(Permutation::unrank(n, r), Face::singletons(n)), c);
            });
            CHECK(b * pid == rhs);
        }
    }
}
