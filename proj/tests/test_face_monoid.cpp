#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "desalg/face_algebra.hpp"
#include "desalg/face_monoid.hpp"
#include "oracles.hpp"

using namespace desalg;

namespace {

Face F(int n, const std::string& s) { return Face::parse(n, s); }

const Face& random_face(int n, std::mt19937_64& rng) {
    const FaceBasis& basis = FaceBasis::get(n);
    return basis.face(static_cast<int>(rng() % basis.size()));
}

std::multiset<std::uint32_t> block_multiset(const Face& f) {
    return {f.blocks().begin(), f.blocks().end()};
}

} // namespace

TEST_CASE("enumeration counts match the ordered Bell numbers") {
    const long long expected[] = {1, 1, 3, 13, 75, 541, 4683, 47293};
    for (int n = 0; n <= 7; ++n) {
        CHECK(static_cast<long long>(enumerate_faces(n).size()) == expected[n]);
        CHECK(FaceBasis::get(n).size() == oracles::ordered_bell(n));
    }
    // streams are independently restartable: a second pass sees the same faces
    CHECK(enumerate_faces(3) == enumerate_faces(3));
}

TEST_CASE("n = 3 faces group by type as 1 + 3 + 3 + 6") {
    std::map<Composition, int> by_type;
    for (const Face& f : FaceBasis::get(3).faces()) ++by_type[f.type()];
    CHECK(by_type[Composition({3})] == 1);
    CHECK(by_type[Composition({2, 1})] == 3);
    CHECK(by_type[Composition({1, 2})] == 3);
    CHECK(by_type[Composition({1, 1, 1})] == 6);
}

TEST_CASE("canonical order: increasing length, lex on block bit-sets") {
    for (int n = 1; n <= 5; ++n) {
        const FaceBasis& basis = FaceBasis::get(n);
        CHECK(basis.face(0) == Face::unit(n));
        for (int i = 0; i + 1 < basis.size(); ++i) CHECK(basis.face(i) < basis.face(i + 1));
        for (int i = 0; i < basis.size(); ++i) CHECK(basis.index(basis.face(i)) == i);
    }
}

TEST_CASE("face product: worked examples") {
    CHECK(face_product(F(3, "1,2|3"), F(3, "3|2|1")) == F(3, "2|1|3"));
    CHECK(face_product(F(3, "3|2|1"), F(3, "1,2|3")) == F(3, "3|2|1"));
    CHECK(face_product(F(3, "1,2|3"), F(3, "1,2,3")) == F(3, "1,2|3"));
    for (int n = 0; n <= 5; ++n) {
        const Face unit = Face::unit(n);
        for (const Face& f : FaceBasis::get(n).faces()) {
            CHECK(face_product(f, unit) == f);
            CHECK(face_product(unit, f) == f);
        }
    }
}

TEST_CASE("face product is associative on 10^4 random triples, n <= 6") {
    std::mt19937_64 rng(0xfacade);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Face& e = random_face(n, rng);
        const Face& f = random_face(n, rng);
        const Face& g = random_face(n, rng);
        CHECK(face_product(face_product(e, f), g) == face_product(e, face_product(f, g)));
    }
}

TEST_CASE("FG and GF have the same blocks") {
    std::mt19937_64 rng(0xb10c);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Face& f = random_face(n, rng);
        const Face& g = random_face(n, rng);
        CHECK(block_multiset(face_product(f, g)) == block_multiset(face_product(g, f)));
    }
}

TEST_CASE("containment: worked examples") {
    CHECK(contains(F(5, "5|4|1,2,3"), F(5, "4,5|1,2,3")));
    CHECK(contains(F(5, "1,2,3|4|5"), F(5, "4,5|1,2,3")));
    CHECK(contains(F(5, "4,5|2|1,3"), F(5, "4,5|1,2,3")));
    CHECK(contains(F(5, "5|1|2|4|3"), F(5, "4,5|1,2,3")));
    CHECK(!contains(F(5, "5|1,3,4|2"), F(5, "4,5|1,2,3")));
    for (const Face& f : FaceBasis::get(4).faces()) CHECK(contains(f, f));
}

TEST_CASE("containment bijection") {
    CHECK(containment_bijection(F(5, "1,2,3|4|5"), F(5, "4,5|1,2,3")) == F(3, "2,3|1"));
    CHECK(containment_bijection(F(3, "1|2|3"), F(3, "1,2,3")) == F(3, "1,2,3"));
    for (const Face& f : FaceBasis::get(4).faces()) {
        CHECK(containment_bijection(f, f) == Face::singletons(f.length()));
    }
    CHECK_THROWS_AS(containment_bijection(F(3, "1,2|3"), F(3, "1,3|2")),
                    std::invalid_argument);
    // length preservation and bijectivity onto set compositions of [l(F)]
    for (const Face& f : FaceBasis::get(4).faces()) {
        std::set<std::vector<std::uint32_t>> images;
        int count = 0;
        for (const Face& g : FaceBasis::get(4).faces()) {
            if (!contains(f, g)) continue;
            const Face h = containment_bijection(f, g);
            CHECK(h.n() == f.length());
            CHECK(h.length() == g.length());
            images.insert(h.blocks());
            ++count;
        }
        CHECK(static_cast<long long>(images.size()) == count);
        CHECK(count == oracles::ordered_bell(f.length()));
    }
}

TEST_CASE("containment-product laws, exhaustive n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        const FaceBasis& basis = FaceBasis::get(n);
        for (const Face& f : basis.faces())
            for (const Face& g : basis.faces()) {
                const Face fg = face_product(f, g);
                CHECK(contains(fg, f));
                CHECK(contains(fg, g));
                CHECK((fg == f) == contains(f, g));
                CHECK(fg.length() >= f.length());
                CHECK((fg.length() == f.length()) == contains(f, g));
                CHECK(fg.length() >= g.length());
                if (contains(f, g)) CHECK(f.length() >= g.length());
            }
    }
}

TEST_CASE("containment-product laws, random n <= 6") {
    std::mt19937_64 rng(0xc9);
    for (int trial = 0; trial < 5000; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 2);
        const Face& f = random_face(n, rng);
        const Face& g = random_face(n, rng);
        const Face fg = face_product(f, g);
        CHECK(contains(fg, f));
        CHECK(contains(fg, g));
        CHECK((fg == f) == contains(f, g));
        CHECK(fg.length() >= f.length());
        CHECK((fg.length() == f.length()) == contains(f, g));
        CHECK(fg.length() >= g.length());
        if (contains(f, g)) CHECK(f.length() >= g.length());
    }
}

TEST_CASE("type and singleton blocks") {
    CHECK(F(3, "1,2|3").type() == Composition({2, 1}));
    CHECK(F(3, "1,2,3").type() == Composition({3}));
    CHECK(Face::singletons(5).type() == Composition({1, 1, 1, 1, 1}));
    CHECK(F(7, "4|2,5|1|7|3,6").singleton_count() == 3);
    CHECK(Face::unit(4).singleton_count() == 0);
    CHECK(Face::singletons(6).singleton_count() == 6);
}

TEST_CASE("S_n action") {
    const Permutation id3 = Permutation::identity(3);
    CHECK(act(id3, F(3, "1,2|3")) == F(3, "1,2|3"));
    CHECK(act(Permutation({2, 1, 3}), F(3, "1,2|3")) == F(3, "1,2|3"));
    CHECK(act(Permutation({3, 2, 1}), F(3, "1,2|3")) == F(3, "2,3|1"));
    std::mt19937_64 rng(0xac7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Permutation u = Permutation::unrank(n, rng() % factorial(n));
        const Permutation v = Permutation::unrank(n, rng() % factorial(n));
        const Face& f = random_face(n, rng);
        const Face& g = random_face(n, rng);
        CHECK(act(u, act(v, f)) == act(u.compose(v), f));
        CHECK(act(u, f).type() == f.type());
        CHECK(act(u, face_product(f, g)) == face_product(act(u, f), act(u, g)));
    }
}

TEST_CASE("orbits are exactly the type classes, exhaustively for n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        const FaceBasis& basis = FaceBasis::get(n);
        for (const Face& f : basis.faces())
            for (const Face& g : basis.faces()) {
                bool same_orbit = false;
                for_each_permutation(n, [&](const Permutation& w) {
                    if (!same_orbit && act(w, f) == g) same_orbit = true;
                });
                CHECK(same_orbit == (f.type() == g.type()));
            }
    }
}

TEST_CASE("P_w and the interval bijection") {
    CHECK(Face::of_permutation(Permutation::identity(4)) == Face::singletons(4));
    CHECK(Face::of_permutation(Permutation::longest_word(3)) == F(3, "3|2|1"));
    std::mt19937_64 rng(0x9e);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Permutation w = Permutation::unrank(n, rng() % factorial(n));
        CHECK(act(w, Face::singletons(n)) == Face::of_permutation(w));
    }

    CHECK(omega_bijection(Composition({2, 3, 1, 2}), Permutation({3, 5, 1, 4, 8, 2, 6, 7})) ==
          F(8, "3,5|1,4,8|2|6,7"));
    CHECK(omega_bijection(Composition({2, 2}), Permutation::identity(4)) == F(4, "1,2|3,4"));
    CHECK_THROWS_AS(omega_bijection(Composition({3, 1}), Permutation({2, 1, 3, 4})),
                    std::invalid_argument);

    // bijection onto faces of type alpha, and Omega_alpha(w) * P_id = P_w
    for (int n = 1; n <= 5; ++n) {
        for (const Composition& alpha : enumerate_compositions(n)) {
            const IndexSet cut = gaps_inv(alpha);
            std::set<std::vector<std::uint32_t>> images;
            int count = 0;
            for_each_permutation(n, [&](const Permutation& w) {
                if (!descent_set(w).subset_of(cut)) return;
                const Face img = omega_bijection(alpha, w);
                CHECK(img.type() == alpha);
                CHECK(face_product(img, Face::singletons(n)) == Face::of_permutation(w));
                images.insert(img.blocks());
                ++count;
            });
            CHECK(static_cast<long long>(images.size()) == count);
            CHECK(count == static_cast<int>(faces_of_type(alpha).size()));
        }
    }
}

TEST_CASE("cached enumerations are safe to race") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&ok, t] {
            const int n = 1 + t % 5;
            if (FaceBasis::get(n).size() != static_cast<int>(oracles::ordered_bell(n)))
                ok = false;
            for (const Composition& alpha : enumerate_compositions(n))
                if (faces_of_type(alpha).empty()) ok = false;
        });
    for (auto& w : workers) w.join();
    CHECK(ok);
}

TEST_CASE("face parser diagnostics") {
    CHECK(F(3, "1,2|3").str() == "1,2|3");
    CHECK_THROWS_WITH_AS(Face::parse(3, "1,2|1,3"), doctest::Contains("appears twice"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Face::parse(3, "1,2"), doctest::Contains("element 3 missing"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Face::parse(3, "1,2|4"), doctest::Contains("outside"),
                         std::invalid_argument);
    CHECK(Face::parse(0, "") == Face::unit(0));
}

TEST_CASE("face algebra: unit, zero divisors, btilde, w0tilde") {
    using E = FaceElem<Rat>;
    const E unit = E::unit(3);
    const E x = E::of_face(F(3, "1,2|3"));
    CHECK(unit * x == x);
    CHECK(x * unit == x);

    // 3*(12,3) * ((123) - (3,12)) = 0: a zero divisor in ZCF(3)
    const E lhs = Rat(3) * x;
    const E rhs = E::of_face(F(3, "1,2,3")) - E::of_face(F(3, "3|1,2"));
    CHECK((lhs * rhs).is_zero());

    const E b21 = btilde<Rat>(Composition({2, 1}));
    CHECK(b21.support_size() == 3);
    CHECK(b21.coeff(F(3, "1,2|3")) == Rat(1));
    CHECK(b21.coeff(F(3, "1,3|2")) == Rat(1));
    CHECK(b21.coeff(F(3, "2,3|1")) == Rat(1));
    CHECK(btilde<Rat>(Composition({3})) == E::unit(3));
    CHECK(btilde<Rat>(Composition({1, 1, 1})).support_size() == 6);

    const E w0t2 = w0tilde<Rat>(2);
    CHECK(w0t2.coeff(F(2, "1,2")) == Rat(-1));
    CHECK(w0t2.coeff(F(2, "1|2")) == Rat(1));
    CHECK(w0t2.coeff(F(2, "2|1")) == Rat(1));
    CHECK(w0tilde<Rat>(1) == E::unit(1));
    for (int n = 1; n <= 5; ++n)
        CHECK(w0tilde<Rat>(n).coeff(Face::singletons(n)) == Rat(1));
}

TEST_CASE("b * P_id = rho_inv(b) * P_id pattern for the btilde basis, n <= 5") {
    // btilde(alpha) * P_id equals the sum of P_w over Des w <= gaps_inv(alpha),
    // which is B_alpha acting on the singleton face.
    for (int n = 1; n <= 5; ++n) {
        const FaceElem<Rat> pid = FaceElem<Rat>::of_face(Face::singletons(n));
        for (const Composition& alpha : enumerate_compositions(n)) {
            const FaceElem<Rat> lhs = btilde<Rat>(alpha) * pid;
            FaceElem<Rat> rhs(n);
            const IndexSet cut = gaps_inv(alpha);
            for_each_permutation(n, [&](const Permutation& w) {
                if (descent_set(w).subset_of(cut))
                    rhs.add_term(Face::of_permutation(w), Rat(1));
            });
            CHECK(lhs == rhs);
        }
    }
}
