#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "desalg/bidigare.hpp"
#include "desalg/exact_linalg.hpp"

using namespace desalg;

namespace {

Mat<Rat> random_int_matrix(int r, int c, std::mt19937_64& rng, int lo = -6, int hi = 6) {
    Mat<Rat> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = Rat(lo + static_cast<long long>(rng() % (hi - lo + 1)));
    return m;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Mat<Rat>::identity(5)) == 5);
    CHECK(kernel_dim(Mat<Rat>::identity(5)) == 0);
    CHECK(rank(Mat<Rat>(4, 4)) == 0);
    CHECK(kernel_dim(Mat<Rat>(4, 4)) == 4);
    Mat<Rat> m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(1, 0) = Rat(2);
    m.at(1, 1) = Rat(4);
    CHECK(rank(m) == 1);
    // rational entries
    m.at(1, 1) = Rat(1, 3);
    CHECK(rank(m) == 2);
}

TEST_CASE("Bareiss agrees with rational Gauss and with F_p on random matrices") {
    std::mt19937_64 rng(0x3a11);
    FpScope scope(1000003);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 10);
        const int c = 1 + static_cast<int>(rng() % 10);
        Mat<Rat> m = random_int_matrix(r, c, rng);
        if (rng() % 2) {
            // plant a rank deficiency
            const int i = static_cast<int>(rng() % r), j = static_cast<int>(rng() % r);
            for (int col = 0; col < c; ++col) m.at(i, col) = Rat(2) * m.at(j, col);
        }
        const int rk = rank(m);
        CHECK(rk == detail::rank_rational_gauss(m));
        // rank over F_p for a large prime agrees on small integer matrices
        Mat<Fp> mp(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                mp.at(i, j) = Fp(static_cast<long long>(m.at(i, j).num().get_si()));
        CHECK(rank(mp) == rk);
    }
}

TEST_CASE("solve") {
    std::mt19937_64 rng(0x501e);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 6);
        const int c = 2 + static_cast<int>(rng() % 6);
        const Mat<Rat> m = random_int_matrix(r, c, rng);
        std::vector<Rat> x(c);
        for (auto& v : x) v = Rat(static_cast<long long>(rng() % 7) - 3, 1 + rng() % 3);
        std::vector<Rat> b(r, Rat(0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b[i] += m.at(i, j) * x[j];
        const auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        // any solution must reproduce b
        for (int i = 0; i < r; ++i) {
            Rat acc(0);
            for (int j = 0; j < c; ++j) acc += m.at(i, j) * (*sol)[j];
            CHECK(acc == b[i]);
        }
    }
    // inconsistent system
    Mat<Rat> m(2, 1);
    m.at(0, 0) = Rat(1);
    m.at(1, 0) = Rat(1);
    CHECK(!solve(m, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("solve over F_p") {
    FpScope scope(13);
    Mat<Fp> m(2, 2);
    m.at(0, 0) = Fp(2);
    m.at(0, 1) = Fp(1);
    m.at(1, 0) = Fp(5);
    m.at(1, 1) = Fp(3);
    const auto sol = solve(m, {Fp(4), Fp(11)});
    REQUIRE(sol.has_value());
    CHECK(m.at(0, 0) * (*sol)[0] + m.at(0, 1) * (*sol)[1] == Fp(4));
    CHECK(m.at(1, 0) * (*sol)[0] + m.at(1, 1) * (*sol)[1] == Fp(11));
}

TEST_CASE("eigen multiplicity") {
    CHECK(eigen_multiplicity(Mat<Rat>::identity(7), Rat(1)) == 7);
    CHECK(eigen_multiplicity(Mat<Rat>::identity(7), Rat(0)) == 0);
    Mat<Rat> d(3, 3);
    d.at(0, 0) = Rat(2);
    d.at(1, 1) = Rat(2);
    d.at(2, 2) = Rat(3);
    CHECK(eigen_multiplicity(d, Rat(2)) == 2);
    CHECK(eigen_multiplicity(d, Rat(3)) == 1);
    CHECK(eigen_multiplicity(d, Rat(5)) == 0);
}

TEST_CASE("polynomials") {
    using P = Polynomial<Rat>;
    const P f = P::from_roots({Rat(0), Rat(2)});
    CHECK(f == P({Rat(0), Rat(-2), Rat(1)})); // x^2 - 2x
    CHECK(f.str() == "x^2 - 2*x");
    // duplicate roots enter once
    CHECK(P::from_roots({Rat(0), Rat(2), Rat(2)}) == f);
    const P l4 = P::from_roots({Rat(-2), Rat(0), Rat(1), Rat(4)});
    CHECK(l4 == P({Rat(0), Rat(8), Rat(-6), Rat(-3), Rat(1)})); // x^4 - 3x^3 - 6x^2 + 8x
    CHECK(l4.eval(Rat(-2)) == Rat(0));
    CHECK(l4.eval(Rat(3)) == Rat(-30)); // 81 - 81 - 54 + 24
    CHECK(factored_str(l4, 100) == "(x+2)x(x-1)(x-4)");
    CHECK(factored_str(P({Rat(1), Rat(1)}) * P({Rat(1), Rat(1)}), 10) == "(x+1)^2");
    CHECK(!factored_str(P({Rat(2), Rat(0), Rat(1)}), 10).has_value()); // x^2 + 2
    CHECK(P().str() == "0");
    CHECK(P({Rat(5)}).str() == "5");
}

TEST_CASE("poly_eval_at_element") {
    using E = GroupElem<Rat>;
    const E one = E::identity(3);
    // x - 1 at the identity element
    CHECK(poly_eval_at_element(Polynomial<Rat>({Rat(-1), Rat(1)}), one, one).is_zero());
    // a = 1 + (1 2): a^2 - 2a = 0
    E a = E::identity(2);
    a.add_coeff(Permutation({2, 1}).rank(), Rat(1));
    const Polynomial<Rat> mu({Rat(0), Rat(-2), Rat(1)});
    CHECK(poly_eval_at_element(mu, a, E::identity(2)).is_zero());
}

TEST_CASE("krylov_min_poly basics") {
    using E = GroupElem<Rat>;
    CHECK(krylov_min_poly(E::identity(4)) == Polynomial<Rat>({Rat(-1), Rat(1)}));
    CHECK(krylov_min_poly(E::zero(4)) == Polynomial<Rat>({Rat(0), Rat(1)}));
    E a = E::identity(2);
    a.add_coeff(Permutation({2, 1}).rank(), Rat(1));
    CHECK(krylov_min_poly(a) == Polynomial<Rat>({Rat(0), Rat(-2), Rat(1)}));

    // the result is monic, annihilates a, and each root factor is needed
    std::mt19937_64 rng(0x3c);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        E x(n);
        for (int t = 0; t < 3; ++t)
            x.add_coeff(rng() % factorial(n), Rat(static_cast<long long>(rng() % 5) - 2));
        const auto mu = krylov_min_poly(x);
        CHECK(mu.is_monic());
        CHECK(poly_eval_at_element(mu, x, E::identity(n)).is_zero());
    }
}

TEST_CASE("right_mult_matrix") {
    using E = GroupElem<Rat>;
    CHECK(right_mult_matrix(E::identity(3)).a == Mat<Rat>::identity(6).a);
    CHECK(right_mult_matrix(E::zero(3)).a == Mat<Rat>(6, 6).a);
    // w0 in kS_2 with basis (id, (1 2)): the swap matrix
    const Mat<Rat> swap = right_mult_matrix(E::longest_word_elem(2));
    CHECK(swap.at(0, 0) == Rat(0));
    CHECK(swap.at(1, 0) == Rat(1));
    CHECK(swap.at(0, 1) == Rat(1));
    CHECK(swap.at(1, 1) == Rat(0));
}

TEST_CASE("mu(right multiplication operator) = mu(element), n <= 4") {
    std::mt19937_64 rng(0xa11);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        // random descent-algebra element
        DescentElem<Rat> x(n);
        for (const Composition& alpha : enumerate_compositions(n))
            if (rng() % 2)
                x.add_coord(alpha, Rat(static_cast<long long>(rng() % 5) - 2));
        const GroupElem<Rat> a = to_group_algebra(x);
        CHECK(krylov_min_poly(right_mult_matrix(a)) == krylov_min_poly(a));
    }
    // and for the face operator at small n
    const FaceElem<Rat> fa = w0tilde<Rat>(3) * btilde<Rat>(Composition({2, 1}));
    CHECK(krylov_min_poly(right_mult_matrix(fa)) == krylov_min_poly(fa));
}

TEST_CASE("face krylov fallback for non-integral coefficients") {
    // scaling the element by 1/2 halves every eigenvalue
    const Composition alpha({2, 1});
    const FaceElem<Rat> a = w0tilde<Rat>(3) * btilde<Rat>(alpha);
    std::vector<Rat> halved;
    for (long long k : signed_spectrum(alpha)) halved.emplace_back(k, 2);
    CHECK(krylov_min_poly(Rat(1, 2) * a) == Polynomial<Rat>::from_roots(halved));
}

TEST_CASE("anti-isomorphism invariance of the minimal polynomial, n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        const GroupElem<Rat> w0 = GroupElem<Rat>::longest_word_elem(n);
        for (const Composition& alpha : enumerate_compositions(n)) {
            const GroupElem<Rat> ba = basis_B_comp<Rat>(alpha);
            CHECK(krylov_min_poly(ba * w0) == krylov_min_poly(antipode(ba * w0)));
            CHECK(krylov_min_poly(ba) == krylov_min_poly(btilde<Rat>(alpha)));
        }
    }
}
