#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dihedral/cyclotomic.hpp"
#include "dihedral/laurent.hpp"

using namespace dihedral;

TEST_CASE("quantum integers as Laurent polynomials") {
    CHECK(qnum(0).is_zero());
    CHECK(qnum(1) == LaurentPoly::constant(Rat(1)));
    CHECK(qnum(2) == LaurentPoly::monomial(-1) + LaurentPoly::monomial(1));
    CHECK(qnum(5).coeff(4) == 1);
    CHECK(qnum(5).coeff(3) == 0);
    CHECK(qnum(5).eval_at_one() == 5);
}

TEST_CASE("Laurent polynomial arithmetic is canonical") {
    LaurentPoly a = qnum(3);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPoly::zero() == LaurentPoly::zero());
    CHECK(a.mirrored() == a);
    LaurentPoly v = LaurentPoly::monomial(1);
    CHECK(v.mirrored() == LaurentPoly::monomial(-1));
    CHECK((v * v.mirrored()) == LaurentPoly::constant(Rat(1)));
}

TEST_CASE("quantum integer identities in Z[q,1/q]") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(qnum(2) * qnum(n) == qnum(n + 1) + qnum(n - 1));
        CHECK(qnum(n) * qnum(n) == qnum(n - 1) * qnum(n + 1) + qnum(1));
    }
}

TEST_CASE("minimal polynomial of 2cos(pi/m)") {
    // Small cases, verifiable by hand from the classical values of 2cos(pi/m):
    // m=3 -> 1, m=4 -> sqrt 2, m=5 -> golden ratio, m=6 -> sqrt 3.
    CHECK(MinimalPolynomial(3).poly() == QPoly({Rat(-1), Rat(1)}));
    CHECK(MinimalPolynomial(4).poly() == QPoly({Rat(-2), Rat(0), Rat(1)}));
    CHECK(MinimalPolynomial(5).poly() == QPoly({Rat(-1), Rat(-1), Rat(1)}));
    CHECK(MinimalPolynomial(6).poly() == QPoly({Rat(-3), Rat(0), Rat(1)}));
    CHECK(MinimalPolynomial(7).poly() == QPoly({Rat(1), Rat(-2), Rat(-1), Rat(1)}));
    CHECK(MinimalPolynomial(8).poly() == QPoly({Rat(2), Rat(0), Rat(-4), Rat(0), Rat(1)}));

    for (int m = 3; m <= 12; ++m) {
        MinimalPolynomial p(m);
        double root = 2.0 * std::cos(M_PI / m);
        CHECK(std::fabs(p.poly().eval(root)) < 1e-12);
        CHECK(p.poly().lc() == 1);
        // No rational roots for degree >= 2 (necessary for irreducibility;
        // sufficient for the degree <= 3 cases).
        if (p.degree() >= 2) {
            Rat c0 = p.poly().coeff(0);
            for (long r = -3; r <= 3; ++r)
                CHECK(p.poly().eval(Rat(r)) != 0);
            CHECK(c0 != 0);
        }
    }
}

TEST_CASE("specialisation at a primitive 2m-th root of unity") {
    for (int m = 3; m <= 8; ++m) {
        const NumberField& K = NumberField::get(m);
        CHECK(specialize(qnum(m), K).is_zero());
        for (int i = 0; i <= m; ++i) {
            CHECK(specialize(qnum(m - i), K) == specialize(qnum(i), K));
            CHECK(specialize(qnum(m + i), K) == -specialize(qnum(i), K));
        }
        CHECK_THROWS_AS(specialize(LaurentPoly::monomial(1), K), std::invalid_argument);
    }
}

TEST_CASE("q7 identities hold exactly in K_m") {
    for (int m = 3; m <= 8; ++m) {
        const NumberField& K = NumberField::get(m);
        CHECK(K.qnum(m).is_zero());
        for (int i = 0; i <= m; ++i) {
            CHECK(K.qnum(m - i) == K.qnum(i));
            CHECK(K.qnum(m + i) == -K.qnum(i));
        }
    }
}

TEST_CASE("delta is [2] and generates the field") {
    for (int m = 3; m <= 8; ++m) {
        const NumberField& K = NumberField::get(m);
        CHECK(K.delta() == K.qnum(2));
        double want = 2.0 * std::cos(M_PI / m);
        CHECK(std::fabs(K.delta().approx() - want) < 1e-12);
    }
}

TEST_CASE("specialisation is a ring homomorphism on symmetric polynomials") {
    std::mt19937 rng(20260811);
    std::uniform_int_distribution<int> pick(0, 9);
    for (int m = 3; m <= 8; ++m) {
        const NumberField& K = NumberField::get(m);
        for (int trial = 0; trial < 20; ++trial) {
            LaurentPoly p = qnum(pick(rng)) + qnum(pick(rng)).scaled(Rat(pick(rng) - 4));
            LaurentPoly r = qnum(pick(rng)) - qnum(pick(rng)).scaled(Rat(3));
            CHECK(specialize(p * r, K) == specialize(p, K) * specialize(r, K));
            CHECK(specialize(p + r, K) == specialize(p, K) + specialize(r, K));
        }
    }
}

TEST_CASE("field inverses") {
    for (int m = 3; m <= 8; ++m) {
        const NumberField& K = NumberField::get(m);
        CHECK(K.one().inverse() == K.one());
        // [i] is invertible for 1 <= i <= m-1
        for (int i = 1; i < m; ++i) {
            CycloScalar q = K.qnum(i);
            CHECK_FALSE(q.is_zero());
            CHECK((q * q.inverse()).is_one());
        }
        CHECK_THROWS_AS(K.zero().inverse(), ZeroInversion);
    }
    // K_3 has delta = 1, so [2] = 1 there.
    const NumberField& K3 = NumberField::get(3);
    CHECK(K3.qnum(2).inverse() == K3.one());
}

TEST_CASE("random nonzero elements have verified inverses") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(-6, 6);
    for (int m : {3, 5, 8}) {
        const NumberField& K = NumberField::get(m);
        int done = 0;
        while (done < 200) {
            std::vector<Rat> coords(K.degree());
            for (auto& c : coords) c = rat(pick(rng), 1 + std::abs(pick(rng)));
            CycloScalar x(&K, coords);
            if (x.is_zero()) continue;
            CHECK((x * x.inverse()).is_one());
            ++done;
        }
    }
}

TEST_CASE("q-number identities survive specialisation") {
    for (int m = 3; m <= 8; ++m) {
        const NumberField& K = NumberField::get(m);
        for (int n = 1; n <= 2 * m; ++n) {
            CHECK(K.qnum(2) * K.qnum(n) == K.qnum(n + 1) + K.qnum(n - 1));
            CHECK(K.qnum(n) * K.qnum(n) == K.qnum(n - 1) * K.qnum(n + 1) + K.qnum(1));
        }
    }
}
