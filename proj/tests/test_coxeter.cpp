#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "dihedral/coxeter.hpp"
#include "dihedral/roots.hpp"

using namespace dihedral;

namespace {

// Independent model of I_2(m): maps x -> +-x + a on Z/m, with s: x -> -x and
// t: x -> 1 - x, so st is the rotation x -> x - 1 of order m.
struct AffineMap {
    int add;
    bool flip;
    friend bool operator==(const AffineMap& p, const AffineMap& q) {
        return p.add == q.add && p.flip == q.flip;
    }
    friend bool operator<(const AffineMap& p, const AffineMap& q) {
        return std::tie(p.add, p.flip) < std::tie(q.add, q.flip);
    }
};

AffineMap compose(const AffineMap& f, const AffineMap& g, int m) {
    // (f o g)(x) = f(g(x))
    int add = ((f.flip ? -g.add : g.add) + f.add) % m;
    if (add < 0) add += m;
    return {add, f.flip != g.flip};
}

AffineMap eval_word(const std::vector<Color>& word, int m) {
    AffineMap s{0, true}, t{1, true}, acc{0, false};
    for (Color c : word) acc = compose(acc, c == Color::S ? s : t, m);
    return acc;
}

std::vector<std::vector<Color>> reduced_words(const DihedralGroup& W,
                                              const DihedralElement& x) {
    if (x.is_identity()) return {{}};
    if (x.length() == W.m()) return {W.letters(x, Color::S), W.letters(x, Color::T)};
    return {W.letters(x)};
}

bool is_subword(const std::vector<Color>& small, const std::vector<Color>& big) {
    size_t i = 0;
    for (Color c : big)
        if (i < small.size() && small[i] == c) ++i;
    return i == small.size();
}

// Subword characterisation of the Bruhat order, as an oracle.
bool bruhat_oracle(const DihedralGroup& W, const DihedralElement& x,
                   const DihedralElement& y) {
    for (const auto& wy : reduced_words(W, y))
        for (const auto& wx : reduced_words(W, x))
            if (is_subword(wx, wy)) return true;
    return false;
}

}  // namespace

TEST_CASE("group multiplication matches the affine model") {
    for (int m = 3; m <= 8; ++m) {
        DihedralGroup W(m);
        auto to_map = [&](const DihedralElement& x) { return eval_word(W.letters(x), m); };
        // the model is faithful: all 2m elements give distinct maps
        std::map<AffineMap, DihedralElement> seen;
        for (const auto& x : W.elements()) seen.emplace(to_map(x), x);
        REQUIRE(seen.size() == W.size());
        for (const auto& x : W.elements())
            for (const auto& y : W.elements()) {
                AffineMap want = compose(to_map(x), to_map(y), m);
                CHECK(W.multiply(x, y) == seen.at(want));
            }
    }
}

TEST_CASE("multiplication basics") {
    DihedralGroup W(5);
    auto s = W.simple(Color::S), t = W.simple(Color::T);
    CHECK(W.multiply(W.identity(), s) == s);
    CHECK(W.multiply(s, t) == W.word(Color::S, 2));
    CHECK(W.multiply(s, s) == W.identity());
    CHECK(W.multiply(W.longest(), W.longest()).length() % 2 == 0);
}

TEST_CASE("inverses") {
    for (int m = 3; m <= 8; ++m) {
        DihedralGroup W(m);
        for (const auto& x : W.elements()) {
            CHECK(W.multiply(x, W.inverse(x)) == W.identity());
            CHECK(W.inverse(x).length() == x.length());
        }
        // reflections are involutions, rotations swap colour
        CHECK(W.inverse(W.word(Color::S, 2)) == W.word(Color::T, 2));
        CHECK(W.inverse(W.word(Color::S, 3)) == W.word(Color::S, 3));
    }
}

TEST_CASE("Bruhat order agrees with the subword oracle") {
    for (int m = 3; m <= 6; ++m) {
        DihedralGroup W(m);
        for (const auto& x : W.elements())
            for (const auto& y : W.elements())
                CHECK(W.bruhat_leq(x, y) == bruhat_oracle(W, x, y));
    }
}

TEST_CASE("Bruhat basics") {
    DihedralGroup W(4);
    auto s = W.simple(Color::S), t = W.simple(Color::T);
    CHECK(W.bruhat_leq(s, W.word(Color::S, 2)));
    CHECK_FALSE(W.bruhat_leq(s, t));
    CHECK(W.bruhat_leq(W.identity(), W.longest()));
}

TEST_CASE("lower interval sizes against brute force") {
    for (int m = 3; m <= 8; ++m) {
        DihedralGroup W(m);
        for (const auto& x : W.elements())
            for (const auto& y : W.elements()) {
                int count = 0;
                for (const auto& w : W.elements())
                    if (W.bruhat_leq(w, x) && W.bruhat_leq(w, y)) ++count;
                CHECK(W.lower_interval_size(x, y) == count);
            }
        CHECK(W.lower_interval_size(W.identity(), W.identity()) == 1);
        CHECK(W.lower_interval_size(W.simple(Color::S), W.simple(Color::T)) == 1);
        CHECK(W.lower_interval_size(W.longest(), W.longest()) == 2 * m);
    }
}

TEST_CASE("element notation round trip") {
    DihedralGroup W(5);
    for (const auto& x : W.elements()) CHECK(W.parse(W.format(x)) == x);
    CHECK(W.format(W.word(Color::S, 3)) == "s3");
    CHECK(W.format(W.word(Color::T, 2)) == "t2");
    CHECK_THROWS_AS(W.parse("q7"), UsageError);
    CHECK_THROWS_AS(W.parse("s9"), UsageError);
}

TEST_CASE("reflection action on simple roots") {
    for (int m = 3; m <= 8; ++m) {
        DihedralGroup W(m);
        const NumberField& K = NumberField::get(m);
        RootVector at = alpha_t(K);
        CHECK(act_on_root(W, W.identity(), at) == at);
        RootVector sat = act_on_root(W, W.simple(Color::S), at);
        CHECK(sat.a == K.qnum(2));
        CHECK(sat.b == K.one());
    }
}

TEST_CASE("alternating words act on roots through quantum integers") {
    // The length-i word ending in s sends alpha_t to
    // [i] alpha_t + [i+1] alpha_s (i odd) or [i+1] alpha_t + [i] alpha_s (i even).
    for (int m = 3; m <= 8; ++m) {
        DihedralGroup W(m);
        const NumberField& K = NumberField::get(m);
        for (int i = 1; i <= m - 1; ++i) {
            Color first = i % 2 == 1 ? Color::S : Color::T;  // word ...ts ends in s
            RootVector got = act_on_root(W, W.word(first, i), alpha_t(K));
            if (i % 2 == 1) {
                CHECK(got.b == K.qnum(i));
                CHECK(got.a == K.qnum(i + 1));
            } else {
                CHECK(got.b == K.qnum(i + 1));
                CHECK(got.a == K.qnum(i));
            }
        }
    }
}

TEST_CASE("action is independent of the chosen reduced word") {
    for (int m = 3; m <= 8; ++m) {
        DihedralGroup W(m);
        const NumberField& K = NumberField::get(m);
        for (RootVector v : {alpha_s(K), alpha_t(K)}) {
            RootVector via_s = v, via_t = v;
            auto ws = W.letters(W.longest(), Color::S);
            auto wt = W.letters(W.longest(), Color::T);
            for (auto it = ws.rbegin(); it != ws.rend(); ++it) via_s = reflect(*it, via_s);
            for (auto it = wt.rbegin(); it != wt.rend(); ++it) via_t = reflect(*it, via_t);
            CHECK(via_s == via_t);
        }
    }
}

TEST_CASE("Demazure operator basics") {
    const NumberField& K = NumberField::get(5);
    BiPoly one = BiPoly::constant(K.one());
    BiPoly as = BiPoly::var_s(K), at = BiPoly::var_t(K);
    CHECK(demazure(Color::S, one).is_zero());
    CHECK(demazure(Color::S, as) == BiPoly::constant(K.from_rat(Rat(2))));
    CHECK(demazure(Color::S, at) == BiPoly::constant(-K.qnum(2)));
    // degree drops by two
    CHECK(demazure(Color::S, as * as * at).degree() == 4);
}

TEST_CASE("Demazure of [i] at + [i-1] as") {
    for (int m = 3; m <= 8; ++m) {
        const NumberField& K = NumberField::get(m);
        for (int i = 1; i <= m; ++i) {
            BiPoly f = BiPoly::term(K.qnum(i), 0, 1) + BiPoly::term(K.qnum(i - 1), 1, 0);
            BiPoly want = BiPoly::constant(K.qnum(i - 1) - K.qnum(i + 1));
            CHECK(demazure(Color::S, f) == want);
        }
    }
}

TEST_CASE("Demazure squares to zero and satisfies the twisted Leibniz rule") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> e(0, 2), cpick(-3, 3);
    for (int m : {3, 5, 7}) {
        const NumberField& K = NumberField::get(m);
        auto random_poly = [&]() {
            BiPoly p;
            for (int terms = 0; terms < 4; ++terms)
                p += BiPoly::term(K.from_rat(Rat(cpick(rng))) + K.delta().scaled(Rat(cpick(rng))),
                                  e(rng), e(rng));
            return p;
        };
        for (int trial = 0; trial < 15; ++trial) {
            BiPoly f = random_poly(), g = random_poly();
            for (Color c : {Color::S, Color::T}) {
                CHECK(demazure(c, demazure(c, f)).is_zero());
                BiPoly lhs = demazure(c, f * g);
                BiPoly rhs = demazure(c, f) * g + f.reflected(c) * demazure(c, g);
                CHECK(lhs == rhs);
            }
        }
    }
}
