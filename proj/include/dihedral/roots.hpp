#ifndef DIHEDRAL_ROOTS_HPP
#define DIHEDRAL_ROOTS_HPP

#include <cassert>
#include <map>
#include <sstream>
#include <utility>

#include "dihedral/coxeter.hpp"
#include "dihedral/cyclotomic.hpp"

namespace dihedral {

// K_m-linear combination a*alpha_s + b*alpha_t in the dual geometric
// representation.  The Cartan pairing is <alpha_s, alpha_t^v> = -[2].
struct RootVector {
    CycloScalar a;  // coefficient of alpha_s
    CycloScalar b;  // coefficient of alpha_t

    friend bool operator==(const RootVector& x, const RootVector& y) {
        return x.a == y.a && x.b == y.b;
    }
};

inline RootVector alpha_s(const NumberField& K) { return {K.one(), K.zero()}; }
inline RootVector alpha_t(const NumberField& K) { return {K.zero(), K.one()}; }

// Simple reflection acting contragrediently on the span of the simple roots:
// s(alpha_s) = -alpha_s and s(alpha_t) = alpha_t + [2] alpha_s, and the same
// with colours swapped.
inline RootVector reflect(Color c, const RootVector& v) {
    const NumberField& K = *v.a.field();
    CycloScalar two = K.qnum(2);
    if (c == Color::S) return {-v.a + two * v.b, v.b};
    return {v.a, two * v.a - v.b};
}

inline RootVector act_on_root(const DihedralGroup& W, const DihedralElement& w,
                              const RootVector& v) {
    RootVector acc = v;
    auto word = W.letters(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = reflect(*it, acc);
    return acc;
}

// Polynomial in alpha_s, alpha_t over K_m, graded with deg(alpha) = 2.
// Canonical: zero coefficients are never stored.
class BiPoly {
   public:
    using Key = std::pair<int, int>;  // (exponent of alpha_s, exponent of alpha_t)

    BiPoly() = default;

    static BiPoly zero() { return {}; }

    static BiPoly term(const CycloScalar& c, int es, int et) {
        BiPoly p;
        if (!c.is_zero()) p.terms_[{es, et}] = c;
        return p;
    }

    static BiPoly constant(const CycloScalar& c) { return term(c, 0, 0); }
    static BiPoly var_s(const NumberField& K) { return term(K.one(), 1, 0); }
    static BiPoly var_t(const NumberField& K) { return term(K.one(), 0, 1); }

    const std::map<Key, CycloScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Homogeneous degree with deg(alpha) = 2; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, 2 * (k.first + k.second));
        return d;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }

    BiPoly scaled(const CycloScalar& c) const {
        BiPoly r;
        if (c.is_zero()) return r;
        for (const auto& [k, x] : terms_) r.terms_[k] = x * c;
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // Ring action of a simple reflection, extending the action on the roots.
    BiPoly reflected(Color c) const {
        if (terms_.empty()) return {};
        const NumberField& K = *terms_.begin()->second.field();
        BiPoly as_img, at_img;
        if (c == Color::S) {
            as_img = term(-K.one(), 1, 0);
            at_img = term(K.one(), 0, 1) + term(K.qnum(2), 1, 0);
        } else {
            as_img = term(K.one(), 1, 0) + term(K.qnum(2), 0, 1);
            at_img = term(-K.one(), 0, 1);
        }
        BiPoly r;
        for (const auto& [k, coef] : terms_) {
            BiPoly mono = constant(coef);
            for (int i = 0; i < k.first; ++i) mono = mono * as_img;
            for (int i = 0; i < k.second; ++i) mono = mono * at_img;
            r += mono;
        }
        return r;
    }

    // Exact division by alpha_s or alpha_t; the remainder must vanish.
    BiPoly divided_by_alpha(Color c) const {
        BiPoly r;
        for (const auto& [k, coef] : terms_) {
            Key nk = k;
            if (c == Color::S) {
                assert(k.first >= 1 && "not divisible by alpha_s");
                nk.first -= 1;
            } else {
                assert(k.second >= 1 && "not divisible by alpha_t");
                nk.second -= 1;
            }
            r.terms_[nk] = coef;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            if (k.first) os << "*as^" << k.first;
            if (k.second) os << "*at^" << k.second;
            first = false;
        }
        return os.str();
    }

   private:
    void add_term(const Key& k, const CycloScalar& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Key, CycloScalar> terms_;
};

// Demazure operator: (f - c.f) / alpha_c.  Divisibility is a theorem; the
// division asserts it.  Drops the degree by 2.
inline BiPoly demazure(Color c, const BiPoly& f) {
    BiPoly num = f - f.reflected(c);
    return num.divided_by_alpha(c);
}

}  // namespace dihedral

#endif
