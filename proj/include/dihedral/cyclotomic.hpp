#ifndef DIHEDRAL_CYCLOTOMIC_HPP
#define DIHEDRAL_CYCLOTOMIC_HPP

#include <cassert>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "dihedral/errors.hpp"
#include "dihedral/laurent.hpp"
#include "dihedral/rational.hpp"

namespace dihedral {

// Dense univariate polynomial over the rationals, used for minimal-polynomial
// bookkeeping and reduction in the real cyclotomic field.
class QPoly {
   public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

    static QPoly constant(const Rat& r) { return QPoly({r}); }
    static QPoly x() { return QPoly({Rat(0), Rat(1)}); }

    static QPoly monomial(int deg, const Rat& coef = Rat(1)) {
        std::vector<Rat> c(deg + 1, Rat(0));
        c[deg] = coef;
        return QPoly(std::move(c));
    }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }

    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return QPoly(std::move(c));
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return QPoly(std::move(c));
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(c));
    }

    QPoly scaled(const Rat& r) const {
        QPoly q = *this;
        for (auto& x : q.c_) x *= r;
        q.trim();
        return q;
    }

    // Euclidean division; returns {quotient, remainder}.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        assert(!d.is_zero());
        QPoly r = *this;
        QPoly q;
        q.c_.assign(std::max<int>(degree() - d.degree() + 1, 0), Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rat f = r.lc() / d.lc();
            q.c_[k] = f;
            for (int i = 0; i <= d.degree(); ++i) r.c_[i + k] -= f * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    QPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return QPoly(std::move(c));
    }

    QPoly monic() const {
        assert(!is_zero());
        return scaled(Rat(1) / lc());
    }

    Rat eval(const Rat& x) const {
        Rat v(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    double eval(double x) const {
        double v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(*it);
        return v;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "d") const {
        LaurentPoly p;
        for (size_t i = 0; i < c_.size(); ++i)
            p += LaurentPoly::monomial(static_cast<int>(i), c_[i]);
        return p.str(var);
    }

   private:
    void trim() {
        while (!c_.empty() && dihedral::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<Rat> c_;  // c_[i] is the coefficient of x^i; empty means 0
};

inline QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// Cyclotomic polynomial Phi_n, by exact division of x^n - 1 by the proper
// cyclotomic divisors.
inline QPoly cyclotomic_poly(int n) {
    assert(n >= 1);
    QPoly num = QPoly::monomial(n) - QPoly::constant(Rat(1));
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = num.divmod(cyclotomic_poly(d));
        assert(r.is_zero());
        num = q;
    }
    return num;
}

// Resultant of two rational univariate polynomials (Euclidean recursion).
inline Rat resultant(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    if (g.degree() == 0) {
        Rat r(1);
        for (int i = 0; i < f.degree(); ++i) r *= g.lc();
        return r;
    }
    QPoly rem = f.divmod(g).second;
    Rat sign = (f.degree() * g.degree()) % 2 == 0 ? Rat(1) : Rat(-1);
    if (rem.is_zero()) return Rat(0);
    Rat lead(1);
    for (int i = 0; i < f.degree() - rem.degree(); ++i) lead *= g.lc();
    return sign * lead * resultant(g, rem);
}

// Monic minimal polynomial of 2cos(pi/m) over the rationals.  Obtained as the
// squarefree part of Res_x(Phi_{2m}(x), x^2 - d*x + 1): the resultant, as a
// polynomial in d, is that minimal polynomial squared.  The resultant in d is
// recovered by evaluation at enough sample points plus Lagrange interpolation.
class MinimalPolynomial {
   public:
    explicit MinimalPolynomial(int m) : m_(m) {
        assert(m >= 3);
        QPoly phi = cyclotomic_poly(2 * m);
        int dmax = phi.degree();  // resultant degree bound in d
        std::vector<Rat> xs, ys;
        for (int k = 0; k <= dmax; ++k) {
            Rat t(k);
            QPoly quad({Rat(1), -t, Rat(1)});  // x^2 - t x + 1
            xs.push_back(t);
            ys.push_back(resultant(phi, quad));
        }
        QPoly res = interpolate(xs, ys);
        QPoly gcd = poly_gcd(res, res.derivative());
        auto [sqfree, rem] = res.divmod(gcd);
        assert(rem.is_zero());
        poly_ = sqfree.monic();
        assert(poly_.degree() * 2 == dmax);
        for (const auto& c : poly_.coeffs()) assert(c.get_den() == 1);
        double root = 2.0 * std::cos(M_PI / m);
        assert(std::fabs(poly_.eval(root)) < 1e-12);
    }

    int m() const { return m_; }
    const QPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }

   private:
    static QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
        QPoly acc;
        for (size_t i = 0; i < xs.size(); ++i) {
            QPoly basis = QPoly::constant(Rat(1));
            Rat denom(1);
            for (size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                basis = basis * (QPoly::x() - QPoly::constant(xs[j]));
                denom *= xs[i] - xs[j];
            }
            acc = acc + basis.scaled(ys[i] / denom);
        }
        return acc;
    }

    int m_;
    QPoly poly_;
};

class CycloScalar;

// The real cyclotomic field K_m = Q[d]/(p_m(d)) with d = 2cos(pi/m).  Hosts
// the specialised quantum integers [n]; instances are interned per m and
// immutable, so concurrent readers need no coordination.
class NumberField {
   public:
    static const NumberField& get(int m);

    int m() const { return m_; }
    int degree() const { return minpoly_.degree(); }
    const QPoly& minpoly() const { return minpoly_.poly(); }

    CycloScalar zero() const;
    CycloScalar one() const;
    CycloScalar from_rat(const Rat& r) const;
    CycloScalar delta() const;  // the generator, equal to [2]

    // [n] from the Chebyshev recurrence [n+1] = d*[n] - [n-1]; cached up to
    // n = 2m + 2, computed on the fly beyond that.
    CycloScalar qnum(int n) const;

    double delta_approx() const { return 2.0 * std::cos(M_PI / m_); }

   private:
    explicit NumberField(int m);

    int m_;
    MinimalPolynomial minpoly_;
    std::vector<CycloScalar> qnums_;
};

// Exact element of K_m, stored as rational coordinates in the power basis
// 1, d, ..., d^{deg-1}.  Values are immutable after construction.
class CycloScalar {
   public:
    CycloScalar() : field_(nullptr) {}

    CycloScalar(const NumberField* field, std::vector<Rat> coords)
        : field_(field), coords_(std::move(coords)) {
        assert(field_ != nullptr);
        assert(static_cast<int>(coords_.size()) == field_->degree());
    }

    const NumberField* field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!dihedral::is_zero(c)) return false;
        return true;
    }

    bool is_one() const {
        if (coords_.empty() || coords_[0] != 1) return false;
        for (size_t i = 1; i < coords_.size(); ++i)
            if (!dihedral::is_zero(coords_[i])) return false;
        return true;
    }

    friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
        a.check(b);
        std::vector<Rat> c(a.coords_);
        for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
        return CycloScalar(a.field_, std::move(c));
    }

    friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
        a.check(b);
        std::vector<Rat> c(a.coords_);
        for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
        return CycloScalar(a.field_, std::move(c));
    }

    CycloScalar operator-() const {
        std::vector<Rat> c(coords_);
        for (auto& x : c) x = -x;
        return CycloScalar(field_, std::move(c));
    }

    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
        a.check(b);
        QPoly prod = a.as_poly() * b.as_poly();
        return CycloScalar(a.field_, reduce(a.field_, prod));
    }

    CycloScalar scaled(const Rat& r) const {
        std::vector<Rat> c(coords_);
        for (auto& x : c) x *= r;
        return CycloScalar(field_, std::move(c));
    }

    // Multiplicative inverse via the extended Euclidean algorithm against the
    // minimal polynomial.
    CycloScalar inverse() const {
        if (is_zero()) throw ZeroInversion("CycloScalar: inverse of zero");
        QPoly r0 = field_->minpoly(), r1 = as_poly();
        QPoly t0, t1 = QPoly::constant(Rat(1));
        while (!r1.is_zero()) {
            auto [q, r2] = r0.divmod(r1);
            QPoly t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        assert(r0.degree() == 0);  // minpoly is irreducible, gcd is a unit
        QPoly inv = t0.scaled(Rat(1) / r0.lc());
        CycloScalar result(field_, reduce(field_, inv));
        assert((*this * result).is_one());
        return result;
    }

    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
        return a * b.inverse();
    }

    CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
    CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
    CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
        a.check(b);
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    friend bool operator<(const CycloScalar& a, const CycloScalar& b) {
        a.check(b);
        return a.coords_ < b.coords_;
    }

    double approx() const { return as_poly().eval(field_->delta_approx()); }

    std::string str() const { return as_poly().str("d"); }

   private:
    QPoly as_poly() const { return QPoly(coords_); }

    static std::vector<Rat> reduce(const NumberField* field, const QPoly& p) {
        QPoly r = p.divmod(field->minpoly()).second;
        std::vector<Rat> c(field->degree(), Rat(0));
        for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
        return c;
    }

    void check(const CycloScalar& o) const {
        assert(field_ != nullptr && field_ == o.field_ && "mixing scalars of different fields");
        (void)o;
    }

    const NumberField* field_;
    std::vector<Rat> coords_;
};

inline NumberField::NumberField(int m) : m_(m), minpoly_(m) {
    qnums_.reserve(2 * m + 3);
    qnums_.push_back(zero());  // [0]
    qnums_.push_back(one());   // [1]
    for (int n = 2; n <= 2 * m + 2; ++n)
        qnums_.push_back(delta() * qnums_[n - 1] - qnums_[n - 2]);
}

inline const NumberField& NumberField::get(int m) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<NumberField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, std::unique_ptr<NumberField>(new NumberField(m))).first;
    return *it->second;
}

inline CycloScalar NumberField::zero() const {
    return CycloScalar(this, std::vector<Rat>(degree(), Rat(0)));
}

inline CycloScalar NumberField::one() const { return from_rat(Rat(1)); }

inline CycloScalar NumberField::from_rat(const Rat& r) const {
    std::vector<Rat> c(degree(), Rat(0));
    c[0] = r;
    return CycloScalar(this, std::move(c));
}

inline CycloScalar NumberField::delta() const {
    std::vector<Rat> c(degree(), Rat(0));
    if (degree() >= 2) c[1] = Rat(1);
    else c[0] = minpoly().coeff(0) * Rat(-1);  // degree-1 field: d is rational
    return CycloScalar(this, std::move(c));
}

inline CycloScalar NumberField::qnum(int n) const {
    assert(n >= 0);
    if (n < static_cast<int>(qnums_.size())) return qnums_[n];
    CycloScalar prev = qnums_[qnums_.size() - 2], cur = qnums_.back();
    for (int k = static_cast<int>(qnums_.size()) - 1; k < n; ++k) {
        CycloScalar next = delta() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Specialisation q -> zeta (a primitive 2m-th root of unity) of a Laurent
// polynomial that is symmetric under q <-> q^{-1}: peel off quantum-integer
// components [n]_q and map each to [n] in K_m.
inline CycloScalar specialize(const LaurentPoly& p, const NumberField& field) {
    LaurentPoly rest = p;
    CycloScalar acc = field.zero();
    while (!rest.is_zero()) {
        int n = rest.max_degree();
        if (n < 0 || rest.coeff(n) != rest.coeff(-n))
            throw std::invalid_argument("specialize: polynomial is not symmetric in q <-> 1/q");
        Rat c = rest.coeff(n);
        rest -= qnum(n + 1).scaled(c);
        acc += field.qnum(n + 1).scaled(c);
    }
    return acc;
}

inline CycloScalar specialize(const LaurentPoly& p, int m) {
    return specialize(p, NumberField::get(m));
}

}  // namespace dihedral

#endif
