#ifndef DIHEDRAL_LAURENT_HPP
#define DIHEDRAL_LAURENT_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "dihedral/rational.hpp"

namespace dihedral {

// Laurent polynomial in one variable v with rational coefficients.
// Canonical form: no zero coefficients are stored, so equality is structural.
class LaurentPoly {
   public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }

    static LaurentPoly constant(const Rat& c) { return monomial(0, c); }

    static LaurentPoly monomial(int exp, const Rat& c = Rat(1)) {
        LaurentPoly p;
        if (!dihedral::is_zero(c)) p.coeffs_[exp] = c;
        return p;
    }

    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    Rat coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    int min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly r;
        if (dihedral::is_zero(c)) return r;
        for (const auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
        return r;
    }

    // Substitution v -> v^{-1}.
    LaurentPoly mirrored() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    bool is_symmetric() const { return *this == mirrored(); }

    Rat eval_at_one() const {
        Rat s(0);
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "v") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            Rat a = abs(c);
            if (e == 0 || a != 1) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

   private:
    void add_term(int exp, const Rat& c) {
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            if (!dihedral::is_zero(c)) coeffs_[exp] = c;
        } else {
            it->second += c;
            if (dihedral::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    std::map<int, Rat> coeffs_;
};

// Gauss quantum integer [n] = q^{-n+1} + q^{-n+3} + ... + q^{n-1}, with [0] = 0.
inline LaurentPoly qnum(int n) {
    LaurentPoly p;
    for (int j = 0; j < n; ++j) p += LaurentPoly::monomial(-n + 1 + 2 * j);
    return p;
}

}  // namespace dihedral

#endif
