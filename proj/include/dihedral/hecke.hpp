#ifndef DIHEDRAL_HECKE_HPP
#define DIHEDRAL_HECKE_HPP

#include <cassert>
#include <map>
#include <sstream>

#include "dihedral/coxeter.hpp"
#include "dihedral/laurent.hpp"

namespace dihedral {

// Element of the dihedral Hecke algebra over Z[v, 1/v], written in the
// standard basis {H_w}.  Canonical: zero coefficients are never stored.
class HeckeElement {
   public:
    HeckeElement() : grp_(nullptr) {}
    explicit HeckeElement(const DihedralGroup* grp) : grp_(grp) {}

    const DihedralGroup* group() const { return grp_; }
    const std::map<DihedralElement, LaurentPoly>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    LaurentPoly coeff(const DihedralElement& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? LaurentPoly::zero() : it->second;
    }

    void add(const DihedralElement& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(w);
        if (it == coeffs_.end()) {
            coeffs_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        check(o);
        for (const auto& [w, c] : o.coeffs_) add(w, c);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        check(o);
        for (const auto& [w, c] : o.coeffs_) add(w, -c);
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

    HeckeElement scaled(const LaurentPoly& p) const {
        HeckeElement r(grp_);
        for (const auto& [w, c] : coeffs_) r.add(w, c * p);
        return r;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : coeffs_) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")H_" << grp_->format(w);
            first = false;
        }
        return os.str();
    }

    void check(const HeckeElement& o) const {
        assert(grp_ == o.grp_ && "mixing Hecke elements over different groups");
        (void)o;
    }

   private:
    const DihedralGroup* grp_;
    std::map<DihedralElement, LaurentPoly> coeffs_;
};

// The dihedral Hecke algebra with quadratic relation
// H_s^2 = 1 + (1/v - v) H_s and the braid relation of length m.
class HeckeAlgebra {
   public:
    explicit HeckeAlgebra(const DihedralGroup& grp) : grp_(&grp) {}

    const DihedralGroup& group() const { return *grp_; }

    HeckeElement zero() const { return HeckeElement(grp_); }

    HeckeElement std_basis(const DihedralElement& w) const {
        HeckeElement h(grp_);
        h.add(w, LaurentPoly::constant(Rat(1)));
        return h;
    }

    HeckeElement one() const { return std_basis(grp_->identity()); }

    // H_w * H_s: ascends to H_{ws} when ws is longer, otherwise picks up the
    // quadratic correction (1/v - v) H_w.
    HeckeElement mul_simple(const HeckeElement& a, Color c) const {
        HeckeElement r(grp_);
        for (const auto& [w, p] : a.coeffs()) {
            DihedralElement ws = grp_->mul_simple(w, c);
            r.add(ws, p);
            if (ws.length() < w.length())
                r.add(w, p * (LaurentPoly::monomial(-1) - LaurentPoly::monomial(1)));
        }
        return r;
    }

    HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const {
        a.check(b);
        HeckeElement r(grp_);
        for (const auto& [w, p] : b.coeffs()) {
            HeckeElement term = a.scaled(p);
            for (Color c : grp_->letters(w)) term = mul_simple(term, c);
            r += term;
        }
        return r;
    }

    // H_s is invertible with inverse H_s + (v - 1/v).
    HeckeElement inv_simple(Color c) const {
        HeckeElement r = std_basis(grp_->simple(c));
        r.add(grp_->identity(), LaurentPoly::monomial(1) - LaurentPoly::monomial(-1));
        return r;
    }

    // The duality involution: v -> 1/v, H_s -> H_s^{-1}, extended as a ring
    // homomorphism along a fixed reduced word of each basis element.
    HeckeElement bar(const HeckeElement& a) const {
        HeckeElement r(grp_);
        for (const auto& [w, p] : a.coeffs()) {
            HeckeElement term = one().scaled(p.mirrored());
            for (Color c : grp_->letters(w)) term = multiply(term, inv_simple(c));
            r += term;
        }
        return r;
    }

    // The Z[v,1/v]-linear anti-involution H_w -> H_{w^{-1}}.
    HeckeElement iota(const HeckeElement& a) const {
        HeckeElement r(grp_);
        for (const auto& [w, p] : a.coeffs()) r.add(grp_->inverse(w), p);
        return r;
    }

    // omega = bar composed with iota; a Z-linear anti-involution with
    // omega(v) = 1/v.
    HeckeElement omega(const HeckeElement& a) const { return bar(iota(a)); }

    // Kazhdan-Lusztig basis element; in the dihedral case it is the full
    // lower Bruhat interval with shifted powers of v.
    HeckeElement kl_basis(const DihedralElement& w) const {
        HeckeElement r(grp_);
        for (const auto& x : grp_->elements())
            if (grp_->bruhat_leq(x, w))
                r.add(x, LaurentPoly::monomial(w.length() - x.length()));
        return r;
    }

    // Standard trace: the coefficient of H_e.
    LaurentPoly trace(const HeckeElement& a) const { return a.coeff(grp_->identity()); }

    // Standard pairing (a, b) = trace(omega(a) * b).
    LaurentPoly pairing(const HeckeElement& a, const HeckeElement& b) const {
        return trace(multiply(omega(a), b));
    }

    // Closed form for the pairing of two KL basis elements:
    // sum over a <= x, y of v^{len(x)+len(y)-2len(a)}.
    LaurentPoly pairing_closed_form(const DihedralElement& x,
                                    const DihedralElement& y) const {
        LaurentPoly r;
        for (const auto& a : grp_->elements())
            if (grp_->bruhat_leq(a, x) && grp_->bruhat_leq(a, y))
                r += LaurentPoly::monomial(x.length() + y.length() - 2 * a.length());
        return r;
    }

   private:
    const DihedralGroup* grp_;
};

}  // namespace dihedral

#endif
