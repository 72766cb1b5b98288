#ifndef DIHEDRAL_COXETER_HPP
#define DIHEDRAL_COXETER_HPP

#include <cassert>
#include <string>
#include <tuple>
#include <vector>

#include "dihedral/errors.hpp"

namespace dihedral {

enum class Color : int { S = 0, T = 1 };

inline Color other(Color c) { return c == Color::S ? Color::T : Color::S; }
inline char color_char(Color c) { return c == Color::S ? 's' : 't'; }

// Element of the dihedral group I_2(m), stored as (first letter, length) of
// its alternating reduced word.  Length 0 is the identity and length m the
// longest element; for those the colour is normalised away, matching the two
// coincident words for w0.
class DihedralElement {
   public:
    DihedralElement() : len_(0), col_(Color::S) {}

    static DihedralElement identity() { return DihedralElement(); }

    static DihedralElement word(Color first, int len, int m) {
        assert(len >= 0 && len <= m);
        DihedralElement w;
        w.len_ = len;
        w.col_ = (len == 0 || len == m) ? Color::S : first;
        return w;
    }

    static DihedralElement longest(int m) { return word(Color::S, m, m); }

    int length() const { return len_; }

    // First letter of the alternating word; only meaningful for 0 < len < m.
    Color first_color() const { return col_; }

    bool is_identity() const { return len_ == 0; }

    friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
        return a.len_ == b.len_ && a.col_ == b.col_;
    }
    friend bool operator!=(const DihedralElement& a, const DihedralElement& b) {
        return !(a == b);
    }
    friend bool operator<(const DihedralElement& a, const DihedralElement& b) {
        return std::tie(a.len_, a.col_) < std::tie(b.len_, b.col_);
    }

   private:
    int len_;
    Color col_;
};

// The group I_2(m) = <s, t | s^2 = t^2 = (st)^m = e> together with its Bruhat
// order.  Elements do not carry m themselves; mixing elements across contexts
// is a programming error guarded by assertions on word lengths.
class DihedralGroup {
   public:
    explicit DihedralGroup(int m) : m_(m) { assert(m >= 3); }

    int m() const { return m_; }

    DihedralElement identity() const { return DihedralElement::identity(); }
    DihedralElement longest() const { return DihedralElement::longest(m_); }
    DihedralElement simple(Color c) const { return DihedralElement::word(c, 1, m_); }
    DihedralElement word(Color first, int len) const {
        return DihedralElement::word(first, len, m_);
    }

    std::size_t size() const { return 2 * static_cast<std::size_t>(m_); }

    // All 2m elements, by length and then colour (s before t).
    std::vector<DihedralElement> elements() const {
        std::vector<DihedralElement> all;
        all.push_back(identity());
        for (int k = 1; k < m_; ++k) {
            all.push_back(word(Color::S, k));
            all.push_back(word(Color::T, k));
        }
        all.push_back(longest());
        return all;
    }

    // Letters of the canonical reduced word (for w0 the s-first word).
    std::vector<Color> letters(const DihedralElement& x) const {
        return letters(x, Color::S);
    }

    // Letters of a reduced word, using `pref` as the first letter when the
    // element is the longest one (which has both choices).
    std::vector<Color> letters(const DihedralElement& x, Color pref) const {
        assert(x.length() <= m_);
        Color first = x.first_color();
        if (x.length() == m_) first = pref;
        std::vector<Color> out;
        out.reserve(x.length());
        for (int i = 0; i < x.length(); ++i)
            out.push_back(i % 2 == 0 ? first : other(first));
        return out;
    }

    Color last_letter(const DihedralElement& x) const {
        assert(x.length() >= 1);
        Color first = x.first_color();
        return x.length() % 2 == 1 ? first : other(first);
    }

    // Right multiplication by a simple reflection.
    DihedralElement mul_simple(const DihedralElement& x, Color c) const {
        if (x.is_identity()) return simple(c);
        if (x.length() == m_) {
            // w0 has reduced words ending in either letter; it always shrinks.
            Color first = (m_ % 2 == 1) ? c : other(c);
            return word(first, m_ - 1);
        }
        if (last_letter(x) == c) {
            return word(x.first_color(), x.length() - 1);
        }
        return word(x.first_color(), x.length() + 1);
    }

    DihedralElement multiply(const DihedralElement& x, const DihedralElement& y) const {
        DihedralElement acc = x;
        for (Color c : letters(y)) acc = mul_simple(acc, c);
        return acc;
    }

    DihedralElement inverse(const DihedralElement& x) const {
        if (x.length() == 0 || x.length() == m_) return x;
        // Reversing an alternating word swaps the first letter iff the length
        // is even.
        Color first = x.length() % 2 == 1 ? x.first_color() : other(x.first_color());
        return word(first, x.length());
    }

    // Bruhat order: in a dihedral group every element is below every strictly
    // longer one, and distinct elements of equal length are incomparable.
    bool bruhat_leq(const DihedralElement& x, const DihedralElement& y) const {
        return x == y || x.length() < y.length();
    }

    // |{w : w <= x and w <= y}| in the Bruhat order.
    int lower_interval_size(const DihedralElement& x, const DihedralElement& y) const {
        // #{w <= x} is 2*length(x) except for the identity, where it is 1.
        auto count_leq = [](int k) { return k == 0 ? 1 : 2 * k; };
        if (x == y) return count_leq(x.length());
        if (x.length() == y.length()) return 2 * x.length() - 1;  // strictly below only
        return count_leq(std::min(x.length(), y.length()));
    }

    // Textual notation: "e", "s3" (= sts), "t2" (= ts), "w0".
    std::string format(const DihedralElement& x) const {
        if (x.is_identity()) return "e";
        if (x.length() == m_) return "w0";
        return std::string(1, color_char(x.first_color())) + std::to_string(x.length());
    }

    DihedralElement parse(const std::string& text) const {
        if (text == "e") return identity();
        if (text == "w0") return longest();
        if (text.size() >= 2 && (text[0] == 's' || text[0] == 't')) {
            int len = 0;
            try {
                len = std::stoi(text.substr(1));
            } catch (...) {
                throw UsageError("bad element '" + text + "'");
            }
            if (len < 1 || len > m_)
                throw UsageError("element length out of range in '" + text + "'");
            if (len == m_) return longest();
            return word(text[0] == 's' ? Color::S : Color::T, len);
        }
        throw UsageError("bad element '" + text + "' (expected e, w0, s<k> or t<k>)");
    }

   private:
    int m_;
};

}  // namespace dihedral

#endif
