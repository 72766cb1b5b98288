#ifndef DIHEDRAL_QUIVER_HPP
#define DIHEDRAL_QUIVER_HPP

#include <cassert>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include "dihedral/coxeter.hpp"
#include "dihedral/cyclotomic.hpp"

namespace dihedral {

using Vertex = DihedralElement;
using Arrow = std::pair<Vertex, Vertex>;  // (source, target), lengths differ by 1

// The double Hasse quiver of I_2(m): vertices are the group elements, with an
// arrow in both directions between any two elements whose lengths differ by
// one.
class Quiver {
   public:
    explicit Quiver(const DihedralGroup& grp) : grp_(grp) {
        for (const auto& u : grp.elements())
            for (const auto& v : grp.elements())
                if (std::abs(u.length() - v.length()) == 1) arrows_.emplace_back(u, v);
    }

    const DihedralGroup& group() const { return grp_; }
    std::vector<Vertex> vertices() const { return grp_.elements(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::vector<Arrow> arrows_into(const Vertex& v) const {
        std::vector<Arrow> out;
        for (const auto& a : arrows_)
            if (a.second == v) out.push_back(a);
        return out;
    }

    bool has_arrow(const Vertex& u, const Vertex& v) const {
        return std::abs(u.length() - v.length()) == 1;
    }

   private:
    DihedralGroup grp_;
    std::vector<Arrow> arrows_;
};

// Homogeneous degree-2 relation: a K_m-combination of length-2 paths with a
// common source and target, keyed by the middle vertex.
struct Relation {
    Vertex src, dst;
    std::map<Vertex, CycloScalar> terms;

    // Scales so that the coefficient of the smallest middle vertex is 1.
    Relation normalized() const {
        Relation r = *this;
        for (const auto& [mid, c] : r.terms) {
            if (c.is_zero()) continue;
            CycloScalar inv = c.inverse();
            for (auto& [m2, c2] : r.terms) c2 *= inv;
            break;
        }
        for (auto it = r.terms.begin(); it != r.terms.end();)
            it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
        return r;
    }

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.src == b.src && a.dst == b.dst && a.terms == b.terms;
    }
    friend bool operator<(const Relation& a, const Relation& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.terms < b.terms;
    }

    std::string str(const DihedralGroup& W) const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [mid, c] : terms) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")(" << W.format(src) << "," << W.format(mid) << ","
               << W.format(dst) << ")";
            first = false;
        }
        return os.str();
    }
};

// The dihedral relation set of the quotient algebra on Q_m.  Instantiates the
// thirteen relation families for one colour, adds the colour swaps, and
// removes duplicates (families coincide at the boundary indices because
// [m] = 0 and both length-m words name the longest element).
inline std::vector<Relation> build_relations(const DihedralGroup& W, const NumberField& K) {
    int m = W.m();
    std::vector<Relation> out;
    std::vector<Relation> seen;
    auto push = [&](const Vertex& src, const Vertex& dst,
                    std::initializer_list<std::pair<Vertex, CycloScalar>> terms) {
        Relation r{src, dst, {}};
        for (const auto& [mid, c] : terms) {
            if (c.is_zero()) continue;
            auto it = r.terms.find(mid);
            if (it == r.terms.end())
                r.terms.emplace(mid, c);
            else
                it->second += c;
        }
        Relation norm = r.normalized();
        if (norm.terms.empty()) return;
        for (const auto& s : seen)
            if (s == norm) return;
        seen.push_back(norm);
        out.push_back(std::move(r));
    };

    for (Color c : {Color::S, Color::T}) {
        Color o = other(c);
        auto sw = [&](Color col, int len) { return W.word(col, len); };
        Vertex e = W.identity();
        CycloScalar one = K.one();

        // loops at e and the two null loops at the simple reflections
        push(e, e, {{sw(c, 1), one}});
        push(sw(c, 1), sw(c, 1), {{sw(c, 2), one}});
        // loop relations at s-coloured vertices of length 2..m-1
        for (int i = 2; i <= m - 1; ++i) {
            CycloScalar inv_i = K.qnum(i).inverse();
            CycloScalar lambda = K.qnum(i - 1) * inv_i;
            CycloScalar mu = K.qnum(i - 1) - K.qnum(i + 1);
            CycloScalar nu = K.qnum(i + 1) * inv_i;
            push(sw(c, i), sw(c, i), {{sw(c, i + 1), one}, {sw(c, i - 1), -lambda}});
            push(sw(c, i), sw(c, i),
                 {{sw(o, i + 1), one}, {sw(c, i - 1), -mu}, {sw(o, i - 1), nu}});
        }
        // the length-one loop through the opposite colour picks up -[2]
        push(sw(c, 1), sw(c, 1), {{sw(o, 2), one}, {e, K.qnum(2)}});
        // equal-length crossings between the two length-one vertices
        push(sw(c, 1), sw(o, 1), {{sw(c, 2), one}, {e, -one}});
        push(sw(c, 1), sw(o, 1), {{sw(o, 2), one}, {e, -one}});
        // equal-length crossings at length 2..m-1
        for (int i = 2; i <= m - 1; ++i) {
            CycloScalar alpha = K.qnum(i).inverse();
            push(sw(c, i), sw(o, i),
                 {{sw(c, i + 1), one}, {sw(c, i - 1), -alpha}, {sw(o, i - 1), -one}});
            push(sw(c, i), sw(o, i),
                 {{sw(o, i + 1), one}, {sw(c, i - 1), -one}, {sw(o, i - 1), -alpha}});
        }
        // two-step paths across consecutive levels agree
        for (int j = 0; j <= m - 2; ++j) {
            push(sw(c, j), sw(c, j + 2), {{sw(c, j + 1), one}, {sw(o, j + 1), -one}});
            push(sw(c, j), sw(o, j + 2), {{sw(c, j + 1), one}, {sw(o, j + 1), -one}});
            push(sw(c, j + 2), sw(c, j), {{sw(c, j + 1), one}, {sw(o, j + 1), -one}});
            push(sw(c, j + 2), sw(o, j), {{sw(c, j + 1), one}, {sw(o, j + 1), -one}});
        }
    }
    return out;
}

}  // namespace dihedral

#endif
