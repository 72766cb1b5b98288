#ifndef DIHEDRAL_DUALITY_HPP
#define DIHEDRAL_DUALITY_HPP

#include <functional>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dihedral/pathalg.hpp"

namespace dihedral {

// Unordered edge of the Hasse quiver; sign assignments live on these.
using Edge = std::pair<Vertex, Vertex>;  // normalised: first < second

inline Edge make_edge(const Vertex& u, const Vertex& v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Degree-2 path space between two fixed vertices, with its ordered basis of
// middle vertices.
struct PathBlock {
    Vertex src, dst;
    std::vector<Vertex> mids;
};

inline std::vector<PathBlock> path_blocks(const DihedralGroup& W) {
    std::vector<PathBlock> out;
    for (const auto& x : W.elements())
        for (const auto& y : W.elements()) {
            PathBlock b{x, y, {}};
            for (const auto& v : W.elements())
                if (std::abs(v.length() - x.length()) == 1 &&
                    std::abs(v.length() - y.length()) == 1)
                    b.mids.push_back(v);
            if (!b.mids.empty()) out.push_back(std::move(b));
        }
    return out;
}

inline int mid_index(const PathBlock& b, const Vertex& v) {
    for (size_t i = 0; i < b.mids.size(); ++i)
        if (b.mids[i] == v) return static_cast<int>(i);
    return -1;
}

// A quadratic presentation on the Hasse quiver: relation vectors grouped by
// (source, target) block.
class QuadraticPresentation {
   public:
    QuadraticPresentation(const DihedralGroup& W, const NumberField& K,
                          std::vector<Relation> relations)
        : grp_(W), field_(&K), relations_(std::move(relations)), blocks_(path_blocks(W)) {}

    const DihedralGroup& group() const { return grp_; }
    const NumberField& field() const { return *field_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const std::vector<PathBlock>& blocks() const { return blocks_; }

    const PathBlock* block(const Vertex& src, const Vertex& dst) const {
        for (const auto& b : blocks_)
            if (b.src == src && b.dst == dst) return &b;
        return nullptr;
    }

    // Span of the relations inside one block, as a row space over the
    // middle-vertex basis.
    RowSpace relation_span(const PathBlock& b) const {
        RowSpace span(field_, static_cast<int>(b.mids.size()));
        for (const auto& r : relations_) {
            if (r.src != b.src || r.dst != b.dst) continue;
            std::vector<CycloScalar> v(b.mids.size(), field_->zero());
            for (const auto& [mid, c] : r.terms) v[mid_index(b, mid)] = c;
            span.add(v);
        }
        return span;
    }

    PathAlgebra quotient() const {
        return PathAlgebra(grp_, *field_, relations_, 2 * grp_.m() + 1);
    }

   private:
    DihedralGroup grp_;
    const NumberField* field_;
    std::vector<Relation> relations_;
    std::vector<PathBlock> blocks_;
};

// Quadratic dual presentation: per block, the orthogonal complement of the
// relation span under the scalar product making length-2 paths orthonormal.
inline QuadraticPresentation quadratic_dual(const QuadraticPresentation& pres) {
    const NumberField& K = pres.field();
    std::vector<Relation> dual;
    for (const auto& b : pres.blocks()) {
        int n = static_cast<int>(b.mids.size());
        std::vector<const Relation*> rel_here;
        for (const auto& r : pres.relations())
            if (r.src == b.src && r.dst == b.dst) rel_here.push_back(&r);
        CycMatrix rows(&K, static_cast<int>(rel_here.size()), n);
        for (size_t i = 0; i < rel_here.size(); ++i)
            for (const auto& [mid, c] : rel_here[i]->terms)
                rows.at(static_cast<int>(i), mid_index(b, mid)) = c;
        CycMatrix ker = rows.kernel();
        for (int j = 0; j < ker.cols(); ++j) {
            Relation r{b.src, b.dst, {}};
            for (int i = 0; i < n; ++i)
                if (!ker.at(i, j).is_zero()) r.terms.emplace(b.mids[i], ker.at(i, j));
            dual.push_back(std::move(r));
        }
    }
    return QuadraticPresentation(pres.group(), K, std::move(dual));
}

inline QuadraticPresentation standard_presentation(const DihedralGroup& W,
                                                   const NumberField& K) {
    return QuadraticPresentation(W, K, build_relations(W, K));
}

// Hand-checked closed form of the orthogonal relations, block by block; the
// computed complement must span exactly these.
inline std::vector<Relation> closed_form_orthogonal(const DihedralGroup& W,
                                                    const NumberField& K,
                                                    const PathBlock& b) {
    int m = W.m();
    const Vertex &x = b.src, &y = b.dst;
    CycloScalar one = K.one();
    std::vector<Relation> out;
    auto rel = [&](std::initializer_list<std::pair<Vertex, CycloScalar>> terms) {
        Relation r{x, y, {}};
        for (const auto& [mid, c] : terms)
            if (!c.is_zero()) r.terms.emplace(mid, c);
        out.push_back(std::move(r));
    };
    if (x == y) {
        int i = x.length();
        if (i == 0) return out;  // the whole block is relations
        if (i == m) {
            rel({{W.word(Color::S, m - 1), one}});
            rel({{W.word(Color::T, m - 1), one}});
            return out;
        }
        Color c = x.first_color(), o = other(c);
        if (i == 1) {
            rel({{W.word(o, 2), K.qnum(2)}, {W.identity(), -one}});
        } else if (i == m - 1) {
            rel({{W.longest(), K.qnum(2)}, {W.word(c, m - 2), one}});
            rel({{W.word(o, m - 2), one}});
        } else {
            CycloScalar lam = K.qnum(i - 1) * K.qnum(i).inverse();
            CycloScalar mu = K.qnum(i - 1) - K.qnum(i + 1);
            CycloScalar nu = K.qnum(i + 1) * K.qnum(i).inverse();
            rel({{W.word(c, i + 1), lam}, {W.word(o, i + 1), mu}, {W.word(c, i - 1), one}});
            rel({{W.word(o, i + 1), nu}, {W.word(o, i - 1), -one}});
        }
    } else if (x.length() == y.length()) {
        int i = x.length();
        Color c = x.first_color(), o = other(c);
        if (i == 1) {
            rel({{W.word(c, 2), one}, {W.word(o, 2), one}, {W.identity(), one}});
        } else if (i == m - 1) {
            rel({{W.longest(), one}, {W.word(c, m - 2), one}});
            rel({{W.longest(), one}, {W.word(o, m - 2), one}});
        } else {
            CycloScalar alpha = K.qnum(i).inverse();
            rel({{W.word(c, i + 1), alpha}, {W.word(o, i + 1), one}, {W.word(c, i - 1), one}});
            rel({{W.word(c, i + 1), one}, {W.word(o, i + 1), alpha}, {W.word(o, i - 1), one}});
        }
    } else {
        // length difference two: complement of the difference is the sum
        assert(b.mids.size() == 2);
        rel({{b.mids[0], one}, {b.mids[1], one}});
    }
    return out;
}

// Row-for-row comparison of the computed complement against the closed form.
inline bool orthogonal_table_check(const QuadraticPresentation& pres,
                                   const QuadraticPresentation& dual) {
    const DihedralGroup& W = pres.group();
    const NumberField& K = pres.field();
    for (const auto& b : pres.blocks()) {
        RowSpace got = dual.relation_span(b);
        RowSpace want(&K, static_cast<int>(b.mids.size()));
        for (const auto& r : closed_form_orthogonal(W, K, b)) {
            std::vector<CycloScalar> v(b.mids.size(), K.zero());
            for (const auto& [mid, c] : r.terms) v[mid_index(b, mid)] = c;
            want.add(v);
        }
        if (!got.same_space(want)) return false;
        RowSpace rels = pres.relation_span(b);
        if (rels.rank() + got.rank() != static_cast<int>(b.mids.size())) return false;
    }
    return true;
}

// Path reversal maps the relation span into the reversed block's span; this
// exhibits the algebra as isomorphic to its opposite.
inline bool op_isomorphism_check(const QuadraticPresentation& pres) {
    for (const auto& r : pres.relations()) {
        const PathBlock* rev = pres.block(r.dst, r.src);
        if (!rev) return false;
        RowSpace span = pres.relation_span(*rev);
        std::vector<CycloScalar> v(rev->mids.size(), pres.field().zero());
        for (const auto& [mid, c] : r.terms) v[mid_index(*rev, mid)] = c;
        if (!span.contains(v)) return false;
    }
    return true;
}

// The duality permutation x -> x^{-1} w0 on vertices.
inline Vertex theta_vertex(const DihedralGroup& W, const Vertex& x) {
    return W.multiply(W.inverse(x), W.longest());
}

// Edge signs: every edge below a vertex of length i carries (-1)^{i-1} when
// that vertex starts with s and (-1)^i when it starts with t; both edges
// below the longest element carry (-1)^{m-1}.
class SignAssignment {
   public:
    int sign(const Vertex& u, const Vertex& v) const { return signs_.at(make_edge(u, v)); }

    void set(const Vertex& u, const Vertex& v, int s) { signs_[make_edge(u, v)] = s; }

    bool has(const Vertex& u, const Vertex& v) const {
        return signs_.count(make_edge(u, v)) > 0;
    }

    const std::map<Edge, int>& all() const { return signs_; }

   private:
    std::map<Edge, int> signs_;
};

inline SignAssignment default_signs(const DihedralGroup& W) {
    SignAssignment s;
    int m = W.m();
    for (const auto& u : W.elements())
        for (const auto& v : W.elements()) {
            if (v.length() != u.length() + 1) continue;
            int sign;
            if (v.length() == m)
                sign = (m - 1) % 2 == 0 ? 1 : -1;
            else if (v.first_color() == Color::S)
                sign = (v.length() - 1) % 2 == 0 ? 1 : -1;
            else
                sign = v.length() % 2 == 0 ? 1 : -1;
            s.set(u, v, sign);
        }
    return s;
}

struct SelfDualityReport {
    bool pass = true;
    // one line per relation: description and whether its image lies in the
    // orthogonal span of the image block
    std::vector<std::pair<std::string, bool>> per_relation;
};

// Maps every defining relation through the signed vertex map and tests
// membership in the orthogonal complement span of the image block.  Overall
// success exhibits the surjection onto the quadratic dual, an isomorphism by
// the dimension comparison.
// Precomputed relation spans of a presentation, one per block.
class BlockSpans {
   public:
    explicit BlockSpans(const QuadraticPresentation& pres) : pres_(&pres) {
        for (const auto& b : pres.blocks())
            spans_.emplace(std::make_pair(b.src, b.dst),
                           std::make_pair(&b, pres.relation_span(b)));
    }

    const PathBlock* block(const Vertex& src, const Vertex& dst) const {
        auto it = spans_.find({src, dst});
        return it == spans_.end() ? nullptr : it->second.first;
    }

    const RowSpace* span(const Vertex& src, const Vertex& dst) const {
        auto it = spans_.find({src, dst});
        return it == spans_.end() ? nullptr : &it->second.second;
    }

   private:
    const QuadraticPresentation* pres_;
    std::map<std::pair<Vertex, Vertex>, std::pair<const PathBlock*, RowSpace>> spans_;
};

inline SelfDualityReport self_duality_check(const QuadraticPresentation& pres,
                                            const QuadraticPresentation& dual,
                                            const SignAssignment& signs) {
    const DihedralGroup& W = pres.group();
    BlockSpans dual_spans(dual);
    SelfDualityReport rep;
    for (const auto& r : pres.relations()) {
        Vertex tx = theta_vertex(W, r.src), ty = theta_vertex(W, r.dst);
        const PathBlock* b = dual_spans.block(tx, ty);
        bool ok = b != nullptr;
        if (ok) {
            std::vector<CycloScalar> img(b->mids.size(), pres.field().zero());
            for (const auto& [mid, c] : r.terms) {
                Vertex tm = theta_vertex(W, mid);
                Rat s(signs.sign(r.src, mid) * signs.sign(mid, r.dst));
                img[mid_index(*b, tm)] += c.scaled(s);
            }
            ok = dual_spans.span(tx, ty)->contains(img);
        }
        rep.per_relation.emplace_back(r.str(W), ok);
        if (!ok) rep.pass = false;
    }
    return rep;
}

// Backtracking search for a working sign assignment; exhaustive on the edge
// set, pruning as soon as a fully-assigned relation fails.  Used as a
// fallback when the default rule is rejected.
inline std::optional<SignAssignment> sign_solver(const QuadraticPresentation& pres,
                                                 const QuadraticPresentation& dual) {
    const DihedralGroup& W = pres.group();
    std::vector<Edge> edges;
    for (const auto& u : W.elements())
        for (const auto& v : W.elements())
            if (v.length() == u.length() + 1) edges.push_back(make_edge(u, v));
    std::map<Edge, size_t> edge_index;
    for (size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = i;

    // for each relation, the set of edges it uses and the latest edge index
    struct RelInfo {
        const Relation* rel;
        size_t last_edge;
    };
    std::vector<RelInfo> rels;
    for (const auto& r : pres.relations()) {
        size_t last = 0;
        for (const auto& [mid, c] : r.terms) {
            last = std::max(last, edge_index.at(make_edge(r.src, mid)));
            last = std::max(last, edge_index.at(make_edge(mid, r.dst)));
        }
        rels.push_back({&r, last});
    }

    std::vector<int> assign(edges.size(), 0);
    BlockSpans dual_spans(dual);
    auto relation_ok = [&](const Relation& r) {
        Vertex tx = theta_vertex(W, r.src), ty = theta_vertex(W, r.dst);
        const PathBlock* b = dual_spans.block(tx, ty);
        if (!b) return false;
        std::vector<CycloScalar> img(b->mids.size(), pres.field().zero());
        for (const auto& [mid, c] : r.terms) {
            int s = assign[edge_index.at(make_edge(r.src, mid))] *
                    assign[edge_index.at(make_edge(mid, r.dst))];
            img[mid_index(*b, theta_vertex(W, mid))] += c.scaled(Rat(s));
        }
        return dual_spans.span(tx, ty)->contains(img);
    };

    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == edges.size()) return true;
        for (int s : {1, -1}) {
            assign[k] = s;
            bool ok = true;
            for (const auto& ri : rels)
                if (ri.last_edge == k && !relation_ok(*ri.rel)) {
                    ok = false;
                    break;
                }
            if (ok && rec(k + 1)) return true;
        }
        assign[k] = 0;
        return false;
    };
    if (!rec(0)) return std::nullopt;
    SignAssignment out;
    for (size_t i = 0; i < edges.size(); ++i) out.set(edges[i].first, edges[i].second, assign[i]);
    return out;
}

// Numerical Koszulity criterion: the vertex-indexed Hilbert matrix of the
// algebra against that of its quadratic dual evaluated at -t multiplies to
// the identity.  Tries the transpose variants and reports which one holds.
struct HilbertCheck {
    bool pass = false;
    std::string variant;  // which convention satisfied the identity
};

inline HilbertCheck koszul_numeric_check(const PathAlgebra& alg, const PathAlgebra& dual_alg) {
    const DihedralGroup& W = alg.group();
    auto verts = W.elements();
    int n = static_cast<int>(verts.size());
    auto hilbert = [&](const PathAlgebra& a, bool negate) {
        std::vector<std::vector<LaurentPoly>> h(n, std::vector<LaurentPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                LaurentPoly p = a.graded_dim(verts[i], verts[j]);
                if (negate) {
                    LaurentPoly q;
                    for (const auto& [e, c] : p.coeffs())
                        q += LaurentPoly::monomial(e, e % 2 == 0 ? c : -c);
                    p = q;
                }
                h[i][j] = p;
            }
        return h;
    };
    auto mul = [&](const std::vector<std::vector<LaurentPoly>>& a,
                   const std::vector<std::vector<LaurentPoly>>& b, bool transpose_b) {
        std::vector<std::vector<LaurentPoly>> c(n, std::vector<LaurentPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    c[i][j] += a[i][k] * (transpose_b ? b[j][k] : b[k][j]);
        return c;
    };
    auto is_identity = [&](const std::vector<std::vector<LaurentPoly>>& c) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                LaurentPoly want =
                    i == j ? LaurentPoly::constant(Rat(1)) : LaurentPoly::zero();
                if (c[i][j] != want) return false;
            }
        return true;
    };
    auto H = hilbert(alg, false);
    auto Hd = hilbert(dual_alg, true);
    HilbertCheck out;
    if (is_identity(mul(H, Hd, true))) {
        out.pass = true;
        out.variant = "H(t) * H_dual(-t)^T";
    } else if (is_identity(mul(H, Hd, false))) {
        out.pass = true;
        out.variant = "H(t) * H_dual(-t)";
    } else if (is_identity(mul(Hd, H, true))) {
        out.pass = true;
        out.variant = "H_dual(-t) * H(t)^T";
    }
    return out;
}

}  // namespace dihedral

#endif
