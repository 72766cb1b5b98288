#ifndef DIHEDRAL_PATHALG_HPP
#define DIHEDRAL_PATHALG_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <vector>

#include "dihedral/errors.hpp"
#include "dihedral/laurent.hpp"
#include "dihedral/linalg.hpp"
#include "dihedral/quiver.hpp"

namespace dihedral {

// Graded quotient of the path algebra of Q_m by a homogeneous degree-2
// relation set, built degree by degree.  For every (source, target, degree)
// it keeps a deterministic normal-form basis: the degree-d component is
// (arrows tensor degree d-1) modulo relations applied at the top two steps,
// row-reduced under the lexicographic path order.  Each basis vector is
// labelled by its representative path.
class PathAlgebra {
   public:
    struct Origin {
        Arrow arrow;  // last arrow of the representative coordinate
        int prev;     // basis index in the block one degree down
    };

    struct Block {
        int dim = 0;
        std::vector<std::vector<Vertex>> labels;   // representative paths
        std::vector<Origin> origins;               // defining coordinate per basis vector
        std::map<Arrow, CycMatrix> left_mult;      // arrow action from degree-1 blocks
    };

    PathAlgebra(const DihedralGroup& grp, const NumberField& field,
                std::vector<Relation> relations, int max_degree)
        : grp_(grp), field_(&field), quiver_(grp), relations_(std::move(relations)),
          max_degree_(max_degree) {
        build();
    }

    static PathAlgebra standard(const DihedralGroup& grp, const NumberField& field) {
        return PathAlgebra(grp, field, build_relations(grp, field), 2 * grp.m() + 1);
    }

    const DihedralGroup& group() const { return grp_; }
    const NumberField& field() const { return *field_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int top_degree() const { return top_degree_; }

    int dim(const Vertex& src, const Vertex& dst, int deg) const {
        const Block* b = find(src, dst, deg);
        return b ? b->dim : 0;
    }

    const Block* find(const Vertex& src, const Vertex& dst, int deg) const {
        auto it = blocks_.find({src, dst, deg});
        return it == blocks_.end() ? nullptr : &it->second;
    }

    // Left multiplication by an arrow a: block (src -> a.first, deg-1) to
    // block (src -> a.second, deg).  Returns a zero map when either block is
    // trivial.
    CycMatrix left_mult(const Vertex& src, const Arrow& a, int deg) const {
        const Block* dstb = find(src, a.second, deg);
        int prev_dim = dim(src, a.first, deg - 1);
        if (dstb) {
            auto it = dstb->left_mult.find(a);
            if (it != dstb->left_mult.end()) return it->second;
        }
        return CycMatrix(field_, dstb ? dstb->dim : 0, prev_dim);
    }

    LaurentPoly graded_dim(const Vertex& src, const Vertex& dst) const {
        LaurentPoly p;
        for (int d = 0; d <= top_degree_; ++d) {
            int k = dim(src, dst, d);
            if (k) p += LaurentPoly::monomial(d, Rat(k));
        }
        return p;
    }

    int total_dim() const {
        int t = 0;
        for (const auto& [key, b] : blocks_) t += b.dim;
        return t;
    }

    // Normal form of a path given as its vertex sequence; the coordinates
    // refer to the basis of the block (front, back, length).
    std::vector<CycloScalar> normal_form(const std::vector<Vertex>& path) const {
        assert(!path.empty());
        std::vector<CycloScalar> vec{field_->one()};
        for (size_t k = 1; k < path.size(); ++k) {
            assert(quiver_.has_arrow(path[k - 1], path[k]) && "not a path in the quiver");
            CycMatrix mat = left_mult(path.front(), {path[k - 1], path[k]}, static_cast<int>(k));
            vec = mat.apply(vec);
        }
        return vec;
    }

    // Normal form of a linear combination of equal-length paths sharing
    // source and target.
    std::vector<CycloScalar> normal_form(
        const std::vector<std::pair<std::vector<Vertex>, CycloScalar>>& combo) const {
        assert(!combo.empty());
        const auto& first = combo.front().first;
        std::vector<CycloScalar> acc(
            dim(first.front(), first.back(), static_cast<int>(first.size()) - 1),
            field_->zero());
        for (const auto& [path, coeff] : combo) {
            assert(path.front() == first.front() && path.back() == first.back());
            assert(path.size() == first.size());
            std::vector<CycloScalar> nf = normal_form(path);
            for (size_t i = 0; i < nf.size(); ++i) acc[i] += nf[i] * coeff;
        }
        return acc;
    }

   private:
    struct Key {
        Vertex src, dst;
        int deg;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.src != b.src) return a.src < b.src;
            if (a.dst != b.dst) return a.dst < b.dst;
            return a.deg < b.deg;
        }
    };

    void build() {
        auto verts = quiver_.vertices();
        for (const auto& x : verts) {
            Block b;
            b.dim = 1;
            b.labels = {{x}};
            blocks_[{x, x, 0}] = std::move(b);
        }
        int last_nonzero = 0;
        for (int d = 1; d <= max_degree_; ++d) {
            bool any = false;
            for (const auto& x : verts)
                for (const auto& y : verts)
                    if (build_block(x, y, d)) any = true;
            if (any) last_nonzero = d;
        }
        if (last_nonzero >= max_degree_)
            throw NonTermination("quotient still nonzero at degree " +
                                 std::to_string(max_degree_) + "; relation set is broken");
        top_degree_ = last_nonzero;
    }

    // Builds block (x, y, d); returns true if it is nonzero.
    bool build_block(const Vertex& x, const Vertex& y, int d) {
        struct Coord {
            std::vector<Vertex> label;
            Arrow arrow;
            int prev;
        };
        std::vector<Coord> coords;
        for (const auto& a : quiver_.arrows_into(y)) {
            const Block* prev = find(x, a.first, d - 1);
            if (!prev) continue;
            for (int j = 0; j < prev->dim; ++j) {
                std::vector<Vertex> label = prev->labels[j];
                label.push_back(y);
                coords.push_back({std::move(label), a, j});
            }
        }
        if (coords.empty()) return false;
        std::sort(coords.begin(), coords.end(),
                  [](const Coord& a, const Coord& b) { return a.label < b.label; });
        std::map<std::pair<Arrow, int>, int> coord_index;
        for (size_t i = 0; i < coords.size(); ++i)
            coord_index[{coords[i].arrow, coords[i].prev}] = static_cast<int>(i);
        int n = static_cast<int>(coords.size());

        // relation rows: relations ending at y, applied on top of every basis
        // vector two degrees down
        std::vector<std::vector<CycloScalar>> rows;
        if (d >= 2) {
            for (const auto& rel : relations_) {
                if (rel.dst != y) continue;
                const Block* base = find(x, rel.src, d - 2);
                if (!base) continue;
                for (int j0 = 0; j0 < base->dim; ++j0) {
                    std::vector<CycloScalar> row(n, field_->zero());
                    for (const auto& [mid, coeff] : rel.terms) {
                        CycMatrix step = left_mult(x, {rel.src, mid}, d - 1);
                        for (int i = 0; i < step.rows(); ++i) {
                            if (step.at(i, j0).is_zero()) continue;
                            auto it = coord_index.find({{mid, y}, i});
                            assert(it != coord_index.end());
                            row[it->second] += coeff * step.at(i, j0);
                        }
                    }
                    rows.push_back(std::move(row));
                }
            }
        }

        CycMatrix relmat(field_, static_cast<int>(rows.size()), n);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n; ++j) relmat.at(static_cast<int>(i), j) = rows[i][j];
        std::vector<int> pivots = relmat.rref();
        std::vector<bool> is_pivot(n, false);
        for (int p : pivots) is_pivot[p] = true;

        Block blk;
        std::vector<int> basis_pos(n, -1);
        for (int c = 0; c < n; ++c) {
            if (is_pivot[c]) continue;
            basis_pos[c] = blk.dim++;
            blk.labels.push_back(coords[c].label);
            blk.origins.push_back({coords[c].arrow, coords[c].prev});
        }
        if (blk.dim == 0) return false;

        // reduction of each raw coordinate to the basis
        std::vector<std::vector<CycloScalar>> red(n);
        {
            int prow = 0;
            std::vector<int> pivot_row(n, -1);
            for (int p : pivots) pivot_row[p] = prow++;
            for (int c = 0; c < n; ++c) {
                std::vector<CycloScalar> v(blk.dim, field_->zero());
                if (!is_pivot[c]) {
                    v[basis_pos[c]] = field_->one();
                } else {
                    int r = pivot_row[c];
                    for (int j = 0; j < n; ++j) {
                        if (is_pivot[j] || relmat.at(r, j).is_zero()) continue;
                        v[basis_pos[j]] = -relmat.at(r, j);
                    }
                }
                red[c] = std::move(v);
            }
        }

        for (const auto& a : quiver_.arrows_into(y)) {
            const Block* prev = find(x, a.first, d - 1);
            if (!prev) continue;
            CycMatrix mat(field_, blk.dim, prev->dim);
            for (int j = 0; j < prev->dim; ++j) {
                int c = coord_index.at({a, j});
                mat.set_column(j, red[c]);
            }
            blk.left_mult.emplace(a, std::move(mat));
        }
        blocks_[{x, y, d}] = std::move(blk);
        return true;
    }

    DihedralGroup grp_;
    const NumberField* field_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    int max_degree_;
    int top_degree_ = 0;
    std::map<Key, Block> blocks_;
};

}  // namespace dihedral

#endif
