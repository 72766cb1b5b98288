#ifndef DIHEDRAL_LINALG_HPP
#define DIHEDRAL_LINALG_HPP

#include <cassert>
#include <vector>

#include "dihedral/cyclotomic.hpp"

namespace dihedral {

// Dense matrix over K_m.  Elimination uses the first nonzero entry in column
// order as pivot, so all derived bases are deterministic.
class CycMatrix {
   public:
    CycMatrix(const NumberField* field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field->zero()) {}

    const NumberField* field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CycloScalar& at(int i, int j) {
        assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }
    const CycloScalar& at(int i, int j) const {
        assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    static CycMatrix identity(const NumberField* field, int n) {
        CycMatrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        assert(a.cols_ == b.rows_);
        CycMatrix r(a.field_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

    std::vector<CycloScalar> column(int j) const {
        std::vector<CycloScalar> c;
        c.reserve(rows_);
        for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    void set_column(int j, const std::vector<CycloScalar>& c) {
        assert(static_cast<int>(c.size()) == rows_);
        for (int i = 0; i < rows_; ++i) at(i, j) = c[i];
    }

    std::vector<CycloScalar> apply(const std::vector<CycloScalar>& v) const {
        assert(static_cast<int>(v.size()) == cols_);
        std::vector<CycloScalar> r(rows_, field_->zero());
        for (int j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (int i = 0; i < rows_; ++i) {
                if (at(i, j).is_zero()) continue;
                r[i] += at(i, j) * v[j];
            }
        }
        return r;
    }

    CycMatrix hconcat(const CycMatrix& o) const {
        assert(rows_ == o.rows_);
        CycMatrix r(field_, rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (!at(i, col).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
            CycloScalar inv = at(row, col).inverse();
            for (int j = col; j < cols_; ++j) at(row, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                CycloScalar f = at(i, col);
                for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        CycMatrix copy = *this;
        return static_cast<int>(copy.rref().size());
    }

    // Basis of the nullspace, one column per free variable, in column order.
    CycMatrix kernel() const {
        CycMatrix red = *this;
        std::vector<int> pivots = red.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<int> free_cols;
        for (int c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        CycMatrix ker(field_, cols_, static_cast<int>(free_cols.size()));
        for (size_t k = 0; k < free_cols.size(); ++k) {
            int fc = free_cols[k];
            ker.at(fc, static_cast<int>(k)) = field_->one();
            for (size_t r = 0; r < pivots.size(); ++r)
                ker.at(pivots[r], static_cast<int>(k)) = -red.at(static_cast<int>(r), fc);
        }
        return ker;
    }

    // Solve A X = B exactly; asserts consistency (B must lie in the column
    // space).  Free variables are set to zero.
    CycMatrix solve(const CycMatrix& b) const {
        assert(rows_ == b.rows_);
        CycMatrix aug = hconcat(b);
        std::vector<int> pivots = aug.rref();
        CycMatrix x(field_, cols_, b.cols_);
        for (size_t r = 0; r < pivots.size(); ++r) {
            assert(pivots[r] < cols_ && "inconsistent linear system");
            for (int j = 0; j < b.cols_; ++j)
                x.at(pivots[r], j) = aug.at(static_cast<int>(r), cols_ + j);
        }
        return x;
    }

   private:
    const NumberField* field_;
    int rows_, cols_;
    std::vector<CycloScalar> a_;
};

// Row space accumulated in echelon form; supports rank queries and membership
// tests.  Rows are kept reduced, ordered by pivot position.
class RowSpace {
   public:
    RowSpace(const NumberField* field, int width) : field_(field), width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the stored rows; returns the residue.
    std::vector<CycloScalar> reduce(std::vector<CycloScalar> v) const {
        assert(static_cast<int>(v.size()) == width_);
        for (const auto& row : rows_) {
            int p = row.pivot;
            if (v[p].is_zero()) continue;
            CycloScalar f = v[p];
            for (int j = p; j < width_; ++j)
                if (!row.vec[j].is_zero()) v[j] -= f * row.vec[j];
        }
        return v;
    }

    bool contains(const std::vector<CycloScalar>& v) const {
        for (const auto& x : reduce(v))
            if (!x.is_zero()) return false;
        return true;
    }

    // Inserts v if independent; returns true when the rank grew.
    bool add(std::vector<CycloScalar> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < width_; ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p < 0) return false;
        CycloScalar inv = v[p].inverse();
        for (int j = p; j < width_; ++j) v[j] *= inv;
        // back-substitute into existing rows to stay fully reduced
        for (auto& row : rows_) {
            if (row.vec[p].is_zero()) continue;
            CycloScalar f = row.vec[p];
            for (int j = p; j < width_; ++j) row.vec[j] -= f * v[j];
        }
        Row r{p, std::move(v)};
        auto it = rows_.begin();
        while (it != rows_.end() && it->pivot < p) ++it;
        rows_.insert(it, std::move(r));
        return true;
    }

    bool contains_all(const RowSpace& o) const {
        for (const auto& row : o.rows_)
            if (!contains(row.vec)) return false;
        return true;
    }

    bool same_space(const RowSpace& o) const {
        return rank() == o.rank() && contains_all(o);
    }

    // The stored echelon rows, in pivot order.
    std::vector<std::vector<CycloScalar>> basis() const {
        std::vector<std::vector<CycloScalar>> b;
        b.reserve(rows_.size());
        for (const auto& row : rows_) b.push_back(row.vec);
        return b;
    }

   private:
    struct Row {
        int pivot;
        std::vector<CycloScalar> vec;
    };

    const NumberField* field_;
    int width_;
    std::vector<Row> rows_;
};

}  // namespace dihedral

#endif
