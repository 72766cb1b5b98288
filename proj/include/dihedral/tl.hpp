#ifndef DIHEDRAL_TL_HPP
#define DIHEDRAL_TL_HPP

#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <vector>

#include "dihedral/cyclotomic.hpp"
#include "dihedral/errors.hpp"

namespace dihedral {

// Planar flat tangle: a crossingless perfect matching on nb bottom and nt top
// boundary points.  Points are indexed 0..nb-1 (bottom, left to right) and
// nb..nb+nt-1 (top, left to right).  Construction validates planarity.
class TLDiagram {
   public:
    TLDiagram(int nb, int nt, std::vector<int> pairing)
        : nb_(nb), nt_(nt), pair_(std::move(pairing)) {
        if ((nb_ + nt_) % 2 != 0 || static_cast<int>(pair_.size()) != nb_ + nt_)
            throw std::invalid_argument("TLDiagram: bad boundary sizes");
        for (int p = 0; p < nb_ + nt_; ++p)
            if (pair_[p] == p || pair_[p] < 0 || pair_[p] >= nb_ + nt_ || pair_[pair_[p]] != p)
                throw std::invalid_argument("TLDiagram: pairing is not a fixed-point-free involution");
        if (!is_planar_pairing(nb_, nt_, pair_))
            throw std::invalid_argument("TLDiagram: matching has crossing strands");
    }

    // Crossing predicate: walk the boundary circle (bottom left to right,
    // then top right to left); chords must not interleave.
    static bool is_planar_pairing(int nb, int nt, const std::vector<int>& pairing) {
        auto circ = [&](int p) { return p < nb ? p : nb + (nt - 1 - (p - nb)); };
        std::vector<std::pair<int, int>> chords;
        for (int p = 0; p < nb + nt; ++p) {
            if (pairing[p] < p) continue;
            int a = circ(p), b = circ(pairing[p]);
            chords.emplace_back(std::min(a, b), std::max(a, b));
        }
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j) {
                auto [a, b] = chords[i];
                auto [c, d] = chords[j];
                bool c_inside = a < c && c < b;
                bool d_inside = a < d && d < b;
                if (c_inside != d_inside) return false;
            }
        return true;
    }

    static TLDiagram identity(int n) {
        std::vector<int> pr(2 * n);
        for (int i = 0; i < n; ++i) {
            pr[i] = n + i;
            pr[n + i] = i;
        }
        return TLDiagram(n, n, std::move(pr));
    }

    // Cap-cup generator e_i of TL_n (0-based position i joins strands i, i+1).
    static TLDiagram cap_cup(int n, int i) {
        assert(0 <= i && i + 1 < n);
        std::vector<int> pr(2 * n);
        for (int j = 0; j < n; ++j) {
            pr[j] = n + j;
            pr[n + j] = j;
        }
        pr[i] = i + 1;
        pr[i + 1] = i;
        pr[n + i] = n + i + 1;
        pr[n + i + 1] = n + i;
        return TLDiagram(n, n, std::move(pr));
    }

    // Morphism n -> n-2 joining bottom points pos, pos+1.
    static TLDiagram cap(int n, int pos) {
        assert(0 <= pos && pos + 1 < n);
        std::vector<int> pr(2 * n - 2, -1);
        auto top = [&](int j) { return n + j; };
        pr[pos] = pos + 1;
        pr[pos + 1] = pos;
        for (int j = 0; j < n - 2; ++j) {
            int src = j < pos ? j : j + 2;
            pr[src] = top(j);
            pr[top(j)] = src;
        }
        return TLDiagram(n, n - 2, std::move(pr));
    }

    // Morphism n -> n+2 creating a new pair at top positions pos, pos+1.
    static TLDiagram cup(int n, int pos) {
        assert(0 <= pos && pos + 1 < n + 2);
        std::vector<int> pr(2 * n + 2, -1);
        auto top = [&](int j) { return n + j; };
        pr[top(pos)] = top(pos + 1);
        pr[top(pos + 1)] = top(pos);
        for (int j = 0; j < n; ++j) {
            int dst = j < pos ? j : j + 2;
            pr[j] = top(dst);
            pr[top(dst)] = j;
        }
        return TLDiagram(n, n + 2, std::move(pr));
    }

    int bottom_points() const { return nb_; }
    int top_points() const { return nt_; }
    const std::vector<int>& pairing() const { return pair_; }

    bool is_identity() const {
        if (nb_ != nt_) return false;
        for (int i = 0; i < nb_; ++i)
            if (pair_[i] != nb_ + i) return false;
        return true;
    }

    // Adds one through strand on the right.
    TLDiagram tensor_strand() const {
        std::vector<int> pr(nb_ + nt_ + 2);
        auto remap = [&](int p) { return p < nb_ ? p : p + 1; };
        for (int p = 0; p < nb_ + nt_; ++p) pr[remap(p)] = remap(pair_[p]);
        pr[nb_] = nb_ + 1 + nt_;
        pr[nb_ + 1 + nt_] = nb_;
        return TLDiagram(nb_ + 1, nt_ + 1, std::move(pr));
    }

    // Mirror image, left <-> right.
    TLDiagram hflip() const {
        auto mir = [&](int p) { return p < nb_ ? nb_ - 1 - p : nb_ + (nt_ - 1 - (p - nb_)); };
        std::vector<int> pr(nb_ + nt_);
        for (int p = 0; p < nb_ + nt_; ++p) pr[mir(p)] = mir(pair_[p]);
        return TLDiagram(nb_, nt_, std::move(pr));
    }

    // Mirror image, top <-> bottom.
    TLDiagram vflip() const {
        auto fl = [&](int p) { return p < nb_ ? nt_ + p : p - nb_; };
        std::vector<int> pr(nb_ + nt_);
        for (int p = 0; p < nb_ + nt_; ++p) pr[fl(p)] = fl(pair_[p]);
        return TLDiagram(nt_, nb_, std::move(pr));
    }

    friend bool operator==(const TLDiagram& a, const TLDiagram& b) {
        return a.nb_ == b.nb_ && a.nt_ == b.nt_ && a.pair_ == b.pair_;
    }
    friend bool operator!=(const TLDiagram& a, const TLDiagram& b) { return !(a == b); }
    friend bool operator<(const TLDiagram& a, const TLDiagram& b) {
        return std::tie(a.nb_, a.nt_, a.pair_) < std::tie(b.nb_, b.nt_, b.pair_);
    }

    std::string str() const {
        std::ostringstream os;
        auto name = [&](int p) {
            return (p < nb_ ? "b" + std::to_string(p + 1) : "t" + std::to_string(p - nb_ + 1));
        };
        os << "{";
        bool first = true;
        for (int p = 0; p < nb_ + nt_; ++p) {
            if (pair_[p] < p) continue;
            if (!first) os << " ";
            os << name(p) << "-" << name(pair_[p]);
            first = false;
        }
        os << "}";
        return os.str();
    }

   private:
    int nb_, nt_;
    std::vector<int> pair_;
};

// All crossingless matchings between nb bottom and nt top points, enumerated
// by splitting the boundary circle into independent arcs.
inline std::vector<TLDiagram> all_diagrams(int nb, int nt) {
    int n = nb + nt;
    std::vector<TLDiagram> out;
    if (n % 2 != 0) return out;
    if (n == 0) {
        out.emplace_back(0, 0, std::vector<int>{});
        return out;
    }
    auto circ_to_point = [&](int c) { return c < nb ? c : nb + (nt - 1 - (c - nb)); };
    std::vector<int> circ_pair(n, -1);
    std::function<void(std::vector<std::vector<int>>)> rec =
        [&](std::vector<std::vector<int>> segs) {
            while (!segs.empty() && segs.back().empty()) segs.pop_back();
            if (segs.empty()) {
                std::vector<int> pairing(n);
                for (int c = 0; c < n; ++c)
                    pairing[circ_to_point(c)] = circ_to_point(circ_pair[c]);
                out.emplace_back(nb, nt, std::move(pairing));
                return;
            }
            std::vector<int> seg = std::move(segs.back());
            segs.pop_back();
            int first = seg.front();
            for (size_t k = 1; k < seg.size(); k += 2) {
                circ_pair[first] = seg[k];
                circ_pair[seg[k]] = first;
                auto next = segs;
                next.emplace_back(seg.begin() + 1, seg.begin() + k);
                next.emplace_back(seg.begin() + k + 1, seg.end());
                rec(std::move(next));
            }
        };
    std::vector<int> all(n);
    for (int c = 0; c < n; ++c) all[c] = c;
    rec({all});
    return out;
}

// K_m-linear combination of flat tangles with fixed boundary sizes.
class TLElement {
   public:
    TLElement(const NumberField* field, int nb, int nt)
        : field_(field), nb_(nb), nt_(nt) {}

    const NumberField* field() const { return field_; }
    int bottom_points() const { return nb_; }
    int top_points() const { return nt_; }
    const std::map<TLDiagram, CycloScalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    void add(const TLDiagram& d, const CycloScalar& c) {
        assert(d.bottom_points() == nb_ && d.top_points() == nt_);
        if (c.is_zero()) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CycloScalar coefficient(const TLDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? field_->zero() : it->second;
    }

    TLElement& operator+=(const TLElement& o) {
        assert(nb_ == o.nb_ && nt_ == o.nt_);
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }

    TLElement operator-() const {
        TLElement r(field_, nb_, nt_);
        for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
        return r;
    }
    friend TLElement operator-(TLElement a, const TLElement& b) { return a += -b; }

    TLElement scaled(const CycloScalar& c) const {
        TLElement r(field_, nb_, nt_);
        if (c.is_zero()) return r;
        for (const auto& [d, x] : terms_) r.terms_.emplace(d, x * c);
        return r;
    }

    TLElement tensor_strand() const {
        TLElement r(field_, nb_ + 1, nt_ + 1);
        for (const auto& [d, c] : terms_) r.terms_.emplace(d.tensor_strand(), c);
        return r;
    }

    TLElement hflip() const {
        TLElement r(field_, nb_, nt_);
        for (const auto& [d, c] : terms_) r.add(d.hflip(), c);
        return r;
    }

    TLElement vflip() const {
        TLElement r(field_, nt_, nb_);
        for (const auto& [d, c] : terms_) r.add(d.vflip(), c);
        return r;
    }

    friend bool operator==(const TLElement& a, const TLElement& b) {
        return a.nb_ == b.nb_ && a.nt_ == b.nt_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TLElement& a, const TLElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")" << d.str();
            first = false;
        }
        return os.str();
    }

   private:
    const NumberField* field_;
    int nb_, nt_;
    std::map<TLDiagram, CycloScalar> terms_;
};

// The Temperley-Lieb calculus over K_m.  Closed loops formed under
// composition evaluate to circle_sign * [2]; the default sign is -1.
class TLCategory {
   public:
    explicit TLCategory(const NumberField& field, int circle_sign = -1)
        : field_(&field), circle_sign_(circle_sign) {
        assert(circle_sign == 1 || circle_sign == -1);
    }

    const NumberField& field() const { return *field_; }
    int circle_sign() const { return circle_sign_; }

    CycloScalar circle_value() const {
        CycloScalar d = field_->qnum(2);
        return circle_sign_ < 0 ? -d : d;
    }

    TLElement zero(int nb, int nt) const { return TLElement(field_, nb, nt); }

    TLElement from_diagram(const TLDiagram& d) const {
        TLElement r(field_, d.bottom_points(), d.top_points());
        r.add(d, field_->one());
        return r;
    }

    TLElement identity(int n) const { return from_diagram(TLDiagram::identity(n)); }

    // Glue bottom of `top` onto top of `bot`; each closed loop contributes a
    // factor circle_value().
    std::pair<TLDiagram, int> compose_diagrams(const TLDiagram& top,
                                               const TLDiagram& bot) const {
        if (top.bottom_points() != bot.top_points())
            throw StrandMismatch("TL composition: " + std::to_string(top.bottom_points()) +
                                 " vs " + std::to_string(bot.top_points()) + " strands");
        int nb = bot.bottom_points(), mid = bot.top_points(), nt = top.top_points();
        const auto& bp = bot.pairing();
        const auto& tp = top.pairing();
        // result boundary: bottom of bot (ids 0..nb-1), top of top (ids nb..nb+nt-1)
        std::vector<int> pr(nb + nt, -1);
        std::vector<bool> mid_seen(mid, false);
        auto walk = [&](int p, bool in_bot) {
            // follows strands from a boundary point to the opposite end
            while (true) {
                if (in_bot) {
                    int q = bp[p];
                    if (q < nb) return q;  // bottom boundary
                    mid_seen[q - nb] = true;
                    p = q - nb;  // continue from the top diagram's bottom point
                    in_bot = false;
                } else {
                    int q = tp[p];
                    if (q >= mid) return nb + (q - mid);  // top boundary
                    mid_seen[q] = true;
                    p = nb + q;  // continue from the bottom diagram's top point
                    in_bot = true;
                }
            }
        };
        for (int i = 0; i < nb; ++i) {
            if (pr[i] != -1) continue;
            int j = walk(i, true);
            pr[i] = j;
            pr[j] = i;
        }
        for (int j = 0; j < nt; ++j) {
            if (pr[nb + j] != -1) continue;
            int k = walk(mid + j, false);
            pr[nb + j] = k;
            pr[k] = nb + j;
        }
        // leftover glue points lie on closed loops alternating between halves
        int circles = 0;
        for (int k0 = 0; k0 < mid; ++k0) {
            if (mid_seen[k0]) continue;
            ++circles;
            int k = k0;
            while (!mid_seen[k]) {
                mid_seen[k] = true;
                int q = tp[k];
                assert(q < mid);
                mid_seen[q] = true;
                int r = bp[nb + q];
                assert(r >= nb);
                k = r - nb;
            }
        }
        return {TLDiagram(nb, nt, std::move(pr)), circles};
    }

    TLElement compose(const TLElement& top, const TLElement& bot) const {
        TLElement r(field_, bot.bottom_points(), top.top_points());
        CycloScalar circ = circle_value();
        for (const auto& [dt, ct] : top.terms())
            for (const auto& [db, cb] : bot.terms()) {
                auto [d, circles] = compose_diagrams(dt, db);
                CycloScalar c = ct * cb;
                for (int i = 0; i < circles; ++i) c *= circ;
                r.add(d, c);
            }
        return r;
    }

    // Algebra product in TL_n (stacking, second factor at the bottom).
    TLElement multiply(const TLElement& a, const TLElement& b) const { return compose(a, b); }

    // Jones-Wenzl projector in TL_n, memoized per (m, circle sign, n).  Needs
    // every [k] with 2 <= k <= n invertible, hence n <= m - 1.
    TLElement jones_wenzl(int n) const {
        if (n < 1 || n >= field_->m())
            throw OutOfRange("jones_wenzl: need 1 <= n <= m-1, got n=" + std::to_string(n) +
                             " with m=" + std::to_string(field_->m()));
        {
            std::lock_guard<std::mutex> lock(cache_mutex());
            auto it = cache().find({field_->m(), circle_sign_, n});
            if (it != cache().end()) return it->second;
        }
        TLElement jw = identity(1);
        for (int k = 1; k < n; ++k) {
            // JW_{k+1} = JW_k (x) 1 + sum_i ([i]/[k+1]) cup_i . cap_last . (JW_k (x) 1)
            TLElement base = jw.tensor_strand();
            TLElement next = base;
            CycloScalar inv = field_->qnum(k + 1).inverse();
            TLElement capped = compose(from_diagram(TLDiagram::cap(k + 1, k - 1)), base);
            for (int i = 1; i <= k; ++i) {
                TLElement cupped = compose(from_diagram(TLDiagram::cup(k - 1, i - 1)), capped);
                next += cupped.scaled(field_->qnum(i) * inv);
            }
            jw = next;
        }
        std::lock_guard<std::mutex> lock(cache_mutex());
        cache().emplace(std::make_tuple(field_->m(), circle_sign_, n), jw);
        return jw;
    }

    // True iff every single cap on top and every cup on bottom kills e.
    bool is_killed_by_caps(const TLElement& e) const {
        int n = e.top_points();
        for (int pos = 0; pos + 1 < n; ++pos)
            if (!compose(from_diagram(TLDiagram::cap(n, pos)), e).is_zero()) return false;
        int nb = e.bottom_points();
        for (int pos = 0; pos + 1 < nb; ++pos)
            if (!compose(e, from_diagram(TLDiagram::cup(nb - 2, pos))).is_zero()) return false;
        return true;
    }

   private:
    using CacheKey = std::tuple<int, int, int>;
    static std::map<CacheKey, TLElement>& cache() {
        static std::map<CacheKey, TLElement> c;
        return c;
    }
    static std::mutex& cache_mutex() {
        static std::mutex mu;
        return mu;
    }

    const NumberField* field_;
    int circle_sign_;
};

}  // namespace dihedral

#endif
