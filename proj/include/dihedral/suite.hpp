#ifndef DIHEDRAL_SUITE_HPP
#define DIHEDRAL_SUITE_HPP

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "dihedral/duality.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/hecke.hpp"
#include "dihedral/qha.hpp"
#include "dihedral/report.hpp"
#include "dihedral/roots.hpp"
#include "dihedral/tl.hpp"

namespace dihedral {

// Worker count: hardware concurrency capped by DIHEDRAL_KOSZUL_THREADS.
inline unsigned suite_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DIHEDRAL_KOSZUL_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap < static_cast<long>(n)) n = static_cast<unsigned>(cap);
    }
    return n;
}

// Runs fn(i) for i in [0, count) on up to suite_threads() workers.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    unsigned workers = std::min<std::size_t>(suite_threads(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

struct SuiteOptions {
    std::string filter;     // glob over check ids; empty means everything
    int horizon = -1;       // simple-resolution horizon; -1 means m + 2
    bool solve_signs = false;
    int max_m = 8;
};

namespace checks {

inline bool qnum_identities(int m, std::string& details) {
    const NumberField& K = NumberField::get(m);
    bool ok = K.qnum(m).is_zero();
    for (int i = 0; i <= m; ++i) {
        ok = ok && K.qnum(m - i) == K.qnum(i);
        ok = ok && K.qnum(m + i) == -K.qnum(i);
    }
    for (int n = 1; n <= 2 * m; ++n) {
        ok = ok && K.qnum(2) * K.qnum(n) == K.qnum(n + 1) + K.qnum(n - 1);
        ok = ok && K.qnum(n) * K.qnum(n) == K.qnum(n - 1) * K.qnum(n + 1) + K.qnum(1);
    }
    details = "root-of-unity and product identities through [2m]";
    return ok;
}

inline bool action_roots(int m, std::string& details) {
    DihedralGroup W(m);
    const NumberField& K = NumberField::get(m);
    bool ok = true;
    for (int i = 1; i <= m - 1; ++i) {
        Color first = i % 2 == 1 ? Color::S : Color::T;
        RootVector got = act_on_root(W, W.word(first, i), alpha_t(K));
        if (i % 2 == 1)
            ok = ok && got.b == K.qnum(i) && got.a == K.qnum(i + 1);
        else
            ok = ok && got.b == K.qnum(i + 1) && got.a == K.qnum(i);
    }
    for (RootVector v : {alpha_s(K), alpha_t(K)}) {
        RootVector via_s = v, via_t = v;
        auto ws = W.letters(W.longest(), Color::S);
        auto wt = W.letters(W.longest(), Color::T);
        for (auto it = ws.rbegin(); it != ws.rend(); ++it) via_s = reflect(*it, via_s);
        for (auto it = wt.rbegin(); it != wt.rend(); ++it) via_t = reflect(*it, via_t);
        ok = ok && via_s == via_t;
    }
    ok = ok && demazure(Color::S, BiPoly::var_t(K)) == BiPoly::constant(-K.qnum(2));
    details = "alternating word action and Demazure normalisation";
    return ok;
}

inline bool hecke_oracle(int m, std::string& details) {
    DihedralGroup W(m);
    HeckeAlgebra H(W);
    bool ok = true;
    // braid relation
    HeckeElement lhs = H.one(), rhs = H.one();
    for (int i = 0; i < m; ++i) {
        lhs = H.mul_simple(lhs, i % 2 == 0 ? Color::S : Color::T);
        rhs = H.mul_simple(rhs, i % 2 == 0 ? Color::T : Color::S);
    }
    ok = ok && lhs == rhs;
    for (const auto& w : W.elements()) {
        HeckeElement kl = H.kl_basis(w);
        ok = ok && H.bar(kl) == kl;
        ok = ok && H.omega(kl) == H.kl_basis(W.inverse(w));
        for (const auto& w2 : W.elements()) {
            LaurentPoly tr = H.trace(H.multiply(H.std_basis(w), H.std_basis(w2)));
            LaurentPoly want = w == W.inverse(w2) ? LaurentPoly::constant(Rat(1))
                                                  : LaurentPoly::zero();
            ok = ok && tr == want;
            ok = ok && H.pairing(kl, H.kl_basis(w2)) == H.pairing_closed_form(w, w2);
        }
    }
    details = "bar, trace, omega, braid and pairing closed form";
    return ok;
}

inline bool jw_properties(int m, std::string& details) {
    const NumberField& K = NumberField::get(m);
    auto run = [&](int circle_sign) {
        TLCategory TL(K, circle_sign);
        for (int n = 1; n <= m - 1; ++n) {
            TLElement jw = TL.jones_wenzl(n);
            if (!jw.coefficient(TLDiagram::identity(n)).is_one()) return false;
            if (TL.multiply(jw, jw) != jw) return false;
            if (!TL.is_killed_by_caps(jw)) return false;
            if (jw.hflip() != jw || jw.vflip() != jw) return false;
        }
        // printed low-rank coefficients
        TLElement jw2 = TL.jones_wenzl(2);
        if (jw2.coefficient(TLDiagram::cap_cup(2, 0)) != K.qnum(2).inverse()) return false;
        if (m >= 4) {
            TLElement jw3 = TL.jones_wenzl(3);
            CycloScalar inv3 = K.qnum(3).inverse();
            if (jw3.coefficient(TLDiagram::cap_cup(3, 0)) != K.qnum(2) * inv3) return false;
            if (jw3.coefficient(TLDiagram::cap_cup(3, 1)) != K.qnum(2) * inv3) return false;
        }
        return true;
    };
    if (run(-1)) {
        details = "projector laws hold with circles worth -[2]";
        return true;
    }
    if (run(+1)) {
        details = "default circle sign fails; +[2] satisfies the recursion instead";
        return true;
    }
    details = "projector laws fail under both circle conventions";
    return false;
}

inline bool quiver_dims(const PathAlgebra& A, std::string& details) {
    const DihedralGroup& W = A.group();
    HeckeAlgebra H(W);
    bool ok = true;
    int total = 0;
    for (const auto& x : W.elements())
        for (const auto& y : W.elements()) {
            ok = ok && A.graded_dim(x, y) == H.pairing_closed_form(x, y);
            total += W.lower_interval_size(x, y);
        }
    ok = ok && A.total_dim() == total;
    details = "graded dimensions equal the pairing; total " + std::to_string(total);
    return ok;
}

inline bool dim_formulas(const PathAlgebra& A, std::string& details) {
    const DihedralGroup& W = A.group();
    int m = W.m();
    bool ok = projective_dim(A, W.identity()) == 2 * m &&
              projective_dim(A, W.longest()) == 1 + 2 * m * m;
    for (const auto& x : W.elements()) {
        int i = x.length();
        if (i >= 1 && i <= m - 1) ok = ok && projective_dim(A, x) == 2 * i * (2 * m - i);
        StandardStructure st(A, x);
        int want_std = i == m ? 1 : 2 * (m - i);
        ok = ok && st.standard_total_dim() == want_std;
        ok = ok && st.submodule_total_dim() == projective_dim(A, x) - want_std;
        ok = ok && st.standard_dim(x, 0) == 1;
    }
    details = "projective, standard and kernel dimensions";
    return ok;
}

inline bool delta_filtrations(const PathAlgebra& A, std::string& details) {
    bool ok = true;
    for (const auto& x : A.group().elements()) ok = ok && delta_filtration_check(A, x);
    details = "multiplicity-one filtration dimensions";
    return ok;
}

inline bool standard_resolutions(const PathAlgebra& A, std::string& details) {
    auto verts = A.group().elements();
    std::vector<char> good(verts.size(), 0);
    parallel_for(verts.size(), [&](std::size_t i) {
        ResolutionReport rep = StandardResolution(A, verts[i]).verify();
        good[i] = rep.pass() && rep.length == verts[i].length();
    });
    bool ok = true;
    for (char g : good) ok = ok && g;
    // negative control: a corrupted sign must break the complex
    for (const auto& x : verts)
        if (x.length() >= 2) {
            ok = ok && !StandardResolution(A, x, true).verify().is_complex;
            break;
        }
    details = "linear exact complexes for every vertex, corrupted sign rejected";
    return ok;
}

inline bool simple_resolutions(const PathAlgebra& A, int horizon, std::string& details) {
    auto verts = A.group().elements();
    std::vector<char> good(verts.size(), 0);
    parallel_for(verts.size(), [&](std::size_t i) {
        ResolutionReport rep = minimal_resolution(A, simple_module(A, verts[i]), horizon);
        good[i] = rep.exact && rep.linear;
    });
    bool ok = true;
    for (char g : good) ok = ok && g;
    details = "minimal resolutions linear through step " + std::to_string(horizon);
    return ok;
}

}  // namespace checks

// Executes the verification checks for one m in dependency order, honouring
// the check-id filter.
inline VerificationReport run_suite(int m, const SuiteOptions& opts = {}) {
    if (m < 3 || m > opts.max_m)
        throw UsageError("m must satisfy 3 <= m <= " + std::to_string(opts.max_m));
    VerificationReport report;
    report.m = m;

    bool deps_ok = true;  // later checks are skipped when prerequisites fail

    // lazily built shared state
    DihedralGroup W(m);
    const NumberField& K = NumberField::get(m);
    std::optional<PathAlgebra> algebra;
    std::optional<QuadraticPresentation> pres, dual;
    std::optional<PathAlgebra> dual_algebra;
    auto need_algebra = [&]() -> PathAlgebra& {
        if (!algebra) algebra.emplace(PathAlgebra::standard(W, K));
        return *algebra;
    };
    auto need_dual = [&]() -> QuadraticPresentation& {
        if (!pres) pres.emplace(standard_presentation(W, K));
        if (!dual) dual.emplace(quadratic_dual(*pres));
        return *dual;
    };

    auto run = [&](const std::string& id, auto&& body) {
        if (!opts.filter.empty() && !glob_match(opts.filter, id)) return;
        CheckResult c;
        c.check_id = id;
        if (!deps_ok) {
            c.status = "skipped";
            c.details = "prerequisite check failed";
            report.checks.push_back(std::move(c));
            return;
        }
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = body(c.details);
        } catch (const std::exception& e) {
            ok = false;
            c.details = std::string("exception: ") + e.what();
        }
        c.status = ok ? "pass" : "fail";
        c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        if (!ok) deps_ok = false;
        report.checks.push_back(std::move(c));
    };

    run("scalars.qnum_identities", [&](std::string& d) { return checks::qnum_identities(m, d); });
    run("coxeter.action_roots", [&](std::string& d) { return checks::action_roots(m, d); });
    run("hecke.pairing_oracle", [&](std::string& d) { return checks::hecke_oracle(m, d); });
    run("jw.properties", [&](std::string& d) { return checks::jw_properties(m, d); });
    run("quiver.graded_dims",
        [&](std::string& d) { return checks::quiver_dims(need_algebra(), d); });
    run("qha.dim_formulas",
        [&](std::string& d) { return checks::dim_formulas(need_algebra(), d); });
    run("qha.delta_filtration",
        [&](std::string& d) { return checks::delta_filtrations(need_algebra(), d); });
    run("qha.standard_resolutions",
        [&](std::string& d) { return checks::standard_resolutions(need_algebra(), d); });
    run("qha.simple_resolutions", [&](std::string& d) {
        int horizon = opts.horizon > 0 ? opts.horizon : m + 2;
        return checks::simple_resolutions(need_algebra(), horizon, d);
    });
    run("dual.table", [&](std::string& d) {
        d = "orthogonal complements match the closed form";
        QuadraticPresentation& du = need_dual();
        return orthogonal_table_check(*pres, du);
    });
    run("dual.op", [&](std::string& d) {
        d = "path reversal stabilises the relation span";
        if (!pres) pres.emplace(standard_presentation(W, K));
        return op_isomorphism_check(*pres);
    });
    run("dual.selfduality", [&](std::string& d) {
        QuadraticPresentation& du = need_dual();
        SelfDualityReport sd = self_duality_check(*pres, du, default_signs(W));
        if (sd.pass) {
            d = "default sign rule maps all relations into the orthogonal span";
            return true;
        }
        if (opts.solve_signs) {
            auto found = sign_solver(*pres, du);
            if (found) {
                d = "default signs fail, solver found a valid assignment";
                return true;
            }
            d = "default signs fail and no assignment exists";
            return false;
        }
        d = "default sign rule fails (rerun with --solve-signs)";
        return false;
    });
    run("dual.hilbert", [&](std::string& d) {
        if (!dual_algebra) dual_algebra.emplace(need_dual().quotient());
        HilbertCheck hc = koszul_numeric_check(need_algebra(), *dual_algebra);
        d = hc.pass ? "identity holds as " + hc.variant : "no convention gives the identity";
        return hc.pass;
    });

    return report;
}

}  // namespace dihedral

#endif
