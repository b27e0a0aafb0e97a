// Acceptance gate: nine machine-checked criteria covering the diagram, the
// path statistics, and every closed form, each with a pinned time budget.
// Prints one verdict line per criterion and exits 1 on any failure.
#include "hookpath/diagram.hpp"
#include "hookpath/eulerian.hpp"
#include "hookpath/fibonacci.hpp"
#include "hookpath/genfun.hpp"
#include "hookpath/paths.hpp"
#include "hookpath/stats.hpp"
#include "hookpath/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

using namespace hookpath;

#define EXPECT(cond, ...)                                      \
    do {                                                       \
        if (!(cond)) {                                         \
            std::printf("[FAIL] %s:%d ", __FILE__, __LINE__);  \
            std::printf(__VA_ARGS__);                          \
            std::printf("\n");                                 \
            ++bad;                                             \
        }                                                      \
    } while (0)

namespace {

struct FloorRef {
    int floor;
    bool odd;
    int s;
};

std::vector<FloorRef> class_floors(int k, int top) {
    std::vector<FloorRef> out;
    for (int f = 2 * k + 2; f <= top; ++f) {
        bool odd = f % 2 == 1;
        int s = odd ? (f + 1 - 2 * k) / 2 : (f - 2 * k) / 2;
        if (odd && s < 2) continue;
        out.push_back({f, odd, s});
    }
    return out;
}

// 1: on the first staged floor every path has at most one descent and each
// vertex's descent total is (p-1)/2.
long long criterion1() {
    long long bad = 0;
    for (int p : {3, 5, 7}) {
        for (int k = 0; k <= 2; ++k) {
            BigInt n = ipow(p, k);
            for (BigInt l = 0; l < n; ++l) {
                VertexLabel v = make_even_vertex(p, k, 1, l);
                BigInt total = 0;
                for (const Path& path : enumerate_paths(v)) {
                    DescentProfile pr = profile(path);
                    EXPECT(pr.des == 0 || pr.des == 1,
                           "p=%d k=%d l=%s: stage-1 path with des=%d", p, k,
                           l.str().c_str(), pr.des);
                    total += pr.des;
                }
                EXPECT(total == (p - 1) / 2,
                       "p=%d k=%d l=%s: stage-1 descent total %s != %d", p, k,
                       l.str().c_str(), total.str().c_str(), (p - 1) / 2);
            }
        }
    }
    return bad;
}

// 2: sign balance vanishes on every staged vertex of the envelope.
long long criterion2() {
    long long bad = 0;
    for (int p : {3, 5}) {
        for (int k = 0; k <= 2; ++k) {
            for (const FloorRef& fr : class_floors(k, 2 * (k + 4))) {
                auto balances = sign_balance_floor_sweep_parallel(p, k, fr.s, fr.odd);
                for (size_t l = 0; l < balances.size(); ++l)
                    EXPECT(balances[l] == 0,
                           "p=%d k=%d floor=%d l=%zu: sign balance %s != 0", p, k,
                           fr.floor, l, balances[l].str().c_str());
            }
        }
    }
    return bad;
}

// 3: F'(1) equals the weighted count M on every even-floor vertex of the
// envelope.
long long criterion3() {
    long long bad = 0;
    for (int p : {3, 5}) {
        for (int k = 0; k <= 2; ++k) {
            for (const FloorRef& fr : class_floors(k, 2 * (k + 4))) {
                if (fr.odd) continue;
                auto polys = eulerian_floor_sweep_parallel(p, k, fr.s, false);
                auto fibs = fib_floor_sweep_parallel(p, k, fr.s);
                for (size_t l = 0; l < polys.size(); ++l)
                    EXPECT(polys[l].derivative().eval(1) == fibs[l],
                           "p=%d k=%d floor=%d l=%zu: F'(1) != M", p, k, fr.floor, l);
            }
        }
    }
    return bad;
}

// 4: the stagewise inductions reproduce brute force across the envelope.
long long criterion4() {
    long long bad = 0;
    for (int p : {3, 5}) {
        for (int k = 0; k <= 2; ++k) {
            const int top = 2 * (k + 4);
            DiagramParams params(p, top);
            auto eul = eulerian_inductive(params, top, ThresholdKind::Adjudicated);
            std::map<int, const FloorPolynomials*> eul_by_floor;
            for (const auto& fp : eul)
                if (fp.class_k == k) eul_by_floor[fp.floor] = &fp;
            auto fib = fib_recursive(params, top);
            std::map<int, const FibTable*> fib_by_floor;
            for (const auto& ft : fib)
                if (ft.class_k == k) fib_by_floor[ft.floor] = &ft;
            for (const FloorRef& fr : class_floors(k, top)) {
                auto brute = eulerian_floor_sweep_parallel(p, k, fr.s, fr.odd);
                const auto& by_l = eul_by_floor.at(fr.floor)->by_l;
                EXPECT(by_l.size() == brute.size(),
                       "p=%d k=%d floor=%d: table size mismatch", p, k, fr.floor);
                for (const auto& [l, f] : by_l)
                    EXPECT(f == brute[static_cast<size_t>(l)],
                           "p=%d k=%d floor=%d l=%s: induction != enumeration", p, k,
                           fr.floor, l.str().c_str());
                if (!fr.odd) {
                    auto fbrute = fib_floor_sweep_parallel(p, k, fr.s);
                    for (const auto& [l, v] : fib_by_floor.at(fr.floor)->by_l)
                        EXPECT(v == fbrute[static_cast<size_t>(l)],
                               "p=%d k=%d floor=%d l=%s: recursion != enumeration", p,
                               k, fr.floor, l.str().c_str());
                }
            }
        }
    }
    return bad;
}

// 5: the worked p=5, k=2 example: pinned table values, the stage-4
// decomposition, and the boundary cells.
long long criterion5() {
    long long bad = 0;
    auto brute = [&](int s, long long l) {
        return fib_bruteforce(make_even_vertex(5, 2, s, l));
    };
    EXPECT(brute(3, 0) == 202, "stage-3 l=0: %s != 202", brute(3, 0).str().c_str());
    for (long long l = 1; l <= 6; ++l)
        EXPECT(brute(3, l) == 206, "stage-3 l=%lld != 206", l);

    const long long golden[25] = {202, 206, 206, 206, 206, 206, 206, 210, 210,
                                  210, 206, 206, 186, 190, 190, 190, 190, 190,
                                  190, 194, 194, 194, 194, 194, 194};
    DiagramParams params(5, 10);
    for (const FibTable& ft : fib_recursive(params, 10)) {
        if (ft.class_k != 2 || ft.floor != 10) continue;
        for (const auto& [l, v] : ft.by_l)
            EXPECT(v == golden[static_cast<size_t>(l)],
                   "stage-3 table l=%s: %s != %lld", l.str().c_str(), v.str().c_str(),
                   golden[static_cast<size_t>(l)]);
    }
    for (long long l : {9, 10, 12, 19})
        EXPECT(fib_closed_form(5, 2, 3, l) == brute(3, l),
               "stage-3 boundary cell l=%lld: closed form != enumeration", l);

    // Stage-4 value at offset 10 decomposes over the stage-3 column.
    BigInt column = 0;
    const long long col_expect[5] = {206, 210, 186, 190, 194};
    for (int t1 = 0; t1 < 5; ++t1) {
        BigInt v = brute(3, 2 + 5 * t1);
        EXPECT(v == col_expect[t1], "column cell l=%d: %s != %lld", 2 + 5 * t1,
               v.str().c_str(), col_expect[t1]);
        column += v;
    }
    EXPECT(column == 986, "column sum %s != 986", column.str().c_str());
    const BigInt d1_term = BigInt(25) * 4 * 3;
    const BigInt d2_term = BigInt(5) * 4 * 12;
    EXPECT(d1_term == 300, "d1 term != 300");
    EXPECT(d2_term == 240, "d2 term != 240");
    EXPECT(column + d1_term + d2_term == 1526, "decomposition != 1526");
    EXPECT(brute(4, 10) == 1526, "stage-4 l=10: %s != 1526",
           brute(4, 10).str().c_str());
    return bad;
}

// 6: the classless closed form matches enumeration stage by stage.
long long criterion6() {
    long long bad = 0;
    const long long p3_prefix[5] = {5, 27, 117, 459, 1701};
    for (int s = 2; s <= 6; ++s) {
        BigInt cf = fib_closed_form(3, 0, s, 0);
        EXPECT(cf == p3_prefix[s - 2], "p=3 s=%d: closed form %s != %lld", s,
               cf.str().c_str(), p3_prefix[s - 2]);
    }
    for (int p : {3, 5}) {
        for (int s = 2; s <= 6; ++s) {
            BigInt cf = fib_closed_form(p, 0, s, 0);
            BigInt bf = fib_bruteforce(make_even_vertex(p, 0, s, 0));
            EXPECT(cf == bf, "p=%d s=%d: closed form %s != enumeration %s", p, s,
                   cf.str().c_str(), bf.str().c_str());
        }
    }
    return bad;
}

// 7: generating-function coefficients equal the closed forms (and
// enumeration where cheap to reach).
long long criterion7() {
    long long bad = 0;
    auto c3 = series_coefficients(genfun_k0(3), 3);
    EXPECT(c3[0] == 5 && c3[1] == 27 && c3[2] == 117,
           "p=3 series prefix mismatch: %s %s %s", c3[0].str().c_str(),
           c3[1].str().c_str(), c3[2].str().c_str());
    for (int p : {3, 5}) {
        auto c = series_coefficients(genfun_k0(p), 7);
        for (int n = 0; n <= 6; ++n)
            EXPECT(c[n] == fib_closed_form(p, 0, n + 2, 0),
                   "p=%d k=0 n=%d: series != closed form", p, n);
        for (int t = 0; t <= p - 1; ++t) {
            auto c1 = series_coefficients(genfun_k1(p, t), 7);
            for (int n = 0; n <= 6; ++n)
                EXPECT(c1[n] == fib_closed_form(p, 1, n + 3, t),
                       "p=%d k=1 t=%d n=%d: series != closed form", p, t, n);
        }
        for (const IntervalClass& cls : interval_classes(p, 2, 4)) {
            auto c2 = series_coefficients(genfun_for_class(p, 2, cls), 7);
            for (int n = 0; n <= 6; ++n)
                EXPECT(c2[n] == fib_closed_form(p, 2, n + 4, cls.lo),
                       "p=%d k=2 class %c n=%d: series != closed form", p, cls.kind,
                       n);
        }
    }
    // Enumeration checks at the reachable stages.
    auto c0 = series_coefficients(genfun_k0(3), 3);
    for (int n = 0; n <= 2; ++n)
        EXPECT(c0[n] == fib_bruteforce(make_even_vertex(3, 0, n + 2, 0)),
               "p=3 k=0 n=%d: series != enumeration", n);
    for (int t = 0; t <= 2; ++t) {
        auto c1 = series_coefficients(genfun_k1(3, t), 2);
        for (int n = 0; n <= 1; ++n)
            EXPECT(c1[n] == fib_bruteforce(make_even_vertex(3, 1, n + 3, t)),
                   "p=3 k=1 t=%d n=%d: series != enumeration", t, n);
    }
    auto c5 = series_coefficients(genfun_k0(5), 3);
    for (int n = 0; n <= 2; ++n)
        EXPECT(c5[n] == fib_bruteforce(make_even_vertex(5, 0, n + 2, 0)),
               "p=5 k=0 n=%d: series != enumeration", n);
    return bad;
}

// 8: the three-term recurrence, including the worked 117 = 3*5 + 2*27 + 48
// instance, holds with its residual law.
long long criterion8() {
    long long bad = 0;
    bool saw_pin = false;
    for (const RecurrenceRow& row : recurrence_check(3, 0, 6)) {
        EXPECT(row.pass, "p=3 k=0 s=%d: recurrence row failed", row.s);
        if (row.s == 2) {
            EXPECT(row.lhs == 117 && row.rhs == 117,
                   "p=3 k=0 s=2: %s != 117 (rhs %s)", row.lhs.str().c_str(),
                   row.rhs.str().c_str());
            saw_pin = true;
        }
    }
    EXPECT(saw_pin, "p=3 k=0: pinned recurrence row missing");
    for (int p : {3, 5}) {
        for (int k = 1; k <= 2; ++k) {
            long long inside = 0;
            for (const RecurrenceRow& row : recurrence_check(p, k, k + 6)) {
                if (row.s > k + 4) continue;
                EXPECT(row.pass,
                       "p=%d k=%d s=%d l=%s: recurrence row failed (residual %s, "
                       "predicted %s)",
                       p, k, row.s, row.l.str().c_str(), row.residual.str().c_str(),
                       row.predicted_residual.str().c_str());
                if (row.in_hypothesis) ++inside;
            }
            EXPECT(inside > 0, "p=%d k=%d: no in-hypothesis rows", p, k);
        }
    }
    return bad;
}

// 9: descent rules: exhaustive agreement at the last two testable positions,
// the repeating-window paths, and the worked k=2 example.
long long criterion9() {
    long long bad = 0;
    for (int p : {3, 5}) {
        for (int k = 0; k <= 2; ++k) {
            const BigInt pk = ipow(p, k);
            for (const FloorRef& fr : class_floors(k, 2 * (k + 5))) {
                if (!fr.odd || fr.s < 3) continue;
                BigInt n = ipow(p, k + 1);
                for (BigInt l1 = 0; l1 < n; ++l1) {
                    VertexLabel v = make_odd_vertex(p, k, fr.s, l1);
                    IndexSplit sp = split_base_p(l1, p);
                    int t_class = k >= 1 ? window(p, k, sp.alpha) : 0;
                    for (const Path& path : enumerate_paths(v)) {
                        auto des = descent_set(path);
                        int t_prime = static_cast<int>(path.m_seq[2 * fr.s - 4] / pk);
                        auto [d1, d2] = predicted_descents_general(
                            p, k, sp.alpha, sp.beta, t_prime, t_class);
                        bool ok1 = des.count(2 * fr.s - 3) == static_cast<size_t>(d1);
                        bool ok2 = des.count(2 * fr.s - 2) == static_cast<size_t>(d2);
                        EXPECT(ok1 && ok2,
                               "p=%d k=%d s=%d l1=%s: rule prediction wrong", p, k,
                               fr.s, l1.str().c_str());
                    }
                }
            }
            if (k < 1) continue;
            // Repeating-window paths at every stage in the envelope.
            for (const FloorRef& fr : class_floors(k, 2 * (k + 5))) {
                if (!fr.odd || fr.s < 3) continue;
                for (int t = 0; t <= p - 1; ++t) {
                    auto [d1, d2] = predicted_descents_special(p, k, t, fr.s);
                    BigInt jt = j_number(p, k, t);
                    for (int t2 = 0; t2 <= p - 2; ++t2) {
                        std::vector<BigInt> ms{pk * t2};
                        for (int d = 2; d < fr.s; ++d) {
                            ms.push_back(pk * (p - 1 - t));
                            ms.push_back(pk * t);
                        }
                        ms.push_back(pk * (p - 1 - t));
                        Path path{p, k, pk * t2 + jt, ms,
                                  make_odd_vertex(p, k, fr.s, j_number(p, k + 1, t))};
                        auto des = descent_set(path);
                        for (int d = 2; d < fr.s; ++d) {
                            EXPECT(des.count(2 * d - 1) == static_cast<size_t>(d1),
                                   "p=%d k=%d s=%d t=%d: window rule at odd position",
                                   p, k, fr.s, t);
                            EXPECT(des.count(2 * d) == static_cast<size_t>(d2),
                                   "p=%d k=%d s=%d t=%d: window rule at even position",
                                   p, k, fr.s, t);
                        }
                    }
                }
            }
        }
    }
    // The worked example: p=5, k=2, even offset 7, beta 1.
    for (int tp = 0; tp <= 4; ++tp) {
        auto [d1, d2] = predicted_descents_general(5, 2, 7, 1, tp, window(5, 2, 7));
        EXPECT(d1 == (tp <= 2), "worked example: position-5 rule at t'=%d", tp);
        EXPECT(d2 == (tp >= 3), "worked example: position-6 rule at t'=%d", tp);
    }
    for (const Path& path : enumerate_paths(make_odd_vertex(5, 2, 4, 36))) {
        auto des = descent_set(path);
        int tp = static_cast<int>(path.m_seq[4] / 25);
        EXPECT(path.m_seq[5] == 71 && path.m_seq[4] == 25 * tp &&
                   path.m_seq[3] == 94 - 20 * tp,
               "worked example: block triple at t'=%d", tp);
        EXPECT(des.count(5) == static_cast<size_t>(tp <= 2),
               "worked example: realized descent at 5, t'=%d", tp);
        EXPECT(des.count(6) == static_cast<size_t>(tp >= 3),
               "worked example: realized descent at 6, t'=%d", tp);
    }
    return bad;
}

struct Criterion {
    int number;
    const char* description;
    long long (*run)();
    double budget_seconds;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "first staged floor: des in {0,1} per path, (p-1)/2 per vertex",
         criterion1, 1.0},
        {2, "sign balance vanishes on all staged vertices of the envelope",
         criterion2, 60.0},
        {3, "F'(1) equals the weighted count M on even floors", criterion3, 120.0},
        {4, "stagewise inductions reproduce enumeration everywhere", criterion4,
         300.0},
        {5, "worked p=5 k=2 example: tables, boundary cells, decomposition",
         criterion5, 120.0},
        {6, "classless closed form matches enumeration for stages 2..6",
         criterion6, 60.0},
        {7, "generating-function coefficients equal the closed forms", criterion7,
         1.0},
        {8, "three-term recurrence with residual law", criterion8, 60.0},
        {9, "descent rules: exhaustive, repeating-window, worked example",
         criterion9, 180.0},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        long long bad = c.run();
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        bool in_budget = elapsed <= c.budget_seconds;
        if (!in_budget)
            std::printf("[FAIL] %s:%d criterion %d exceeded its %.0fs budget "
                        "(%.2fs)\n",
                        __FILE__, __LINE__, c.number, c.budget_seconds, elapsed);
        bool ok = bad == 0 && in_budget;
        std::printf("criterion %d: %s (%.2fs) — %s\n", c.number,
                    ok ? "PASS" : "FAIL", elapsed, c.description);
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
