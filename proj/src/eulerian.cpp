#include "hookpath/eulerian.hpp"

#include "hookpath/paths.hpp"
#include "hookpath/stats.hpp"

#include <functional>

namespace hookpath {

namespace {

constexpr long long kTableCap = 2'000'000;

long long table_size(int p, int e) {
    BigInt n = ipow(p, e);
    if (n > kTableCap) throw std::length_error("floor table too large");
    return static_cast<long long>(n);
}

// Type-1 descent of the branch t' from offset L, against the threshold.
bool d1_fire(int p, int k, const BigInt& L, int tp, ThresholdKind kind) {
    const BigInt lo = kind == ThresholdKind::Adjudicated
                          ? (ipow(p, k) - 1) / 2
                          : ipow(p, k) * (p - 1) / 2;
    return L < lo ? 2 * tp <= p - 1 : 2 * tp <= p - 3;
}

// Type-2 descent of branch t' when extending to the odd vertex p*L + beta'.
bool d2_fire(int p, int k, const BigInt& L, int bp, int tp) {
    if (k == 0) return bp >= 1 && tp >= p - bp;
    const int w = window(p, k, L);
    if (L == j_number(p, k, w)) return tp >= (bp > w ? p - w - 1 : p - w);
    return tp >= p - w;
}

IntPolynomial q_shift(const IntPolynomial& a, int e) {
    if (e == 0 || a.is_zero()) return a;
    std::vector<BigInt> c(a.coeffs().size() + e, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i + e] = a.coeffs()[i];
    return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial eulerian_bruteforce(const VertexLabel& v) {
    std::vector<BigInt> acc;
    for (const Path& path : enumerate_paths(v)) {
        size_t d = descent_set(path).size();
        if (acc.size() <= d) acc.resize(d + 1, 0);
        acc[d] += 1;
    }
    return IntPolynomial(std::move(acc));
}

std::vector<FloorPolynomials> eulerian_inductive(const DiagramParams& params,
                                                 int up_to_floor,
                                                 ThresholdKind kind) {
    if (up_to_floor < 1 || up_to_floor > params.max_floor)
        throw std::invalid_argument("eulerian_inductive: floor out of range");
    const int p = params.p;
    std::vector<FloorPolynomials> out;
    const IntPolynomial seed =
        poly_q_plus_1().scaled((p - 1) / 2);  // (p-1)/2 (q+1)
    for (int k = 0; 2 * k + 2 <= up_to_floor; ++k) {
        const long long nk = table_size(p, k);
        const long long nk1 = table_size(p, k + 1);
        const BigInt pk = ipow(p, k);
        // Stage tables in the recursion's own clock: evenF[s] lives on floor
        // 2k+2s, Q[s] on floor 2k+2s+1.
        const int s_even_max = (up_to_floor - 2 * k) / 2;
        const int s_odd_max = (up_to_floor - 2 * k - 1) / 2;
        const int s_need = std::max(s_even_max, s_odd_max);

        auto emit = [&](int floor, const std::vector<IntPolynomial>& tab) {
            FloorPolynomials fp;
            fp.floor = floor;
            fp.class_k = k;
            for (long long l = 0; l < static_cast<long long>(tab.size()); ++l)
                fp.by_l[BigInt(l)] = tab[l];
            out.push_back(std::move(fp));
        };

        std::vector<IntPolynomial> Q(nk1, seed);
        if (s_even_max >= 1) emit(2 * k + 2, std::vector<IntPolynomial>(nk, seed));
        if (s_odd_max >= 1) emit(2 * k + 3, Q);
        for (int s = 2; s <= s_need; ++s) {
            if (s <= s_even_max) {
                std::vector<IntPolynomial> ev(nk);
                for (long long l = 0; l < nk; ++l) {
                    IntPolynomial acc;
                    for (int tp = 0; tp <= p - 1; ++tp) {
                        const IntPolynomial& term =
                            Q[static_cast<size_t>(l + static_cast<long long>(pk * tp))];
                        acc = acc + q_shift(term, d1_fire(p, k, BigInt(l), tp, kind) ? 1 : 0);
                    }
                    ev[l] = std::move(acc);
                }
                emit(2 * k + 2 * s, ev);
            }
            std::vector<IntPolynomial> od(nk1);
            for (long long l1 = 0; l1 < nk1; ++l1) {
                const BigInt L = BigInt(l1) / p;
                const int bp = static_cast<int>(BigInt(l1) % p);
                IntPolynomial acc;
                for (int tp = 0; tp <= p - 1; ++tp) {
                    const IntPolynomial& term =
                        Q[static_cast<size_t>(static_cast<long long>(L + pk * tp))];
                    int e = (d1_fire(p, k, L, tp, kind) ? 1 : 0) +
                            (d2_fire(p, k, L, bp, tp) ? 1 : 0);
                    acc = acc + q_shift(term, e);
                }
                od[l1] = std::move(acc);
            }
            if (s <= s_odd_max) emit(2 * k + 2 * s + 1, od);
            Q = std::move(od);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const FloorPolynomials& a, const FloorPolynomials& b) {
                         return a.floor != b.floor ? a.floor < b.floor
                                                   : a.class_k > b.class_k;
                     });
    return out;
}

// ---------------------------------------------------------------------------
// Tabulated closed forms for the first seven floors of a class, as printed.
// ---------------------------------------------------------------------------

namespace {

struct Bullet {
    std::string label;
    std::function<bool(const BigInt&)> match;
    std::function<std::vector<BigRat>(const BigInt&)> bracket;
};

BigRat fr(const BigInt& num, const BigInt& den = 1) { return BigRat(num, den); }

// Window search helpers: the unique t in [tlo, thi] satisfying the given
// bounds on l, or -1.  open*: strict inequality on that side.
int find_window(int tlo, int thi, const BigInt& l,
                const std::function<BigInt(int)>& lo_bound, bool lo_strict,
                const std::function<BigInt(int)>& hi_bound, bool hi_strict) {
    for (int t = tlo; t <= thi; ++t) {
        bool lo_ok = lo_strict ? lo_bound(t) < l : lo_bound(t) <= l;
        bool hi_ok = hi_strict ? l < hi_bound(t) : l <= hi_bound(t);
        if (lo_ok && hi_ok) return t;
    }
    return -1;
}

std::vector<Bullet> initial_bullets(int p, int k, int fc) {
    const int half = (p - 1) / 2;
    auto J = [p, k](int t) { return j_number(p, k, t); };
    auto J1 = [p, k](int t) { return j_number(p, k + 1, t); };
    std::vector<Bullet> bb;
    auto always = [](const BigInt&) { return true; };

    if (fc == 2 || fc == 3) {
        bb.push_back({"seed", always, [](const BigInt&) {
                          return std::vector<BigRat>{fr(1)};
                      }});
        return bb;
    }
    if (fc == 4) {
        const BigInt thr = ipow(p, k) * (p - 1) / 2;  // printed threshold
        bb.push_back({"lo", [thr](const BigInt& l) { return l < thr; },
                      [p](const BigInt&) {
                          return std::vector<BigRat>{fr(p - 1, 2), fr(p + 1, 2)};
                      }});
        bb.push_back({"hi", [thr](const BigInt& l) { return l >= thr; },
                      [p](const BigInt&) {
                          return std::vector<BigRat>{fr(p + 1, 2), fr(p - 1, 2)};
                      }});
        return bb;
    }
    if (fc == 5) {
        bb.push_back({"b1", [](const BigInt& l) { return l == 0; },
                      [p](const BigInt&) {
                          return std::vector<BigRat>{fr(p - 1, 2), fr(p + 1, 2)};
                      }});
        auto w1 = [=](const BigInt& l) {
            return find_window(1, half - 1, l, [&](int t) { return J1(t - 1); }, true,
                               [&](int t) { return J1(t); }, false);
        };
        bb.push_back({"b2", [w1](const BigInt& l) { return w1(l) >= 0; },
                      [=](const BigInt& l) {
                          int t = w1(l);
                          return std::vector<BigRat>{fr(p - (2 * t + 1), 2),
                                                     fr(p + (2 * t + 1), 2)};
                      }});
        bb.push_back({"b3",
                      [=](const BigInt& l) {
                          return J1(half - 1) < l && l < J1(half) - half;
                      },
                      [p](const BigInt&) {
                          return std::vector<BigRat>{fr(0), fr(p)};
                      }});
        bb.push_back({"b4",
                      [=](const BigInt& l) {
                          return J1(half) - half <= l && l <= J1(half);
                      },
                      [p](const BigInt&) {
                          return std::vector<BigRat>{fr(1), fr(p - 1)};
                      }});
        bb.push_back({"b5",
                      [=](const BigInt& l) { return J1(half) < l && l <= J1(half + 1); },
                      [p](const BigInt&) {
                          return std::vector<BigRat>{fr(0), fr(p)};
                      }});
        auto w6 = [=](const BigInt& l) {
            return find_window(half, p - 1, l, [&](int t) { return J1(t - 1); }, true,
                               [&](int t) { return J1(t); }, false);
        };
        bb.push_back({"b6", [w6](const BigInt& l) { return w6(l) >= 0; },
                      [=](const BigInt& l) {
                          int t = w6(l);
                          return std::vector<BigRat>{fr(3 * p - 2 * t + 1, 2), fr(0),
                                                     fr(-(p - 2 * t + 1), 2)};
                      }});
        return bb;
    }
    if (fc == 6) {
        if (k == 1) {
            bb.push_back({"c1b1",
                          [=](const BigInt& l) { return 0 <= l && 2 * l <= p - 3; },
                          [=](const BigInt& l) {
                              return std::vector<BigRat>{
                                  fr(0), fr(p * p - 2 * l + 1, 2),
                                  fr(p * p + 2 * l - 1, 2)};
                          }});
            bb.push_back({"c1b2", [=](const BigInt& l) { return l == half; },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{fr(1), fr(p * p + p - 2, 2),
                                                         fr(p * p - p, 2)};
                          }});
            bb.push_back({"c1b3",
                          [=](const BigInt& l) { return half + 1 <= l && l <= p - 1; },
                          [=](const BigInt& l) {
                              return std::vector<BigRat>{
                                  fr(0), fr(p * p - 2 * l + 1 + 2 * p, 2),
                                  fr(p * p + 2 * l - 1 - 2 * p, 2)};
                          }});
            return bb;
        }
        bb.push_back({"c2b1", [](const BigInt& l) { return l == 0; },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{fr(0), fr(p * p - 1, 2),
                                                     fr(p * p + 1, 2)};
                      }});
        auto w2 = [=](const BigInt& l) {
            return find_window(1, half - 1, l, [&](int t) { return J(t - 1); }, true,
                               [&](int t) { return J(t); }, false);
        };
        bb.push_back({"c2b2", [w2](const BigInt& l) { return w2(l) >= 0; },
                      [=](const BigInt& l) {
                          int t = w2(l);
                          return std::vector<BigRat>{fr(0), fr(p * p - 2 * t - 1, 2),
                                                     fr(p * p + 2 * t + 1, 2)};
                      }});
        bb.push_back({"c2b3",
                      [=](const BigInt& l) {
                          return J(half - 1) < l && l < J(half) - half;
                      },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{fr(0), fr(p * (p - 1), 2),
                                                     fr(p * (p + 1), 2)};
                      }});
        bb.push_back({"c2b4",
                      [=](const BigInt& l) { return J(half) - half <= l && l < J(half); },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{fr(0), fr(p * p - p + 2, 2),
                                                     fr(p * p + p - 2, 2)};
                      }});
        bb.push_back({"c2b5", [=](const BigInt& l) { return l == J(half); },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{fr(1), fr(p * p + p - 2, 2),
                                                     fr(p * p - p, 2)};
                      }});
        auto w6 = [=](const BigInt& l) {
            return find_window(half, p - 1, l, [&](int t) { return J(t - 1); }, true,
                               [&](int t) { return J(t); }, false);
        };
        bb.push_back({"c2b6", [w6](const BigInt& l) { return w6(l) >= 0; },
                      [=](const BigInt& l) {
                          int t = w6(l);
                          return std::vector<BigRat>{
                              fr(0), fr(p * p - 2 * t + 2 * p + 1, 2),
                              fr(p * p + 2 * t - 2 * p - 1, 2)};
                      }});
        return bb;
    }
    if (fc == 7) {
        if (k == 1) {
            bb.push_back({"c1b1", [](const BigInt& l) { return l == 0; },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{fr(0), fr(p * p + 1, 2),
                                                         fr(p * p - 1, 2)};
                          }});
            auto w2 = [=](const BigInt& l) {
                return find_window(1, half, l, [&](int t) { return J1(t - 1); }, true,
                                   [&](int t) { return J1(t) - t; }, true);
            };
            bb.push_back({"c1b2", [w2](const BigInt& l) { return w2(l) >= 0; },
                          [=](const BigInt& l) {
                              BigInt t = w2(l);
                              return std::vector<BigRat>{
                                  fr(0), fr(p * p - (p + 4) * t - t * t + 3, 2),
                                  fr(p * p + 2 * t * t + 3 * t - 3, 2),
                                  fr((p - 2) * t - t * t, 2)};
                          }});
            auto w3 = [=](const BigInt& l) {
                return find_window(1, half - 1, l, [&](int t) { return J1(t) - t; },
                                   false, [&](int t) { return J1(t); }, false);
            };
            bb.push_back({"c1b3", [w3](const BigInt& l) { return w3(l) >= 0; },
                          [=](const BigInt& l) {
                              BigInt t = w3(l);
                              return std::vector<BigRat>{
                                  fr(0), fr(p * p - (p + 4) * t - t * t + 1, 2),
                                  fr(p * p + 2 * t * t + 3 * t - 1, 2),
                                  fr((p - 2) * t - t * t, 2)};
                          }});
            bb.push_back({"c1b4",
                          [=](const BigInt& l) {
                              return J1(half) - half <= l && l <= J1(half);
                          },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{
                                  fr(1), fr(p * p + 4 * p - 5, 8),
                                  fr(6 * p * p - 6, 8), fr(p * p - 4 * p + 3, 8)};
                          }});
            bb.push_back({"c1b5",
                          [=](const BigInt& l) {
                              return J1(half) < l && l < J1(half + 1) - (half + 1);
                          },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{
                                  fr(0), fr(p * p + 4 * p - 11, 8),
                                  fr(6 * p * p + 8 * p - 14, 8),
                                  fr(p * p - 4 * p + 3, 8)};
                          }});
            auto w6 = [=](const BigInt& l) {
                return find_window(half + 2, p - 1, l,
                                   [&](int t) { return J1(t - 1); }, true,
                                   [&](int t) { return J1(t) - t; }, true);
            };
            bb.push_back({"c1b6", [w6](const BigInt& l) { return w6(l) >= 0; },
                          [=](const BigInt& l) {
                              BigInt t = w6(l);
                              return std::vector<BigRat>{
                                  fr(0), fr(-((t - 2) * (t - p)), 2),
                                  fr(-2 * t * t + (4 * p + 6) * t -
                                         3 * BigInt(p + 1) * (p + 1), 2),
                                  fr(-(p * p + t * t - (3 * p + 4) * t + 4 * p + 3), 2)};
                          }});
            auto w7 = [=](const BigInt& l) {
                return find_window(half + 1, p - 1, l,
                                   [&](int t) { return J1(t) - t; }, false,
                                   [&](int t) { return J1(t); }, false);
            };
            bb.push_back({"c1b7", [w7](const BigInt& l) { return w7(l) >= 0; },
                          [=](const BigInt& l) {
                              BigInt t = w7(l);
                              return std::vector<BigRat>{
                                  fr(0), fr(-((t - 2) * (t - p)), 2),
                                  fr(-2 * t * t + (4 * p + 6) * t - 3 * p * p - 6 * p - 1, 2),
                                  fr(-(p * p + t * t - (3 * p + 4) * t + 4 * p + 1), 2)};
                          }});
            return bb;
        }
        bb.push_back({"c2b1", [](const BigInt& l) { return l == 0; },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{fr(0), fr(p * p - 1, 2),
                                                     fr(p * p + 1, 2)};
                      }});
        auto w2 = [=](const BigInt& l) {
            return find_window(1, half, l, [&](int t) { return J1(t - 1); }, true,
                               [&](int t) { return J1(t) - t; }, true);
        };
        bb.push_back({"c2b2", [w2](const BigInt& l) { return w2(l) >= 0; },
                      [=](const BigInt& l) {
                          BigInt t = w2(l);
                          return std::vector<BigRat>{
                              fr(0), fr(p * p + 1 - (p + 4) * t - t * t, 2),
                              fr(p * p + 2 * t * t + 6 * t - 1, 2),
                              fr((p - 2) * t - t * t, 2)};
                      }});
        auto w3 = [=](const BigInt& l) {
            return find_window(1, half - 1, l, [&](int t) { return J1(t) - t; }, false,
                               [&](int t) { return J1(t); }, false);
        };
        bb.push_back({"c2b3", [w3](const BigInt& l) { return w3(l) >= 0; },
                      [=](const BigInt& l) {
                          BigInt t = w3(l);
                          return std::vector<BigRat>{
                              fr(0), fr(p * p - 1 - (p + 4) * t - t * t, 2),
                              fr(BigInt(p - 1) * (p - 1) + 2 * t * t + 6 * t, 2),
                              fr((p - 2) * t - t * t, 2)};
                      }});
        bb.push_back({"c2b4",
                      [=](const BigInt& l) {
                          return J1(half) - p * half <= l && l < J1(half) - half;
                      },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{
                              fr(0), fr(p * p - 4 * p + 11, 8),
                              fr(6 * p * p - 8 * p + 14, 8), fr(p * p - 4 * p + 3, 8)};
                      }});
        bb.push_back({"c2b5",
                      [=](const BigInt& l) {
                          return J1(half) - half <= l && l <= J1(half);
                      },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{fr(1), fr(p * p + 4 * p - 5, 8),
                                                     fr(6 * p * p - 6, 8),
                                                     fr(p * p - 4 * p + 3, 8)};
                      }});
        bb.push_back({"c2b6",
                      [=](const BigInt& l) {
                          return J1(half) < l && l < J1(half + 1) - (half + 1);
                      },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{
                              fr(0), fr(p * p - 4 * p + 11, 8),
                              fr(6 * p * p + 8 * p - 14, 8), fr(p * p - 4 * p + 3, 8)};
                      }});
        auto w7 = [=](const BigInt& l) {
            return find_window(half + 2, p - 1, l, [&](int t) { return J1(t - 1); },
                               true, [&](int t) { return J1(t) - t; }, true);
        };
        bb.push_back({"c2b7", [w7](const BigInt& l) { return w7(l) >= 0; },
                      [=](const BigInt& l) {
                          BigInt t = w7(l);
                          return std::vector<BigRat>{
                              fr(0), fr(-((t - 2) * (t - p)), 2),
                              fr(-2 * t * t + (4 * p + 6) * t -
                                     3 * BigInt(p + 1) * (p + 1), 2),
                              fr(-(p * p + t * t - (3 * p + 4) * t + 4 * p + 3), 2)};
                      }});
        auto w8 = [=](const BigInt& l) {
            return find_window(half + 1, p - 1, l, [&](int t) { return J1(t) - t; },
                               false, [&](int t) { return J1(t); }, false);
        };
        bb.push_back({"c2b8", [w8](const BigInt& l) { return w8(l) >= 0; },
                      [=](const BigInt& l) {
                          BigInt t = w8(l);
                          return std::vector<BigRat>{
                              fr(0), fr(-((t - 2) * (t - p)), 2),
                              fr(-2 * t * t + (4 * p + 6) * t - 3 * p * p - 6 * p - 1, 2),
                              fr(-(p * p + t * t - (3 * p + 4) * t + 4 * p + 1), 2)};
                      }});
        return bb;
    }
    if (fc == 8) {
        const BigInt p3 = BigInt(p) * p * p;
        auto q4 = [](const BigInt& a) { return fr(a, 24); };
        if (k == 1) {
            auto mk1 = [=](const BigInt& t) {
                return std::vector<BigRat>{
                    fr(0), q4(p3 - 3 * p * p - p + 27),
                    q4(11 * p3 + 3 * p * p + 37 * p - 51 - 12 * t * (t + 2)),
                    q4(11 * p3 + 3 * p * p - 35 * p + 21 + 24 * t * (t + 2)),
                    q4(p3 - 3 * p * p - p + 3 + 12 * t * (p - 2) - 12 * t * t)};
            };
            bb.push_back({"c1b1",
                          [=](const BigInt& l) { return 0 <= l && 2 * l <= p - 3; },
                          [mk1](const BigInt& l) { return mk1(l); }});
            bb.push_back({"c1b2", [=](const BigInt& l) { return l == half; },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{
                                  fr(1), q4(p3 + 11 * p - 12),
                                  q4(11 * p3 + 9 * p * p + 25 * p - 45),
                                  q4(11 * p3 - 6 * p * p - 35 * p + 30),
                                  q4(p3 - 3 * p * p - p + 3)};
                          }});
            auto mk3 = [=](const BigInt& t) {
                return std::vector<BigRat>{
                    fr(0),
                    q4(p3 - 3 * p * p - 25 * p + 27 - 12 * t * (t - 2) + 12 * t * p),
                    q4(11 * p3 + 27 * p * p + 85 * p - 51 + 24 * t * (t - 2) -
                       48 * t * p),
                    q4(11 * p3 - 21 * p * p - 59 * p + 21 - 12 * t * (t - 2) +
                       36 * t * p),
                    q4(p3 - 3 * p * p - p + 3)};
            };
            bb.push_back({"c1b3",
                          [=](const BigInt& l) { return half + 1 <= l && l <= p - 1; },
                          [mk3](const BigInt& l) { return mk3(l); }});
            return bb;
        }
        if (k == 2) {
            const BigRat c0 = q4(p3 - 3 * p * p - p + 3);
            bb.push_back({"c2b1", [](const BigInt& l) { return l == 0; },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{
                                  fr(0), c0, q4(11 * p3 + 3 * p * p + p + 9),
                                  q4(11 * p3 + 3 * p * p + p - 15), c0};
                          }});
            auto w2 = [=](const BigInt& l) {
                return find_window(1, half, l,
                                   [&](int t) { return BigInt(t - 1) * (p + 1) + 1; },
                                   false, [&](int t) { return BigInt(t) * p - 1; },
                                   false);
            };
            bb.push_back({"c2b2", [w2](const BigInt& l) { return w2(l) >= 0; },
                          [=](const BigInt& l) {
                              BigInt t = w2(l);
                              return std::vector<BigRat>{
                                  fr(0), c0,
                                  q4(11 * p3 + 3 * p * p + p + 33 -
                                     12 * t * (t + p + 2)),
                                  q4(11 * p3 + 3 * p * p + p - 39 + 24 * t * (t + 3)),
                                  q4(p3 - 3 * p * p - p + 3 - 12 * t * (t - p + 2))};
                          }});
            auto w3 = [=](const BigInt& l) {
                return find_window(1, half - 1, l,
                                   [&](int t) { return BigInt(t) * p; }, false,
                                   [&](int t) { return BigInt(t) * (p + 1); }, false);
            };
            bb.push_back({"c2b3", [w3](const BigInt& l) { return w3(l) >= 0; },
                          [=](const BigInt& l) {
                              BigInt t = w3(l);
                              return std::vector<BigRat>{
                                  fr(0), c0,
                                  q4(11 * p3 + 3 * p * p + p + 9 -
                                     12 * t * (t + p + 2)),
                                  q4(11 * p3 + 3 * p * p + p - 15 + 24 * t * (t + 3)),
                                  q4(p3 - 3 * p * p - p + 3 - 12 * t * (t - p + 2))};
                          }});
            bb.push_back({"c2b4",
                          [=](const BigInt& l) {
                              return half * p <= l && l <= BigInt(half) * (p + 1) - 1;
                          },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{
                                  fr(0), q4(p3 - 3 * p * p - p + 27),
                                  q4(11 * p3 - 6 * p * p + 13 * p - 18),
                                  q4(11 * p3 + 9 * p * p + p - 21),
                                  q4(p3 - 13 * p + 12)};
                          }});
            bb.push_back({"c2b5",
                          [=](const BigInt& l) { return l == BigInt(half) * (p + 1); },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{
                                  fr(1), q4(p3 + 11 * p - 12),
                                  q4(11 * p3 + 9 * p * p + p - 21),
                                  q4(11 * p3 - 6 * p * p - 11 * p + 6), c0};
                          }});
            bb.push_back({"c2b6",
                          [=](const BigInt& l) {
                              return BigInt(half) * (p + 1) + 1 <= l &&
                                     l <= BigInt(half + 1) * p - 1;
                          },
                          [=](const BigInt&) {
                              return std::vector<BigRat>{
                                  fr(0), q4(p3 - 13 * p + 36),
                                  q4(11 * p3 + 9 * p * p + 25 * p - 45),
                                  q4(11 * p3 - 6 * p * p - 11 * p + 6), c0};
                          }});
            auto w7 = [=](const BigInt& l) {
                return find_window(half + 2, p - 1, l,
                                   [&](int t) { return BigInt(t - 1) * (p + 1) + 1; },
                                   false, [&](int t) { return BigInt(t) * p - 1; },
                                   false);
            };
            bb.push_back({"c2b7", [w7](const BigInt& l) { return w7(l) >= 0; },
                          [=](const BigInt& l) {
                              BigInt t = w7(l);
                              return std::vector<BigRat>{
                                  fr(0),
                                  q4(p3 - 3 * p * p - 25 * p + 3 -
                                     12 * t * (t - p - 2)),
                                  q4(11 * p3 + 27 * p * p + 73 * p + 33 +
                                     24 * t * (t - 2 * p - 3)),
                                  q4(11 * p3 - 21 * p * p - 47 * p - 39 -
                                     12 * t * (t - 3 * p - 4)),
                                  c0};
                          }});
            auto w8 = [=](const BigInt& l) {
                return find_window(half + 1, p - 1, l,
                                   [&](int t) { return BigInt(t) * p; }, false,
                                   [&](int t) { return BigInt(t) * (p + 1); }, false);
            };
            bb.push_back({"c2b8", [w8](const BigInt& l) { return w8(l) >= 0; },
                          [=](const BigInt& l) {
                              BigInt t = w8(l);
                              return std::vector<BigRat>{
                                  fr(0),
                                  q4(p3 - 3 * p * p - 25 * p + 3 -
                                     12 * t * (t - p - 2)),
                                  q4(11 * p3 + 27 * p * p + 73 * p + 9 +
                                     24 * t * (t - 2 * p - 3)),
                                  q4(11 * p3 - 21 * p * p - 47 * p - 15 -
                                     12 * t * (t - 3 * p - 4)),
                                  c0};
                          }});
            return bb;
        }
        // k > 2
        auto sg = [=](int i) { return geom_sum(p, i, k - 1); };
        const BigRat c0 = q4(p3 - 3 * p * p - p + 3);
        bb.push_back({"c3b1", [](const BigInt& l) { return l == 0; },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{
                              fr(0), c0, q4(11 * p3 + 3 * p * p + p - 15),
                              q4(11 * p3 + 3 * p * p + p + 9), c0};
                      }});
        auto w2 = [=](const BigInt& l) {
            return find_window(1, half, l,
                               [&](int t) { return (t - 1) * sg(0) + 1; }, false,
                               [&](int t) { return (t - 1) * sg(1) + p - 1; }, false);
        };
        bb.push_back({"c3b2", [w2](const BigInt& l) { return w2(l) >= 0; },
                      [=](const BigInt& l) {
                          BigInt t = w2(l);
                          return std::vector<BigRat>{
                              fr(0), c0,
                              q4(11 * p3 + 3 * p * p + p + 9 - 12 * t * (t + p + 2)),
                              q4(11 * p3 + 3 * p * p + p - 15 + 24 * t * (t + 3)),
                              q4(p3 - 3 * p * p - p + 3 - 12 * t * (t - p + 2))};
                      }});
        auto w3 = [=](const BigInt& l) {
            return find_window(1, half - 1, l,
                               [&](int t) { return (t - 1) * sg(1) + p; }, false,
                               [&](int t) { return t * sg(0); }, false);
        };
        bb.push_back({"c3b3", [w3](const BigInt& l) { return w3(l) >= 0; },
                      [=](const BigInt& l) {
                          BigInt t = w3(l);
                          return std::vector<BigRat>{
                              fr(0), c0,
                              q4(11 * p3 + 3 * p * p + p - 15 - 12 * t * (t + p + 2)),
                              q4(11 * p3 + 3 * p * p + p + 9 + 24 * t * (t + 3)),
                              q4(p3 - 3 * p * p - p + 3 - 12 * t * (t - p + 2))};
                      }});
        bb.push_back({"c3b4",
                      [=](const BigInt& l) {
                          return (half - 1) * sg(1) + p <= l && l <= half * sg(2) - 1;
                      },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{
                              fr(0), c0, q4(11 * p3 - 6 * p * p - 11 * p + 6),
                              q4(11 * p3 + 9 * p * p + 25 * p - 21),
                              q4(p3 - 13 * p + 12)};
                      }});
        bb.push_back({"c3b5",
                      [=](const BigInt& l) {
                          return half * sg(2) + p <= l && l <= half * sg(1) - 1;
                      },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{
                              fr(0), c0, q4(11 * p3 - 6 * p * p - 11 * p + 30),
                              q4(11 * p3 + 9 * p * p + 25 * p - 45),
                              q4(p3 - 13 * p + 12)};
                      }});
        bb.push_back({"c3b6",
                      [=](const BigInt& l) {
                          return half * sg(1) <= l && l <= half * sg(0) - 1;
                      },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{
                              fr(0), q4(p3 - 3 * p * p - p + 27),
                              q4(11 * p3 - 6 * p * p + 13 * p - 18),
                              q4(11 * p3 + 9 * p * p + p - 21), q4(p3 - 13 * p + 12)};
                      }});
        bb.push_back({"c3b7", [=](const BigInt& l) { return l == half * sg(0); },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{
                              fr(1), q4(p3 + 11 * p - 12),
                              q4(11 * p3 + 9 * p * p + p - 21),
                              q4(11 * p3 - 6 * p * p - 11 * p + 6), c0};
                      }});
        bb.push_back({"c3b8",
                      [=](const BigInt& l) {
                          return half * sg(0) + 1 <= l && l <= half * sg(1) + p - 1;
                      },
                      [=](const BigInt&) {
                          return std::vector<BigRat>{
                              fr(0), q4(p3 - 13 * p + 36),
                              q4(11 * p3 + 9 * p * p + 25 * p - 45),
                              q4(11 * p3 - 6 * p * p - 11 * p + 6), c0};
                      }});
        auto w9 = [=](const BigInt& l) {
            return find_window(half + 2, p - 1, l,
                               [&](int t) { return (t - 1) * sg(0) + 1; }, false,
                               [&](int t) { return (t - 1) * sg(1) + p - 1; }, false);
        };
        bb.push_back({"c3b9", [w9](const BigInt& l) { return w9(l) >= 0; },
                      [=](const BigInt& l) {
                          BigInt t = w9(l);
                          return std::vector<BigRat>{
                              fr(0),
                              q4(p3 - 3 * p * p - 25 * p + 3 - 12 * t * (t - p - 2)),
                              q4(11 * p3 + 27 * p * p + 73 * p + 33 +
                                 24 * t * (t - 2 * p - 3)),
                              q4(11 * p3 - 21 * p * p - 47 * p - 39 -
                                 12 * t * (t - 3 * p - 4)),
                              c0};
                      }});
        auto w10 = [=](const BigInt& l) {
            return find_window(half + 1, p - 1, l,
                               [&](int t) { return (t - 1) * sg(1) + p; }, false,
                               [&](int t) { return t * sg(0); }, false);
        };
        bb.push_back({"c3b10", [w10](const BigInt& l) { return w10(l) >= 0; },
                      [=](const BigInt& l) {
                          BigInt t = w10(l);
                          return std::vector<BigRat>{
                              fr(0),
                              q4(p3 - 3 * p * p - 25 * p + 3 - 12 * t * (t - p - 2)),
                              q4(11 * p3 + 27 * p * p + 73 * p + 9 +
                                 24 * t * (t - 2 * p - 3)),
                              q4(11 * p3 - 21 * p * p - 47 * p - 15 -
                                 12 * t * (t - 3 * p - 4)),
                              c0};
                      }});
        return bb;
    }
    throw std::invalid_argument("initial_bullets: floor must be in [2k+2, 2k+8]");
}

// bracket * (p-1)/2 (1+q); abort on non-integral coefficients.
IntPolynomial expand_bracket(int p, const std::vector<BigRat>& br) {
    const BigRat h(p - 1, 2);
    std::vector<BigRat> prod(br.size() + 1, BigRat(0));
    for (size_t i = 0; i < br.size(); ++i) {
        prod[i] += h * br[i];
        prod[i + 1] += h * br[i];
    }
    std::vector<BigInt> out;
    out.reserve(prod.size());
    for (const BigRat& c : prod) {
        if (denominator(c) != 1)
            throw NonIntegralForm("tabulated bracket has a non-integral coefficient");
        out.push_back(numerator(c));
    }
    return IntPolynomial(std::move(out));
}

struct FloorShape {
    bool odd;
    int stage;  // stage of the vertex carrying this floor's polynomials
};

FloorShape floor_shape(int fc) {
    switch (fc) {
        case 2: return {false, 1};
        case 3: return {true, 2};
        case 4: return {false, 2};
        case 5: return {true, 3};
        case 6: return {false, 3};
        case 7: return {true, 4};
        case 8: return {false, 4};
    }
    throw std::invalid_argument("floor code out of [2, 8]");
}

}  // namespace

IntPolynomial initial_closed_form(int p, int k, int floor, const BigInt& l) {
    if (!is_odd_prime(p) || k < 1)
        throw std::invalid_argument(
            "initial_closed_form: requires an odd prime p and k >= 1");
    const int fc = floor - 2 * k;
    FloorShape shape = floor_shape(fc);
    const BigInt n = ipow(p, shape.odd ? k + 1 : k);
    if (l < 0 || l >= n)
        throw std::invalid_argument("initial_closed_form: offset out of range");
    for (const Bullet& b : initial_bullets(p, k, fc))
        if (b.match(l)) return expand_bracket(p, b.bracket(l));
    throw UncoveredCell("no tabulated bullet covers this offset");
}

std::vector<InitialFormRow> initial_form_report(int p, int k) {
    if (!is_odd_prime(p) || k < 1)
        throw std::invalid_argument(
            "initial_form_report: requires an odd prime p and k >= 1");
    std::vector<InitialFormRow> rows;
    for (int fc = 2; fc <= 8; ++fc) {
        FloorShape shape = floor_shape(fc);
        const long long n = table_size(p, shape.odd ? k + 1 : k);
        auto bullets = initial_bullets(p, k, fc);
        for (long long li = 0; li < n; ++li) {
            BigInt l(li);
            InitialFormRow row;
            row.floor = 2 * k + fc;
            row.l = l;
            VertexLabel v = shape.odd ? make_odd_vertex(p, k, shape.stage, l)
                                      : make_even_vertex(p, k, shape.stage, l);
            row.bruteforce = eulerian_bruteforce(v);
            const Bullet* hit = nullptr;
            for (const Bullet& b : bullets)
                if (b.match(l)) {
                    hit = &b;
                    break;
                }
            if (!hit) {
                row.status = "uncovered";
            } else {
                row.label = hit->label;
                try {
                    row.printed = expand_bracket(p, hit->bracket(l));
                    row.status = row.printed == row.bruteforce ? "ok" : "mismatch";
                } catch (const NonIntegralForm&) {
                    row.status = "nonintegral";
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace hookpath
