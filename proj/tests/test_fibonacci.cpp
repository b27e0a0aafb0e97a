#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "hookpath/fibonacci.hpp"

#include "hookpath/eulerian.hpp"

#include <doctest.h>

#include <map>

using namespace hookpath;

namespace {

// Class-k table for one even floor out of the recursion.
std::map<BigInt, BigInt> rec_table(int p, int k, int s) {
    DiagramParams params(p, 2 * (k + s));
    for (const FibTable& ft : fib_recursive(params, 2 * (k + s)))
        if (ft.class_k == k && ft.floor == 2 * (k + s)) return ft.by_l;
    REQUIRE(false);
    return {};
}

}  // namespace

TEST_CASE("golden weighted counts") {
    CHECK(fib_bruteforce(make_even_vertex(3, 0, 1, 0)) == 1);
    CHECK(fib_bruteforce(make_even_vertex(3, 0, 2, 0)) == 5);
    CHECK(fib_closed_form(3, 0, 1, 0) == 1);
    CHECK(fib_closed_form(3, 0, 2, 0) == 5);
    CHECK(fib_closed_form(5, 2, 3, 0) == 202);
    for (long long l = 1; l <= 6; ++l) CHECK(fib_closed_form(5, 2, 3, l) == 206);
    CHECK(fib_closed_form(5, 2, 4, 10) == 1526);
}

TEST_CASE("the full stage-3 table for p=5, k=2") {
    const long long expected[25] = {202, 206, 206, 206, 206, 206, 206, 210, 210,
                                    210, 206, 206, 186, 190, 190, 190, 190, 190,
                                    190, 194, 194, 194, 194, 194, 194};
    auto table = rec_table(5, 2, 3);
    REQUIRE(table.size() == 25);
    for (long long l = 0; l < 25; ++l) {
        CHECK(table.at(BigInt(l)) == expected[l]);
        CHECK(fib_closed_form(5, 2, 3, l) == expected[l]);
    }
}

TEST_CASE("stage-4 value 1526 decomposes over its stage-3 column") {
    auto s3 = rec_table(5, 2, 3);
    BigInt column = 0;
    for (int t1 = 0; t1 < 5; ++t1) column += s3.at(BigInt(2 + 5 * t1));
    CHECK(column == 986);
    BigInt d1_term = BigInt(25) * 4 * 3;  // p^{s-1}(p-1) * (p+1)/2
    BigInt d2_term = BigInt(5) * 4 * 12;  // p^{s-2}(p-1) * window sum
    CHECK(d1_term == 300);
    CHECK(d2_term == 240);
    CHECK(column + d1_term + d2_term == 1526);
    CHECK(rec_table(5, 2, 4).at(BigInt(10)) == 1526);
}

TEST_CASE("recursion equals enumeration on small floors") {
    for (int p : {3, 5}) {
        for (int k = 0; k <= 2; ++k) {
            const int top = 2 * (k + 3);
            DiagramParams params(p, top);
            for (const FibTable& ft : fib_recursive(params, top)) {
                if (ft.class_k != k) continue;
                int s = (ft.floor - 2 * k) / 2;
                for (const auto& [l, v] : ft.by_l)
                    CHECK(v == fib_bruteforce(make_even_vertex(p, k, s, l)));
            }
        }
    }
}

TEST_CASE("boundary cells of the worked table agree with enumeration") {
    for (long long l : {9, 10, 12, 19}) {
        BigInt brute = fib_bruteforce(make_even_vertex(5, 2, 3, l));
        CHECK(rec_table(5, 2, 3).at(BigInt(l)) == brute);
        CHECK(fib_closed_form(5, 2, 3, l) == brute);
    }
}

TEST_CASE("closed form equals recursion on deep envelopes") {
    const std::vector<std::tuple<int, int, int>> envelopes = {
        {3, 0, 8}, {5, 0, 8}, {3, 1, 8}, {5, 1, 7}, {3, 2, 8}, {5, 2, 6}, {3, 3, 9},
    };
    for (const auto& [p, k, s_max] : envelopes) {
        DiagramParams params(p, 2 * (k + s_max));
        for (const FibTable& ft : fib_recursive(params, 2 * (k + s_max))) {
            if (ft.class_k != k) continue;
            int s = (ft.floor - 2 * k) / 2;
            for (const auto& [l, v] : ft.by_l)
                CHECK(fib_closed_form(p, k, s, l) == v);
        }
    }
}

TEST_CASE("interval classes partition each offset range") {
    for (int p : {3, 5}) {
        for (int k = 2; k <= 3; ++k) {
            for (int s = 3; s <= k + 4; ++s) {
                auto classes = interval_classes(p, k, s);
                // Coverage: each offset in exactly one class.
                const BigInt n = ipow(p, k);
                std::map<BigInt, int> hits;
                for (const IntervalClass& c : classes) {
                    CHECK(c.lo <= c.hi);
                    for (BigInt l = c.lo; l <= c.hi; ++l) ++hits[l];
                }
                BigInt covered = 0;
                for (const auto& [l, h] : hits) {
                    CHECK(h == 1);
                    CHECK(l >= 0);
                    CHECK(l < n);
                    ++covered;
                }
                CHECK(covered == n);
                // Count law.
                const long long expect =
                    s < k + 2 ? (s - 2) * static_cast<long long>(p) + 2
                              : static_cast<long long>(k) * p;
                CHECK(BigInt(classes.size()) == expect);
                // Constancy of the recursion across each class.
                auto table = rec_table(p, k, s);
                for (const IntervalClass& c : classes) {
                    const BigInt v = table.at(c.lo);
                    for (BigInt l = c.lo; l <= c.hi; ++l) CHECK(table.at(l) == v);
                    CHECK(fib_closed_form(p, k, s, c.lo) == v);
                }
            }
        }
    }
}

TEST_CASE("interval classes at the regime boundary use the stable families") {
    auto classes = interval_classes(5, 2, 4);  // s == k+2
    bool has_d = false;
    for (const IntervalClass& c : classes) has_d |= c.kind == 'd';
    CHECK_FALSE(has_d);
    CHECK(BigInt(classes.size()) == 10);  // kp
}

TEST_CASE("derivative of the histogram polynomial counts weighted paths") {
    for (int p : {3, 5}) {
        for (int k = 0; k <= 1; ++k) {
            for (int s = 1; s <= 3; ++s) {
                BigInt n = ipow(p, k);
                for (BigInt l = 0; l < n; ++l)
                    CHECK(derivative_identity_check(make_even_vertex(p, k, s, l)));
            }
        }
    }
}

TEST_CASE("recorded printed-table conflicts hold against both engines") {
    auto conflicts = printed_table_conflicts();
    REQUIRE(conflicts.size() == 2);
    for (const FibDiscrepancy& d : conflicts) {
        CHECK(d.p == 5);
        CHECK(d.k == 2);
        CHECK(d.s == 3);
        CHECK(d.printed != d.actual);
        CHECK(rec_table(d.p, d.k, d.s).at(d.l) == d.actual);
        CHECK(fib_bruteforce(make_even_vertex(d.p, d.k, d.s, d.l)) == d.actual);
        CHECK(!d.source.empty());
    }
    CHECK(conflicts[0].l == 10);
    CHECK(conflicts[0].printed == 210);
    CHECK(conflicts[0].actual == 206);
    CHECK(conflicts[1].l == 19);
    CHECK(conflicts[1].printed == 190);
    CHECK(conflicts[1].actual == 194);
}

TEST_CASE("stage-1 tables are constant at half the branch count") {
    for (int p : {3, 5, 7}) {
        for (int k = 0; k <= 2; ++k) {
            DiagramParams params(p, 2 * k + 2);
            for (const FibTable& ft : fib_recursive(params, 2 * k + 2)) {
                if (ft.class_k != k) continue;
                for (const auto& [l, v] : ft.by_l) CHECK(v == (p - 1) / 2);
            }
            CHECK(fib_closed_form(p, k, 1, 0) == (p - 1) / 2);
        }
    }
}

TEST_CASE("closed form validates its arguments") {
    CHECK_THROWS_AS(fib_closed_form(4, 0, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(fib_closed_form(3, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(fib_closed_form(3, 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(fib_closed_form(3, -1, 2, 0), std::invalid_argument);
}
