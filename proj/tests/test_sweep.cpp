#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "hookpath/sweep.hpp"

#include "hookpath/eulerian.hpp"
#include "hookpath/fibonacci.hpp"
#include "hookpath/stats.hpp"

#include <doctest.h>

using namespace hookpath;

TEST_CASE("serial and parallel kernels agree on every sweep") {
    for (int p : {3, 5}) {
        for (int k = 0; k <= 2; ++k) {
            for (int s = 1; s <= 3; ++s) {
                CHECK(eulerian_floor_sweep_serial(p, k, s, false) ==
                      eulerian_floor_sweep_parallel(p, k, s, false));
                CHECK(fib_floor_sweep_serial(p, k, s) ==
                      fib_floor_sweep_parallel(p, k, s));
                CHECK(sign_balance_floor_sweep_serial(p, k, s, false) ==
                      sign_balance_floor_sweep_parallel(p, k, s, false));
                if (s >= 2) {
                    CHECK(eulerian_floor_sweep_serial(p, k, s, true) ==
                          eulerian_floor_sweep_parallel(p, k, s, true));
                    CHECK(sign_balance_floor_sweep_serial(p, k, s, true) ==
                          sign_balance_floor_sweep_parallel(p, k, s, true));
                }
            }
        }
    }
}

TEST_CASE("sweeps match direct per-vertex evaluation") {
    const int p = 5, k = 1;
    for (int s = 1; s <= 3; ++s) {
        auto eu = eulerian_floor_sweep_parallel(p, k, s, false);
        auto fb = fib_floor_sweep_parallel(p, k, s);
        auto sb = sign_balance_floor_sweep_parallel(p, k, s, false);
        REQUIRE(eu.size() == 5);
        REQUIRE(fb.size() == 5);
        REQUIRE(sb.size() == 5);
        for (long long l = 0; l < 5; ++l) {
            VertexLabel v = make_even_vertex(p, k, s, l);
            CHECK(eu[static_cast<size_t>(l)] == eulerian_bruteforce(v));
            CHECK(fb[static_cast<size_t>(l)] == fib_bruteforce(v));
            CHECK(sb[static_cast<size_t>(l)] == sign_balance(v));
        }
    }
    auto eu_odd = eulerian_floor_sweep_parallel(p, k, 3, true);
    REQUIRE(eu_odd.size() == 25);
    for (long long l1 = 0; l1 < 25; ++l1)
        CHECK(eu_odd[static_cast<size_t>(l1)] ==
              eulerian_bruteforce(make_odd_vertex(p, k, 3, l1)));
}

TEST_CASE("thread count control") {
    int before = sweep_thread_count();
    CHECK(before >= 1);
    set_sweep_thread_count(1);
    CHECK(sweep_thread_count() == 1);
    auto one = fib_floor_sweep_parallel(3, 1, 3);
    set_sweep_thread_count(0);  // restore default
    auto many = fib_floor_sweep_parallel(3, 1, 3);
    CHECK(one == many);
}

TEST_CASE("sweep arguments are validated") {
    CHECK_THROWS_AS(eulerian_floor_sweep_serial(4, 0, 2, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(eulerian_floor_sweep_serial(3, 0, 1, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(fib_floor_sweep_serial(3, -1, 2), std::invalid_argument);
}
