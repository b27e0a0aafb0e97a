// Times the serial floor sweeps against their OpenMP counterparts on a fixed
// workload and reports the speedup.  Exits nonzero if the results disagree.
#include "hookpath/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace hookpath;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename Fn>
auto timed(Fn&& fn, double& out_seconds) {
    auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    auto t1 = std::chrono::steady_clock::now();
    out_seconds = seconds(t0, t1);
    return result;
}

int run_case(const char* name, int p, int k, int s, bool odd) {
    std::printf("-- %s: p=%d k=%d stage=%d %s floor --\n", name, p, k, s,
                odd ? "odd" : "even");
    int bad = 0;

    double ts = 0, tp = 0;
    auto eu_s = timed([&] { return eulerian_floor_sweep_serial(p, k, s, odd); }, ts);
    auto eu_p = timed([&] { return eulerian_floor_sweep_parallel(p, k, s, odd); }, tp);
    if (eu_s != eu_p) {
        std::printf("   descent polynomials: MISMATCH\n");
        ++bad;
    } else {
        std::printf("   descent polynomials: serial %.3fs, parallel %.3fs (x%.2f)\n",
                    ts, tp, tp > 0 ? ts / tp : 0.0);
    }

    if (!odd) {
        auto fb_s = timed([&] { return fib_floor_sweep_serial(p, k, s); }, ts);
        auto fb_p = timed([&] { return fib_floor_sweep_parallel(p, k, s); }, tp);
        if (fb_s != fb_p) {
            std::printf("   weighted counts:     MISMATCH\n");
            ++bad;
        } else {
            std::printf("   weighted counts:     serial %.3fs, parallel %.3fs (x%.2f)\n",
                        ts, tp, tp > 0 ? ts / tp : 0.0);
        }
    }

    auto sb_s = timed([&] { return sign_balance_floor_sweep_serial(p, k, s, odd); }, ts);
    auto sb_p = timed([&] { return sign_balance_floor_sweep_parallel(p, k, s, odd); }, tp);
    if (sb_s != sb_p) {
        std::printf("   sign balance:        MISMATCH\n");
        ++bad;
    } else {
        std::printf("   sign balance:        serial %.3fs, parallel %.3fs (x%.2f)\n",
                    ts, tp, tp > 0 ? ts / tp : 0.0);
    }
    return bad;
}

}  // namespace

int main(int argc, char** argv) {
    // Optional override: bench_sweep [threads]
    if (argc > 1) set_sweep_thread_count(std::atoi(argv[1]));
    std::printf("sweep threads: %d\n", sweep_thread_count());

    int bad = 0;
    bad += run_case("small", 5, 1, 4, false);
    bad += run_case("medium", 5, 2, 4, false);
    bad += run_case("large", 3, 2, 9, true);

    if (bad > 0) {
        std::printf("FAILED: %d kernel pair(s) disagree\n", bad);
        return 1;
    }
    std::printf("all kernel pairs agree\n");
    return 0;
}
