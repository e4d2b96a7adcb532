// Benchmark: serial reference enumeration vs the OpenMP unit scan, checking
// that both produce the same extremal result while timing them.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "sigma6/search.hpp"

using namespace sigma6;

namespace {

double run_once(int n, int threads, ExtremalReport& rep) {
    ScanOptions opts;
    opts.threads = threads;
    auto t0 = std::chrono::steady_clock::now();
    rep = brute_force_min(n, opts);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> orders{17, 19, 20, 21};
    bool check_only = false;
    for (int a = 1; a < argc; ++a) {
        if (!std::strcmp(argv[a], "--n") && a + 1 < argc) {
            orders = {std::atoi(argv[++a])};
        } else if (!std::strcmp(argv[a], "--check-only")) {
            check_only = true;
        } else {
            std::cerr << "usage: sigma6_bench [--n N] [--check-only]\n";
            return 2;
        }
    }

    std::cout << "n        classes   serial_s   parallel_s   speedup   p_min\n";
    for (int n : orders) {
        ExtremalReport rs, rp;
        double ts = run_once(n, 1, rs);
        double tp = run_once(n, 0, rp);
        bool same = rs.p_min_tenths == rp.p_min_tenths &&
                    rs.minimizer_codes == rp.minimizer_codes &&
                    rs.trees_enumerated == rp.trees_enumerated;
        std::printf("%-8d %-9lld %-10.3f %-12.3f %-9.2f %s%s\n", n,
                    static_cast<long long>(rs.trees_enumerated), ts, tp, ts / tp,
                    DeciValue{rs.p_min_tenths}.str().c_str(), same ? "" : "  MISMATCH");
        if (!same) {
            std::cerr << "serial and parallel scans disagree at n=" << n << "\n";
            return 1;
        }
        if (check_only) break;
    }
    return 0;
}
