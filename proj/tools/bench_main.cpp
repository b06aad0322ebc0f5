// Compares the serial reference kernels against the OpenMP ones and
// verifies that both produce identical results while timing them.

#include "cbc/report_io.hpp"
#include "cbc/runner.hpp"
#include "cbc/search.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    cbc::u64 bound = 3000;
    int jobs = 4;
    if (argc > 1) bound = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) jobs = std::atoi(argv[2]);

    std::cout << "kernel                    serial      " << jobs << " threads  speedup\n";

    {
        cbc::SearchConfig cfg;
        cfg.bound = bound;
        cbc::SpfTable spf = cbc::sieve_spf(bound);

        auto t0 = clock_type::now();
        cbc::SearchSummary serial = cbc::search_serial(cfg, spf);
        double ts = seconds_since(t0);

        cfg.jobs = jobs;
        t0 = clock_type::now();
        cbc::SearchSummary parallel = cbc::search_parallel(cfg, spf);
        double tp = seconds_since(t0);

        if (cbc::summary_to_json(serial).dump() != cbc::summary_to_json(parallel).dump()) {
            std::cerr << "mismatch: serial and parallel search summaries differ\n";
            return 1;
        }
        std::printf("search bound=%-10llu %8.3fs   %8.3fs   %5.2fx\n",
                    static_cast<unsigned long long>(bound), ts, tp, ts / tp);
    }

    {
        cbc::GridOptions grid;
        grid.p_set = {2, 3, 5, 7};
        grid.pa_cap = 128;
        grid.check_globs = {"thm1.2/*"};
        auto requests = cbc::build_grid(grid);

        auto t0 = clock_type::now();
        auto serial = cbc::run_requests(requests, 1);
        double ts = seconds_since(t0);

        t0 = clock_type::now();
        auto parallel = cbc::run_requests(requests, jobs);
        double tp = seconds_since(t0);

        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i)
            same = cbc::report_to_json(serial[i]).dump() == cbc::report_to_json(parallel[i]).dump();
        if (!same) {
            std::cerr << "mismatch: serial and parallel verify reports differ\n";
            return 1;
        }
        std::printf("verify thm1.2 grid        %8.3fs   %8.3fs   %5.2fx\n", ts, tp, ts / tp);
    }

    return 0;
}
