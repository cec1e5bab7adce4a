// Compares the serial reference kernels with the OpenMP ones: isomorphism-free
// enumeration and the extremal search over the three forbidden families.
// Results are cross-checked, so a speedup is only reported for matching output.
//
//   bench_extremal [--max-n N] [--jobs J]   (default max-n 7; 8 takes minutes)
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spectra/enumerate.hpp"
#include "spectra/forbidden.hpp"

using namespace spectra;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = 7;
    int jobs = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--max-n") == 0 && i + 1 < argc)
            max_n = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
            jobs = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench_extremal [--max-n N] [--jobs J]\n");
            return 2;
        }
    }
    if (max_n < 5 || max_n > 8) {
        std::fprintf(stderr, "--max-n must be in 5..8\n");
        return 2;
    }
    set_jobs(jobs);
#ifdef _OPENMP
    int threads = resolve_jobs(jobs);
    if (threads == 0) threads = omp_get_max_threads();
    std::printf("OpenMP enabled, %d thread(s)\n", threads);
#else
    std::printf("built without OpenMP, parallel kernel runs serially\n");
#endif

    std::printf("%-28s %6s %10s %12s %12s %8s\n", "task", "n", "classes", "serial ms",
                "parallel ms", "speedup");
    for (int n = 5; n <= max_n; ++n) {
        auto t0 = Clock::now();
        std::vector<Graph> serial = enumerate_classes_serial(n, Constraints{true, false});
        double serial_ms = ms_since(t0);
        t0 = Clock::now();
        std::vector<Graph> parallel = enumerate_classes(n, Constraints{true, false}, jobs);
        double parallel_ms = ms_since(t0);
        if (serial != parallel) {
            std::fprintf(stderr, "enumeration mismatch at n=%d\n", n);
            return 1;
        }
        std::printf("%-28s %6d %10zu %12.1f %12.1f %8.2f\n", "enumerate no-isolated", n,
                    serial.size(), serial_ms, parallel_ms, serial_ms / parallel_ms);
    }

    struct Task {
        const char* label;
        std::vector<Pattern> family;
    };
    std::vector<Task> tasks;
    tasks.push_back({"extremal theta(1,2,2)", {}});
    tasks.back().family.push_back(pattern_theta(1, 2, 2));
    tasks.push_back({"extremal theta(1,2,3)", {}});
    tasks.back().family.push_back(pattern_theta(1, 2, 3));
    tasks.push_back({"extremal {theta(1,2,2),F5}", {}});
    tasks.back().family.push_back(pattern_theta(1, 2, 2));
    tasks.back().family.push_back(pattern_f5());

    for (const Task& task : tasks) {
        for (int n = 6; n <= max_n; ++n) {
            auto t0 = Clock::now();
            ExtremalReport serial = extremal_search_serial(n, task.family);
            double serial_ms = ms_since(t0);
            t0 = Clock::now();
            ExtremalReport parallel = extremal_search(n, task.family, jobs);
            double parallel_ms = ms_since(t0);
            if (serial.witnesses != parallel.witnesses || serial.max_q != parallel.max_q ||
                serial.count_free != parallel.count_free) {
                std::fprintf(stderr, "extremal mismatch at n=%d\n", n);
                return 1;
            }
            std::printf("%-28s %6d %10llu %12.1f %12.1f %8.2f\n", task.label, n,
                        static_cast<unsigned long long>(serial.count_free), serial_ms, parallel_ms,
                        serial_ms / parallel_ms);
        }
    }
    return 0;
}
