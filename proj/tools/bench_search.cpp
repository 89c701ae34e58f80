// Benchmark comparing the serial and the OpenMP trial fan-out of
// lambda5_search on the same configuration, and checking that both
// produce the identical report.
#include <iostream>

#include <omp.h>

#include "pierce/families.hpp"
#include "pierce/json_io.hpp"

int main(int argc, char** argv) {
    using namespace pierce;

    families::GeneratorConfig config;
    config.seed = 20250811;
    config.family_size = 6;
    int trials = 24;
    if (argc > 1) trials = std::atoi(argv[1]);
    if (argc > 2) config.family_size = std::atoi(argv[2]);

    std::cout << "lambda5_search: trials=" << trials
              << " sets=" << config.family_size
              << " threads=" << omp_get_max_threads() << "\n";

    const double t0 = omp_get_wtime();
    const auto serial = families::lambda5_search(config, trials, {.parallel = false});
    const double t1 = omp_get_wtime();
    const auto parallel = families::lambda5_search(config, trials, {.parallel = true});
    const double t2 = omp_get_wtime();

    const double serial_ms = (t1 - t0) * 1000.0;
    const double parallel_ms = (t2 - t1) * 1000.0;
    std::cout << "serial   " << serial_ms << " ms\n";
    std::cout << "parallel " << parallel_ms << " ms\n";
    std::cout << "speedup  " << serial_ms / parallel_ms << "x\n";

    if (io::search_report_to_json(serial) != io::search_report_to_json(parallel)) {
        std::cout << "MISMATCH: serial and parallel reports differ\n";
        return 1;
    }
    std::cout << "reports identical, max lambda = " << serial.max_lambda << "\n";
    return 0;
}
