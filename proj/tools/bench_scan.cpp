// Benchmark: serial reference scan vs the OpenMP path, same workload.
// Also verifies that every parallel width reproduces the serial bytes.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quadindex/scan.hpp"

using namespace quadindex;

namespace {

double run_once(scan::ScanOptions opts, int jobs, std::string& bytes) {
    opts.jobs = jobs;
    std::ostringstream os;
    auto t0 = std::chrono::steady_clock::now();
    scan::run_scan(opts, os);
    auto t1 = std::chrono::steady_clock::now();
    bytes = os.str();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long n_lo = 5, n_hi = 6, coeff = 6;
    if (argc > 1) coeff = std::atol(argv[1]);
    if (argc > 2) n_hi = std::atol(argv[2]);

    scan::ScanOptions opts;
    opts.n = {n_lo, n_hi};
    opts.a = {-coeff, coeff};
    opts.b = {-coeff, coeff};
    opts.c = {-coeff, coeff};
    opts.seed = 42;

    std::string serial_bytes;
    double t_serial = run_once(opts, 1, serial_bytes);
    std::cout << "workload: n in " << n_lo << ".." << n_hi << ", |a|,|b|,|c| <= " << coeff
              << "\n";
    std::cout << "serial reference: " << t_serial << " s\n";

#ifdef _OPENMP
    int hw = omp_get_max_threads();
    std::vector<int> widths{2, 4};
    if (hw > 4) widths.push_back(hw);
    for (int jobs : widths) {
        std::string bytes;
        double t = run_once(opts, jobs, bytes);
        bool same = bytes == serial_bytes;
        std::cout << "openmp jobs=" << jobs << ": " << t << " s, speedup " << t_serial / t
                  << "x, output " << (same ? "identical" : "DIFFERS") << "\n";
        if (!same) return 1;
    }
#else
    std::cout << "(built without OpenMP; serial path only)\n";
#endif
    return 0;
}
