// Benchmark: OpenMP kernels against their serial reference implementations
// (Monte Carlo sampling and the numerator partition sum).

#include <omp.h>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#include "qvol/montecarlo.hpp"
#include "qvol/quadric.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s) {
    std::cout << std::left << std::setw(28) << name << " serial " << std::setw(9) << serial_s
              << "s  parallel " << std::setw(9) << parallel_s << "s  speedup "
              << std::setprecision(3) << serial_s / parallel_s << "x\n"
              << std::setprecision(6);
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t samples = 2'000'000;
    unsigned box = 6;
    if (argc > 1 && std::string(argv[1]) == "--quick") {
        samples = 50'000;
        box = 4;
    }

    std::cout << "threads: " << omp_get_max_threads() << "\n";

    {
        const qvol::Spectrum s({qvol::Rational(1), qvol::Rational(2)}, {qvol::Rational(3)}, 1);
        auto t0 = Clock::now();
        const qvol::MCEstimate serial = qvol::mc_fraction_serial(
            {1.0, 2.0, -3.0, 0.0}, samples, 42);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const qvol::MCEstimate parallel = qvol::mc_fraction(s, samples, 42);
        const double tp = seconds_since(t0);
        if (serial.fraction != parallel.fraction) {
            std::cerr << "mc serial/parallel mismatch\n";
            return 1;
        }
        report("mc_fraction (" + std::to_string(samples) + ")", ts, tp);
    }

    {
        qvol::RationalTuple x, y;
        for (unsigned i = 1; i <= box; ++i) x.push_back(qvol::Rational(i, i + 1));
        for (unsigned i = 1; i <= box; ++i) y.push_back(qvol::Rational(2 * i + 1, i));
        auto t0 = Clock::now();
        const qvol::Rational serial = qvol::numerator_value_serial(x, y);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const qvol::Rational parallel = qvol::numerator_value(x, y);
        const double tp = seconds_since(t0);
        if (serial != parallel) {
            std::cerr << "numerator serial/parallel mismatch\n";
            return 1;
        }
        report("numerator_value (" + std::to_string(box) + "," + std::to_string(box) + ")", ts,
               tp);
    }

    return 0;
}
