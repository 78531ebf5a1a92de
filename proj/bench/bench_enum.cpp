// Benchmark: OpenMP enumeration / report kernels against the serial
// reference implementations.

#include "bdq/centralizer.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bdq;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F> double timed(F&& f) {
    auto t0 = Clock::now();
    f();
    return seconds(t0, Clock::now());
}

void bench_type(SimpleType type) {
    std::vector<AdmissibleTriple> serial_out, parallel_out;
    double ts = timed([&] { serial_out = enumerate_triples_serial(type, true); });
    double tp = timed([&] { parallel_out = enumerate_triples(type, true); });
    if (serial_out != parallel_out) {
        std::fprintf(stderr, "MISMATCH in enumeration for %s\n", type.str().c_str());
        std::exit(1);
    }
    auto lattice = root_coordinates(type, LatticeTag::P);
    std::vector<ReportRow> rs, rp;
    double cs = timed([&] { rs = centralizer_report_serial(serial_out, lattice); });
    double cp = timed([&] { rp = centralizer_report(parallel_out, lattice); });
    for (size_t i = 0; i < rs.size(); ++i) {
        if (!(rs[i].shape == rp[i].shape)) {
            std::fprintf(stderr, "MISMATCH in report for %s\n", type.str().c_str());
            std::exit(1);
        }
    }
    std::printf("%-4s triples %6zu | enumerate %8.3fs serial %8.3fs parallel (x%.2f) | "
                "shapes %8.3fs serial %8.3fs parallel (x%.2f)\n",
                type.str().c_str(), serial_out.size(), ts, tp, ts / tp, cs, cp, cs / cp);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif
    for (SimpleType t : {SimpleType{Family::A, 4}, SimpleType{Family::D, 5}, SimpleType{Family::E, 6},
                         SimpleType{Family::E, 7}}) {
        bench_type(t);
    }
    return 0;
}
