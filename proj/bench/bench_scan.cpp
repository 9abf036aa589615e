// Timing comparison: serial reference scan vs the parallel hole search.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cutpoly/graph.hpp"
#include "cutpoly/normality.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<cutpoly::HoleSearchResult()>& fn,
               cutpoly::HoleSearchResult& out) {
    auto t0 = Clock::now();
    out = fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench(const std::string& label, const cutpoly::Graph& g, long long degree) {
    cutpoly::HoleSearchResult rs, rp;
    double serial = time_ms([&] { return cutpoly::find_hole_serial(g, degree); }, rs);
    double parallel = time_ms([&] { return cutpoly::find_hole(g, degree); }, rp);
    const char* agree =
        rs.status == rp.status &&
                rs.hole.has_value() == rp.hole.has_value() &&
                (!rs.hole || (rs.hole->point.x == rp.hole->point.x &&
                              rs.hole->point.alpha == rp.hole->point.alpha))
            ? "results agree"
            : "RESULTS DIFFER";
    std::printf("%-16s degree %lld  serial %9.1f ms  parallel %9.1f ms  speedup %5.2fx  %s\n",
                label.c_str(), degree, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree);
    std::fflush(stdout);
}

}  // namespace

int main() {
    bench("K5", cutpoly::make_named("K", {5}), 4);
    bench("prism", cutpoly::make_named("prism"), 3);
    bench("V8", cutpoly::make_named("V8"), 3);
    bench("K33", cutpoly::make_named("Kab", {3, 3}), 3);
    return 0;
}
