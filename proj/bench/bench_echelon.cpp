// Serial vs OpenMP reduced row echelon form on dense rational matrices.
//
//   bench_echelon [size ...]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "jetob/linalg.hpp"
#include "jetob/parallel.hpp"

using namespace jetob;

namespace {

RationalMatrix sample(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Scalar(num(rng), den(rng));
    return m;
}

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int threads = configure_threads_from_env();
    std::vector<std::size_t> sizes;
    for (int i = 1; i < argc; ++i)
        sizes.push_back(static_cast<std::size_t>(std::atoi(argv[i])));
    if (sizes.empty())
        sizes = {16, 32, 64, 96};

    std::mt19937_64 rng(1);
    std::cout << "threads " << threads << "\n";
    std::cout << "size   serial(s)  parallel(s)  speedup  agree\n";
    for (const auto n : sizes) {
        const RationalMatrix m = sample(n, rng);
        EchelonForm s, p;
        const double ts = seconds([&] { s = reduce_serial(m); });
        const double tp = seconds([&] { p = reduce_parallel(m); });
        std::cout << n << "\t" << ts << "\t" << tp << "\t" << ts / tp << "\t"
                  << (s.reduced == p.reduced && s.pivot_columns == p.pivot_columns ? "yes" : "NO") << "\n";
    }
    return 0;
}
