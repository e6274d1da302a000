// Gauss-Jordan elimination with the per-pivot row updates distributed over
// OpenMP threads. Each pivot step is a data-parallel sweep over rows; the
// pivot row itself is read-only during the sweep.

#include <cstdint>
#include <vector>

#include "jetob/linalg.hpp"

namespace jetob {

EchelonForm reduce_parallel(RationalMatrix a) {
    EchelonForm out;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> support; // nonzero columns of the pivot row
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a(p, c)))
            ++p;
        if (p == rows)
            continue;
        a.swap_rows(r, p);

        const Scalar inv = 1 / Scalar(a(r, c));
        support.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (is_zero(a(r, j)))
                continue;
            a(r, j) *= inv;
            support.push_back(j);
        }

        const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t ii = 0; ii < n; ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            if (i == r || is_zero(a(i, c)))
                continue;
            const Scalar f = a(i, c);
            for (const std::size_t j : support)
                a(i, j) -= f * a(r, j);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

} // namespace jetob
