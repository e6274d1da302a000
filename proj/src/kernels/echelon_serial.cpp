// Reference Gauss-Jordan elimination. Kept deliberately plain: it is the
// oracle the parallel kernel is tested and benchmarked against.

#include "jetob/linalg.hpp"

namespace jetob {

EchelonForm reduce_serial(RationalMatrix a) {
    EchelonForm out;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a(p, c)))
            ++p;
        if (p == rows)
            continue;
        a.swap_rows(r, p);

        const Scalar inv = 1 / Scalar(a(r, c));
        for (std::size_t j = c; j < cols; ++j)
            a(r, j) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c)))
                continue;
            const Scalar f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(a(r, j)))
                    a(i, j) -= f * a(r, j);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

} // namespace jetob
