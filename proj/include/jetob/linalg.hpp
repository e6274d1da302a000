#pragma once

// Dense exact linear algebra over the rationals. The reduced-row-echelon
// kernel exists in two forms: a serial reference and an OpenMP version that
// parallelizes row elimination. Both produce the same (unique) RREF.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jetob/scalar.hpp"

namespace jetob {

using Vector = std::vector<Scalar>;

/// Dense matrices above this many entries are refused with Error(Resource).
inline constexpr std::size_t kMaxDenseEntries = 8'000'000;

void check_dense_size(std::size_t rows, std::size_t cols, const char* what);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    /// Rows of equal length; `cols` is used when `rows` is empty.
    static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static RationalMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    Vector column(std::size_t j) const;

    void swap_rows(std::size_t a, std::size_t b);

    Vector apply(std::span<const Scalar> x) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct EchelonForm {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination; leftmost pivots, leading entries normalized to 1.
EchelonForm reduce_serial(RationalMatrix a);
/// Same result as reduce_serial, with row elimination spread over OpenMP threads.
EchelonForm reduce_parallel(RationalMatrix a);
/// Dispatches on size: small matrices go to the serial kernel.
EchelonForm reduce(RationalMatrix a);

/// Basis of {x : A x = 0} read off an RREF, one vector per free column in
/// increasing column order (free entry 1, other free entries 0).
std::vector<Vector> nullspace_basis(const EchelonForm& rref);

/// Repeated solves of A x = b for a fixed A.
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(const RationalMatrix& a);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }

    bool consistent(std::span<const Scalar> b) const;
    /// Particular solution with free variables zero; nullopt if inconsistent.
    std::optional<Vector> solve(std::span<const Scalar> b) const;

    const std::vector<Vector>& nullspace() const { return nullspace_; }
    /// Columns of A at pivot positions: a basis of the image.
    const std::vector<Vector>& image_basis() const { return image_; }

private:
    Vector transform(std::span<const Scalar> b) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> pivots_;
    RationalMatrix transform_; // E with E A = rref(A)
    std::vector<Vector> nullspace_;
    std::vector<Vector> image_;
};

/// Incrementally built span with exact membership and coordinates relative to
/// the accepted vectors (in acceptance order).
class SpanSolver {
public:
    explicit SpanSolver(std::size_t dimension = 0) : dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return rows_.size(); }

    /// Accepts v when it is independent of the current span.
    bool add(std::span<const Scalar> v);
    bool contains(std::span<const Scalar> v) const;
    std::optional<Vector> coordinates(std::span<const Scalar> v) const;

private:
    struct Row {
        Vector values;
        std::size_t pivot;
        Vector combination; // over accepted vectors
    };

    /// Reduces v in place; returns the multipliers used per row.
    Vector reduce_against(Vector& v) const;

    std::size_t dimension_;
    std::vector<Row> rows_;
};

bool is_zero_vector(std::span<const Scalar> v);

} // namespace jetob
