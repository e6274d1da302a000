#include "jetob/linalg.hpp"

#include <algorithm>
#include <string>

#include "jetob/error.hpp"

namespace jetob {

void check_dense_size(std::size_t rows, std::size_t cols, const char* what) {
    if (rows != 0 && cols > kMaxDenseEntries / rows)
        fail(ErrorKind::Resource, std::string(what) + ": dense system of " + std::to_string(rows) + " x " +
                                      std::to_string(cols) + " exceeds the limit of " +
                                      std::to_string(kMaxDenseEntries) + " entries");
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_dense_size(rows, cols, "matrix");
    data_.resize(rows * cols);
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    return m;
}

Vector RationalMatrix::column(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

Vector RationalMatrix::apply(std::span<const Scalar> x) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!is_zero(x[j]) && !is_zero((*this)(i, j)))
                out[i] += (*this)(i, j) * x[j];
    return out;
}

std::vector<Vector> nullspace_basis(const EchelonForm& rref) {
    const RationalMatrix& r = rref.reduced;
    std::vector<bool> is_pivot(r.cols(), false);
    for (const auto p : rref.pivot_columns)
        is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < r.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(r.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < rref.rank(); ++i)
            v[rref.pivot_columns[i]] = -r(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

EchelonForm reduce(RationalMatrix a) {
    // Below this size thread start-up dominates the mpq arithmetic.
    constexpr std::size_t kParallelThreshold = 64 * 64;
    if (a.rows() * a.cols() < kParallelThreshold)
        return reduce_serial(std::move(a));
    return reduce_parallel(std::move(a));
}

LinearSolver::LinearSolver(const RationalMatrix& a) : rows_(a.rows()), cols_(a.cols()) {
    check_dense_size(rows_, cols_ + rows_, "linear solver");
    RationalMatrix aug(rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug(i, j) = a(i, j);
        aug(i, cols_ + i) = 1;
    }
    EchelonForm ef = reduce(std::move(aug));
    for (const auto p : ef.pivot_columns)
        if (p < cols_)
            pivots_.push_back(p);

    transform_ = RationalMatrix(rows_, rows_);
    EchelonForm left;
    left.reduced = RationalMatrix(rows_, cols_);
    left.pivot_columns = pivots_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            left.reduced(i, j) = ef.reduced(i, j);
        for (std::size_t j = 0; j < rows_; ++j)
            transform_(i, j) = ef.reduced(i, cols_ + j);
    }
    nullspace_ = nullspace_basis(left);
    for (const auto p : pivots_)
        image_.push_back(a.column(p));
}

Vector LinearSolver::transform(std::span<const Scalar> b) const {
    if (b.size() != rows_)
        fail(ErrorKind::Internal, "right-hand side has wrong length");
    return transform_.apply(b);
}

bool LinearSolver::consistent(std::span<const Scalar> b) const {
    const Vector y = transform(b);
    for (std::size_t i = rank(); i < rows_; ++i)
        if (!is_zero(y[i]))
            return false;
    return true;
}

std::optional<Vector> LinearSolver::solve(std::span<const Scalar> b) const {
    const Vector y = transform(b);
    for (std::size_t i = rank(); i < rows_; ++i)
        if (!is_zero(y[i]))
            return std::nullopt;
    Vector x(cols_);
    for (std::size_t i = 0; i < rank(); ++i)
        x[pivots_[i]] = y[i];
    return x;
}

Vector SpanSolver::reduce_against(Vector& v) const {
    Vector multipliers(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Row& row = rows_[i];
        if (is_zero(v[row.pivot]))
            continue;
        const Scalar f = v[row.pivot];
        multipliers[i] = f;
        for (std::size_t j = row.pivot; j < dimension_; ++j)
            if (!is_zero(row.values[j]))
                v[j] -= f * row.values[j];
    }
    return multipliers;
}

bool SpanSolver::add(std::span<const Scalar> input) {
    if (input.size() != dimension_)
        fail(ErrorKind::Internal, "vector has wrong dimension for span");
    Vector v(input.begin(), input.end());
    const Vector multipliers = reduce_against(v);
    const auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !is_zero(x); });
    if (lead == v.end())
        return false;

    const std::size_t pivot = static_cast<std::size_t>(lead - v.begin());
    const std::size_t index = rows_.size();
    // Row = (v - sum m_i row_i) / lead, expressed over accepted vectors.
    Vector combination(index + 1);
    combination[index] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (is_zero(multipliers[i]))
            continue;
        for (std::size_t a = 0; a < rows_[i].combination.size(); ++a)
            combination[a] -= multipliers[i] * rows_[i].combination[a];
    }
    const Scalar inv = 1 / Scalar(*lead);
    for (auto& x : v)
        x *= inv;
    for (auto& x : combination)
        x *= inv;
    for (auto& row : rows_)
        row.combination.resize(index + 1);
    rows_.push_back(Row{std::move(v), pivot, std::move(combination)});
    return true;
}

bool SpanSolver::contains(std::span<const Scalar> input) const {
    Vector v(input.begin(), input.end());
    reduce_against(v);
    return is_zero_vector(v);
}

std::optional<Vector> SpanSolver::coordinates(std::span<const Scalar> input) const {
    if (input.size() != dimension_)
        fail(ErrorKind::Internal, "vector has wrong dimension for span");
    Vector v(input.begin(), input.end());
    const Vector multipliers = reduce_against(v);
    if (!is_zero_vector(v))
        return std::nullopt;
    Vector out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (is_zero(multipliers[i]))
            continue;
        for (std::size_t a = 0; a < rows_[i].combination.size(); ++a)
            out[a] += multipliers[i] * rows_[i].combination[a];
    }
    return out;
}

bool is_zero_vector(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_zero(x); });
}

} // namespace jetob
