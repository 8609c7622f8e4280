#include "cohiggs/linalg.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
        for (const auto& v : r) a_.push_back(v);
    }
}

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1L);
    return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
    ScalarMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const { return *this + (-o); }

ScalarMatrix ScalarMatrix::operator-() const {
    ScalarMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
    ScalarMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Scalar acc;
            for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
            m.at(i, j) = std::move(acc);
        }
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const Scalar& c) const {
    ScalarMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

Scalar ScalarMatrix::trace() const {
    Scalar acc;
    for (int i = 0; i < std::min(rows_, cols_); ++i) acc += at(i, i);
    return acc;
}

ScalarMatrix ScalarMatrix::transposed() const {
    ScalarMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Scalar ScalarMatrix::det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    switch (rows_) {
        case 0: return Scalar(1L);
        case 1: return at(0, 0);
        case 2: return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        case 3:
            return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                   at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        default: throw DimensionMismatch("determinant only implemented up to 3x3");
    }
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> reduce(ScalarMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int ScalarMatrix::rank() const {
    ScalarMatrix m = *this;
    return static_cast<int>(reduce(m).size());
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel() const {
    ScalarMatrix m = *this;
    auto pivots = reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_);
        v[free] = Scalar(1L);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> linear_solve(const ScalarMatrix& A,
                                                const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw DimensionMismatch("linear_solve rhs size");
    ScalarMatrix aug(A.rows(), A.cols() + 1);
    for (int r = 0; r < A.rows(); ++r) {
        for (int c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols()) = b[r];
    }
    auto pivots = reduce(aug);
    // inconsistent iff a pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
    std::vector<Scalar> x(A.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), A.cols());
    return x;
}

}  // namespace cohiggs
