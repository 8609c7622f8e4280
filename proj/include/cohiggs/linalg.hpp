#pragma once

#include "cohiggs/scalar.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace cohiggs {

/// Small dense matrix over the exact scalar field. Used for point
/// evaluations of transition data, conic matrices and the handful of exact
/// linear solves the classification needs.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static ScalarMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[r * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[r * cols_ + c]; }

    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const Scalar& c) const;
    ScalarMatrix operator-() const;
    bool operator==(const ScalarMatrix& o) const;
    bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    Scalar trace() const;
    ScalarMatrix transposed() const;
    Scalar det() const;  // up to 3x3

    int rank() const;
    /// Basis of the right kernel (each vector has cols() entries).
    std::vector<std::vector<Scalar>> kernel() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Exact solution of A x = b by Gaussian elimination; nullopt when the
/// system is inconsistent. When underdetermined, free variables are set to
/// zero (any solution witnesses solvability).
std::optional<std::vector<Scalar>> linear_solve(const ScalarMatrix& A,
                                                const std::vector<Scalar>& b);

}  // namespace cohiggs
