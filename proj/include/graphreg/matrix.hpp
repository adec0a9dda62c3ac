#ifndef GRAPHREG_MATRIX_HPP
#define GRAPHREG_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace graphreg {

// Dense row-major matrix of doubles. Everything in this project is tiny
// (level counts K <= ~16, segment counts in the hundreds), so the
// implementation favors clarity over blocking tricks.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    std::vector<double> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix transpose(const Matrix& a);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& v);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Eigendecomposition of a symmetric matrix: a = vectors * diag(values) * vectors^T.
// Eigenvalues ascending, eigenvectors in the matching columns.
struct SymmetricEigen {
    std::vector<double> values;
    Matrix vectors;
};

// Cyclic Jacobi rotations; throws Error("numerical-failure") if the
// off-diagonal mass has not vanished after max_sweeps sweeps.
SymmetricEigen eigen_symmetric(Matrix a, int max_sweeps = 100);

// Gauss-Jordan with partial pivoting; throws Error("numerical-failure")
// on a singular pivot.
Matrix inverse(Matrix a);

} // namespace graphreg

#endif
