#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opchain/rational.hpp"

namespace opchain {

// Dense matrix over Q, row-major. A LinearMap from a cols-dimensional space
// to a rows-dimensional space, acting on column vectors.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Matrix zero(int r, int c) { return Matrix(r, c); }

    bool is_zero() const {
        for (const auto& x : a)
            if (sgn(x) != 0) return false;
        return true;
    }
    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

using Vec = std::vector<Scalar>;

// Result of an affine solve: one solution plus a basis of the kernel, or
// nothing when the target is not in the image.
struct AffineSolution {
    Vec particular;
    Matrix kernel; // columns span ker f
};

Matrix mul(const Matrix& x, const Matrix& y);
Matrix add(const Matrix& x, const Matrix& y);
Matrix sub(const Matrix& x, const Matrix& y);
Matrix neg(const Matrix& x);
Matrix scale(const Scalar& c, const Matrix& x);
Matrix transpose(const Matrix& x);
Vec matvec(const Matrix& x, const Vec& v);
Matrix hstack(const Matrix& x, const Matrix& y);
Matrix vstack(const Matrix& x, const Matrix& y);
Matrix block_diag(const Matrix& x, const Matrix& y);
Matrix kron(const Matrix& x, const Matrix& y); // index (i,j) = i*inner+j, x outer

// Canonical reduced row echelon form (unique per matrix). The production
// path runs fraction-free Bareiss elimination with OpenMP row updates; the
// serial rational reference below must produce bit-identical output.
Matrix rref(const Matrix& m);
int rank(const Matrix& m);
bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);

// Canonical basis of ker m as matrix columns (free-variable vectors read
// off the RREF, ordered by free column index).
Matrix kernel(const Matrix& m);

// Canonical basis of im m as matrix columns (nonzero rows of rref(m^T)).
Matrix column_space(const Matrix& m);

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& target);

// Coordinates of each column of y in the column basis b. Requires b to have
// independent columns and y's columns to lie in their span.
Matrix express_in_columns(const Matrix& b, const Matrix& y);

// Serial reference implementations, kept for testing the parallel kernels.
namespace serial_ref {
Matrix mul(const Matrix& x, const Matrix& y);
Matrix rref(const Matrix& m);
} // namespace serial_ref

} // namespace opchain
