#include "opchain/matrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opchain {

// Below this entry count the OpenMP fork/join overhead dominates.
static constexpr long kParallelCutoff = 1 << 12;

static void check_mul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch in mul");
}

Matrix mul(const Matrix& x, const Matrix& y) {
    check_mul(x, y);
    Matrix r(x.rows, y.cols);
    const long work = static_cast<long>(x.rows) * y.cols * (x.cols + 1);
#pragma omp parallel for schedule(static) if (work > kParallelCutoff)
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& xv = x.at(i, k);
            if (sgn(xv) == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Scalar& yv = y.at(k, j);
                if (sgn(yv) != 0) r.at(i, j) += xv * yv;
            }
        }
    }
    return r;
}

namespace serial_ref {
Matrix mul(const Matrix& x, const Matrix& y) {
    check_mul(x, y);
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            Scalar acc = 0;
            for (int k = 0; k < x.cols; ++k) acc += x.at(i, k) * y.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}
} // namespace serial_ref

Matrix add(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix shape mismatch in add");
    Matrix r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

Matrix sub(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix shape mismatch in sub");
    Matrix r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

Matrix neg(const Matrix& x) {
    Matrix r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = -x.a[i];
    return r;
}

Matrix scale(const Scalar& c, const Matrix& x) {
    Matrix r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = c * x.a[i];
    return r;
}

Matrix transpose(const Matrix& x) {
    Matrix r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Vec matvec(const Matrix& x, const Vec& v) {
    if (static_cast<int>(v.size()) != x.cols)
        throw std::invalid_argument("vector length mismatch in matvec");
    Vec r(x.rows);
    for (int i = 0; i < x.rows; ++i) {
        Scalar acc = 0;
        for (int j = 0; j < x.cols; ++j)
            if (sgn(x.at(i, j)) != 0 && sgn(v[j]) != 0) acc += x.at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Matrix hstack(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows) throw std::invalid_argument("row mismatch in hstack");
    Matrix r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
    if (x.cols != y.cols) throw std::invalid_argument("col mismatch in vstack");
    Matrix r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

Matrix block_diag(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
    return r;
}

Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            if (sgn(x.at(i, j)) == 0) continue;
            for (int p = 0; p < y.rows; ++p)
                for (int q = 0; q < y.cols; ++q)
                    if (sgn(y.at(p, q)) != 0)
                        r.at(i * y.rows + p, j * y.cols + q) = x.at(i, j) * y.at(p, q);
        }
    return r;
}

// Fraction-free forward elimination (Bareiss). Rows are first scaled to
// integer entries; one-step updates keep every intermediate integral with
// exact divisions only. Returns pivot columns; m holds the echelon rows.
static std::vector<int> bareiss_forward(Matrix& m) {
    for (int i = 0; i < m.rows; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols; ++j)
            if (sgn(m.at(i, j)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        if (l != 1)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) *= l;
    }
    std::vector<int> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (sgn(m.at(i, c)) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
        const mpz_class p = m.at(r, c).get_num();
        const long work = static_cast<long>(m.rows - r - 1) * (m.cols - c);
#pragma omp parallel for schedule(static) if (work > kParallelCutoff)
        for (int i = r + 1; i < m.rows; ++i) {
            const mpz_class mi = m.at(i, c).get_num();
            for (int j = c; j < m.cols; ++j) {
                mpz_class t = p * m.at(i, j).get_num() - mi * m.at(r, j).get_num();
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = mpq_class(t);
            }
        }
        prev = p;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Matrix rref(const Matrix& in) {
    Matrix m = in;
    std::vector<int> pivots = bareiss_forward(m);
    const int rk = static_cast<int>(pivots.size());
    // Backward pass: normalize pivots to 1 and clear entries above them.
    for (int k = rk - 1; k >= 0; --k) {
        const int c = pivots[k];
        const Scalar p = m.at(k, c);
        if (p != 1)
            for (int j = c; j < m.cols; ++j) m.at(k, j) /= p;
        const long work = static_cast<long>(k) * (m.cols - c);
#pragma omp parallel for schedule(static) if (work > kParallelCutoff)
        for (int i = 0; i < k; ++i) {
            const Scalar f = m.at(i, c);
            if (sgn(f) == 0) continue;
            for (int j = c; j < m.cols; ++j)
                if (sgn(m.at(k, j)) != 0) m.at(i, j) -= f * m.at(k, j);
        }
    }
    // Zero out numerical debris below the rank (already implied by echelon).
    for (int i = rk; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = 0;
    return m;
}

namespace serial_ref {
Matrix rref(const Matrix& in) {
    Matrix m = in;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (sgn(m.at(i, c)) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
        const Scalar p = m.at(r, c);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) /= p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const Scalar f = m.at(i, c);
            if (sgn(f) == 0) continue;
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return m;
}
} // namespace serial_ref

static std::vector<int> pivot_columns(const Matrix& r) {
    std::vector<int> piv;
    for (int i = 0; i < r.rows; ++i) {
        int c = -1;
        for (int j = (piv.empty() ? 0 : piv.back() + 1); j < r.cols; ++j)
            if (sgn(r.at(i, j)) != 0) { c = j; break; }
        if (c < 0) break;
        piv.push_back(c);
    }
    return piv;
}

int rank(const Matrix& m) { return static_cast<int>(pivot_columns(rref(m)).size()); }

bool is_injective(const Matrix& m) { return rank(m) == m.cols; }
bool is_surjective(const Matrix& m) { return rank(m) == m.rows; }

Matrix kernel(const Matrix& m) {
    const Matrix r = rref(m);
    const std::vector<int> piv = pivot_columns(r);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix k(m.cols, static_cast<int>(free_cols.size()));
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        k.at(free_cols[fi], static_cast<int>(fi)) = 1;
        for (size_t pi = 0; pi < piv.size(); ++pi)
            k.at(piv[pi], static_cast<int>(fi)) = -r.at(static_cast<int>(pi), free_cols[fi]);
    }
    return k;
}

Matrix column_space(const Matrix& m) {
    const Matrix r = rref(transpose(m));
    const int rk = static_cast<int>(pivot_columns(r).size());
    Matrix b(m.rows, rk);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < m.rows; ++j) b.at(j, i) = r.at(i, j);
    return b;
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& target) {
    if (static_cast<int>(target.size()) != m.rows)
        throw std::invalid_argument("target length mismatch in solve_affine");
    Matrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = target[i];
    }
    const Matrix r = rref(aug);
    const std::vector<int> piv = pivot_columns(r);
    if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
    AffineSolution s;
    s.particular.assign(m.cols, Scalar(0));
    for (size_t pi = 0; pi < piv.size(); ++pi)
        s.particular[piv[pi]] = r.at(static_cast<int>(pi), m.cols);
    s.kernel = kernel(m);
    return s;
}

Matrix express_in_columns(const Matrix& b, const Matrix& y) {
    if (b.rows != y.rows) throw std::invalid_argument("row mismatch in express_in_columns");
    const Matrix r = rref(hstack(b, y));
    const std::vector<int> piv = pivot_columns(r);
    if (static_cast<int>(piv.size()) > b.cols || (!piv.empty() && piv.back() >= b.cols))
        throw std::invalid_argument("express_in_columns: target not in span");
    if (static_cast<int>(piv.size()) < b.cols)
        throw std::invalid_argument("express_in_columns: basis columns dependent");
    Matrix x(b.cols, y.cols);
    for (int i = 0; i < b.cols; ++i)
        for (int j = 0; j < y.cols; ++j) x.at(i, j) = r.at(i, b.cols + j);
    return x;
}

} // namespace opchain
