#include "opchain/graded.hpp"

#include <set>
#include <stdexcept>

#include "opchain/errors.hpp"

namespace opchain {

void GradedSpace::set_dim(int n, int d, const std::string& label_stem) {
    if (n < 1 || n > max_degree) throw std::invalid_argument("degree out of range");
    dims[n] = d;
    labels[n].clear();
    for (int i = 0; i < d; ++i)
        labels[n].push_back(label_stem + "." + std::to_string(n) + "." + std::to_string(i));
}

void GradedSpace::validate() const {
    if (max_degree < 0 || static_cast<int>(dims.size()) != max_degree + 1 ||
        static_cast<int>(labels.size()) != max_degree + 1)
        throw std::invalid_argument("graded space shape mismatch");
    if (dims[0] != 0) throw std::invalid_argument("degree 0 component must be absent");
    for (int n = 1; n <= max_degree; ++n) {
        if (dims[n] < 0 || static_cast<int>(labels[n].size()) != dims[n])
            throw std::invalid_argument("label count mismatch at degree " + std::to_string(n));
        std::set<std::string> seen(labels[n].begin(), labels[n].end());
        if (static_cast<int>(seen.size()) != dims[n])
            throw std::invalid_argument("duplicate labels at degree " + std::to_string(n));
    }
}

ChainComplex::ChainComplex(GradedSpace s) : space(std::move(s)) {
    d.resize(space.max_degree + 1);
    for (int n = 1; n <= space.max_degree; ++n)
        d[n] = Matrix::zero(space.dim(n - 1), space.dim(n));
}

std::vector<int> ChainComplex::dim_vector() const {
    std::vector<int> v;
    for (int n = 1; n <= max_degree(); ++n) v.push_back(dim(n));
    return v;
}

void ChainComplex::validate() const {
    space.validate();
    if (static_cast<int>(d.size()) != max_degree() + 1)
        throw std::invalid_argument("differential count mismatch");
    for (int n = 1; n <= max_degree(); ++n) {
        if (d[n].rows != space.dim(n - 1) || d[n].cols != space.dim(n))
            throw std::invalid_argument("differential shape mismatch at degree " + std::to_string(n));
        if (n >= 2 && !mul(d[n - 1], d[n]).is_zero())
            throw MathError("NotAComplex", "d∘d != 0 at degree " + std::to_string(n));
    }
}

ChainMap::ChainMap(ChainComplex s, ChainComplex t) : source(std::move(s)), target(std::move(t)) {
    if (source.max_degree() != target.max_degree())
        throw std::invalid_argument("chain map endpoints have different degree bounds");
    comp.resize(source.max_degree() + 1);
    for (int n = 1; n <= source.max_degree(); ++n)
        comp[n] = Matrix::zero(target.dim(n), source.dim(n));
}

void ChainMap::validate() const {
    for (int n = 1; n <= max_degree(); ++n)
        if (comp[n].rows != target.dim(n) || comp[n].cols != source.dim(n))
            throw std::invalid_argument("chain map component shape mismatch at " + std::to_string(n));
    for (int n = 2; n <= max_degree(); ++n)
        if (!(mul(target.diff(n), comp[n]) == mul(comp[n - 1], source.diff(n))))
            throw std::invalid_argument("chain map does not commute with d at degree " + std::to_string(n));
}

ChainComplex zero_complex(int max_degree) { return ChainComplex(GradedSpace(max_degree)); }

ChainComplex sphere(int n, int max_degree) {
    GradedSpace s(max_degree);
    s.set_dim(n, 1, "e");
    return ChainComplex(std::move(s));
}

ChainComplex disk(int n, int max_degree) {
    GradedSpace s(max_degree);
    s.set_dim(n, 1, "u");
    s.set_dim(n - 1, 1, "v");
    ChainComplex c(std::move(s));
    c.d[n].at(0, 0) = 1;
    return c;
}

ChainComplex pad_to(const ChainComplex& c, int max_degree) {
    if (max_degree < c.max_degree()) throw std::invalid_argument("pad_to below current degree");
    if (max_degree == c.max_degree()) return c;
    GradedSpace s(max_degree);
    for (int n = 1; n <= c.max_degree(); ++n) {
        s.dims[n] = c.dim(n);
        s.labels[n] = c.space.labels[n];
    }
    ChainComplex r(std::move(s));
    for (int n = 1; n <= c.max_degree(); ++n) r.d[n] = c.d[n];
    return r;
}

ChainComplex truncate_to(const ChainComplex& c, int max_degree) {
    if (max_degree >= c.max_degree()) return pad_to(c, max_degree);
    GradedSpace s(max_degree);
    for (int n = 1; n <= max_degree; ++n) {
        s.dims[n] = c.dim(n);
        s.labels[n] = c.space.labels[n];
    }
    ChainComplex r(std::move(s));
    for (int n = 1; n <= max_degree; ++n) r.d[n] = c.d[n];
    return r;
}

ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y,
                        ChainMap* inc_x, ChainMap* inc_y, ChainMap* pr_x, ChainMap* pr_y) {
    if (x.max_degree() != y.max_degree())
        throw std::invalid_argument("direct_sum needs equal degree bounds");
    const int D = x.max_degree();
    GradedSpace s(D);
    for (int n = 1; n <= D; ++n) {
        s.dims[n] = x.dim(n) + y.dim(n);
        for (const auto& l : x.space.labels[n]) s.labels[n].push_back("L:" + l);
        for (const auto& l : y.space.labels[n]) s.labels[n].push_back("R:" + l);
    }
    ChainComplex r(std::move(s));
    for (int n = 1; n <= D; ++n) r.d[n] = block_diag(x.diff(n), y.diff(n));
    auto make_inc = [&](const ChainComplex& part, int side) {
        ChainMap m(part, r);
        for (int n = 1; n <= D; ++n)
            for (int i = 0; i < part.dim(n); ++i) m.at(n).at(side == 0 ? i : x.dim(n) + i, i) = 1;
        return m;
    };
    auto make_pr = [&](const ChainComplex& part, int side) {
        ChainMap m(r, part);
        for (int n = 1; n <= D; ++n)
            for (int i = 0; i < part.dim(n); ++i) m.at(n).at(i, side == 0 ? i : x.dim(n) + i) = 1;
        return m;
    };
    if (inc_x) *inc_x = make_inc(x, 0);
    if (inc_y) *inc_y = make_inc(y, 1);
    if (pr_x) *pr_x = make_pr(x, 0);
    if (pr_y) *pr_y = make_pr(y, 1);
    return r;
}

// Representatives of Z modulo span(B): columns of Z whose pivots in
// rref([B | Z]) fall outside the B block.
static Matrix quotient_representatives(const Matrix& boundaries, const Matrix& cycles) {
    const Matrix stacked = hstack(boundaries, cycles);
    const Matrix r = rref(stacked);
    std::vector<int> reps;
    int row = 0;
    for (int c = 0; c < stacked.cols && row < stacked.rows; ++c) {
        if (sgn(r.at(row, c)) != 0) {
            if (c >= boundaries.cols) reps.push_back(c - boundaries.cols);
            ++row;
        }
    }
    Matrix out(cycles.rows, static_cast<int>(reps.size()));
    for (size_t k = 0; k < reps.size(); ++k)
        for (int i = 0; i < cycles.rows; ++i) out.at(i, static_cast<int>(k)) = cycles.at(i, reps[k]);
    return out;
}

HomologyReport homology(const ChainComplex& c) {
    c.validate();
    const int D = c.max_degree();
    HomologyReport h;
    h.betti.assign(D + 1, 0);
    h.cycles.assign(D + 1, Matrix());
    h.representatives.assign(D + 1, Matrix());
    for (int n = 1; n <= D; ++n) {
        const Matrix z = kernel(c.diff(n));
        const Matrix b = (n < D) ? column_space(c.diff(n + 1)) : Matrix::zero(c.dim(n), 0);
        h.cycles[n] = z;
        h.representatives[n] = quotient_representatives(b, z);
        h.betti[n] = h.representatives[n].cols;
    }
    return h;
}

bool is_acyclic(const ChainComplex& c) {
    const HomologyReport h = homology(c);
    for (int b : h.betti)
        if (b != 0) return false;
    return true;
}

ConeResult cone_of_identity(const ChainComplex& x) {
    const int D = x.max_degree();
    int top = D;
    while (top > 0 && x.dim(top) == 0) --top;
    const int DV = std::max(D, top == 0 ? D : top + 1); // room for the shifted top piece
    GradedSpace s(DV);
    for (int n = 1; n <= DV; ++n) {
        const int shifted = x.dim(n - 1), plain = x.dim(n);
        s.dims[n] = shifted + plain;
        for (int i = 0; i < shifted; ++i) s.labels[n].push_back(x.space.labels[n - 1][i] + "'");
        for (int i = 0; i < plain; ++i) s.labels[n].push_back(x.space.labels[n][i]);
    }
    ChainComplex v(std::move(s));
    for (int n = 2; n <= DV; ++n) {
        const int sh_s = x.dim(n - 1), pl_s = x.dim(n);
        const int sh_t = x.dim(n - 2), pl_t = x.dim(n - 1);
        Matrix m(sh_t + pl_t, sh_s + pl_s);
        if (sh_t > 0 && sh_s > 0) {
            const Matrix& dx = x.diff(n - 1); // x' -> -dx'
            for (int i = 0; i < dx.rows; ++i)
                for (int j = 0; j < dx.cols; ++j) m.at(i, j) = -dx.at(i, j);
        }
        for (int i = 0; i < sh_s; ++i) m.at(sh_t + i, i) = 1; // x' summand of x'+dx
        if (pl_t > 0 && pl_s > 0) {
            const Matrix& dx = x.diff(n);
            for (int i = 0; i < dx.rows; ++i)
                for (int j = 0; j < dx.cols; ++j) m.at(sh_t + i, sh_s + j) = dx.at(i, j);
        }
        v.d[n] = std::move(m);
    }
    ChainMap emb(pad_to(x, DV), v);
    for (int n = 1; n <= D; ++n)
        for (int i = 0; i < x.dim(n); ++i) emb.at(n).at(x.dim(n - 1) + i, i) = 1;
    return {std::move(v), std::move(emb)};
}

ChainMap identity_map(const ChainComplex& c) {
    ChainMap m(c, c);
    for (int n = 1; n <= c.max_degree(); ++n) m.at(n) = Matrix::identity(c.dim(n));
    return m;
}

ChainMap zero_map(const ChainComplex& s, const ChainComplex& t) { return ChainMap(s, t); }

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap m(f.source, g.target);
    for (int n = 1; n <= m.max_degree(); ++n) m.at(n) = mul(g.at(n), f.at(n));
    return m;
}

bool maps_equal(const ChainMap& f, const ChainMap& g) {
    if (f.max_degree() != g.max_degree()) return false;
    for (int n = 1; n <= f.max_degree(); ++n)
        if (!(f.at(n) == g.at(n))) return false;
    return true;
}

// Matrix of H_n(f) in the representative bases chosen by homology().
static Matrix homology_map(const ChainMap& f, const HomologyReport& hs, const HomologyReport& ht, int n) {
    const Matrix& reps = hs.representatives[n];
    const Matrix img = mul(f.at(n), reps);
    const Matrix b = (n < f.max_degree()) ? column_space(f.target.diff(n + 1))
                                          : Matrix::zero(f.target.dim(n), 0);
    const Matrix basis = hstack(ht.representatives[n], b);
    if (basis.cols == 0) return Matrix::zero(0, reps.cols);
    const Matrix coords = express_in_columns(basis, img);
    Matrix top(ht.representatives[n].cols, reps.cols);
    for (int i = 0; i < top.rows; ++i)
        for (int j = 0; j < top.cols; ++j) top.at(i, j) = coords.at(i, j);
    return top;
}

ChainFlags classify_chain_map(const ChainMap& f) {
    f.validate();
    ChainFlags flags;
    flags.weak_equivalence = true;
    flags.fibration = true;
    flags.cofibration = true;
    const HomologyReport hs = homology(f.source), ht = homology(f.target);
    for (int n = 1; n <= f.max_degree(); ++n) {
        const Matrix h = homology_map(f, hs, ht, n);
        if (h.rows != h.cols || rank(h) != h.rows) flags.weak_equivalence = false;
        if (!is_surjective(f.at(n))) flags.fibration = false;
        if (!is_injective(f.at(n))) flags.cofibration = false;
    }
    return flags;
}

ChainLiftResult chain_lift(const ChainMap& i, const ChainMap& p, const ChainMap& a, const ChainMap& b) {
    if (!maps_equal(compose(p, a), compose(b, i)))
        throw std::invalid_argument("chain_lift: square does not commute");
    const ChainComplex& B = i.target;
    const ChainComplex& X = p.source;
    const int D = B.max_degree();
    ChainLiftResult res;
    res.lift = ChainMap(B, X);
    for (int deg = 1; deg <= D; ++deg) {
        const int xr = X.dim(deg), bc = B.dim(deg);
        const int unknowns = xr * bc;
        auto idx = [&](int r, int c) { return r * bc + c; };
        std::vector<Vec> rows;
        Vec rhs;
        auto add_row = [&](Vec&& row, Scalar v) {
            rows.push_back(std::move(row));
            rhs.push_back(std::move(v));
        };
        const Matrix& id_ = i.at(deg); // h∘i = a
        for (int r = 0; r < xr; ++r)
            for (int c = 0; c < id_.cols; ++c) {
                Vec row(unknowns, Scalar(0));
                for (int k = 0; k < bc; ++k) row[idx(r, k)] = id_.at(k, c);
                add_row(std::move(row), a.at(deg).at(r, c));
            }
        const Matrix& pd = p.at(deg); // p∘h = b
        for (int q = 0; q < pd.rows; ++q)
            for (int c = 0; c < bc; ++c) {
                Vec row(unknowns, Scalar(0));
                for (int k = 0; k < xr; ++k) row[idx(k, c)] = pd.at(q, k);
                add_row(std::move(row), b.at(deg).at(q, c));
            }
        if (deg >= 2) { // d∘h_deg = h_{deg-1}∘d
            const Matrix known = mul(res.lift.at(deg - 1), B.diff(deg));
            const Matrix& dx = X.diff(deg);
            for (int q = 0; q < dx.rows; ++q)
                for (int c = 0; c < bc; ++c) {
                    Vec row(unknowns, Scalar(0));
                    for (int k = 0; k < xr; ++k) row[idx(k, c)] = dx.at(q, k);
                    add_row(std::move(row), known.at(q, c));
                }
        }
        Matrix sys(static_cast<int>(rows.size()), unknowns);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < unknowns; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
        auto sol = solve_affine(sys, rhs);
        if (!sol) {
            res.found = false;
            res.blocking_degree = deg;
            return res;
        }
        for (int r = 0; r < xr; ++r)
            for (int c = 0; c < bc; ++c) res.lift.at(deg).at(r, c) = sol->particular[idx(r, c)];
    }
    res.found = true;
    return res;
}

} // namespace opchain
