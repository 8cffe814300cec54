#include "opchain/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace opchain {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

bool is_valid_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm compose_perm(const Perm& s, const Perm& t) {
    Perm r(t.size());
    for (size_t i = 0; i < t.size(); ++i) r[i] = s[t[i]];
    return r;
}

Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

int koszul_sign(const Perm& p, const std::vector<int>& degs) {
    long exp = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) exp += static_cast<long>(degs[i]) * degs[j];
    return (exp % 2 == 0) ? 1 : -1;
}

std::vector<int> adjacent_word(const Perm& p) {
    Perm cur = p;
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]); // cur := cur ∘ s_i
                swaps.push_back(static_cast<int>(i));
                changed = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps; // p = s_{swaps[0]} ∘ ... ∘ s_{swaps.back()}
}

Perm block_perm(const Perm& p, const std::vector<int>& sizes) {
    const int m = static_cast<int>(p.size());
    std::vector<int> out_sizes(m, 0);
    for (int i = 0; i < m; ++i) out_sizes[p[i]] = sizes[i];
    std::vector<int> in_off(m, 0), out_off(m, 0);
    for (int i = 1; i < m; ++i) in_off[i] = in_off[i - 1] + sizes[i - 1];
    for (int i = 1; i < m; ++i) out_off[i] = out_off[i - 1] + out_sizes[i - 1];
    int total = 0;
    for (int s : sizes) total += s;
    Perm r(total);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < sizes[i]; ++k) r[in_off[i] + k] = out_off[p[i]] + k;
    return r;
}

static void enumerate_tuples(const TensorSpace& t, int arity, int degree,
                             std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (arity == 0) {
        if (degree == 0) out.push_back(cur);
        return;
    }
    if (degree < arity) return; // every factor has degree >= 1
    const int total = static_cast<int>(t.global_degree.size());
    for (int g = 0; g < total; ++g) {
        const int dg = t.global_degree[g];
        if (dg > degree - (arity - 1)) continue;
        cur.push_back(g);
        enumerate_tuples(t, arity - 1, degree - dg, cur, out);
        cur.pop_back();
    }
}

TensorSpace make_tensor_space(const GradedSpace& base, int arity, int max_degree) {
    if (arity < 1) throw std::invalid_argument("tensor arity must be >= 1");
    TensorSpace t;
    t.base = base;
    t.arity = arity;
    t.max_degree = max_degree;
    t.offsets.assign(base.max_degree + 2, 0);
    for (int d = 1; d <= base.max_degree; ++d) {
        t.offsets[d + 1] = t.offsets[d] + base.dim(d);
        for (int i = 0; i < base.dim(d); ++i) t.global_degree.push_back(d);
    }
    t.tuples.assign(max_degree + 1, {});
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<int> cur;
        enumerate_tuples(t, arity, d, cur, t.tuples[d]);
    }
    return t;
}

int TensorSpace::index_of(int d, const std::vector<int>& tuple) const {
    if (d < 1 || d > max_degree) return -1;
    const auto& v = tuples[d];
    auto it = std::lower_bound(v.begin(), v.end(), tuple);
    if (it == v.end() || *it != tuple) return -1;
    return static_cast<int>(it - v.begin());
}

GradedSpace tensor_graded_space(const TensorSpace& t) {
    GradedSpace s(t.max_degree);
    for (int d = 1; d <= t.max_degree; ++d) {
        s.dims[d] = t.dim(d);
        for (int k = 0; k < t.dim(d); ++k) {
            std::string l = "t(";
            const auto& tup = t.tuple_at(d, k);
            for (size_t i = 0; i < tup.size(); ++i)
                l += (i ? "," : "") + std::to_string(tup[i]);
            s.labels[d].push_back(l + ")");
        }
    }
    return s;
}

Matrix tensor_action(const TensorSpace& t, const Perm& sigma, int degree) {
    const int n = t.arity;
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("perm arity mismatch");
    Matrix m(t.dim(degree), t.dim(degree));
    std::vector<int> degs(n), img(n);
    for (int k = 0; k < t.dim(degree); ++k) {
        const auto& tup = t.tuple_at(degree, k);
        for (int i = 0; i < n; ++i) {
            degs[i] = t.global_degree[tup[i]];
            img[sigma[i]] = tup[i];
        }
        const int s = koszul_sign(sigma, degs);
        const int j = t.index_of(degree, img);
        m.at(j, k) = s;
    }
    return m;
}

Matrix tensor_leibniz(const TensorSpace& t, const std::vector<Matrix>& diffs, int degree) {
    Matrix m(t.dim(degree - 1), t.dim(degree));
    for (int k = 0; k < t.dim(degree); ++k) {
        const auto& tup = t.tuple_at(degree, k);
        int sign_exp = 0;
        for (int i = 0; i < t.arity; ++i) {
            const int g = tup[i];
            const int dg = t.global_degree[g];
            if (dg >= 2) {
                const Matrix& dm = diffs[dg];
                const int col = g - t.offsets[dg];
                for (int r = 0; r < dm.rows; ++r) {
                    if (sgn(dm.at(r, col)) == 0) continue;
                    std::vector<int> img = tup;
                    img[i] = t.global_index(dg - 1, r);
                    const int j = t.index_of(degree - 1, img);
                    m.at(j, k) += (sign_exp % 2 == 0) ? dm.at(r, col) : -dm.at(r, col);
                }
            }
            sign_exp += dg;
        }
    }
    return m;
}

Matrix tensor_map(const TensorSpace& src, const TensorSpace& dst,
                  const std::vector<std::vector<Matrix>>& factors, int degree) {
    if (static_cast<int>(factors.size()) != src.arity || src.arity != dst.arity)
        throw std::invalid_argument("tensor_map factor count mismatch");
    Matrix m(dst.dim(degree), src.dim(degree));
    for (int k = 0; k < src.dim(degree); ++k) {
        const auto& tup = src.tuple_at(degree, k);
        std::vector<std::pair<std::vector<int>, Scalar>> terms = {{{}, Scalar(1)}};
        for (int i = 0; i < src.arity; ++i) {
            const int g = tup[i];
            const int dg = src.global_degree[g];
            const Matrix& fm = factors[i][dg];
            const int col = g - src.offsets[dg];
            std::vector<std::pair<std::vector<int>, Scalar>> next;
            for (int r = 0; r < fm.rows; ++r) {
                if (sgn(fm.at(r, col)) == 0) continue;
                for (const auto& [pref, c] : terms) {
                    auto p2 = pref;
                    p2.push_back(dst.global_index(dg, r));
                    next.emplace_back(std::move(p2), c * fm.at(r, col));
                }
            }
            terms = std::move(next);
            if (terms.empty()) break;
        }
        for (const auto& [tgt, c] : terms) {
            const int j = dst.index_of(degree, tgt);
            if (j >= 0) m.at(j, k) += c;
        }
    }
    return m;
}

} // namespace opchain
