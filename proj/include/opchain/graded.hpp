#pragma once

#include <string>
#include <vector>

#include "opchain/matrix.hpp"

namespace opchain {

// Positively graded space truncated at max_degree: components in degrees
// 1..max_degree, degree 0 always absent. Index 0 of dims/labels is unused.
struct GradedSpace {
    int max_degree = 0;
    std::vector<int> dims;                            // dims[n], n = 0..max_degree
    std::vector<std::vector<std::string>> labels;     // labels[n][i]

    GradedSpace() = default;
    explicit GradedSpace(int d) : max_degree(d), dims(d + 1, 0), labels(d + 1) {}

    int dim(int n) const { return (n >= 1 && n <= max_degree) ? dims[n] : 0; }
    int total_dim() const {
        int t = 0;
        for (int n = 1; n <= max_degree; ++n) t += dims[n];
        return t;
    }
    void set_dim(int n, int d, const std::string& label_stem);
    void validate() const; // unique labels per degree, shapes consistent
};

struct ChainComplex {
    GradedSpace space;
    // d[n]: C_n -> C_{n-1} for n = 1..max_degree; d[1] has zero rows.
    std::vector<Matrix> d;

    ChainComplex() = default;
    explicit ChainComplex(GradedSpace s);

    int max_degree() const { return space.max_degree; }
    int dim(int n) const { return space.dim(n); }
    const Matrix& diff(int n) const { return d[n]; }
    std::vector<int> dim_vector() const;

    void validate() const; // shapes and d∘d = 0, exact
    bool is_zero() const { return space.total_dim() == 0; }
};

struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<Matrix> comp; // comp[n]: source_n -> target_n, n = 1..max_degree

    ChainMap() = default;
    ChainMap(ChainComplex s, ChainComplex t);

    int max_degree() const { return source.max_degree(); }
    const Matrix& at(int n) const { return comp[n]; }
    Matrix& at(int n) { return comp[n]; }

    void validate() const; // commutes with differentials, exact
};

struct HomologyReport {
    // entry n (1..max_degree): betti number, cycle basis, and cycle
    // representatives of a homology basis.
    std::vector<int> betti;
    std::vector<Matrix> cycles;
    std::vector<Matrix> representatives;
};

struct ChainFlags {
    bool weak_equivalence = false;
    bool fibration = false;
    bool cofibration = false;
};

struct ChainLiftResult {
    bool found = false;
    ChainMap lift;
    int blocking_degree = -1;
};

ChainComplex zero_complex(int max_degree);
ChainComplex sphere(int n, int max_degree);        // one generator in degree n
ChainComplex disk(int n, int max_degree);          // generators in degrees n, n-1, d = id
ChainComplex pad_to(const ChainComplex& c, int max_degree);
ChainComplex truncate_to(const ChainComplex& c, int max_degree);

ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y,
                        ChainMap* inc_x = nullptr, ChainMap* inc_y = nullptr,
                        ChainMap* pr_x = nullptr, ChainMap* pr_y = nullptr);

HomologyReport homology(const ChainComplex& c); // throws MathError("NotAComplex")
bool is_acyclic(const ChainComplex& c);

struct ConeResult {
    ChainComplex cone;
    ChainMap embedding;
};
// Mapping cone of the identity: V_n = X_{n-1} (+) X_n, d(x', x) = (-dx', x'+dx).
// Raises max_degree by one so the result is acyclic in every stored degree.
ConeResult cone_of_identity(const ChainComplex& x);

ChainFlags classify_chain_map(const ChainMap& f);

ChainMap compose(const ChainMap& g, const ChainMap& f); // g after f
ChainMap identity_map(const ChainComplex& c);
ChainMap zero_map(const ChainComplex& s, const ChainComplex& t);
bool maps_equal(const ChainMap& f, const ChainMap& g);

// Degreewise exact lift in a commuting square: h with h∘i = a, p∘h = b,
// d∘h = h∘d. Solves an affine system per degree, free variables pinned to 0.
ChainLiftResult chain_lift(const ChainMap& i, const ChainMap& p,
                           const ChainMap& a, const ChainMap& b);

} // namespace opchain
