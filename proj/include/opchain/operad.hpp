#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "opchain/matrix.hpp"
#include "opchain/perm.hpp"

namespace opchain {

// Arity-indexed spaces with left Sigma_n actions, given on the adjacent
// transpositions s_i (swap of slots i+1, i+2; 0-based generator index).
struct SigmaModule {
    int max_arity = 0;
    std::vector<int> dims;                   // dims[n], n = 1..max_arity
    std::vector<std::vector<Matrix>> gens;   // gens[n][i], i = 0..n-2

    int dim(int n) const { return (n >= 1 && n <= max_arity) ? dims[n] : 0; }
    Matrix action(int n, const Perm& sigma) const; // product over a generator word
    std::vector<std::string> check_presentation() const;
    SigmaModule dual() const; // transposed generator matrices
};

// Operad presented by partial compositions. comp keyed by (m, n, i) with
// 1-based slot i, present whenever m+n-1 <= max_arity; the matrix maps
// P(m) (x) P(n) -> P(m+n-1), column index a*dim(n)+b.
struct Operad {
    std::string name;
    SigmaModule mod;
    Vec unit; // coordinates in P(1)
    std::map<std::tuple<int, int, int>, Matrix> comp;

    int max_arity() const { return mod.max_arity; }
    int dim(int n) const { return mod.dim(n); }
    const Matrix& composition(int m, int n, int i) const;

    // gamma(q; args) by repeated partial composition from the last slot;
    // args[j] = (arity, coordinate vector).
    Vec multi_compose(int m, const Vec& q, const std::vector<std::pair<int, Vec>>& args) const;
};

struct Cooperad {
    std::string name;
    SigmaModule mod;
    Vec counit;
    std::map<std::tuple<int, int, int>, Matrix> decomp; // transposes of comp
};

struct CheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

CheckReport check_operad_axioms(const Operad& p);
Cooperad dualize(const Operad& p);
Operad dualize(const Cooperad& c, const std::string& name = "");
CheckReport check_cooperad_axioms(const Cooperad& c);

// Built-ins: As (regular representations, word substitution), Com (all
// one-dimensional), Lie truncated at arity 3.
Operad builtin_operad(const std::string& name, int max_arity);

using OperadPtr = std::shared_ptr<const Operad>;

} // namespace opchain
