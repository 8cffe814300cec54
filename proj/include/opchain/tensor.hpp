#pragma once

#include <vector>

#include "opchain/graded.hpp"
#include "opchain/perm.hpp"

namespace opchain {

// Degree-truncated tensor power of a graded space. The degree-d component is
// spanned by tuples of base basis elements (identified by global index) whose
// degrees sum to d; tuples are ordered lexicographically by factor indices.
struct TensorSpace {
    GradedSpace base;
    int arity = 1;
    int max_degree = 0;

    std::vector<int> offsets;       // global index = offsets[deg] + i
    std::vector<int> global_degree; // degree of each global base index
    std::vector<std::vector<std::vector<int>>> tuples; // tuples[d][k] = factor tuple

    int dim(int d) const {
        return (d >= 1 && d <= max_degree) ? static_cast<int>(tuples[d].size()) : 0;
    }
    const std::vector<int>& tuple_at(int d, int k) const { return tuples[d][k]; }
    int index_of(int d, const std::vector<int>& tuple) const; // -1 when absent
    int global_index(int deg, int i) const { return offsets[deg] + i; }
};

TensorSpace make_tensor_space(const GradedSpace& base, int arity, int max_degree);

// Graded space of the tensor power itself, with synthetic labels.
GradedSpace tensor_graded_space(const TensorSpace& t);

// Signed permutation matrix of the left Sigma_n action on the degree-d
// component: sigma sends the factor at position i to position sigma(i),
// with the Koszul sign of the shuffle.
Matrix tensor_action(const TensorSpace& t, const Perm& sigma, int degree);

// Differential on the tensor power by the signed Leibniz rule; diffs[n] is
// the base differential C_n -> C_{n-1}.
Matrix tensor_leibniz(const TensorSpace& t, const std::vector<Matrix>& diffs, int degree);

// Induced map between degree-d components with one degree-preserving graded
// map per factor: factors[i][deg] maps src base degree deg to dst base.
Matrix tensor_map(const TensorSpace& src, const TensorSpace& dst,
                  const std::vector<std::vector<Matrix>>& factors, int degree);

} // namespace opchain
