#pragma once

#include <vector>

namespace opchain {

// One-line permutation, 0-based: p[i] is the image of position i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_valid_perm(const Perm& p);
Perm compose_perm(const Perm& s, const Perm& t); // s∘t, t applied first
Perm inverse_perm(const Perm& p);

// sign = product over inversions (i<j, p[i]>p[j]) of (-1)^(deg[i]*deg[j]).
int koszul_sign(const Perm& p, const std::vector<int>& degs);

// Generator word: p = s_{w[0]} ∘ s_{w[1]} ∘ ... ∘ s_{w.back()}, where s_i
// swaps positions i and i+1 and the rightmost factor acts first.
std::vector<int> adjacent_word(const Perm& p);

// Permutation of sum(sizes) positions moving block i (size sizes[i], inner
// order kept) to block slot p[i].
Perm block_perm(const Perm& p, const std::vector<int>& sizes);

} // namespace opchain
