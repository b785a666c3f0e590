#pragma once

#include <optional>
#include <vector>

#include "permstat/signed_permutation.hpp"

namespace permstat {

/// Number of inverted pairs i < j with x_i > x_j, letters compared in the
/// ordinary integer order.
int inv(const LetterWord& r);
int inv(const SignedPermutation& sigma);

/// Positions 1 ≤ i < m with x_i > x_{i+1}, ascending.
std::vector<int> des_set(const LetterWord& r);
std::vector<int> des_set(const SignedPermutation& sigma);
int des(const LetterWord& r);

/// Neg(σ⁻¹) = { -σ(i) : σ(i) < 0 }, read off the window without forming
/// the inverse.  Returned ascending.
std::vector<int> neg_of_inverse(const SignedPermutation& sigma);
int neg_sum(const SignedPermutation& sigma);

/// Left-to-right minima counted from position 2 on.
int del_b(const SignedPermutation& sigma);

/// Coxeter length in B_n: inv(σ) + Σ_{i ∈ Neg(σ⁻¹)} i.
int ell_b(const SignedPermutation& sigma);

/// A-length inv(v) - del_B(v); defined for v ∈ A only.
int ell_a(const SignedPermutation& v);

/// L-length ℓ_B(σ) - del_B(σ), defined on all of B_n.
int ell_l(const SignedPermutation& sigma);

/// Indices 1 ≤ i ≤ n-1 (rank = n+1) with ℓ_L(π a_i) ≤ ℓ_L(π).  The weak
/// inequality is deliberate.  π must lie in L.
std::vector<int> des_a_set(const SignedPermutation& pi);
int des_a(const SignedPermutation& pi);

/// Σ_{i ∈ Des_A(π)} (n - i) for π ∈ L_{n+1}.
int rmaj(const SignedPermutation& pi);

/// rmaj(π) + Σ_{i ∈ Neg(π⁻¹)} i.
int nrmaj(const SignedPermutation& pi);

/// Every statistic of one element in a single pass.  The Des_A family is
/// present only when the element lies in L.
struct StatisticsBundle {
    int inv = 0;
    std::vector<int> des_set;
    int des = 0;
    std::vector<int> neg_of_inverse;
    int ell_b = 0;
    int del_b = 0;
    int ell_l = 0;
    std::optional<std::vector<int>> des_a_set;
    std::optional<int> rmaj;
    std::optional<int> nrmaj;
};

StatisticsBundle compute_statistics(const SignedPermutation& sigma);

}  // namespace permstat
