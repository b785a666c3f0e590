#pragma once

#include <vector>

#include "permstat/signed_permutation.hpp"

namespace permstat {

/// One factor of an S-canonical word: the element s_j s_{j-1} ⋯ s_ell of
/// R_j^S = {1, s_j, s_j s_{j-1}, …, s_j ⋯ s_1}.  ell = j+1 encodes the
/// identity factor.
struct SFactor {
    int level = 1;  // j
    int ell = 2;    // 1 ≤ ell ≤ j+1

    bool is_identity() const { return ell == level + 1; }
    int letters() const { return level + 1 - ell; }
    bool operator==(const SFactor&) const = default;
};

/// One factor of an A-canonical word: an element of
/// R_j^A = {1, a_j, a_j a_{j-1}, …, a_j ⋯ a_2, a_j ⋯ a_1, a_j ⋯ a_1⁻¹}.
/// The two tails reaching a_1 are distinguished by `inverted`, which is
/// meaningful only when ell = 1.
struct AFactor {
    int level = 1;
    int ell = 2;
    bool inverted = false;

    bool is_identity() const { return ell == level + 1; }
    int letters() const { return level + 1 - ell; }
    bool operator==(const AFactor&) const = default;
};

/// Factor list with one factor per level j = 1,…,k, identity factors
/// included, so the level structure is always total and aligned.
struct SCanonicalWord {
    std::vector<SFactor> factors;

    int levels() const { return static_cast<int>(factors.size()); }
    int letters() const;
    bool operator==(const SCanonicalWord&) const = default;
};

struct ACanonicalWord {
    std::vector<AFactor> factors;

    int levels() const { return static_cast<int>(factors.size()); }
    int letters() const;
    bool operator==(const ACanonicalWord&) const = default;
};

/// R_j^S embedded at the given ambient rank (letters above j+1 fixed),
/// generated by right multiplication: [0] = 1, [k] = s_j ⋯ s_{j-k+1}.
std::vector<SignedPermutation> r_table_s(int level, int rank);

/// R_j^A at the given ambient rank: [0] = 1, [k] = a_j ⋯ a_{j-k+1} for
/// k ≤ j, and [j+1] = a_j ⋯ a_2 a_1⁻¹.
std::vector<SignedPermutation> r_table_a(int level, int rank);

SignedPermutation factor_window(const SFactor& f, int rank);
SignedPermutation factor_window(const AFactor& f, int rank);

/// Unique factorization w = w_1 ⋯ w_{n-1} with w_j ∈ R_j^S, found by
/// peeling: the position of the largest letter determines the top factor,
/// which is divided out on the right.
SCanonicalWord s_factorize(const SignedPermutation& w);

/// Unique factorization v = v_1 ⋯ v_{n-1} with v_j ∈ R_j^A, for v ∈ A_{n+1}.
ACanonicalWord a_factorize(const SignedPermutation& v);

/// Compose the factors left to right at the given rank.  A word with k
/// levels needs rank ≥ k+1 (S) or rank ≥ k+2 when it has A-factors.
SignedPermutation evaluate(const SCanonicalWord& word, int rank);
SignedPermutation evaluate(const ACanonicalWord& word, int rank);

/// The covering map: a ↦ s factor-wise, exponents erased.  Both tails
/// reaching a_1 land on s_j ⋯ s_1.
SCanonicalWord covering_f(const ACanonicalWord& v);

/// The local inverse g_u of the covering map: tails ending at ell ≥ 2 lift
/// letter for letter; a tail reaching s_1 at level j is replaced by u's own
/// factor u_j, whatever that factor is.
ACanonicalWord lift_g(const ACanonicalWord& u, const SCanonicalWord& w);

}  // namespace permstat
