#pragma once

#include <optional>
#include <string>

#include "permstat/canonical.hpp"
#include "permstat/foata.hpp"
#include "permstat/signed_permutation.hpp"

namespace permstat {

/// The signed part of the canonical splitting of π ∈ L_{n+1}: the window of
/// π rearranged into increasing order, with the first two entries swapped
/// when the sorted window falls outside L.  Always lies in L and shares its
/// negative-value set with π.
SignedPermutation s_of(const SignedPermutation& pi);

/// π = sigma · u with sigma = s(π) ∈ L_{n+1} and u ∈ A_{n+1}.
struct Decomposition {
    SignedPermutation sigma;
    SignedPermutation u;
};

Decomposition decompose(const SignedPermutation& pi);

/// Nullopt when d is exactly the canonical splitting of pi; otherwise a
/// human-readable description of the first violated requirement.
std::optional<std::string> validate_decomposition(const SignedPermutation& pi,
                                                  const Decomposition& d);

/// The bijection on A_{n+1}: factor v canonically, push the word through
/// the covering map onto S_n, apply the right-to-left Foata transformation
/// to the window, refactor, and lift back through v.  Carries ell_A to
/// rmaj and fixes the identity.
SignedPermutation psi(const SignedPermutation& v);

/// Intermediate values of one psi evaluation, for display and debugging.
struct PsiStages {
    SignedPermutation input;
    ACanonicalWord a_word;        // canonical word of the input
    SignedPermutation projected;  // image in S_n under the covering map
    LetterWord transformed;       // right-to-left Foata of the projected window
    SCanonicalWord s_word;        // canonical word of the transformed window
    ACanonicalWord lifted;        // lift of s_word through the input's word
    SignedPermutation result;
};

PsiStages psi_stages(const SignedPermutation& v);

/// The bijection on L_{n+1}: Θ(π) = s(π) · Ψ(s(π)⁻¹ π).  Carries nrmaj to
/// ell_L and preserves the negative-value set.  With validate set, the
/// canonical splitting is re-checked and a failure throws std::logic_error.
SignedPermutation theta(const SignedPermutation& pi, bool validate = false);

struct ThetaStages {
    SignedPermutation input;
    Decomposition split;
    PsiStages psi;
    SignedPermutation result;
};

ThetaStages theta_stages(const SignedPermutation& pi);

}  // namespace permstat
