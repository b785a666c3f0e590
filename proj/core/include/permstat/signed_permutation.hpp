#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace permstat {

enum class Parity : std::uint8_t { even, odd };

constexpr Parity operator^(Parity a, Parity b) {
    return (a == b) ? Parity::even : Parity::odd;
}

/// The four groups the library works with.  S and B act on rank-n windows;
/// A and L are the index-2 subgroups of even elements (Coxeter sign) of S
/// and B respectively, so A = S ∩ L.
enum class GroupLabel : std::uint8_t { S, A, B, L };

/// A finite word over the alphabet of nonzero integers, ordered as usual.
/// Repeated letters are allowed; the empty word is legal.
struct LetterWord {
    std::vector<int> letters;

    LetterWord() = default;
    explicit LetterWord(std::vector<int> ls);

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    bool operator==(const LetterWord&) const = default;
};

LetterWord reverse(const LetterWord& r);
LetterWord sorted(const LetterWord& r);

/// An element of the hyperoctahedral group B_n in window notation: the
/// stored window is [σ(1),…,σ(n)]; the values σ(-i) = -σ(i) are implied.
/// Unsigned permutations (all-positive windows) are the S_n special case.
/// Immutable after construction; every operation returns a new value.
class SignedPermutation {
public:
    /// Validates that the absolute values form a permutation of {1,…,n}.
    explicit SignedPermutation(std::vector<int> window);

    static SignedPermutation identity(int n);

    int rank() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    /// σ(i) for i in {±1,…,±n}.
    int operator()(int i) const;

    bool is_unsigned() const;
    int negative_count() const;

    /// Sign parity as an element of B_n: even iff the Coxeter length with
    /// respect to s_0,…,s_{n-1} is even.  Computed combinatorially as
    /// inv(|σ|) + #Neg(σ) mod 2; on unsigned input this is the ordinary
    /// permutation parity.
    Parity parity() const;
    bool is_even() const { return parity() == Parity::even; }

    bool member_of(GroupLabel g) const;

    /// Function composition, τ applied first: (σ∘τ)(i) = σ(τ(i)).
    SignedPermutation operator*(const SignedPermutation& tau) const;

    SignedPermutation inverse() const;

    /// Window entries rearranged into increasing order.
    SignedPermutation sorted() const;

    bool operator==(const SignedPermutation&) const = default;
    bool operator<(const SignedPermutation& other) const {
        return window_ < other.window_;
    }

private:
    std::vector<int> window_;
};

inline SignedPermutation compose(const SignedPermutation& sigma,
                                 const SignedPermutation& tau) {
    return sigma * tau;
}

/// The window read as a word (positions left to right).
LetterWord word(const SignedPermutation& sigma);

/// A window built from a word that must itself be a valid window.
SignedPermutation window_of(const LetterWord& r);

/// Coxeter generator of B_n: s_i = (i,i+1) for 1 ≤ i ≤ n-1, and the sign
/// flip s_0 = [-1,2,…,n].
SignedPermutation generator_s(int i, int rank);

/// Alternating-group generator a_i = s_1 s_{i+1} of A_{n+1}, 1 ≤ i ≤ n-1
/// where rank = n+1.  `inverted` selects a_1⁻¹ and is legal only for i = 1
/// (all other a_i are involutions).
SignedPermutation generator_a(int i, int rank, bool inverted = false);

std::ostream& operator<<(std::ostream& os, const SignedPermutation& sigma);
std::ostream& operator<<(std::ostream& os, const LetterWord& r);

}  // namespace permstat
