#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permstat/qpolynomial.hpp"
#include "permstat/signed_permutation.hpp"

namespace permstat {

/// Exhaustive enumeration is guarded by a rank cap; every entry point takes
/// the cap as a parameter so callers can raise it deliberately.
inline constexpr int kDefaultRankCap = 8;

/// Hard ceiling keeping index arithmetic inside 64 bits.
inline constexpr int kMaxEnumerableRank = 16;

enum class Statistic : std::uint8_t { ell_l, nrmaj, ell_a, rmaj };

int statistic_value(Statistic stat, const SignedPermutation& sigma);
std::string statistic_name(Statistic stat);
bool statistic_applies(Statistic stat, GroupLabel label);

/// Restriction set B for the filter Neg(π⁻¹) ⊆ B.  Members are positive,
/// kept sorted and duplicate-free; range against the rank is checked by the
/// operations that take a rank.
struct SubsetB {
    std::vector<int> members;

    SubsetB() = default;
    explicit SubsetB(std::vector<int> ms);

    static SubsetB full(int rank);

    bool contains(int i) const;
    /// Bit i-1 set iff i is a member.
    std::uint32_t mask() const;
    int max_member() const { return members.empty() ? 0 : members.back(); }

    bool operator==(const SubsetB&) const = default;
};

/// Outcome of one exhaustive check.  lhs and rhs are the two compared
/// polynomials (statistic distribution vs. closed form or image
/// distribution); aux carries a second statistic distribution when the
/// identity compares three quantities.  pass holds iff all compared
/// polynomials agree and no element-level failure was seen.
struct VerificationReport {
    std::string identity;
    int rank = 0;
    std::optional<SubsetB> subset;
    QPolynomial lhs;
    QPolynomial rhs;
    std::optional<QPolynomial> aux;
    bool pass = false;
    std::optional<SignedPermutation> counterexample;
    std::string detail;
    std::uint64_t element_count = 0;
    double elapsed_seconds = 0.0;
};

std::uint64_t group_order(GroupLabel label, int rank);

/// Visit every element of the group at the given rank exactly once, in the
/// fixed order: windows with entries unsigned in lexicographic order,
/// crossed with sign masks in binary order (bit i-1 negates position i),
/// filtered by membership.
void for_each_in_group(GroupLabel label, int rank,
                       const std::function<void(const SignedPermutation&)>& fn,
                       int rank_cap = kDefaultRankCap);

std::vector<SignedPermutation> enumerate_group(GroupLabel label, int rank,
                                               int rank_cap = kDefaultRankCap);

/// Distribution polynomial Σ q^{stat(π)} over the group, restricted to
/// Neg(π⁻¹) ⊆ restriction when given (L only).  workers ≤ 0 picks a
/// hardware-based count; results are identical for any worker count.
QPolynomial poly_over(GroupLabel label, int rank, Statistic stat,
                      const std::optional<SubsetB>& restriction = std::nullopt,
                      int rank_cap = kDefaultRankCap, int workers = 0);

/// ∏_{i∈B}(1+q^i) · ∏_{i=1}^{n-1}(1+q+…+q^{i-1}+2q^i) with n = rank-1.
/// Empty products are 1.
QPolynomial product_formula_l(int rank, const SubsetB& subset);

/// ∏_{i=1}^{n-1}(1+q+…+q^{i-1}+2q^i) with n = rank-1.
QPolynomial product_formula_a(int rank);

/// Over L_rank restricted to the subset: distribution of nrmaj (lhs), of
/// ell_L (aux), and the closed-form product (rhs) must agree.
VerificationReport check_equidistribution(int rank, const SubsetB& subset,
                                          int rank_cap = kDefaultRankCap,
                                          int workers = 0);

/// One report per subset of [rank], in binary mask order, sharing a single
/// enumeration pass.
std::vector<VerificationReport> check_equidistribution_all_subsets(
    int rank, int rank_cap = kDefaultRankCap);

/// Over A_rank: distribution of rmaj (lhs), of ell_A (aux), and the
/// closed-form product (rhs).
VerificationReport check_equidistribution_a(int rank,
                                            int rank_cap = kDefaultRankCap,
                                            int workers = 0);

/// Θ on L_rank: image seen exactly once, ℓ_L(Θπ) = nrmaj(π), negative
/// values preserved.  lhs = nrmaj distribution, rhs = ℓ_L∘Θ distribution.
VerificationReport check_theta(int rank, int rank_cap = kDefaultRankCap,
                               int workers = 0);

/// Ψ on A_rank: image seen exactly once and ℓ_A(Ψv) = rmaj(v).
VerificationReport check_psi(int rank, int rank_cap = kDefaultRankCap,
                             int workers = 0);

namespace detail {

using StatFn = std::function<int(const SignedPermutation&)>;

/// poly_over with an arbitrary statistic; lets tests drive the machinery
/// with deliberately corrupted statistics.
QPolynomial poly_over_with(GroupLabel label, int rank, const StatFn& stat,
                           const std::optional<SubsetB>& restriction,
                           int workers = 0);

/// check_equidistribution against an explicit closed form, with both
/// statistics injectable.
VerificationReport check_equidistribution_with(int rank, const SubsetB& subset,
                                               const StatFn& lhs_stat,
                                               const StatFn& rhs_stat,
                                               const QPolynomial& formula);

}  // namespace detail

}  // namespace permstat
