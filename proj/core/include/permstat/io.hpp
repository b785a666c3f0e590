#pragma once

#include <string>
#include <vector>

#include "permstat/bijections.hpp"
#include "permstat/canonical.hpp"
#include "permstat/foata.hpp"
#include "permstat/qpolynomial.hpp"
#include "permstat/signed_permutation.hpp"
#include "permstat/statistics.hpp"
#include "permstat/verify.hpp"

namespace permstat {

/// Input: comma-separated signed decimal integers, optionally wrapped in
/// square brackets, e.g. "3,-6,-4,5,2,-1" or "[3,-6,-4,5,2,-1]".
SignedPermutation parse_window(const std::string& text);
/// Same grammar; repeats are allowed and the empty string is the empty word.
LetterWord parse_word(const std::string& text);

std::string format_window(const SignedPermutation& sigma);
std::string format_word(const LetterWord& r);

/// "1,3,4"; the empty string is the empty set.  Braces are tolerated.
SubsetB parse_subset(const std::string& text);
std::string format_subset(const SubsetB& subset);  // "{1,3,4}", "{}"
std::string subset_csv(const SubsetB& subset);     // "1,3,4", ""

GroupLabel parse_group_label(const std::string& text);  // s|a|b|l
std::string format_group_label(GroupLabel label);
Statistic parse_statistic(const std::string& text);  // ell_l|nrmaj|ell_a|rmaj

/// Factor words in the style `(1)(a_2)(a_3 a_2 a_1^-1)(a_4 a_3)`.  The
/// parser also accepts `^{-1}`.  The empty word formats as "(1)".
std::string format_canonical(const SCanonicalWord& word);
std::string format_canonical(const ACanonicalWord& word);
SCanonicalWord parse_canonical_s(const std::string& text);
ACanonicalWord parse_canonical_a(const std::string& text);

/// One line per step with compartments closed by `|`, then the final word:
///   2 | 3 | 5 1 |
///   2 3 1 5 4
std::string format_trace(const PhiTrace& trace);

std::string format_statistics_text(const StatisticsBundle& bundle);
std::string format_report_text(const VerificationReport& rep);
std::string format_psi_stages_text(const PsiStages& st);
std::string format_theta_stages_text(const ThetaStages& st);

/// JSON documents (self-contained strings).  Windows and words are integer
/// arrays; polynomials are coefficient arrays indexed by exponent, with
/// coefficients beyond 64 bits emitted as decimal strings.
std::string window_json(const SignedPermutation& sigma);
std::string statistics_json(const StatisticsBundle& bundle);
std::string poly_json(const QPolynomial& p);
std::string image_json(const SignedPermutation& input,
                       const SignedPermutation& result);
std::string decomposition_json(const Decomposition& d);
std::string canonical_json(const SignedPermutation& input,
                           const SCanonicalWord& word);
std::string canonical_json(const SignedPermutation& input,
                           const ACanonicalWord& word);
std::string phi_json(const LetterWord& input, const LetterWord& result);
std::string trace_json(const LetterWord& input, const PhiTrace& trace);
std::string psi_stages_json(const PsiStages& st);
std::string theta_stages_json(const ThetaStages& st);
std::string report_json(const VerificationReport& rep);
std::string reports_json(const std::vector<VerificationReport>& reps);
std::string poly_table_json(
    int rank, const std::vector<std::pair<SubsetB, QPolynomial>>& rows);

/// CSV table rows for (rank, subset, coefficients); lists are quoted.
std::string poly_csv_header();
std::string poly_csv_row(int rank, const SubsetB& subset, const QPolynomial& p);

}  // namespace permstat
