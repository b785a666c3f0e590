#include "permstat/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permstat {

namespace {

int find_letter(const SignedPermutation& w, int letter) {
    for (int i = 1; i <= w.rank(); ++i) {
        if (w(i) == letter) return i;
    }
    throw std::logic_error("letter " + std::to_string(letter) +
                           " not present in window");
}

}  // namespace

int SCanonicalWord::letters() const {
    int total = 0;
    for (const auto& f : factors) total += f.letters();
    return total;
}

int ACanonicalWord::letters() const {
    int total = 0;
    for (const auto& f : factors) total += f.letters();
    return total;
}

std::vector<SignedPermutation> r_table_s(int level, int rank) {
    if (level < 1 || level > rank - 1) {
        throw std::out_of_range("r_table_s: level " + std::to_string(level) +
                                " out of range for rank " +
                                std::to_string(rank));
    }
    std::vector<SignedPermutation> table;
    table.reserve(level + 1);
    table.push_back(SignedPermutation::identity(rank));
    for (int k = 1; k <= level; ++k) {
        table.push_back(table.back() * generator_s(level - k + 1, rank));
    }
    return table;
}

std::vector<SignedPermutation> r_table_a(int level, int rank) {
    if (level < 1 || level > rank - 2) {
        throw std::out_of_range("r_table_a: level " + std::to_string(level) +
                                " out of range for rank " +
                                std::to_string(rank));
    }
    std::vector<SignedPermutation> table;
    table.reserve(level + 2);
    table.push_back(SignedPermutation::identity(rank));
    for (int k = 1; k <= level; ++k) {
        table.push_back(table.back() * generator_a(level - k + 1, rank));
    }
    table.push_back(table[level - 1] * generator_a(1, rank, true));
    return table;
}

SignedPermutation factor_window(const SFactor& f, int rank) {
    if (f.level < 1 || f.level > rank - 1) {
        throw std::out_of_range("factor level out of range for rank");
    }
    if (f.ell < 1 || f.ell > f.level + 1) {
        throw std::invalid_argument("S-factor tail out of range");
    }
    auto w = SignedPermutation::identity(rank);
    for (int i = f.level; i >= f.ell; --i) w = w * generator_s(i, rank);
    return w;
}

SignedPermutation factor_window(const AFactor& f, int rank) {
    if (f.level < 1 || f.level > rank - 2) {
        throw std::out_of_range("factor level out of range for rank");
    }
    if (f.ell < 1 || f.ell > f.level + 1) {
        throw std::invalid_argument("A-factor tail out of range");
    }
    if (f.inverted && f.ell != 1) {
        throw std::invalid_argument("only the a_1 tail may be inverted");
    }
    auto w = SignedPermutation::identity(rank);
    for (int i = f.level; i >= std::max(f.ell, 2); --i) {
        w = w * generator_a(i, rank);
    }
    if (f.ell == 1) w = w * generator_a(1, rank, f.inverted);
    return w;
}

SCanonicalWord s_factorize(const SignedPermutation& w) {
    if (!w.is_unsigned()) {
        throw std::domain_error("s_factorize requires an unsigned permutation");
    }
    const int rank = w.rank();
    SCanonicalWord word;
    word.factors.resize(std::max(rank - 1, 0));
    auto cur = w;
    for (int j = rank - 1; j >= 1; --j) {
        // The factor s_j ⋯ s_p moves letter j+1 from position j+1 to p, so
        // the position of j+1 in cur pins the factor exactly.
        const int p = find_letter(cur, j + 1);
        SFactor f{j, p == j + 1 ? j + 1 : p};
        word.factors[j - 1] = f;
        if (!f.is_identity()) {
            cur = cur * factor_window(f, rank).inverse();
        }
    }
    if (!(cur == SignedPermutation::identity(rank))) {
        throw std::logic_error("s_factorize: residue is not the identity");
    }
    return word;
}

ACanonicalWord a_factorize(const SignedPermutation& v) {
    if (!v.member_of(GroupLabel::A)) {
        throw std::domain_error("a_factorize requires an even unsigned permutation");
    }
    const int rank = v.rank();
    ACanonicalWord word;
    word.factors.resize(std::max(rank - 2, 0));
    auto cur = v;
    for (int j = rank - 2; j >= 1; --j) {
        // a_j ⋯ a_p moves letter j+2 to position p+1 for p ≥ 2, a_j ⋯ a_1
        // moves it to position 2, and a_j ⋯ a_1⁻¹ to position 1.
        const int p = find_letter(cur, j + 2);
        AFactor f{j, j + 1, false};
        if (p == 1) {
            f.ell = 1;
            f.inverted = true;
        } else if (p == 2) {
            f.ell = 1;
        } else if (p <= j + 1) {
            f.ell = p - 1;
        }
        word.factors[j - 1] = f;
        if (!f.is_identity()) {
            cur = cur * factor_window(f, rank).inverse();
        }
    }
    if (!(cur == SignedPermutation::identity(rank))) {
        throw std::logic_error("a_factorize: residue is not the identity");
    }
    return word;
}

SignedPermutation evaluate(const SCanonicalWord& word, int rank) {
    if (rank < word.levels() + 1) {
        throw std::invalid_argument("evaluate: rank too small for word");
    }
    auto w = SignedPermutation::identity(rank);
    for (int j = 0; j < word.levels(); ++j) {
        const auto& f = word.factors[j];
        if (f.level != j + 1) {
            throw std::invalid_argument("evaluate: factor levels must be 1,2,… in order");
        }
        if (!f.is_identity()) w = w * factor_window(f, rank);
    }
    return w;
}

SignedPermutation evaluate(const ACanonicalWord& word, int rank) {
    if (rank < word.levels() + 2) {
        throw std::invalid_argument("evaluate: rank too small for word");
    }
    auto w = SignedPermutation::identity(rank);
    for (int j = 0; j < word.levels(); ++j) {
        const auto& f = word.factors[j];
        if (f.level != j + 1) {
            throw std::invalid_argument("evaluate: factor levels must be 1,2,… in order");
        }
        if (!f.is_identity()) w = w * factor_window(f, rank);
    }
    return w;
}

SCanonicalWord covering_f(const ACanonicalWord& v) {
    SCanonicalWord w;
    w.factors.reserve(v.factors.size());
    for (const auto& f : v.factors) {
        w.factors.push_back(SFactor{f.level, f.ell});
    }
    return w;
}

ACanonicalWord lift_g(const ACanonicalWord& u, const SCanonicalWord& w) {
    if (u.levels() != w.levels()) {
        throw std::invalid_argument("lift_g: level counts differ");
    }
    ACanonicalWord out;
    out.factors.reserve(w.factors.size());
    for (int j = 0; j < w.levels(); ++j) {
        const auto& f = w.factors[j];
        if (f.ell >= 2) {
            out.factors.push_back(AFactor{f.level, f.ell, false});
        } else {
            // The fiber over s_j ⋯ s_1 is {a_j ⋯ a_1, a_j ⋯ a_1⁻¹}; the lift
            // through u picks u's own factor at this level.
            out.factors.push_back(u.factors[j]);
        }
    }
    return out;
}

}  // namespace permstat
