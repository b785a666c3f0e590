#include "permstat/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace permstat {

LetterWord::LetterWord(std::vector<int> ls) : letters(std::move(ls)) {
    for (int x : letters) {
        if (x == 0) throw std::invalid_argument("letter 0 is not in the alphabet");
    }
}

LetterWord reverse(const LetterWord& r) {
    LetterWord out;
    out.letters.assign(r.letters.rbegin(), r.letters.rend());
    return out;
}

LetterWord sorted(const LetterWord& r) {
    LetterWord out = r;
    std::sort(out.letters.begin(), out.letters.end());
    return out;
}

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    if (n < 1) throw std::invalid_argument("window must have rank at least 1");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int x : window_) {
        const int a = std::abs(x);
        if (a < 1 || a > n)
            throw std::invalid_argument("window entry " + std::to_string(x) +
                                        " out of range for rank " + std::to_string(n));
        if (seen[a])
            throw std::invalid_argument("window repeats the value " + std::to_string(a));
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const {
    const int n = rank();
    const int a = std::abs(i);
    if (a < 1 || a > n)
        throw std::out_of_range("argument " + std::to_string(i) +
                                " out of range for rank " + std::to_string(n));
    return i > 0 ? window_[a - 1] : -window_[a - 1];
}

bool SignedPermutation::is_unsigned() const {
    return std::all_of(window_.begin(), window_.end(), [](int x) { return x > 0; });
}

int SignedPermutation::negative_count() const {
    return static_cast<int>(
        std::count_if(window_.begin(), window_.end(), [](int x) { return x < 0; }));
}

Parity SignedPermutation::parity() const {
    const int n = rank();
    int cross = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(window_[i]) > std::abs(window_[j])) ++cross;
    return ((cross + negative_count()) % 2 == 0) ? Parity::even : Parity::odd;
}

bool SignedPermutation::member_of(GroupLabel g) const {
    switch (g) {
        case GroupLabel::B: return true;
        case GroupLabel::S: return is_unsigned();
        case GroupLabel::L: return parity() == Parity::even;
        case GroupLabel::A: return is_unsigned() && parity() == Parity::even;
    }
    return false;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& tau) const {
    const int n = rank();
    if (tau.rank() != n)
        throw std::invalid_argument("rank mismatch: " + std::to_string(n) + " vs " +
                                    std::to_string(tau.rank()));
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        const int t = tau.window_[i];
        out[i] = t > 0 ? window_[t - 1] : -window_[-t - 1];
    }
    SignedPermutation result = *this;  // reuse validated shell, then overwrite
    result.window_ = std::move(out);
    return result;
}

SignedPermutation SignedPermutation::inverse() const {
    const int n = rank();
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        const int v = window_[i];
        out[std::abs(v) - 1] = v > 0 ? i + 1 : -(i + 1);
    }
    SignedPermutation result = *this;
    result.window_ = std::move(out);
    return result;
}

SignedPermutation SignedPermutation::sorted() const {
    SignedPermutation result = *this;
    std::sort(result.window_.begin(), result.window_.end());
    return result;
}

LetterWord word(const SignedPermutation& sigma) {
    LetterWord r;
    r.letters = sigma.window();
    return r;
}

SignedPermutation window_of(const LetterWord& r) {
    return SignedPermutation(r.letters);
}

SignedPermutation generator_s(int i, int rank) {
    if (i < 0 || i > rank - 1)
        throw std::out_of_range("generator index s_" + std::to_string(i) +
                                " out of range for rank " + std::to_string(rank));
    SignedPermutation id = SignedPermutation::identity(rank);
    std::vector<int> w = id.window();
    if (i == 0) {
        w[0] = -1;
    } else {
        std::swap(w[i - 1], w[i]);
    }
    return SignedPermutation(std::move(w));
}

SignedPermutation generator_a(int i, int rank, bool inverted) {
    if (i < 1 || i > rank - 2)
        throw std::out_of_range("generator index a_" + std::to_string(i) +
                                " out of range for rank " + std::to_string(rank));
    if (inverted && i != 1)
        throw std::invalid_argument("only a_1 has a distinct inverse");
    SignedPermutation a = generator_s(1, rank) * generator_s(i + 1, rank);
    return inverted ? a.inverse() : a;
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& sigma) {
    os << '[';
    const auto& w = sigma.window();
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, const LetterWord& r) {
    os << '[';
    for (size_t i = 0; i < r.letters.size(); ++i) {
        if (i) os << ',';
        os << r.letters[i];
    }
    return os << ']';
}

}  // namespace permstat
