#include "permstat/statistics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permstat {

int inv(const LetterWord& r) {
    const auto& x = r.letters;
    const int m = static_cast<int>(x.size());
    int count = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (x[i] > x[j]) ++count;
    return count;
}

int inv(const SignedPermutation& sigma) { return inv(word(sigma)); }

std::vector<int> des_set(const LetterWord& r) {
    std::vector<int> out;
    for (int i = 0; i + 1 < static_cast<int>(r.letters.size()); ++i)
        if (r.letters[i] > r.letters[i + 1]) out.push_back(i + 1);
    return out;
}

std::vector<int> des_set(const SignedPermutation& sigma) { return des_set(word(sigma)); }

int des(const LetterWord& r) { return static_cast<int>(des_set(r).size()); }

std::vector<int> neg_of_inverse(const SignedPermutation& sigma) {
    std::vector<int> out;
    for (int x : sigma.window())
        if (x < 0) out.push_back(-x);
    std::sort(out.begin(), out.end());
    return out;
}

int neg_sum(const SignedPermutation& sigma) {
    int sum = 0;
    for (int x : sigma.window())
        if (x < 0) sum -= x;
    return sum;
}

int del_b(const SignedPermutation& sigma) {
    const auto& w = sigma.window();
    int count = 0;
    int running_min = w[0];
    for (size_t j = 1; j < w.size(); ++j) {
        if (w[j] < running_min) {
            ++count;
            running_min = w[j];
        }
    }
    return count;
}

int ell_b(const SignedPermutation& sigma) { return inv(sigma) + neg_sum(sigma); }

int ell_a(const SignedPermutation& v) {
    if (!v.member_of(GroupLabel::A))
        throw std::domain_error("ell_a requires an unsigned even permutation");
    return inv(v) - del_b(v);
}

int ell_l(const SignedPermutation& sigma) {
    return inv(sigma) - del_b(sigma) + neg_sum(sigma);
}

std::vector<int> des_a_set(const SignedPermutation& pi) {
    if (!pi.member_of(GroupLabel::L))
        throw std::domain_error("des_a_set requires a signed even permutation");
    const int rank = pi.rank();
    std::vector<int> out;
    const int base = ell_l(pi);
    for (int i = 1; i <= rank - 2; ++i) {
        if (ell_l(pi * generator_a(i, rank)) <= base) out.push_back(i);
    }
    return out;
}

int des_a(const SignedPermutation& pi) { return static_cast<int>(des_a_set(pi).size()); }

int rmaj(const SignedPermutation& pi) {
    const int n = pi.rank() - 1;
    int sum = 0;
    for (int i : des_a_set(pi)) sum += n - i;
    return sum;
}

int nrmaj(const SignedPermutation& pi) { return rmaj(pi) + neg_sum(pi); }

StatisticsBundle compute_statistics(const SignedPermutation& sigma) {
    StatisticsBundle b;
    const LetterWord w = word(sigma);
    b.inv = inv(w);
    b.des_set = des_set(w);
    b.des = static_cast<int>(b.des_set.size());
    b.neg_of_inverse = neg_of_inverse(sigma);
    const int negs = std::accumulate(b.neg_of_inverse.begin(), b.neg_of_inverse.end(), 0);
    b.ell_b = b.inv + negs;
    b.del_b = del_b(sigma);
    b.ell_l = b.inv - b.del_b + negs;
    if (sigma.member_of(GroupLabel::L)) {
        b.des_a_set = des_a_set(sigma);
        const int n = sigma.rank() - 1;
        int r = 0;
        for (int i : *b.des_a_set) r += n - i;
        b.rmaj = r;
        b.nrmaj = r + negs;
    }
    return b;
}

}  // namespace permstat
