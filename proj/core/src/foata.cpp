#include "permstat/foata.hpp"

#include <algorithm>
#include <utility>

namespace permstat {

namespace {

LetterWord phi_impl(const LetterWord& r, PhiTrace* trace) {
    const auto& x = r.letters;
    const int m = static_cast<int>(x.size());
    std::vector<int> cur;
    if (m > 0) cur.push_back(x[0]);
    for (int i = 1; i < m; ++i) {
        const int next = x[i];
        const bool keep_small = cur.back() <= next;
        std::vector<int> rebuilt;
        rebuilt.reserve(cur.size() + 1);
        std::vector<LetterWord> compartments;
        std::size_t start = 0;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            const bool cut = keep_small ? cur[k] <= next : cur[k] > next;
            if (!cut && k + 1 < cur.size()) continue;
            // Compartment cur[start..k]: its last letter moves to the front.
            // The final compartment always ends at the last letter since the
            // cut rule matches cur.back() by construction.
            if (trace) {
                compartments.push_back(LetterWord{std::vector<int>(
                    cur.begin() + start, cur.begin() + k + 1)});
            }
            rebuilt.push_back(cur[k]);
            rebuilt.insert(rebuilt.end(), cur.begin() + start, cur.begin() + k);
            start = k + 1;
        }
        if (trace) trace->steps.push_back(std::move(compartments));
        rebuilt.push_back(next);
        cur = std::move(rebuilt);
    }
    return LetterWord{std::move(cur)};
}

}  // namespace

LetterWord phi(const LetterWord& r) { return phi_impl(r, nullptr); }

LetterWord rtl_phi(const LetterWord& r) {
    return reverse(phi(reverse(r)));
}

int maj(const LetterWord& r) {
    int total = 0;
    for (std::size_t i = 0; i + 1 < r.letters.size(); ++i) {
        if (r.letters[i] > r.letters[i + 1]) total += static_cast<int>(i) + 1;
    }
    return total;
}

PhiTrace phi_trace(const LetterWord& r) {
    PhiTrace trace;
    trace.result = phi_impl(r, &trace);
    return trace;
}

}  // namespace permstat
