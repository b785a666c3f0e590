#include "permstat/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "permstat/bijections.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

void require_enumerable(int rank, int rank_cap) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (rank > kMaxEnumerableRank) {
        throw std::domain_error("rank " + std::to_string(rank) +
                                " is above the hard enumeration ceiling " +
                                std::to_string(kMaxEnumerableRank));
    }
    if (rank > rank_cap) {
        throw std::domain_error("rank " + std::to_string(rank) +
                                " exceeds the configured cap " +
                                std::to_string(rank_cap));
    }
}

bool uses_masks(GroupLabel label) {
    return label == GroupLabel::B || label == GroupLabel::L;
}

std::uint64_t mask_count(GroupLabel label, int rank) {
    return uses_masks(label) ? (std::uint64_t{1} << rank) : 1;
}

std::uint64_t space_size(GroupLabel label, int rank) {
    return factorial(rank) * mask_count(label, rank);
}

std::vector<int> unrank_unsigned(int rank, std::uint64_t index) {
    std::vector<int> pool(rank);
    for (int i = 0; i < rank; ++i) pool[i] = i + 1;
    std::vector<int> out;
    out.reserve(rank);
    std::uint64_t f = factorial(rank);
    for (int i = rank; i >= 1; --i) {
        f /= static_cast<std::uint64_t>(i);
        const auto d = static_cast<std::ptrdiff_t>(index / f);
        index %= f;
        out.push_back(pool[d]);
        pool.erase(pool.begin() + d);
    }
    return out;
}

int inv_parity(const std::vector<int>& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count % 2;
}

/// Visit the members of the group whose product-space index (unsigned lex
/// rank × sign mask) lies in [begin, end).  Membership of masked windows is
/// decided from the base parity and the mask popcount, so non-members cost
/// no allocation.
template <typename Fn>
void scan_chunk(GroupLabel label, int rank, std::uint64_t begin,
                std::uint64_t end, Fn&& fn) {
    if (begin >= end) return;
    const std::uint64_t masks = mask_count(label, rank);
    std::uint64_t mask = begin % masks;
    std::vector<int> base = unrank_unsigned(rank, begin / masks);
    const bool need_even = label == GroupLabel::A || label == GroupLabel::L;
    int base_parity = need_even ? inv_parity(base) : 0;
    std::vector<int> window(rank);
    std::uint64_t idx = begin;
    while (idx < end) {
        for (; mask < masks && idx < end; ++mask, ++idx) {
            if (need_even &&
                (base_parity + std::popcount(mask)) % 2 != 0) {
                continue;
            }
            for (int i = 0; i < rank; ++i) {
                window[i] = (mask >> i) & 1 ? -base[i] : base[i];
            }
            fn(SignedPermutation(window), idx);
        }
        if (idx < end) {
            mask = 0;
            std::next_permutation(base.begin(), base.end());
            if (need_even) base_parity = inv_parity(base);
        }
    }
}

int resolve_workers(int workers, std::uint64_t total) {
    if (workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = static_cast<int>(std::clamp(hw, 1u, 8u));
    }
    if (total < 4096) workers = 1;
    return static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers),
                                std::max<std::uint64_t>(total, 1)));
}

/// fn(worker, begin, end) over a contiguous partition of [0, total).
/// Worker exceptions are rethrown (lowest worker index first).
void run_partitioned(std::uint64_t total, int workers,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    if (workers <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(total, chunk * w);
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&fn, &errors, w, lo, hi] {
            try {
                fn(w, lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::uint32_t neg_value_mask(const SignedPermutation& w) {
    std::uint32_t m = 0;
    for (int x : w.window()) {
        if (x < 0) m |= 1u << (-x - 1);
    }
    return m;
}

std::uint64_t lex_rank_abs(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::uint64_t r = 0;
    std::uint64_t f = factorial(n);
    for (int i = 0; i < n; ++i) {
        f /= static_cast<std::uint64_t>(n - i);
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(w[j]) < std::abs(w[i])) ++smaller;
        }
        r += static_cast<std::uint64_t>(smaller) * f;
    }
    return r;
}

std::uint64_t element_index(const SignedPermutation& w, GroupLabel label) {
    const auto& win = w.window();
    std::uint64_t mask = 0;
    for (int i = 0; i < w.rank(); ++i) {
        if (win[i] < 0) mask |= std::uint64_t{1} << i;
    }
    return lex_rank_abs(win) * mask_count(label, w.rank()) + mask;
}

SignedPermutation decode_element(std::uint64_t index, GroupLabel label, int rank) {
    const std::uint64_t masks = mask_count(label, rank);
    auto base = unrank_unsigned(rank, index / masks);
    const std::uint64_t mask = index % masks;
    for (int i = 0; i < rank; ++i) {
        if ((mask >> i) & 1) base[i] = -base[i];
    }
    return SignedPermutation(std::move(base));
}

std::string window_string(const SignedPermutation& w) {
    std::ostringstream os;
    os << w;
    return os.str();
}

QPolynomial poly_from_hists(const std::vector<std::vector<long long>>& hists) {
    std::size_t size = 0;
    for (const auto& h : hists) size = std::max(size, h.size());
    std::vector<BigInt> coeffs(size, BigInt(0));
    for (const auto& h : hists) {
        for (std::size_t i = 0; i < h.size(); ++i) coeffs[i] += h[i];
    }
    return QPolynomial(std::move(coeffs));
}

void check_subset_range(const SubsetB& subset, int rank) {
    if (subset.max_member() > rank) {
        throw std::out_of_range("subset member " +
                                std::to_string(subset.max_member()) +
                                " exceeds rank " + std::to_string(rank));
    }
}

/// When the polynomials disagree, pin the first enumerated element whose
/// statistic value sits at a mismatched coefficient; fall back to naming
/// the first differing degree when no element witnesses it.
void locate_equidist_counterexample(VerificationReport& rep, GroupLabel label,
                                    int rank,
                                    const std::optional<SubsetB>& subset,
                                    const detail::StatFn& lhs_stat,
                                    const detail::StatFn& rhs_stat) {
    const std::uint32_t bmask = subset ? subset->mask() : 0;
    bool done = false;
    for_each_in_group(
        label, rank,
        [&](const SignedPermutation& el) {
            if (done) return;
            if (subset && (neg_value_mask(el) & ~bmask) != 0) return;
            const int a = lhs_stat(el);
            if (rep.lhs.coefficient(a) != rep.rhs.coefficient(a)) {
                rep.counterexample = el;
                rep.detail = "coefficient of q^" + std::to_string(a) +
                             " differs between the first statistic and the closed form";
                done = true;
                return;
            }
            const int b = rhs_stat(el);
            if (rep.aux && rep.aux->coefficient(b) != rep.rhs.coefficient(b)) {
                rep.counterexample = el;
                rep.detail = "coefficient of q^" + std::to_string(b) +
                             " differs between the second statistic and the closed form";
                done = true;
            }
        },
        kMaxEnumerableRank);
    if (!rep.counterexample && rep.detail.empty()) {
        const int dmax = std::max(
            {rep.lhs.degree(), rep.rhs.degree(), rep.aux ? rep.aux->degree() : -1});
        for (int d = 0; d <= dmax; ++d) {
            const bool mismatch =
                rep.lhs.coefficient(d) != rep.rhs.coefficient(d) ||
                (rep.aux && rep.aux->coefficient(d) != rep.rhs.coefficient(d));
            if (mismatch) {
                rep.detail = "coefficient mismatch at q^" + std::to_string(d);
                break;
            }
        }
    }
}

VerificationReport equidist_impl(GroupLabel label, int rank,
                                 const std::optional<SubsetB>& subset,
                                 const detail::StatFn& lhs_stat,
                                 const detail::StatFn& rhs_stat,
                                 QPolynomial formula, int workers,
                                 std::string identity) {
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.identity = std::move(identity);
    rep.rank = rank;
    rep.subset = subset;
    rep.lhs = detail::poly_over_with(label, rank, lhs_stat, subset, workers);
    rep.aux = detail::poly_over_with(label, rank, rhs_stat, subset, workers);
    rep.rhs = std::move(formula);
    rep.element_count = rep.lhs.evaluate(BigInt(1)).convert_to<std::uint64_t>();
    rep.pass = rep.lhs == rep.rhs && *rep.aux == rep.rhs;
    if (!rep.pass) {
        locate_equidist_counterexample(rep, label, rank, subset, lhs_stat, rhs_stat);
    }
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

struct BijectionSpec {
    GroupLabel label;
    const char* identity;
    const char* domain_stat_name;
    const char* image_stat_name;
    bool preserve_neg;
    std::function<std::optional<std::string>(const SignedPermutation&,
                                             SignedPermutation&)> apply;
    detail::StatFn domain_stat;
    detail::StatFn image_stat;
};

VerificationReport check_bijection(const BijectionSpec& spec, int rank,
                                   int rank_cap, int workers) {
    require_enumerable(rank, rank_cap);
    const auto t0 = Clock::now();
    const std::uint64_t total = space_size(spec.label, rank);
    const int nworkers = resolve_workers(workers, total);
    const std::uint64_t index_space = total;
    const std::size_t bit_words = static_cast<std::size_t>((index_space + 63) / 64);

    struct FailureRec {
        std::uint64_t idx;
        std::vector<int> window;
        std::string message;
    };
    struct WorkerOut {
        std::vector<std::uint64_t> seen;
        std::vector<long long> lhs;
        std::vector<long long> rhs;
        std::uint64_t count = 0;
        std::optional<FailureRec> failure;
    };
    std::vector<WorkerOut> outs(nworkers);
    for (auto& o : outs) o.seen.assign(bit_words, 0);

    run_partitioned(total, nworkers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        auto& out = outs[w];
        auto bump = [](std::vector<long long>& h, int v) {
            if (static_cast<std::size_t>(v) >= h.size()) h.resize(v + 1, 0);
            ++h[v];
        };
        scan_chunk(spec.label, rank, lo, hi, [&](const SignedPermutation& el,
                                                 std::uint64_t idx) {
            ++out.count;
            if (out.failure) return;
            try {
                SignedPermutation image = el;
                if (auto err = spec.apply(el, image)) {
                    out.failure = FailureRec{idx, el.window(), *err};
                    return;
                }
                if (!image.member_of(spec.label)) {
                    out.failure = FailureRec{idx, el.window(),
                                             "image " + window_string(image) +
                                                 " left the group"};
                    return;
                }
                const int dv = spec.domain_stat(el);
                const int iv = spec.image_stat(image);
                bump(out.lhs, dv);
                bump(out.rhs, iv);
                if (dv != iv) {
                    out.failure = FailureRec{
                        idx, el.window(),
                        std::string(spec.domain_stat_name) + " = " +
                            std::to_string(dv) + " but " + spec.image_stat_name +
                            "(image " + window_string(image) + ") = " +
                            std::to_string(iv)};
                    return;
                }
                if (spec.preserve_neg &&
                    neg_of_inverse(image) != neg_of_inverse(el)) {
                    out.failure = FailureRec{idx, el.window(),
                                             "negative values not preserved by image " +
                                                 window_string(image)};
                    return;
                }
                const std::uint64_t img = element_index(image, spec.label);
                std::uint64_t& word = out.seen[img >> 6];
                const std::uint64_t bit = std::uint64_t{1} << (img & 63);
                if (word & bit) {
                    out.failure = FailureRec{idx, el.window(),
                                             "image " + window_string(image) +
                                                 " repeated"};
                    return;
                }
                word |= bit;
            } catch (const std::exception& e) {
                out.failure =
                    FailureRec{idx, el.window(), std::string("exception: ") + e.what()};
            }
        });
    });

    VerificationReport rep;
    rep.identity = spec.identity;
    rep.rank = rank;
    std::vector<std::vector<long long>> lhs_hists, rhs_hists;
    for (auto& o : outs) {
        rep.element_count += o.count;
        lhs_hists.push_back(std::move(o.lhs));
        rhs_hists.push_back(std::move(o.rhs));
    }
    rep.lhs = poly_from_hists(lhs_hists);
    rep.rhs = poly_from_hists(rhs_hists);

    const FailureRec* first_failure = nullptr;
    for (const auto& o : outs) {
        if (o.failure && (!first_failure || o.failure->idx < first_failure->idx)) {
            first_failure = &*o.failure;
        }
    }
    if (first_failure) {
        rep.counterexample = SignedPermutation(first_failure->window);
        rep.detail = first_failure->message;
    } else {
        // Cross-worker collision: the lowest doubly-hit image index, which
        // is independent of the partitioning.
        std::vector<std::uint64_t> acc(bit_words, 0);
        std::uint64_t dup_index = index_space;
        for (const auto& o : outs) {
            for (std::size_t wd = 0; wd < bit_words; ++wd) {
                const std::uint64_t overlap = acc[wd] & o.seen[wd];
                if (overlap) {
                    const std::uint64_t candidate =
                        (static_cast<std::uint64_t>(wd) << 6) +
                        static_cast<std::uint64_t>(std::countr_zero(overlap));
                    dup_index = std::min(dup_index, candidate);
                }
                acc[wd] |= o.seen[wd];
            }
        }
        if (dup_index < index_space) {
            rep.counterexample = decode_element(dup_index, spec.label, rank);
            rep.detail = "image " + window_string(*rep.counterexample) +
                         " produced by more than one element";
        }
    }

    rep.pass = !rep.counterexample && rep.detail.empty() && rep.lhs == rep.rhs &&
               rep.element_count == group_order(spec.label, rank);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

}  // namespace

SubsetB::SubsetB(std::vector<int> ms) : members(std::move(ms)) {
    for (int i : members) {
        if (i < 1) throw std::invalid_argument("subset members must be positive");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

SubsetB SubsetB::full(int rank) {
    std::vector<int> ms(rank);
    for (int i = 0; i < rank; ++i) ms[i] = i + 1;
    return SubsetB(std::move(ms));
}

bool SubsetB::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

std::uint32_t SubsetB::mask() const {
    std::uint32_t m = 0;
    for (int i : members) {
        if (i > 32) throw std::out_of_range("subset member too large for mask");
        m |= 1u << (i - 1);
    }
    return m;
}

int statistic_value(Statistic stat, const SignedPermutation& sigma) {
    switch (stat) {
        case Statistic::ell_l: return ell_l(sigma);
        case Statistic::nrmaj: return nrmaj(sigma);
        case Statistic::ell_a: return ell_a(sigma);
        case Statistic::rmaj: return rmaj(sigma);
    }
    throw std::invalid_argument("unknown statistic");
}

std::string statistic_name(Statistic stat) {
    switch (stat) {
        case Statistic::ell_l: return "ell_L";
        case Statistic::nrmaj: return "nrmaj";
        case Statistic::ell_a: return "ell_A";
        case Statistic::rmaj: return "rmaj";
    }
    return "?";
}

bool statistic_applies(Statistic stat, GroupLabel label) {
    switch (stat) {
        case Statistic::ell_l: return true;
        case Statistic::nrmaj:
        case Statistic::rmaj:
            return label == GroupLabel::L || label == GroupLabel::A;
        case Statistic::ell_a: return label == GroupLabel::A;
    }
    return false;
}

std::uint64_t group_order(GroupLabel label, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (rank > kMaxEnumerableRank) {
        throw std::domain_error("rank above the hard enumeration ceiling");
    }
    const std::uint64_t f = factorial(rank);
    switch (label) {
        case GroupLabel::S: return f;
        case GroupLabel::A: return rank == 1 ? 1 : f / 2;
        case GroupLabel::B: return f << rank;
        case GroupLabel::L: return (f << rank) / 2;
    }
    throw std::invalid_argument("unknown group label");
}

void for_each_in_group(GroupLabel label, int rank,
                       const std::function<void(const SignedPermutation&)>& fn,
                       int rank_cap) {
    require_enumerable(rank, rank_cap);
    scan_chunk(label, rank, 0, space_size(label, rank),
               [&fn](const SignedPermutation& w, std::uint64_t) { fn(w); });
}

std::vector<SignedPermutation> enumerate_group(GroupLabel label, int rank,
                                               int rank_cap) {
    std::vector<SignedPermutation> out;
    out.reserve(group_order(label, rank));
    for_each_in_group(
        label, rank, [&out](const SignedPermutation& w) { out.push_back(w); },
        rank_cap);
    return out;
}

QPolynomial poly_over(GroupLabel label, int rank, Statistic stat,
                      const std::optional<SubsetB>& restriction, int rank_cap,
                      int workers) {
    require_enumerable(rank, rank_cap);
    if (!statistic_applies(stat, label)) {
        throw std::invalid_argument("statistic " + statistic_name(stat) +
                                    " is not defined over this group");
    }
    return detail::poly_over_with(
        label, rank,
        [stat](const SignedPermutation& s) { return statistic_value(stat, s); },
        restriction, workers);
}

QPolynomial product_formula_a(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    QPolynomial p = QPolynomial::one();
    for (int i = 1; i <= rank - 2; ++i) {
        std::vector<BigInt> c(i + 1, BigInt(1));
        c[i] = 2;
        p *= QPolynomial(std::move(c));
    }
    return p;
}

QPolynomial product_formula_l(int rank, const SubsetB& subset) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    check_subset_range(subset, rank);
    QPolynomial p = product_formula_a(rank);
    for (int i : subset.members) {
        QPolynomial factor = QPolynomial::one();
        factor.add_term(i, BigInt(1));
        p *= factor;
    }
    return p;
}

VerificationReport check_equidistribution(int rank, const SubsetB& subset,
                                          int rank_cap, int workers) {
    require_enumerable(rank, rank_cap);
    check_subset_range(subset, rank);
    return equidist_impl(
        GroupLabel::L, rank, subset,
        [](const SignedPermutation& s) { return nrmaj(s); },
        [](const SignedPermutation& s) { return ell_l(s); },
        product_formula_l(rank, subset), workers, "equidistribution-L");
}

std::vector<VerificationReport> check_equidistribution_all_subsets(int rank,
                                                                   int rank_cap) {
    require_enumerable(rank, rank_cap);
    const auto t0 = Clock::now();
    struct Row {
        std::uint32_t neg;
        int ell;
        int nr;
    };
    std::vector<Row> rows;
    rows.reserve(group_order(GroupLabel::L, rank));
    for_each_in_group(
        GroupLabel::L, rank,
        [&rows](const SignedPermutation& el) {
            rows.push_back(Row{neg_value_mask(el), ell_l(el), nrmaj(el)});
        },
        rank_cap);
    const std::uint32_t subsets = 1u << rank;
    const double shared = seconds_since(t0) / subsets;

    std::vector<VerificationReport> out;
    out.reserve(subsets);
    for (std::uint32_t m = 0; m < subsets; ++m) {
        const auto s0 = Clock::now();
        std::vector<int> members;
        for (int i = 1; i <= rank; ++i) {
            if ((m >> (i - 1)) & 1) members.push_back(i);
        }
        SubsetB subset(std::move(members));
        VerificationReport rep;
        rep.identity = "equidistribution-L";
        rep.rank = rank;
        rep.subset = subset;
        std::vector<long long> nr_hist, ell_hist;
        auto bump = [](std::vector<long long>& h, int v) {
            if (static_cast<std::size_t>(v) >= h.size()) h.resize(v + 1, 0);
            ++h[v];
        };
        std::uint64_t count = 0;
        for (const Row& row : rows) {
            if (row.neg & ~m) continue;
            ++count;
            bump(nr_hist, row.nr);
            bump(ell_hist, row.ell);
        }
        rep.lhs = poly_from_hists({nr_hist});
        rep.aux = poly_from_hists({ell_hist});
        rep.rhs = product_formula_l(rank, subset);
        rep.element_count = count;
        rep.pass = rep.lhs == rep.rhs && *rep.aux == rep.rhs;
        if (!rep.pass) {
            locate_equidist_counterexample(
                rep, GroupLabel::L, rank, subset,
                [](const SignedPermutation& s) { return nrmaj(s); },
                [](const SignedPermutation& s) { return ell_l(s); });
        }
        rep.elapsed_seconds = shared + seconds_since(s0);
        out.push_back(std::move(rep));
    }
    return out;
}

VerificationReport check_equidistribution_a(int rank, int rank_cap, int workers) {
    require_enumerable(rank, rank_cap);
    return equidist_impl(
        GroupLabel::A, rank, std::nullopt,
        [](const SignedPermutation& s) { return rmaj(s); },
        [](const SignedPermutation& s) { return ell_a(s); },
        product_formula_a(rank), workers, "equidistribution-A");
}

VerificationReport check_theta(int rank, int rank_cap, int workers) {
    BijectionSpec spec{
        GroupLabel::L,
        "theta",
        "nrmaj",
        "ell_L",
        true,
        [](const SignedPermutation& pi,
           SignedPermutation& image) -> std::optional<std::string> {
            auto d = decompose(pi);
            if (auto problem = validate_decomposition(pi, d)) {
                return "canonical splitting: " + *problem;
            }
            image = d.sigma * psi(d.u);
            return std::nullopt;
        },
        [](const SignedPermutation& s) { return nrmaj(s); },
        [](const SignedPermutation& s) { return ell_l(s); }};
    return check_bijection(spec, rank, rank_cap, workers);
}

VerificationReport check_psi(int rank, int rank_cap, int workers) {
    BijectionSpec spec{
        GroupLabel::A,
        "psi",
        "rmaj",
        "ell_A",
        false,
        [](const SignedPermutation& v,
           SignedPermutation& image) -> std::optional<std::string> {
            image = psi(v);
            return std::nullopt;
        },
        [](const SignedPermutation& s) { return rmaj(s); },
        [](const SignedPermutation& s) { return ell_a(s); }};
    return check_bijection(spec, rank, rank_cap, workers);
}

namespace detail {

QPolynomial poly_over_with(GroupLabel label, int rank, const StatFn& stat,
                           const std::optional<SubsetB>& restriction,
                           int workers) {
    require_enumerable(rank, kMaxEnumerableRank);
    if (restriction) {
        if (label != GroupLabel::L) {
            throw std::invalid_argument("restriction applies to L only");
        }
        check_subset_range(*restriction, rank);
    }
    const std::uint64_t total = space_size(label, rank);
    const int nworkers = resolve_workers(workers, total);
    const bool restricted = restriction.has_value();
    const std::uint32_t bmask = restricted ? restriction->mask() : 0;
    std::vector<std::vector<long long>> hists(nworkers);
    run_partitioned(total, nworkers,
                    [&](int w, std::uint64_t lo, std::uint64_t hi) {
                        auto& h = hists[w];
                        scan_chunk(label, rank, lo, hi,
                                   [&](const SignedPermutation& el, std::uint64_t) {
                                       if (restricted &&
                                           (neg_value_mask(el) & ~bmask) != 0) {
                                           return;
                                       }
                                       const int v = stat(el);
                                       if (v < 0) {
                                           throw std::logic_error(
                                               "statistic produced a negative value");
                                       }
                                       if (static_cast<std::size_t>(v) >= h.size()) {
                                           h.resize(v + 1, 0);
                                       }
                                       ++h[v];
                                   });
                    });
    return poly_from_hists(hists);
}

VerificationReport check_equidistribution_with(int rank, const SubsetB& subset,
                                               const StatFn& lhs_stat,
                                               const StatFn& rhs_stat,
                                               const QPolynomial& formula) {
    require_enumerable(rank, kMaxEnumerableRank);
    check_subset_range(subset, rank);
    return equidist_impl(GroupLabel::L, rank, subset, lhs_stat, rhs_stat,
                         formula, 0, "equidistribution-L");
}

}  // namespace detail

}  // namespace permstat
