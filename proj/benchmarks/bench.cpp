#include <benchmark/benchmark.h>

#include "permstat/bijections.hpp"
#include "permstat/canonical.hpp"
#include "permstat/foata.hpp"
#include "permstat/statistics.hpp"
#include "permstat/verify.hpp"

namespace {

using namespace permstat;

void BM_theta_rank6(benchmark::State& state) {
    const SignedPermutation pi({3, -6, -4, 5, 2, -1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta(pi));
    }
}
BENCHMARK(BM_theta_rank6);

void BM_nrmaj_rank8(benchmark::State& state) {
    const SignedPermutation pi({3, -6, -4, 5, 2, -1, 8, -7});
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrmaj(pi));
    }
}
BENCHMARK(BM_nrmaj_rank8);

void BM_phi_long_word(benchmark::State& state) {
    std::vector<int> letters;
    for (int i = 0; i < 64; ++i) letters.push_back((i * 37) % 16 + 1);
    const LetterWord r{letters};
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi(r));
    }
}
BENCHMARK(BM_phi_long_word);

void BM_s_factorize_rank8(benchmark::State& state) {
    const SignedPermutation w({5, 3, 8, 1, 7, 2, 6, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_factorize(w));
    }
}
BENCHMARK(BM_s_factorize_rank8);

void BM_poly_over_l6(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            poly_over(GroupLabel::L, 6, Statistic::ell_l, std::nullopt,
                      kDefaultRankCap, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_poly_over_l6)->Arg(1)->Arg(4);

void BM_check_theta_rank5(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_theta(5));
    }
}
BENCHMARK(BM_check_theta_rank5);

}  // namespace

BENCHMARK_MAIN();
