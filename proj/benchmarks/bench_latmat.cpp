#include <benchmark/benchmark.h>

#include "latmat/oracle.hpp"
#include "latmat/weinberg.hpp"

using namespace latmat;

namespace {

RingKind kind_of(int arg) {
    switch (arg) {
        case 0: return RingKind::Integers;
        case 1: return RingKind::Rationals;
        default: return RingKind::QuadraticSqrt2;
    }
}

Mat gauge_q(RingKind kind, std::size_t n) {
    SeededStream st(271828, static_cast<std::uint64_t>(n));
    std::vector<FieldElem> gauges;
    for (std::size_t i = 0; i < n; ++i)
        gauges.push_back(random_positive_field_elem(st, kind, 8));
    std::vector<std::vector<FieldElem>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i].push_back(FieldElem(random_positive_unit(st, kind, 3)));
    return make_gauge_structure(Mat::identity(kind, n), gauges,
                                Mat::from_rows(kind, rows))
        .q;
}

void bm_det(benchmark::State& state) {
    RingKind kind = kind_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    SeededStream st(314159, n);
    Mat m = random_ring_matrix(st, kind, n, 12);
    for (auto _ : state) benchmark::DoNotOptimize(m.det());
}
BENCHMARK(bm_det)->Args({0, 4})->Args({0, 6})->Args({0, 8})->Args({2, 6});

void bm_solve_units(benchmark::State& state) {
    RingKind kind = kind_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    Mat q = gauge_q(kind, n);
    for (auto _ : state) benchmark::DoNotOptimize(solve_units(q).x);
}
BENCHMARK(bm_solve_units)->Args({1, 4})->Args({1, 6})->Args({2, 4});

void bm_contains(benchmark::State& state) {
    RingKind kind = kind_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    ConeA cone = gen_cone(GenSpec{kind, n, 161803, 8, std::nullopt});
    SeededStream st(141421, n);
    Mat x = cone.matrix() * random_nonneg_matrix(st, kind, n, 6);
    for (auto _ : state) benchmark::DoNotOptimize(cone.contains(x));
}
BENCHMARK(bm_contains)->Args({0, 4})->Args({1, 4})->Args({2, 4});

void bm_membership_oracle(benchmark::State& state) {
    RingKind kind = kind_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    ConeA cone = gen_cone(GenSpec{kind, n, 161803, 8, std::nullopt});
    SeededStream st(141421, n);
    Mat x = cone.matrix() * random_nonneg_matrix(st, kind, n, 6);
    for (auto _ : state) benchmark::DoNotOptimize(membership_oracle(cone, x));
}
BENCHMARK(bm_membership_oracle)->Args({0, 4})->Args({1, 4})->Args({2, 4});

void bm_join(benchmark::State& state) {
    RingKind kind = kind_of(static_cast<int>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(state.range(1));
    ConeA cone = gen_cone(GenSpec{kind, n, 271801, 8, std::nullopt});
    SeededStream st(173205, n);
    Mat x = random_ring_matrix(st, kind, n, 8);
    Mat y = random_ring_matrix(st, kind, n, 8);
    for (auto _ : state) benchmark::DoNotOptimize(cone.join(x, y));
}
BENCHMARK(bm_join)->Args({0, 4})->Args({2, 4});

}  // namespace

BENCHMARK_MAIN();
