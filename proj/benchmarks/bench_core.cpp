#include <benchmark/benchmark.h>

#include "cuntz/normalizer.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/subalg.hpp"

namespace {

using namespace cuntz;

AlgebraSpec mixed_spec() {
    return {Alphabet(2), {{Word{1, 1}}, {Word{1, 2}}, {Word{2, 1}, Word{2, 2}}}};
}

PermSpec swap_13() { return PermSpec{{2, 1, 0}}; }

// A moderately dense element: (U + U*)^2 expanded at parse time.
Element dense_element() {
    Element u = build_U_sigma(mixed_spec(), swap_13()).element;
    Element x = u + star(u);
    return x * x;
}

void bm_normal_form(benchmark::State& state) {
    Element x = dense_element();
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(x));
}
BENCHMARK(bm_normal_form);

void bm_mul(benchmark::State& state) {
    Element x = dense_element();
    for (auto _ : state) benchmark::DoNotOptimize(x * x);
}
BENCHMARK(bm_mul);

void bm_build_U_sigma(benchmark::State& state) {
    AlgebraSpec spec = mixed_spec();
    PermSpec sigma = swap_13();
    for (auto _ : state) benchmark::DoNotOptimize(build_U_sigma(spec, sigma));
}
BENCHMARK(bm_build_U_sigma);

void bm_factorize(benchmark::State& state) {
    AlgebraSpec spec = mixed_spec();
    Element v = build_U_sigma(spec, swap_13()).element;
    for (auto _ : state) benchmark::DoNotOptimize(factorize(v, spec));
}
BENCHMARK(bm_factorize);

void bm_parse_render(benchmark::State& state) {
    Element x = normal_form(dense_element());
    std::string text = render_element(x);
    for (auto _ : state) benchmark::DoNotOptimize(parse_element(text, 2));
}
BENCHMARK(bm_parse_render);

}  // namespace

BENCHMARK_MAIN();
