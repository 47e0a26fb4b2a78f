#include <benchmark/benchmark.h>

#include "bezlin/linalg.hpp"
#include "bezlin/parse.hpp"
#include "bezlin/polysyzygy.hpp"
#include "bezlin/qf.hpp"

using namespace bezlin;

namespace {

DomainMatrix random_matrix(DomainDescriptor dom, std::size_t m, std::size_t n,
                           unsigned seed) {
  // xorshift; fixed seed so runs are comparable
  unsigned long long s = seed * 2654435761ull + 1;
  auto next = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return (long)(s % 41) - 20;
  };
  DomainMatrix A(dom, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A.at(i, j) = DomainElem::from_int(dom, next());
  return A;
}

void BM_hnf(benchmark::State& state) {
  auto A = random_matrix(DomainDescriptor::integers(), state.range(0),
                         state.range(0) + 2, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(hnf(A));
}
BENCHMARK(BM_hnf)->Arg(4)->Arg(8)->Arg(12);

void BM_kernel_row(benchmark::State& state) {
  auto A = random_matrix(DomainDescriptor::integers(), 1, state.range(0), 11);
  auto row = A.row(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernel_row(row));
}
BENCHMARK(BM_kernel_row)->Arg(8)->Arg(16)->Arg(32);

void BM_syzygies_univariate(benchmark::State& state) {
  auto dom = DomainDescriptor::rationals();
  std::vector<std::string> vars{"X"};
  PolyVector f{parse_poly("X^2 - 1", vars, dom), parse_poly("X + 1", vars, dom),
               parse_poly("X - 1", vars, dom)};
  for (auto _ : state)
    benchmark::DoNotOptimize(syzygies(f));
}
BENCHMARK(BM_syzygies_univariate);

void BM_param_kernel_row(benchmark::State& state) {
  TermRow a;
  for (long i = 0; i < state.range(0); ++i)
    a.push_back(GcdTerm::param((unsigned)i));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_param_kernel_row(a, (unsigned)a.size()));
}
BENCHMARK(BM_param_kernel_row)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
