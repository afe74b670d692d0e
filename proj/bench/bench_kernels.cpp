// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "ivos/kernels.hpp"
#include "ivos/random.hpp"

namespace k = ivos::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  ivos::Rng rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal(0.0, 1.0);
  return v;
}

// U-Net sized convolution: 64 channels over a 2-points-per-hour grid.
k::Conv1dShape conv_shape() {
  k::Conv1dShape s;
  s.batch = 16;
  s.in_channels = 64;
  s.out_channels = 64;
  s.length = 144;
  s.kernel = 5;
  s.padding = 2;
  return s;
}

template <auto Gemm>
void BM_gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vector(n * n, 1), b = random_vector(n * n, 2);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    Gemm(n, n, n, a, b, c, false);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n * n * n));
}

template <auto Conv>
void BM_conv_forward(benchmark::State& state) {
  const auto s = conv_shape();
  const auto x = random_vector(s.batch * s.in_channels * s.length, 3);
  const auto w = random_vector(s.out_channels * s.in_channels * s.kernel, 4);
  const auto bias = random_vector(s.out_channels, 5);
  std::vector<double> y(s.batch * s.out_channels * s.out_length());
  for (auto _ : state) {
    Conv(s, x, w, bias, y);
    benchmark::DoNotOptimize(y.data());
  }
}

template <auto Conv>
void BM_conv_backward_weight(benchmark::State& state) {
  const auto s = conv_shape();
  const auto x = random_vector(s.batch * s.in_channels * s.length, 3);
  const auto gy = random_vector(s.batch * s.out_channels * s.out_length(), 6);
  std::vector<double> gw(s.out_channels * s.in_channels * s.kernel), gb(s.out_channels);
  for (auto _ : state) {
    Conv(s, x, gy, gw, gb);
    benchmark::DoNotOptimize(gw.data());
  }
}

template <auto Encode>
void BM_rbf_encode(benchmark::State& state) {
  ivos::Rng rng(7);
  std::vector<k::EncoderPoint> pts(400);
  for (auto& p : pts) p = {rng.uniform() * 48.0, static_cast<int>(rng.below(5)), rng.normal(0, 1)};
  std::vector<double> grid(144);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = -12.0 + 0.5 * static_cast<double>(i);
  std::vector<double> out(10 * grid.size());
  for (auto _ : state) {
    Encode(pts, grid, 1.0, 5, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Draw>
void BM_bootstrap_indices(benchmark::State& state) {
  for (auto _ : state) {
    auto idx = Draw(2500, 1000, 11);
    benchmark::DoNotOptimize(idx.data());
  }
}

}  // namespace

BENCHMARK(BM_gemm<k::reference::gemm>)->Name("gemm/reference")->Arg(64)->Arg(256);
BENCHMARK(BM_gemm<k::parallel::gemm>)->Name("gemm/parallel")->Arg(64)->Arg(256);
BENCHMARK(BM_conv_forward<k::reference::conv1d_forward>)->Name("conv1d_forward/reference");
BENCHMARK(BM_conv_forward<k::parallel::conv1d_forward>)->Name("conv1d_forward/parallel");
BENCHMARK(BM_conv_backward_weight<k::reference::conv1d_backward_weight>)->Name("conv1d_backward_weight/reference");
BENCHMARK(BM_conv_backward_weight<k::parallel::conv1d_backward_weight>)->Name("conv1d_backward_weight/parallel");
BENCHMARK(BM_rbf_encode<k::reference::rbf_encode>)->Name("rbf_encode/reference");
BENCHMARK(BM_rbf_encode<k::parallel::rbf_encode>)->Name("rbf_encode/parallel");
BENCHMARK(BM_bootstrap_indices<k::reference::bootstrap_indices>)->Name("bootstrap_indices/reference");
BENCHMARK(BM_bootstrap_indices<k::parallel::bootstrap_indices>)->Name("bootstrap_indices/parallel");

BENCHMARK_MAIN();
