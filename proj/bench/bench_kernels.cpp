// Copyright 2026 The covertlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "covertlab/kernels.hpp"
#include "covertlab/oracles.hpp"

namespace {

using covertlab::ChannelParams;
namespace kernels = covertlab::kernels;
namespace sparse = covertlab::sparse;

struct SweepInput {
  std::vector<double> abscissa;
  std::vector<ChannelParams> points;
};

SweepInput make_sweep(std::size_t count) {
  SweepInput in;
  for (std::size_t k = 0; k < count; ++k) {
    const double nbar = std::pow(10.0, -6.0 + 9.0 * static_cast<double>(k) / (count - 1.0));
    in.abscissa.push_back(nbar);
    in.points.push_back({0.9, nbar});
  }
  return in;
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepInput in = make_sweep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::sweep_serial(in.abscissa, in.points, {}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepInput in = make_sweep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::sweep_parallel(in.abscissa, in.points, {}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RejectionSerial(benchmark::State& state) {
  const sparse::SparseConfig config{state.range(0), 0.3, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::count_rejections_serial(config, 1, 20000));
  }
}

void BM_RejectionParallel(benchmark::State& state) {
  const sparse::SparseConfig config{state.range(0), 0.3, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::count_rejections_parallel(config, 1, 20000));
  }
}

void BM_MixtureSerial(benchmark::State& state) {
  const auto spectra = covertlab::oracles::sparse_mode_spectra({0.6, 0.2}, 4);
  const sparse::SparseConfig config{state.range(0), 0.3, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::mixture_spectrum_serial(spectra.r0, spectra.r1, config));
  }
}

void BM_MixtureParallel(benchmark::State& state) {
  const auto spectra = covertlab::oracles::sparse_mode_spectra({0.6, 0.2}, 4);
  const sparse::SparseConfig config{state.range(0), 0.3, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::mixture_spectrum_parallel(spectra.r0, spectra.r1, config));
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(91)->Arg(10000);
BENCHMARK(BM_SweepParallel)->Arg(91)->Arg(10000);
BENCHMARK(BM_RejectionSerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_RejectionParallel)->Arg(100)->Arg(1000);
BENCHMARK(BM_MixtureSerial)->Arg(6)->Arg(9);
BENCHMARK(BM_MixtureParallel)->Arg(6)->Arg(9);

BENCHMARK_MAIN();
