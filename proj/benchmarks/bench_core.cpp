/*
 *   Copyright 2026 The ehresmann-lab developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "ehresmann/biaction.hpp"
#include "ehresmann/boolean_monoid.hpp"
#include "ehresmann/category.hpp"
#include "ehresmann/embedding.hpp"
#include "ehresmann/enumerate.hpp"
#include "ehresmann/powerset.hpp"

namespace {

using namespace ehresmann;

void BM_BuildPowersetMonoid(benchmark::State& state) {
  const auto g = pair_groupoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto m = build_powerset_monoid(g, std::uint64_t{1} << 40);
    benchmark::DoNotOptimize(m);
  }
  state.SetLabel(std::to_string(g.size()) + " morphisms");
}
BENCHMARK(BM_BuildPowersetMonoid)->Arg(2)->Arg(3);

void BM_CheckEhresmann(benchmark::State& state) {
  const auto g = pair_groupoid(static_cast<int>(state.range(0)));
  const auto m = build_powerset_monoid(g, std::uint64_t{1} << 40);
  for (auto _ : state) {
    auto checked = check_ehresmann(m.value().sg);
    benchmark::DoNotOptimize(checked);
  }
}
BENCHMARK(BM_CheckEhresmann)->Arg(2)->Arg(3);

void BM_ClassifyAllSubsets(benchmark::State& state) {
  const auto g = pair_groupoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
      benchmark::DoNotOptimize(classify_subset(g, mask));
    }
  }
}
BENCHMARK(BM_ClassifyAllSubsets)->Arg(2)->Arg(3);

void BM_LocalBisections(benchmark::State& state) {
  const auto g = pair_groupoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto pim = local_bisections(g);
    benchmark::DoNotOptimize(pim);
  }
}
BENCHMARK(BM_LocalBisections)->Arg(3)->Arg(4);

void BM_EnumerateCategories(benchmark::State& state) {
  for (auto _ : state) {
    auto cats = enumerate_categories(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(cats);
  }
}
BENCHMARK(BM_EnumerateCategories)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BiactionRoundTrip(benchmark::State& state) {
  const auto m = build_powerset_monoid(pair_groupoid(2));
  for (auto _ : state) {
    auto biaction = biaction_from_ehresmann(m.value().sg);
    auto back = semigroup_from_biaction(biaction);
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_BiactionRoundTrip);

void BM_ReconstructCategory(benchmark::State& state) {
  const auto m = build_powerset_monoid(pair_groupoid(2));
  auto sg = check_ehresmann(m.value().sg);
  auto monoid = check_boolean(std::move(sg).value(), m.value().down);
  for (auto _ : state) {
    auto phi = phi_isomorphism(monoid.value());
    benchmark::DoNotOptimize(phi);
  }
}
BENCHMARK(BM_ReconstructCategory);

}  // namespace

BENCHMARK_MAIN();
