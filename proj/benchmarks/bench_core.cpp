#include <benchmark/benchmark.h>

#include "ietflip/constructions.hpp"
#include "ietflip/lift.hpp"
#include "ietflip/subgroup.hpp"
#include "ietflip/text.hpp"
#include "ietflip/verify.hpp"

using namespace ietflip;

namespace {

std::vector<MapClass> sample_classes(int count, bool flips) {
  verify::Rng rng(12345);
  std::vector<MapClass> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(verify::random_class(rng, 6, flips));
  return out;
}

void BM_compose(benchmark::State& state) {
  auto cls = sample_classes(64, true);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(cls[i % cls.size()], cls[(i + 1) % cls.size()]));
    ++i;
  }
}
BENCHMARK(BM_compose);

void BM_keane_roundtrip(benchmark::State& state) {
  auto cls = sample_classes(64, true);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_keane(keane_form(cls[i % cls.size()])));
    ++i;
  }
}
BENCHMARK(BM_keane_roundtrip);

void BM_enumerate_lifts_triple_flip(benchmark::State& state) {
  MapClass f3 = make_triple_flip(Scalar::ratio(1, 2), Scalar::ratio(1, 4),
                                 Scalar::ratio(1, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_hyperclean_lifts(f3));
  }
}
BENCHMARK(BM_enumerate_lifts_triple_flip);

void BM_lambda_contains_rank2(benchmark::State& state) {
  SubgroupPresentation L({CirclePoint(Scalar::sqrt_of(2)),
                          CirclePoint(Scalar::ratio(1, 3))});
  CirclePoint x(Scalar::sqrt_of(2) * Scalar(7) + Scalar::ratio(5, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_contains(L, x));
  }
}
BENCHMARK(BM_lambda_contains_rank2);

void BM_serialize_parse(benchmark::State& state) {
  auto cls = sample_classes(64, true);
  FieldSpec field(2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_map(map_text(cls[i % cls.size()]), field));
    ++i;
  }
}
BENCHMARK(BM_serialize_parse);

void BM_decompose_partial_rotations(benchmark::State& state) {
  verify::Rng rng(999);
  auto f = verify::random_iet_plus(rng, 6, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_partial_rotations(f));
  }
}
BENCHMARK(BM_decompose_partial_rotations);

}  // namespace
