#include <benchmark/benchmark.h>

#include <string>

#include "knotgt/ball.hpp"
#include "knotgt/sclbounds.hpp"

namespace {

using namespace knotgt;
using seifert::Element;
using seifert::GroupKind;
using seifert::GroupSpec;

std::string long_word(int letters) {
  static const char* alphabet[] = {"a", "b^-1", "a^-1", "b", "a", "b"};
  std::string out;
  for (int i = 0; i < letters; ++i) {
    if (!out.empty()) {
      out += ' ';
    }
    out += alphabet[i % 6];
  }
  return out;
}

void BM_parse_normalize(benchmark::State& state) {
  GroupSpec spec = seifert::make_group(GroupKind::TorusKnot, 3, 5);
  std::string word = long_word(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(seifert::parse_element(spec, word));
  }
}
BENCHMARK(BM_parse_normalize)->Arg(64)->Arg(512);

void BM_multiply(benchmark::State& state) {
  GroupSpec spec = seifert::make_group(GroupKind::TorusKnot, 3, 5);
  Element x = seifert::parse_element(spec, long_word(48));
  Element y = seifert::invert(seifert::parse_element(spec, long_word(31)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(seifert::multiply(x, y));
  }
}
BENCHMARK(BM_multiply);

void BM_are_conjugate(benchmark::State& state) {
  GroupSpec spec = seifert::make_group(GroupKind::TorusKnot, 3, 5);
  Element g = seifert::parse_element(spec, long_word(40));
  Element conj = seifert::conjugate_by(seifert::parse_element(spec, "b a b"), g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(seifert::are_conjugate(g, conj));
  }
}
BENCHMARK(BM_are_conjugate);

void BM_generator_ball(benchmark::State& state) {
  GroupSpec spec = seifert::make_group(GroupKind::TorusKnot, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generator_ball(spec, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_generator_ball)->Arg(3)->Arg(4);

void BM_gt_order_search(benchmark::State& state) {
  GroupSpec spec = seifert::make_group(GroupKind::TorusKnot, 3, 5);
  Element g = seifert::parse_element(spec, "[a,b]");
  for (auto _ : state) {
    benchmark::DoNotOptimize(torsion::gt_order_search(g, torsion::SearchBounds{2, 3}));
  }
}
BENCHMARK(BM_gt_order_search);

void BM_roots_search(benchmark::State& state) {
  GroupSpec spec = seifert::make_group(GroupKind::TorusKnot, 2, 3);
  Element h = seifert::generator(spec, 'h');
  for (auto _ : state) {
    benchmark::DoNotOptimize(torsion::roots_search(h, 2, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_roots_search)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
