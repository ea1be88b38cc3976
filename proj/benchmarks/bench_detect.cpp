#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "tgglines/evaluation.hpp"
#include "tgglines/pipeline.hpp"
#include "tgglines/skeleton_graph.hpp"
#include "tgglines/skeletonize.hpp"

using namespace tgglines;
using namespace tgglines::testing;

namespace {

const std::vector<BinaryImage>& corpus_images(int width) {
  static std::vector<std::vector<BinaryImage>> cache(8);
  auto& slot = cache[static_cast<std::size_t>(width)];
  if (slot.empty()) {
    const auto diagrams = corpus();
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      slot.push_back(render(diagrams[i], {width, Noise::ragged, 0.15, static_cast<std::uint32_t>(i)}));
    }
  }
  return slot;
}

void BM_DetectCorpus(benchmark::State& state) {
  const auto& images = corpus_images(static_cast<int>(state.range(0)));
  std::size_t segments = 0;
  for (auto _ : state) {
    for (const auto& img : images) segments += detect(img).segments.size();
  }
  benchmark::DoNotOptimize(segments);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(images.size()));
}
BENCHMARK(BM_DetectCorpus)->Arg(1)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Thin(benchmark::State& state) {
  const auto img = render(ladder(), {static_cast<int>(state.range(0)), Noise::none, 0.0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(thin(img));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.width() * img.height()));
}
BENCHMARK(BM_Thin)->Arg(1)->Arg(3)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_ThinRandomBlobs(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<BinaryImage> blobs;
  for (int i = 0; i < 200; ++i) blobs.push_back(random_blob_image(rng, 32));
  for (auto _ : state) {
    for (const auto& b : blobs) benchmark::DoNotOptimize(thin(b));
  }
}
BENCHMARK(BM_ThinRandomBlobs)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  const auto s = thin(corpus_images(3)[1]);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(s));
}
BENCHMARK(BM_BuildGraph)->Unit(benchmark::kMicrosecond);

void BM_Evaluate(benchmark::State& state) {
  const auto diagrams = corpus();
  const auto gt = ground_truth_of(diagrams[1]);
  const auto found = detect(corpus_images(3)[1]).plain_segments();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(gt, found));
}
BENCHMARK(BM_Evaluate)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
