#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace textmark {

struct CorpusSample {
  std::string id;
  std::size_t words = 0;  // exact word count of the generated text
  std::uint64_t seed = 0;
};

// The ten benchmark samples: word counts spanning ~180 to ~67k words. Every
// sample of this size carries the evaluation keywords "and", "of" and "in"
// at natural English densities (a few percent each).
std::vector<CorpusSample> default_corpus();

// Deterministic English-like filler prose with exactly `words` words
// (sentence case, commas and periods attached to words). Same (words, seed)
// always yields byte-identical text.
std::string generate_sample_text(std::size_t words, std::uint64_t seed);
std::string generate_sample_text(const CorpusSample& sample);

// Writes "<id>.txt" per sample and returns the paths, in sample order.
std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir,
                                                const std::vector<CorpusSample>& samples);

// Manifest file: {"samples": [{"id": str, "words": int, "seed": int}, ...]}
std::vector<CorpusSample> load_manifest(const std::filesystem::path& path);

}  // namespace textmark
