// Builds the benchmark corpus: ten deterministic text samples plus a
// ready-to-run evaluation config. Sample sizes and seeds come from the
// manifest (corpus/manifest.json by default via --manifest, otherwise the
// built-in list).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "textmark/corpus.hpp"
#include "textmark/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the textmark benchmark corpus"};
  std::string out_dir;
  std::string manifest_path;
  std::string config_path;
  app.add_option("--out", out_dir, "Directory for the sample files")->required();
  app.add_option("--manifest", manifest_path, "Manifest JSON (default: built-in sample list)");
  app.add_option("--config", config_path,
                 "Also write an evaluation config referencing the samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::vector<textmark::CorpusSample> samples =
        manifest_path.empty() ? textmark::default_corpus()
                              : textmark::load_manifest(manifest_path);
    const auto paths = textmark::write_corpus(out_dir, samples);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      std::cout << samples[i].id << ' ' << samples[i].words << " words -> "
                << paths[i].string() << '\n';
    }

    if (!config_path.empty()) {
      nlohmann::json config;
      config["keywords"] = {"and", "of", "in"};
      config["mode"] = "positional_symbol";
      config["attacks"] = nlohmann::json::array(
          {{{"insert", 0.10}, {"delete", 0.10}, {"reorder", 0.05}, {"seed", 1}},
           {{"insert", 0.26}, {"delete", 0.25}, {"reorder", 0.0}, {"seed", 2}}});
      nlohmann::json sample_list = nlohmann::json::array();
      for (std::size_t i = 0; i < samples.size(); ++i) {
        sample_list.push_back({{"id", samples[i].id}, {"path", paths[i].string()}});
      }
      config["samples"] = std::move(sample_list);
      std::ofstream out(config_path, std::ios::binary | std::ios::trunc);
      out << config.dump(2) << '\n';
      if (!out) throw std::runtime_error("cannot write " + config_path);
      std::cout << "config -> " << config_path << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "textmark-corpus: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
