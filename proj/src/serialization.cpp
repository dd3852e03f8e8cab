#include "textmark/serialization.hpp"

#include "textmark/errors.hpp"

namespace textmark {
namespace {

using nlohmann::json;

[[noreturn]] void bad(Errc code, const std::string& context, const std::string& detail) {
  raise(code, context + ": " + detail);
}

const json& require(const json& j, const char* key, Errc code, const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end()) bad(code, context, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& j, const char* key, Errc code, const std::string& context) {
  const json& v = require(j, key, code, context);
  if (!v.is_string()) bad(code, context, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t require_count(const json& j, const char* key, Errc code, const std::string& context) {
  const json& v = require(j, key, code, context);
  if (!v.is_number_unsigned()) {
    bad(code, context, std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Watermark watermark_from_json_impl(const json& j, Errc code, const std::string& context) {
  if (!j.is_object()) bad(code, context, "watermark must be an object");
  Watermark wm;
  wm.keyword = require_string(j, "keyword", code, context);
  wm.kw_count = require_count(j, "kw_count", code, context);
  const json& pairs = require(j, "pairs", code, context);
  if (!pairs.is_array()) bad(code, context, "field 'pairs' must be an array");
  for (const json& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned()) {
      bad(code, context, "each pair must be two non-negative integers");
    }
    wm.pairs.push_back({p[0].get<std::uint32_t>(), p[1].get<std::uint32_t>()});
  }
  if (wm.kw_count != wm.pairs.size()) {
    bad(code, context, "kw_count does not match the number of pairs");
  }
  return wm;
}

}  // namespace

json to_json(const Watermark& wm) {
  json pairs = json::array();
  for (const NeighborPair& p : wm.pairs) {
    pairs.push_back(json::array({p.prev_len, p.next_len}));
  }
  return json{{"keyword", wm.keyword}, {"kw_count", wm.kw_count}, {"pairs", std::move(pairs)}};
}

Watermark watermark_from_json(const json& j) {
  return watermark_from_json_impl(j, Errc::bad_input, "watermark");
}

json to_json(const WatermarkRecord& rec) {
  return json{
      {"id", rec.id},
      {"author", rec.author},
      {"keyword", rec.keyword},
      {"watermark", to_json(rec.watermark)},
      {"text_digest", rec.text_digest},
      {"registered_at", rec.registered_at},
      {"word_count", rec.word_count},
      {"kw_count", rec.kw_count},
  };
}

WatermarkRecord record_from_json(const json& j) {
  const Errc code = Errc::corrupt_record;
  const std::string context = "record";
  if (!j.is_object()) bad(code, context, "record must be an object");

  WatermarkRecord rec;
  rec.id = require_string(j, "id", code, context);
  rec.author = require_string(j, "author", code, context);
  rec.keyword = require_string(j, "keyword", code, context);
  rec.watermark = watermark_from_json_impl(require(j, "watermark", code, context), code,
                                           "record watermark");
  rec.text_digest = require_string(j, "text_digest", code, context);
  rec.registered_at = require_string(j, "registered_at", code, context);
  rec.word_count = require_count(j, "word_count", code, context);
  rec.kw_count = require_count(j, "kw_count", code, context);

  if (rec.id.empty()) bad(code, context, "empty id");
  if (rec.kw_count != rec.watermark.kw_count) {
    bad(code, context, "kw_count does not match the stored watermark");
  }
  if (rec.keyword != rec.watermark.keyword) {
    bad(code, context, "record keyword does not match the stored watermark");
  }
  if (rec.text_digest.size() != 71 || rec.text_digest.rfind("sha256:", 0) != 0) {
    bad(code, context, "text_digest must look like sha256:<64 hex>");
  }
  return rec;
}

json to_json(const AttackReport& report) {
  return json{
      {"inserted", report.inserted},
      {"deleted", report.deleted},
      {"transpositions", report.transpositions},
      {"wc_before", report.wc_before},
      {"wc_after", report.wc_after},
      {"neighborhood_hits", report.neighborhood_hits},
      {"rng_algorithm", report.rng_algorithm},
  };
}

json to_json(const AttackSpec& spec) {
  json j{
      {"insert", spec.insert_ratio},
      {"delete", spec.delete_ratio},
      {"reorder", spec.reorder_ratio},
      {"seed", spec.seed},
  };
  if (spec.lexicon) j["lexicon"] = *spec.lexicon;
  return j;
}

AttackSpec attack_spec_from_json(const json& j) {
  const std::string context = "attack spec";
  if (!j.is_object()) bad(Errc::bad_input, context, "must be an object");
  AttackSpec spec;
  for (const auto& [key, value] : j.items()) {
    if (key == "insert" || key == "delete" || key == "reorder") {
      if (!value.is_number()) bad(Errc::bad_input, context, "'" + key + "' must be a number");
      const double ratio = value.get<double>();
      if (key == "insert") spec.insert_ratio = ratio;
      if (key == "delete") spec.delete_ratio = ratio;
      if (key == "reorder") spec.reorder_ratio = ratio;
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) {
        bad(Errc::bad_input, context, "'seed' must be a non-negative integer");
      }
      spec.seed = value.get<std::uint64_t>();
    } else if (key == "lexicon") {
      if (!value.is_array()) bad(Errc::bad_input, context, "'lexicon' must be an array of words");
      std::vector<std::string> words;
      for (const json& w : value) {
        if (!w.is_string()) bad(Errc::bad_input, context, "'lexicon' must be an array of words");
        words.push_back(w.get<std::string>());
      }
      spec.lexicon = std::move(words);
    } else {
      bad(Errc::bad_input, context, "unknown field '" + key + "'");
    }
  }
  return spec;
}

json verdict_json(const VerificationResult& result) {
  return json{
      {"tampered", result.tampered},
      {"war", result.comparison.war},
      {"wdr", result.comparison.wdr},
      {"kw_count_original", result.kw_count_original},
      {"kw_count_observed", result.kw_count_observed},
  };
}

}  // namespace textmark
