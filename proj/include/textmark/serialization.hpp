#pragma once

#include <json.hpp>

#include "textmark/attack.hpp"
#include "textmark/registry.hpp"
#include "textmark/watermark.hpp"

namespace textmark {

// Wire format for a watermark: {"keyword": str, "kw_count": int,
// "pairs": [[int,int], ...]}. Field names are a compatibility contract.
nlohmann::json to_json(const Watermark& wm);
Watermark watermark_from_json(const nlohmann::json& j);  // throws bad_input

nlohmann::json to_json(const WatermarkRecord& rec);
// Strict: missing fields, wrong types or violated invariants all throw
// Errc::corrupt_record.
WatermarkRecord record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AttackReport& report);
nlohmann::json to_json(const AttackSpec& spec);
// Accepts the CLI flag names as keys: insert, delete, reorder, seed, lexicon.
AttackSpec attack_spec_from_json(const nlohmann::json& j);  // throws bad_input

// Verdict body shared verbatim by the CLI and the HTTP facade.
nlohmann::json verdict_json(const VerificationResult& result);

}  // namespace textmark
