#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "textmark/text.hpp"
#include "textmark/watermark.hpp"

namespace textmark {

// One certifying-authority entry. Instead of archiving the document itself
// the store binds the registration to a SHA-256 digest of its exact bytes.
struct WatermarkRecord {
  std::string id;             // unique hex token, 32 chars
  std::string author;
  std::string keyword;
  Watermark watermark;
  std::string text_digest;    // "sha256:<64 hex>"
  std::string registered_at;  // RFC 3339 UTC, millisecond precision
  std::size_t word_count = 0;
  std::size_t kw_count = 0;

  friend bool operator==(const WatermarkRecord&, const WatermarkRecord&) = default;
};

struct RecordQuery {
  std::optional<std::string> author;
  std::optional<std::string> keyword;
  std::optional<std::string> text_digest;
  std::optional<std::string> id;
};

using Clock = std::function<std::chrono::system_clock::time_point()>;

std::string format_rfc3339_ms(std::chrono::system_clock::time_point tp);

// Ownership dispute rule: the earliest registration wins; a timestamp tie
// falls back to the smaller id. All records must share one text_digest.
// Throws Errc::empty_input on an empty set.
const WatermarkRecord& resolve_owner(const std::vector<WatermarkRecord>& records);

// Append-only JSON Lines store behind the certifying authority. One record
// per line; replaying the file on open reconstructs the full history.
//
// Crash behaviour: a final line missing its newline terminator is treated as
// a torn append — replay reports it via truncation_warning() and the next
// successful append truncates it away. A malformed line anywhere else is a
// hard Errc::corrupt_record, since complete lines are only ever written
// whole and fsynced.
//
// Concurrency: any number of concurrent readers; appends are serialized
// internally, so one Registry instance may be shared across threads.
class Registry {
 public:
  explicit Registry(std::filesystem::path path, Clock clock = {});

  // Generates the watermark for `text` under `policy`, stamps the current
  // time and durably appends the record. Returns the stored record.
  WatermarkRecord register_document(std::string_view text, std::string_view author,
                                    const KeywordPolicy& policy);

  // Conjunctive filter; records come back in append order.
  std::vector<WatermarkRecord> find(const RecordQuery& query) const;
  std::optional<WatermarkRecord> find_by_id(std::string_view id) const;

  std::vector<WatermarkRecord> all() const;
  std::size_t size() const;

  const std::filesystem::path& path() const { return path_; }

  // Non-empty when replay stopped at a torn final line.
  const std::string& truncation_warning() const { return truncation_warning_; }

 private:
  void replay();
  void append_line(const std::string& line);
  std::string next_id();
  std::string next_timestamp() const;

  std::filesystem::path path_;
  Clock clock_;
  std::vector<WatermarkRecord> records_;
  std::unordered_set<std::string> ids_;
  std::string truncation_warning_;
  std::uint64_t valid_bytes_ = 0;  // file prefix covered by intact records
  bool needs_repair_ = false;
  std::mt19937_64 id_rng_;
  mutable std::shared_mutex mutex_;
};

}  // namespace textmark
