#include "textmark/registry.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <mutex>

#include "textmark/digest.hpp"
#include "textmark/errors.hpp"
#include "textmark/serialization.hpp"

namespace textmark {
namespace {

struct Fd {
  int fd = -1;
  ~Fd() {
    if (fd >= 0) ::close(fd);
  }
};

std::string errno_text() { return std::strerror(errno); }

// Reads the whole file; a missing file is an empty store.
std::string read_store_file(const std::filesystem::path& path) {
  Fd f;
  f.fd = ::open(path.c_str(), O_RDONLY | O_CLOEXEC);
  if (f.fd < 0) {
    if (errno == ENOENT) return {};
    raise(Errc::storage_failure, "cannot open store " + path.string() + ": " + errno_text());
  }
  std::string content;
  char buf[1 << 16];
  for (;;) {
    const ssize_t n = ::read(f.fd, buf, sizeof buf);
    if (n < 0) {
      raise(Errc::storage_failure, "cannot read store " + path.string() + ": " + errno_text());
    }
    if (n == 0) break;
    content.append(buf, static_cast<std::size_t>(n));
  }
  return content;
}

}  // namespace

std::string format_rfc3339_ms(std::chrono::system_clock::time_point tp) {
  using namespace std::chrono;
  auto total_ms = duration_cast<milliseconds>(tp.time_since_epoch()).count();
  long long ms = total_ms % 1000;
  std::time_t secs = static_cast<std::time_t>(total_ms / 1000);
  if (ms < 0) {
    ms += 1000;
    secs -= 1;
  }
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03lldZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec, ms);
  return buf;
}

const WatermarkRecord& resolve_owner(const std::vector<WatermarkRecord>& records) {
  if (records.empty()) raise(Errc::empty_input, "resolve_owner: no records");
  const WatermarkRecord* best = &records.front();
  for (const WatermarkRecord& rec : records) {
    if (rec.text_digest != records.front().text_digest) {
      raise(Errc::bad_input, "resolve_owner: records do not share one text_digest");
    }
    if (rec.registered_at < best->registered_at ||
        (rec.registered_at == best->registered_at && rec.id < best->id)) {
      best = &rec;
    }
  }
  return *best;
}

Registry::Registry(std::filesystem::path path, Clock clock)
    : path_(std::move(path)), clock_(std::move(clock)), id_rng_(std::random_device{}()) {
  replay();
}

void Registry::replay() {
  const std::string content = read_store_file(path_);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    const std::size_t nl = content.find('\n', pos);
    if (nl == std::string::npos) {
      // torn append: reported, and truncated away on the next append
      truncation_warning_ = "store " + path_.string() + ": discarded torn final line (" +
                            std::to_string(content.size() - pos) + " bytes)";
      needs_repair_ = true;
      break;
    }
    ++line_no;
    const std::string_view line(content.data() + pos, nl - pos);
    WatermarkRecord rec;
    try {
      rec = record_from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      raise(Errc::corrupt_record,
            "store " + path_.string() + " line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      raise(Errc::corrupt_record,
            "store " + path_.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!ids_.insert(rec.id).second) {
      raise(Errc::corrupt_record,
            "store " + path_.string() + " line " + std::to_string(line_no) + ": duplicate id " +
                rec.id);
    }
    if (!records_.empty() && rec.registered_at < records_.back().registered_at) {
      raise(Errc::corrupt_record, "store " + path_.string() + " line " + std::to_string(line_no) +
                                      ": registration timestamps go backwards");
    }
    records_.push_back(std::move(rec));
    pos = nl + 1;
    valid_bytes_ = pos;
  }
}

void Registry::append_line(const std::string& line) {
  if (needs_repair_) {
    // drop the torn tail before the first new append
    std::error_code ec;
    std::filesystem::resize_file(path_, valid_bytes_, ec);
    if (ec) {
      raise(Errc::storage_failure, "cannot repair store " + path_.string() + ": " + ec.message());
    }
    needs_repair_ = false;
  }
  Fd f;
  f.fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (f.fd < 0) {
    raise(Errc::storage_failure, "cannot open store " + path_.string() + ": " + errno_text());
  }
  // until the full line is down and fsynced, treat the tail as torn
  needs_repair_ = true;
  const std::string payload = line + "\n";
  std::size_t written = 0;
  while (written < payload.size()) {
    const ssize_t n = ::write(f.fd, payload.data() + written, payload.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      raise(Errc::storage_failure, "append to " + path_.string() + " failed: " + errno_text());
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(f.fd) != 0) {
    raise(Errc::storage_failure, "fsync of " + path_.string() + " failed: " + errno_text());
  }
  valid_bytes_ += payload.size();
  needs_repair_ = false;
}

std::string Registry::next_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  for (;;) {
    std::string id;
    id.reserve(32);
    for (int i = 0; i < 2; ++i) {
      std::uint64_t v = id_rng_();
      for (int j = 0; j < 16; ++j) {
        id.push_back(kHex[v & 0x0F]);
        v >>= 4;
      }
    }
    if (!ids_.contains(id)) return id;
  }
}

std::string Registry::next_timestamp() const {
  const auto now = clock_ ? clock_() : std::chrono::system_clock::now();
  std::string stamp = format_rfc3339_ms(now);
  // keep append order monotone even if the clock steps backwards
  if (!records_.empty() && stamp < records_.back().registered_at) {
    stamp = records_.back().registered_at;
  }
  return stamp;
}

WatermarkRecord Registry::register_document(std::string_view text, std::string_view author,
                                            const KeywordPolicy& policy) {
  const std::vector<Token> tokens = tokenize(text);
  const KeywordChoice choice = select_keyword(tokens, policy);

  WatermarkRecord rec;
  rec.author = std::string(author);
  rec.keyword = choice.keyword;
  rec.watermark = generate(tokens, choice.keyword);
  rec.text_digest = sha256_digest(text);
  rec.word_count = word_count(tokens);
  rec.kw_count = rec.watermark.kw_count;

  std::unique_lock lock(mutex_);
  rec.registered_at = next_timestamp();
  rec.id = next_id();
  append_line(to_json(rec).dump());
  ids_.insert(rec.id);
  records_.push_back(rec);
  return rec;
}

std::vector<WatermarkRecord> Registry::find(const RecordQuery& query) const {
  std::shared_lock lock(mutex_);
  std::vector<WatermarkRecord> out;
  for (const WatermarkRecord& rec : records_) {
    if (query.author && rec.author != *query.author) continue;
    if (query.keyword && rec.keyword != *query.keyword) continue;
    if (query.text_digest && rec.text_digest != *query.text_digest) continue;
    if (query.id && rec.id != *query.id) continue;
    out.push_back(rec);
  }
  return out;
}

std::optional<WatermarkRecord> Registry::find_by_id(std::string_view id) const {
  std::shared_lock lock(mutex_);
  for (const WatermarkRecord& rec : records_) {
    if (rec.id == id) return rec;
  }
  return std::nullopt;
}

std::vector<WatermarkRecord> Registry::all() const {
  std::shared_lock lock(mutex_);
  return records_;
}

std::size_t Registry::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

}  // namespace textmark
