#pragma once

#include <stdexcept>
#include <string>

namespace textmark {

// Every recoverable failure in the toolkit carries one of these codes so
// callers (CLI, HTTP facade, test suites) can branch without string matching.
enum class Errc {
  no_words,
  explicit_keyword_absent,
  below_min_count,
  keyword_absent,
  keyword_mismatch,
  empty_original,
  delete_exceeds_text,
  empty_input,
  corrupt_record,
  storage_failure,
  bad_input,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace textmark
