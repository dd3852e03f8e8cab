#include "textmark/errors.hpp"

namespace textmark {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::no_words: return "no_words";
    case Errc::explicit_keyword_absent: return "explicit_keyword_absent";
    case Errc::below_min_count: return "below_min_count";
    case Errc::keyword_absent: return "keyword_absent";
    case Errc::keyword_mismatch: return "keyword_mismatch";
    case Errc::empty_original: return "empty_original";
    case Errc::delete_exceeds_text: return "delete_exceeds_text";
    case Errc::empty_input: return "empty_input";
    case Errc::corrupt_record: return "corrupt_record";
    case Errc::storage_failure: return "storage_failure";
    case Errc::bad_input: return "bad_input";
  }
  return "unknown";
}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace textmark
