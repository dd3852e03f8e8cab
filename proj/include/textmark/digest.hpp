#pragma once

#include <string>
#include <string_view>

namespace textmark {

// "sha256:" followed by 64 lowercase hex digits over the exact byte content.
std::string sha256_digest(std::string_view bytes);

}  // namespace textmark
