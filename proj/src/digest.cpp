#include "textmark/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace textmark {

std::string sha256_digest(std::string_view bytes) {
  std::array<unsigned char, 32> md{};
  unsigned int md_len = 0;
  const void* data = bytes.empty() ? "" : bytes.data();
  if (EVP_Digest(data, bytes.size(), md.data(), &md_len, EVP_sha256(), nullptr) != 1 ||
      md_len != md.size()) {
    throw std::runtime_error("sha256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  out.reserve(out.size() + md.size() * 2);
  for (const unsigned char b : md) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0x0F]);
  }
  return out;
}

}  // namespace textmark
