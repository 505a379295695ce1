#include "c4book/digest.hpp"

#include <openssl/evp.h>

#include <array>

#include "c4book/error.hpp"
#include "c4book/graph6.hpp"

namespace c4book {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::InternalInconsistency, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

std::string graph_digest(const Graph& g) { return sha256_hex(g6_encode(g)); }

}  // namespace c4book
