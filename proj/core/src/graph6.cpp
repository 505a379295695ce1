#include "c4book/graph6.hpp"

#include "c4book/error.hpp"

namespace c4book {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.push_back(126);
  if (groups == 6) out.push_back(126);
  for (int g = groups - 1; g >= 0; --g) out.push_back(static_cast<char>(((n >> (6 * g)) & 0x3F) + kBias));
}

}  // namespace

std::string g6_encode(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kGraph6MaxOrder) throw Error(Errc::CapExceeded, "order exceeds graph6 limit");
  std::string out;
  put_order(out, n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  out.reserve(out.size() + (bits + 5) / 6);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph g6_decode(std::string_view bytes) {
  std::size_t pos = 0;
  if (bytes.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
  if (!bytes.empty() && bytes.back() == '\r') bytes.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= bytes.size()) throw Graph6Error(i, "unexpected end of input");
    const int c = static_cast<unsigned char>(bytes[i]);
    if (c < kBias || c > 126) throw Graph6Error(i, "byte outside the printable range 63..126");
    return c - kBias;
  };

  if (pos < bytes.size() && (bytes[pos] == ':' || bytes[pos] == '&')) {
    throw Graph6Error(pos, "sparse6/digraph6 input is not supported");
  }

  std::uint64_t n = 0;
  const int first = byte_at(pos);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos += 1;
  } else {
    int groups = 3;
    pos += 1;
    if (byte_at(pos) == 63) {
      groups = 6;
      pos += 1;
    }
    for (int g = 0; g < groups; ++g) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + g));
    pos += groups;
  }

  if (n > 3037000499ULL) throw Graph6Error(bytes.size(), "truncated adjacency data");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (bytes.size() - pos < need) throw Graph6Error(bytes.size(), "truncated adjacency data");
  if (bytes.size() - pos > need) throw Graph6Error(pos + need, "trailing bytes after adjacency data");

  Graph g(n);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + need - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((byte_at(last) & pad_mask) != 0) throw Graph6Error(last, "nonzero padding bits");
  }
  return g;
}

}  // namespace c4book
