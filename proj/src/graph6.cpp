#include "turan/graph6.hpp"

#include "turan/errors.hpp"

namespace turan {

namespace {

constexpr int kBias = 63;
constexpr int kMaxSingleByteOrder = 62;

}  // namespace

std::string graph6_encode(const SmallGraph& g) {
  const int n = g.order();
  if (n > kMaxSingleByteOrder) {
    throw Graph6Error("graph6 encoding limited to 62 vertices, got " + std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

SmallGraph graph6_decode(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text) {
    auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126) {
      throw Graph6Error("graph6 byte " + std::to_string(byte) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kMaxSingleByteOrder) throw Graph6Error("multi-byte graph6 size form not supported");
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long groups = (bits + 5) / 6;
  if (static_cast<long>(text.size()) - 1 != groups) {
    throw Graph6Error("graph6 payload has " + std::to_string(text.size() - 1) + " bytes, expected " +
                      std::to_string(groups));
  }
  SmallGraph g(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int value = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = static_cast<unsigned char>(text.back()) - kBias;
    int pad = 6 - static_cast<int>(bits % 6);
    if (last & ((1 << pad) - 1)) throw Graph6Error("nonzero graph6 padding bits");
  }
  return g;
}

}  // namespace turan
