#pragma once

// Binary SCT forest format (all integers little-endian):
//
//   magic    4 bytes   "KSCT"
//   version  u16       1
//   n        u64       node count of the source graph
//   k        u32       0 = unfiltered, otherwise the k the forest is filtered for
//   eta      u64       number of pairs
//   then eta records:
//     varint |V_h|, varint |V_p|, |V_h| varint node ids, |V_p| varint node ids
//
// Varints are LEB128 (7 bits per byte, high bit = continuation).

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "kdense/error.hpp"
#include "kdense/sct.hpp"

namespace kdense {

namespace detail {

inline constexpr std::array<char, 4> kSctMagic{'K', 'S', 'C', 'T'};
inline constexpr std::uint16_t kSctVersion = 1;

template <class T>
void put_le(std::ostream& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

template <class T>
T get_le(std::istream& in) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    int c = in.get();
    if (c == std::char_traits<char>::eof()) throw ParseError("truncated SCT header");
    v |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

inline void put_varint(std::ostream& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.put(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7;
  }
  out.put(static_cast<char>(v));
}

inline std::uint64_t get_varint(std::istream& in) {
  std::uint64_t v = 0;
  for (unsigned shift = 0; shift < 64; shift += 7) {
    int c = in.get();
    if (c == std::char_traits<char>::eof()) throw ParseError("truncated SCT record");
    v |= static_cast<std::uint64_t>(c & 0x7F) << shift;
    if ((c & 0x80) == 0) return v;
  }
  throw ParseError("varint too long in SCT record");
}

}  // namespace detail

inline void write_sct(const SctForest& f, std::ostream& out) {
  out.write(detail::kSctMagic.data(), detail::kSctMagic.size());
  detail::put_le<std::uint16_t>(out, detail::kSctVersion);
  detail::put_le<std::uint64_t>(out, f.node_count());
  detail::put_le<std::uint32_t>(out, f.k_filter());
  detail::put_le<std::uint64_t>(out, f.eta());
  for (std::size_t i = 0; i < f.eta(); ++i) {
    PairView p = f.pair(i);
    detail::put_varint(out, p.hold.size());
    detail::put_varint(out, p.pivots.size());
    for (NodeId u : p.hold) detail::put_varint(out, u);
    for (NodeId u : p.pivots) detail::put_varint(out, u);
  }
}

inline SctForest read_sct(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != detail::kSctMagic) throw ParseError("not an SCT file (bad magic)");
  auto version = detail::get_le<std::uint16_t>(in);
  if (version != detail::kSctVersion) throw ParseError("unsupported SCT version " + std::to_string(version));
  auto n = detail::get_le<std::uint64_t>(in);
  auto k = detail::get_le<std::uint32_t>(in);
  auto eta = detail::get_le<std::uint64_t>(in);

  SctForest f;
  f.set_meta(n, k);
  std::vector<NodeId> hold, pivots;
  auto read_node = [&] {
    std::uint64_t u = detail::get_varint(in);
    if (u >= n) throw ParseError("SCT node id out of range");
    return static_cast<NodeId>(u);
  };
  for (std::uint64_t i = 0; i < eta; ++i) {
    auto h = detail::get_varint(in);
    auto p = detail::get_varint(in);
    if (h + p > n) throw ParseError("SCT pair larger than the graph");
    hold.resize(h);
    pivots.resize(p);
    for (auto& u : hold) u = read_node();
    for (auto& u : pivots) u = read_node();
    f.add(hold, pivots);
  }
  return f;
}

}  // namespace kdense
