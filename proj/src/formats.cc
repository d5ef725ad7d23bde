#include "ordercheck/formats.hpp"

#include <array>
#include <charconv>
#include <fstream>

namespace ordercheck {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Poset parse_digraph6(std::string_view line) {
  if (line.empty() || line[0] != '&')
    throw BadHeader("digraph6 record must start with '&'");
  if (line.size() < 2) throw BadLength("missing size field");

  const unsigned char size_byte = static_cast<unsigned char>(line[1]);
  if (size_byte < kBias || size_byte > kMaxByte)
    throw BadByte("size field byte outside 63..126");
  if (size_byte == kMaxByte)
    throw BadHeader("multi-byte size fields (n > 62) are not supported");
  const int n = size_byte - kBias;
  if (n < 1 || n > kMaxElements)
    throw OutOfRange("vertex count " + std::to_string(n) +
                     " outside supported range 1.." +
                     std::to_string(kMaxElements));

  const std::size_t payload = (static_cast<std::size_t>(n) * n + 5) / 6;
  if (line.size() != 2 + payload)
    throw BadLength("expected " + std::to_string(payload) +
                    " payload bytes, got " + std::to_string(line.size() - 2));

  std::array<Mask, kMaxElements> rows{};
  for (int cell = 0; cell < n * n; ++cell) {
    const unsigned char b = static_cast<unsigned char>(line[2 + cell / 6]);
    if (b < kBias || b > kMaxByte)
      throw BadByte("payload byte outside 63..126");
    if ((b - kBias) >> (5 - cell % 6) & 1) rows[cell / n] |= bit(cell % n);
  }
  // Trailing padding bits must be zero.
  for (int cell = n * n; cell < static_cast<int>(payload) * 6; ++cell) {
    const unsigned char b = static_cast<unsigned char>(line[2 + cell / 6]);
    if ((b - kBias) >> (5 - cell % 6) & 1)
      throw BadByte("nonzero padding bit in final payload byte");
  }

  return Poset::from_relation(n, std::span<const Mask>(rows.data(), n));
}

std::string encode_digraph6(const Poset& P) {
  const int n = P.size();
  std::string out;
  out.reserve(2 + (static_cast<std::size_t>(n) * n + 5) / 6);
  out.push_back('&');
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0, filled = 0;
  for (int cell = 0; cell < n * n; ++cell) {
    acc <<= 1;
    if (P.less(cell / n, cell % n)) acc |= 1;
    if (++filled == 6) {
      out.push_back(static_cast<char>(acc + kBias));
      acc = 0;
      filled = 0;
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::string format_canonical(const Poset& P) {
  return std::to_string(P.size()) + ":" + to_hex(P.canonical_key());
}

Poset parse_canonical(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos)
    throw BadHeader("canonical record must be '<p>:<hex>'");
  int p = 0;
  const auto* first = line.data();
  const auto* last = line.data() + colon;
  auto res = std::from_chars(first, last, p);
  if (res.ec != std::errc{} || res.ptr != last)
    throw BadHeader("bad element count in canonical record");
  if (p < 1 || p > kMaxElements)
    throw OutOfRange("element count " + std::to_string(p) +
                     " outside supported range");
  const std::string_view hex = line.substr(colon + 1);
  const std::size_t bytes = (static_cast<std::size_t>(p) * p + 7) / 8;
  if (hex.size() != 2 * bytes)
    throw BadLength("canonical record hex length mismatch");

  std::array<Mask, kMaxElements> rows{};
  for (int cell = 0; cell < p * p; ++cell) {
    const int hi = hex_value(hex[2 * (cell / 8)]);
    const int lo = hex_value(hex[2 * (cell / 8) + 1]);
    if (hi < 0 || lo < 0) throw BadByte("non-hex digit in canonical record");
    const int byte = hi << 4 | lo;
    if (byte >> (7 - cell % 8) & 1) rows[cell / p] |= bit(cell % p);
  }
  return Poset::from_relation(p, std::span<const Mask>(rows.data(), p));
}

Poset parse_poset_line(std::string_view line) {
  if (!line.empty() && line[0] == '&') return parse_digraph6(line);
  if (line.find(':') != std::string_view::npos) return parse_canonical(line);
  throw BadHeader("unrecognized record (expected digraph6 or '<p>:<hex>')");
}

void read_digraph6_file(const std::string& path,
                        const std::function<void(const Poset&)>& sink) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == ">>digraph6<<") continue;
    try {
      sink(parse_digraph6(line));
    } catch (const BadHeader& e) {
      throw BadHeader(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const BadLength& e) {
      throw BadLength(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const BadByte& e) {
      throw BadByte(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const CyclicInput& e) {
      throw CyclicInput(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const ReflexiveInput& e) {
      throw ReflexiveInput(path + ":" + std::to_string(lineno) + ": " +
                           e.what());
    } catch (const OutOfRange& e) {
      throw OutOfRange(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("read error on " + path);
}

}  // namespace ordercheck
