#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "ordercheck/poset.hpp"

namespace ordercheck {

// Decodes one digraph6 record: '&', a one-byte size field n+63 (n <= 62),
// then ceil(n*n/6) payload bytes packing the adjacency matrix row-major,
// 6 bits per byte (value - 63, most significant bit first), zero-padded.
// The adjacency digraph is taken as the strict relation: it is transitively
// closed and relabeled to natural labeling if needed.
Poset parse_digraph6(std::string_view line);

// Encodes the closed relation matrix of P as one digraph6 record.
std::string encode_digraph6(const Poset& P);

// Canonical text record "<p>:<hex>", hex being the row-major bit packing
// from Poset::canonical_key().
std::string format_canonical(const Poset& P);
Poset parse_canonical(std::string_view line);

// Accepts either record flavor: digraph6 lines begin with '&', canonical
// lines contain ':'.
Poset parse_poset_line(std::string_view line);

// Streams the posets of a newline-separated digraph6 file in file order.
// An optional ">>digraph6<<" first line and blank lines are skipped; parse
// errors are rethrown with the line number attached.
void read_digraph6_file(const std::string& path,
                        const std::function<void(const Poset&)>& sink);

}  // namespace ordercheck
