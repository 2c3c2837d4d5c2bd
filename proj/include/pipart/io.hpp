#ifndef PIPART_IO_HPP
#define PIPART_IO_HPP

#include <string>
#include <string_view>

#include "pipart/hypergraph.hpp"

namespace pipart {

// Hypergraph text format:
//   # comment lines (optional, anywhere)
//   p hg <k> <n> <m>
//   m lines of k strictly ascending 0-based vertex indices
// Malformed header, out-of-range vertices, wrong arity, non-ascending lines
// and duplicate edges raise ParseError with the offending line number.
Hypergraph parse_hypergraph(std::string_view text);

// Emits the canonical form: header plus edges in lexicographic order.
std::string serialize_hypergraph(const Hypergraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace pipart

#endif
