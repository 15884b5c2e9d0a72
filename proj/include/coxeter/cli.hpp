#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/rootsys.hpp"
#include "coxeter/trace.hpp"

namespace coxeter::cli {

// Parsed plain-text system file:
//   n <count>
//   m <i> <j> <label>     label an integer >= 3 or "inf"; unlisted pairs get 2
//   order <i1> ... <in>   optional here, required by c-dependent commands
// '#' starts a comment.  Vertices are 1-based in files and on the wire.
struct ParsedSystem {
  CoxeterGraph graph;
  std::optional<VertexOrder> order;
};

ParsedSystem parse_system_text(const std::string& text);
ParsedSystem parse_system_file(const std::string& path);

// Word literal: whitespace-separated 1-based vertex indices, leftmost letter
// first; the rightmost letter is applied first.  "" is the empty word.
TraceWord parse_word(const CoxeterGraph& g, const std::string& text);
std::string format_word(const CoxeterGraph& g, const TraceWord& w);

// Root literal: whitespace-separated coordinates in the simple-root basis.
RootVec parse_root(const CoxeterGraph& g, const std::string& text);
std::string format_root(const RootVec& v);

// Exit codes: 0 ok, 2 parse error, 3 domain error, 4 numerical ambiguity,
// 5 bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace coxeter::cli
