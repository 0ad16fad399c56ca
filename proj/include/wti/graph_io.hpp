#ifndef WTI_GRAPH_IO_HPP
#define WTI_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "wti/graph.hpp"

namespace wti {

/// Tree file formats.
///
/// JSON:  {"vertices":["x1","x2",...],
///         "edges":[{"u":"x1","v":"x2","w":1}, ...]}
///        Unknown top-level keys are ignored.
///
/// Text:  one edge per line, "u v w" whitespace-separated; a line with a
///        single token declares an isolated vertex. The vertex set is
///        inferred in first-appearance order. Blank lines and lines starting
///        with '#' are skipped.
WeightedGraph parse_graph_json(std::string_view text);
WeightedGraph parse_graph_text(std::string_view text);

/// Reads a file and dispatches on the first non-space byte ('{' = JSON).
WeightedGraph load_graph(const std::string& path);

std::string to_json(const WeightedGraph& g);
std::string to_text(const WeightedGraph& g);

} // namespace wti

#endif
