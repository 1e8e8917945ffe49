#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kltgraph/discrepancy.hpp"
#include "kltgraph/dual_graph.hpp"

namespace kltgraph {

/// Malformed graph input. what() reads "<source>:<line>: <message>"; line is
/// 0 when the problem is not tied to one line (e.g. JSON structure).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct GraphInput {
  DualGraph graph;
  std::optional<CurveAttachment> curve;
};

/// Parses either the line format
///
///     weights: 3 2 2
///     edge: 1 2
///     edge: 2 3
///     curve: 1 0 0
///
/// (1-based vertices, `curve:` optional, `#` comments and blank lines
/// ignored, `weights:` first) or a JSON object with keys "weights",
/// "edges" (list of 1-based pairs) and optional "curve". Input whose first
/// non-blank character is '{' is read as JSON.
GraphInput parse_graph(std::string_view text, const std::string& source = "<input>");

/// Reads and parses a file; ParseError on unreadable files too.
GraphInput load_graph_file(const std::filesystem::path& path);

}  // namespace kltgraph
