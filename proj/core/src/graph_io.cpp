#include "kltgraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace kltgraph {

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<long> parse_ints(std::string_view rest, const std::string& source, int line) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t')) ++pos;
    if (pos >= rest.size()) break;
    std::size_t end = pos;
    while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') ++end;
    const std::string_view token = rest.substr(pos, end - pos);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(source, line, "expected an integer, found '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

struct RawGraph {
  std::vector<long> weights;
  std::vector<std::pair<long, long>> edges;
  std::vector<int> edge_lines;
  std::optional<std::vector<long>> curve;
  int curve_line = 0;
};

GraphInput build(const RawGraph& raw, const std::string& source) {
  if (raw.weights.empty()) throw ParseError(source, 1, "no vertices");
  const long n = static_cast<long>(raw.weights.size());
  std::vector<int> weights;
  for (long w : raw.weights) weights.push_back(static_cast<int>(w));

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t e = 0; e < raw.edges.size(); ++e) {
    const auto [a, b] = raw.edges[e];
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ParseError(source, raw.edge_lines[e],
                       "edge endpoint out of range 1.." + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  }

  std::optional<DualGraph> graph;
  try {
    graph.emplace(std::move(weights), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(source, 0, e.what());
  }

  std::optional<CurveAttachment> curve;
  if (raw.curve) {
    if (static_cast<long>(raw.curve->size()) != n) {
      throw ParseError(source, raw.curve_line,
                       "curve has " + std::to_string(raw.curve->size()) + " entries, expected " +
                           std::to_string(n));
    }
    try {
      curve.emplace(std::vector<std::int64_t>(raw.curve->begin(), raw.curve->end()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, raw.curve_line, e.what());
    }
  }
  return GraphInput{std::move(*graph), std::move(curve)};
}

GraphInput parse_text(std::string_view text, const std::string& source) {
  RawGraph raw;
  bool have_weights = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    const std::string_view raw_line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;

    std::string_view line = raw_line.substr(0, raw_line.find('#'));
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(source, line_no, "expected 'key: values', found '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, colon));
    const auto values = parse_ints(line.substr(colon + 1), source, line_no);

    if (!have_weights && key != "weights") {
      throw ParseError(source, line_no, "first entry must be 'weights:'");
    }
    if (key == "weights") {
      if (have_weights) throw ParseError(source, line_no, "duplicate 'weights:' line");
      if (values.empty()) throw ParseError(source, line_no, "no weights given");
      raw.weights = values;
      have_weights = true;
    } else if (key == "edge") {
      if (values.size() != 2) throw ParseError(source, line_no, "edge needs exactly two vertices");
      raw.edges.emplace_back(values[0], values[1]);
      raw.edge_lines.push_back(line_no);
    } else if (key == "curve") {
      if (raw.curve) throw ParseError(source, line_no, "duplicate 'curve:' line");
      raw.curve = values;
      raw.curve_line = line_no;
    } else {
      throw ParseError(source, line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_weights) throw ParseError(source, line_no, "missing 'weights:' line");
  return build(raw, source);
}

GraphInput parse_json(std::string_view text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
  }
  RawGraph raw;
  try {
    if (!j.is_object()) throw ParseError(source, 0, "expected a JSON object");
    if (!j.contains("weights")) throw ParseError(source, 0, "missing key 'weights'");
    raw.weights = j.at("weights").get<std::vector<long>>();
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        const auto pair = e.get<std::vector<long>>();
        if (pair.size() != 2) throw ParseError(source, 0, "edge needs exactly two vertices");
        raw.edges.emplace_back(pair[0], pair[1]);
        raw.edge_lines.push_back(0);
      }
    }
    if (j.contains("curve")) raw.curve = j.at("curve").get<std::vector<long>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 0, std::string("bad JSON graph: ") + e.what());
  }
  return build(raw, source);
}

}  // namespace

GraphInput parse_graph(std::string_view text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text, source);
  return parse_text(text, source);
}

GraphInput load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), path.string());
}

}  // namespace kltgraph
