#include "slnet/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace slnet {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens[0] == "c") continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::uint64_t parse_natural(const Line& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size()) {
    throw ParseError(line.number, std::string("missing ") + what);
  }
  std::string_view tok = line.tokens[index];
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

NodeId parse_node(const Line& line, std::size_t index, std::size_t n, const char* what) {
  const std::uint64_t v = parse_natural(line, index, what);
  if (v < 1 || v > n) {
    throw ParseError(line.number, std::string(what) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<NodeId>(v - 1);
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " +
                                      std::to_string(line.tokens.size()));
  }
}

Rational parse_stretch(const Line& line, std::size_t index) {
  if (index >= line.tokens.size()) throw ParseError(line.number, "missing stretch");
  std::string_view tok = line.tokens[index];
  const std::size_t slash = tok.find('/');
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v <= 0) {
      throw ParseError(line.number, "bad stretch '" + std::string(tok) + "'");
    }
    return v;
  };
  const std::int64_t num = number(tok.substr(0, slash));
  const std::int64_t den = slash == std::string_view::npos ? 1 : number(tok.substr(slash + 1));
  if (num < den) throw ParseError(line.number, "stretch must be at least 1");
  return Rational(num, den);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "p") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "missing 'p' header line");
  }
  const Line& header = lines[0];
  if (header.tokens.size() < 4) throw ParseError(header.number, "short header");
  const std::string_view kind = header.tokens[1];
  const std::size_t n = parse_natural(header, 2, "node count");
  const std::size_t m = parse_natural(header, 3, "edge count");
  if (n >= kNoNode) throw ParseError(header.number, "node count too large");

  std::size_t cursor = 1;
  std::map<NodeId, Length> bounds;
  NodeId root = 0;
  if (kind == "slst") {
    expect_arity(header, 6);
    root = parse_node(header, 4, n, "root");
    const std::size_t terminal_count = parse_natural(header, 5, "terminal count");
    for (std::size_t i = 0; i < terminal_count; ++i, ++cursor) {
      if (cursor >= lines.size()) {
        throw ParseError(lines.back().number + 1, "missing terminal line");
      }
      const Line& line = lines[cursor];
      if (line.tokens[0] != "t") throw ParseError(line.number, "expected terminal line 't'");
      expect_arity(line, 3);
      const NodeId t = parse_node(line, 1, n, "terminal");
      if (!bounds.emplace(t, parse_natural(line, 2, "bound")).second) {
        throw ParseError(line.number, "duplicate terminal");
      }
    }
    if (bounds.empty()) throw ParseError(header.number, "slst needs at least one terminal");
  } else if (kind != "ndbd" && kind != "spanner") {
    throw ParseError(header.number, "unknown instance kind '" + std::string(kind) + "'");
  } else {
    expect_arity(header, 5);
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (; cursor < lines.size(); ++cursor) {
    const Line& line = lines[cursor];
    if (line.tokens[0] != "a") throw ParseError(line.number, "expected edge line 'a'");
    expect_arity(line, 5);
    Edge e;
    e.tail = parse_node(line, 1, n, "tail");
    e.head = parse_node(line, 2, n, "head");
    e.cost = parse_natural(line, 3, "cost");
    e.length = parse_natural(line, 4, "length");
    edges.push_back(e);
  }
  if (edges.size() != m) {
    throw ParseError(lines.back().number, "header announces " + std::to_string(m) +
                                              " edges, found " + std::to_string(edges.size()));
  }
  Digraph graph;
  try {
    graph = Digraph(n, std::move(edges));
  } catch (const OverflowError& e) {
    throw ParseError(header.number, e.what());
  }

  if (kind == "ndbd") return NdbdInstance{std::move(graph), parse_natural(header, 4, "bound")};
  if (kind == "spanner") return SpannerInstance{std::move(graph), parse_stretch(header, 4)};
  return SlstInstance{std::move(graph), root, std::move(bounds)};
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

namespace {

void write_edges(std::ostringstream& out, const Digraph& g) {
  for (const Edge& e : g.edges()) {
    out << "a " << e.tail + 1 << ' ' << e.head + 1 << ' ' << e.cost << ' ' << e.length << '\n';
  }
}

}  // namespace

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const Digraph& g = x.graph;
        out << "p ";
        if constexpr (std::is_same_v<T, NdbdInstance>) {
          out << "ndbd " << g.node_count() << ' ' << g.edge_count() << ' ' << x.bound << '\n';
        } else if constexpr (std::is_same_v<T, SpannerInstance>) {
          out << "spanner " << g.node_count() << ' ' << g.edge_count() << ' ' << x.stretch.str()
              << '\n';
        } else {
          out << "slst " << g.node_count() << ' ' << g.edge_count() << ' ' << x.root + 1 << ' '
              << x.bounds.size() << '\n';
          for (const auto& [t, d] : x.bounds) out << "t " << t + 1 << ' ' << d << '\n';
        }
        write_edges(out, g);
      },
      inst);
  return out.str();
}

}  // namespace slnet
