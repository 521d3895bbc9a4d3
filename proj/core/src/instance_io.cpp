#include "bomc/instance_io.hpp"

#include "bomc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace bomc {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++number;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    line = line.substr(0, line.find('#'));
    Line rec{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) rec.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!rec.tokens.empty()) out.push_back(std::move(rec));
  }
  return out;
}

long parse_count(std::string_view tok, int line, const char* what) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError(std::string("expected a nonnegative integer for ") + what + ", got '" +
                         std::string(tok) + "'",
                     line);
  }
  return value;
}

Vertex parse_vertex(std::string_view tok, long n, int line) {
  const long v = parse_count(tok, line, "a vertex");
  if (v >= n) {
    throw ParseError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")",
                     line);
  }
  return static_cast<Vertex>(v);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty instance", 1);
  std::size_t cursor = 0;
  const Line& header = lines[cursor++];
  if (header.tokens.size() != 3) throw ParseError("header must be 'n m |T|'", header.number);
  const long n = parse_count(header.tokens[0], header.number, "n");
  const long m = parse_count(header.tokens[1], header.number, "m");
  const long k = parse_count(header.tokens[2], header.number, "|T|");
  if (n < 1) throw ParseError("n must be at least 1", header.number);
  if (k % 2 != 0) throw ParseError("|T| must be even", header.number);
  if (k > n) throw ParseError("|T| exceeds n", header.number);

  VertexSet terminals;
  if (k > 0) {
    if (cursor >= lines.size()) throw ParseError("missing terminal line", header.number + 1);
    const Line& tl = lines[cursor++];
    if (static_cast<long>(tl.tokens.size()) != k) {
      throw ParseError("expected " + std::to_string(k) + " terminals, found " +
                           std::to_string(tl.tokens.size()),
                       tl.number);
    }
    for (std::string_view tok : tl.tokens) terminals.push_back(parse_vertex(tok, n, tl.number));
    std::sort(terminals.begin(), terminals.end());
    if (std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end()) {
      throw ParseError("duplicate terminal", tl.number);
    }
  }

  std::vector<Edge> edges;
  std::vector<Rat> weights;
  for (; cursor < lines.size(); ++cursor) {
    const Line& el = lines[cursor];
    if (static_cast<long>(edges.size()) == m) {
      throw ParseError("more than m = " + std::to_string(m) + " edge lines", el.number);
    }
    if (el.tokens.size() != 3) throw ParseError("edge line must be 'u v weight'", el.number);
    const Vertex u = parse_vertex(el.tokens[0], n, el.number);
    const Vertex v = parse_vertex(el.tokens[1], n, el.number);
    if (u == v) throw ParseError("self-loop", el.number);
    Rat w;
    try {
      w = parse_rat(el.tokens[2]);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed weight '" + std::string(el.tokens[2]) + "'", el.number);
    }
    if (w < 0) throw ParseError("negative weight", el.number);
    edges.push_back({u, v});
    weights.push_back(std::move(w));
  }
  if (static_cast<long>(edges.size()) != m) {
    const int last = lines.back().number;
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(edges.size()),
                     last + 1);
  }
  return Instance(Graph(static_cast<int>(n), std::move(edges)), std::move(terminals),
                  EdgeVector(std::move(weights)));
}

std::string format_instance(const Instance& inst) {
  const Graph& g = inst.graph();
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << inst.terminals().size() << '\n';
  if (!inst.terminals().empty()) {
    for (std::size_t i = 0; i < inst.terminals().size(); ++i) {
      out << (i ? " " : "") << inst.terminals()[i];
    }
    out << '\n';
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << to_string(inst.lengths()[e]) << '\n';
  }
  return out.str();
}

const std::vector<std::string>& builtin_fixture_names() {
  static const std::vector<std::string> names = {"FIX-EDGE", "FIX-TRI-TOUR", "FIX-TRI-PATH",
                                                 "FIX-C4"};
  return names;
}

Instance builtin_fixture(std::string_view name) {
  auto unit = [](int n, std::vector<Edge> edges, VertexSet t) {
    const std::size_t m = edges.size();
    return Instance(Graph(n, std::move(edges)), std::move(t), EdgeVector(m, Rat(1)));
  };
  if (name == "FIX-EDGE") return unit(2, {{0, 1}}, {0, 1});
  if (name == "FIX-TRI-TOUR") return unit(3, {{0, 1}, {1, 2}, {0, 2}}, {});
  if (name == "FIX-TRI-PATH") return unit(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 2});
  if (name == "FIX-C4") return unit(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {});
  throw InvalidInput("unknown fixture '" + std::string(name) + "'");
}

}  // namespace bomc
