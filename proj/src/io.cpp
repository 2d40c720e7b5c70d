#include "nrdp/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace nrdp {

namespace {

// Non-blank, non-comment lines with their 1-based line numbers.
class LineReader {
 public:
  LineReader(std::istream& in, char comment) : in_(in), comment_(comment) {}

  bool next(std::istringstream& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == comment_) continue;
      fields.clear();
      fields.str(line);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw IoError("line " + std::to_string(number_) + ": " + what);
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  char comment_;
  std::size_t number_ = 0;
};

template <class T>
T field(std::istringstream& fields, LineReader& lines, const char* what) {
  T value;
  if (!(fields >> value)) lines.fail(std::string("expected ") + what);
  return value;
}

void no_trailing(std::istringstream& fields, LineReader& lines) {
  std::string rest;
  if (fields >> rest) lines.fail("unexpected token '" + rest + "'");
}

long long read_count(std::istringstream& fields, LineReader& lines, const char* what) {
  const long long v = field<long long>(fields, lines, what);
  if (v < 0) lines.fail(std::string(what) + " must be non-negative");
  return v;
}

template <class F>
auto with_file(const std::string& path, F&& parse) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return parse(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader lines(in, '#');
  std::istringstream f;
  if (!lines.next(f)) throw IoError("empty graph file");
  const auto n = static_cast<std::size_t>(read_count(f, lines, "vertex count"));
  const auto m = static_cast<std::size_t>(read_count(f, lines, "edge count"));
  no_trailing(f, lines);
  if (n > kMaxVertices) lines.fail("too many vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    if (!lines.next(f)) throw IoError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    const long long u = field<long long>(f, lines, "edge endpoint");
    const long long v = field<long long>(f, lines, "edge endpoint");
    no_trailing(f, lines);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      lines.fail("endpoint out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (lines.next(f)) lines.fail("more edges than announced");
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

IntervalModel read_intervals(std::istream& in) {
  LineReader lines(in, '#');
  std::istringstream f;
  if (!lines.next(f)) throw IoError("empty interval file");
  const auto n = static_cast<std::size_t>(read_count(f, lines, "interval count"));
  no_trailing(f, lines);
  std::vector<Interval> iv;
  for (std::size_t i = 0; i < n; ++i) {
    if (!lines.next(f)) throw IoError("expected " + std::to_string(n) + " intervals, found " + std::to_string(i));
    const auto l = field<std::int64_t>(f, lines, "left endpoint");
    const auto r = field<std::int64_t>(f, lines, "right endpoint");
    no_trailing(f, lines);
    if (l > r) lines.fail("left endpoint exceeds right endpoint");
    iv.push_back({l, r});
  }
  if (lines.next(f)) lines.fail("more intervals than announced");
  return IntervalModel(iv);
}

void write_intervals(std::ostream& out, const IntervalModel& m) {
  out << m.size() << '\n';
  for (const auto& i : m.intervals()) out << i.left << ' ' << i.right << '\n';
}

Hypergraph read_hypergraph(std::istream& in) {
  LineReader lines(in, '#');
  std::istringstream f;
  if (!lines.next(f)) throw IoError("empty hypergraph file");
  Hypergraph h;
  h.universe_size = static_cast<std::size_t>(read_count(f, lines, "universe size"));
  const auto m = static_cast<std::size_t>(read_count(f, lines, "edge count"));
  no_trailing(f, lines);
  for (std::size_t j = 0; j < m; ++j) {
    if (!lines.next(f)) throw IoError("expected " + std::to_string(m) + " hyperedges, found " + std::to_string(j));
    VertexSet e(h.universe_size);
    long long x;
    while (f >> x) {
      if (x < 0 || static_cast<std::size_t>(x) >= h.universe_size) lines.fail("member out of range");
      e.insert(static_cast<Vertex>(x));
    }
    if (!f.eof()) lines.fail("malformed member");
    if (e.empty()) lines.fail("empty hyperedge");
    h.edges.push_back(std::move(e));
  }
  if (lines.next(f)) lines.fail("more hyperedges than announced");
  return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.universe_size << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    bool first = true;
    e.for_each([&](Vertex v) {
      out << (first ? "" : " ") << v;
      first = false;
    });
    out << '\n';
  }
}

CnfInstance read_dimacs(std::istream& in) {
  LineReader lines(in, 'c');
  std::istringstream f;
  CnfInstance c;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> clause;
  while (lines.next(f)) {
    std::string tok;
    f >> tok;
    if (tok == "%") break;
    if (tok == "p") {
      if (header) lines.fail("second problem line");
      std::string kind;
      f >> kind;
      if (kind != "cnf") lines.fail("expected 'p cnf'");
      c.num_vars = static_cast<std::size_t>(read_count(f, lines, "variable count"));
      declared = static_cast<std::size_t>(read_count(f, lines, "clause count"));
      no_trailing(f, lines);
      header = true;
      continue;
    }
    if (!header) lines.fail("clause before problem line");
    f.clear();
    f.seekg(0);
    long long lit;
    while (f >> lit) {
      if (lit == 0) {
        if (clause.empty()) lines.fail("empty clause");
        c.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > c.num_vars) lines.fail("literal out of range");
      clause.push_back(static_cast<int>(lit));
    }
    if (!f.eof()) lines.fail("malformed literal");
  }
  if (!header) throw IoError("missing 'p cnf' line");
  if (!clause.empty()) throw IoError("last clause is not terminated by 0");
  if (c.clauses.size() != declared)
    throw IoError("expected " + std::to_string(declared) + " clauses, found " + std::to_string(c.clauses.size()));
  return c;
}

void write_dimacs(std::ostream& out, const CnfInstance& c) {
  out << "p cnf " << c.num_vars << ' ' << c.clauses.size() << '\n';
  for (const auto& clause : c.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

Graph read_graph_file(const std::string& path) { return with_file(path, [](std::istream& in) { return read_graph(in); }); }

IntervalModel read_intervals_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_intervals(in); });
}

Hypergraph read_hypergraph_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_hypergraph(in); });
}

CnfInstance read_dimacs_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_dimacs(in); });
}

VertexSet parse_vertex_set(std::string_view text, std::size_t n) {
  VertexSet s(n);
  std::string cleaned;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') cleaned += c;
  if (cleaned.empty()) return s;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const auto comma = cleaned.find(',', pos);
    const std::string_view tok = std::string_view(cleaned).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad vertex '" + std::string(tok) + "' in set");
    if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return s;
}

}  // namespace nrdp
