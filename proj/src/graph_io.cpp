#include "symbreak/graph_io.hpp"

#include <charconv>
#include <sstream>

#include "symbreak/errors.hpp"

namespace symbreak {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_graph6_byte(char c) { return c >= 63 && c <= 126; }

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  record = trim_line_end(record);
  std::size_t pos = 0;
  if (record.starts_with(kHeader)) pos = kHeader.size();
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= record.size()) throw ParseError("graph6 record truncated", i);
    if (!is_graph6_byte(record[i])) throw ParseError("byte outside graph6 range 63..126", i);
    return record[i] - kBias;
  };
  if (pos >= record.size()) throw ParseError("empty graph6 record", pos);

  long long n = 0;
  if (record[pos] != '~') {
    n = byte_at(pos);
    pos += 1;
  } else if (pos + 1 < record.size() && record[pos + 1] == '~') {
    for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos + 2 + k);
    pos += 8;
  } else {
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos + 1 + k);
    pos += 4;
  }
  if (n == 0) throw ParseError("graph6 record with zero vertices is unsupported", 0);
  if (n > kMaxVertices) {
    throw CapabilityError("graph6 record has " + std::to_string(n) +
                          " vertices; graphs above 64 vertices are not supported");
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (record.size() - pos < groups) throw ParseError("graph6 bit section truncated", record.size());
  if (record.size() - pos > groups) throw ParseError("trailing bytes after graph6 record", pos + groups);

  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int value = byte_at(at);
      if ((value >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + groups - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((byte_at(last) & ((1 << pad) - 1)) != 0) {
      throw ParseError("nonzero padding bits in graph6 record", last);
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  // Next non-blank, non-comment line; false at end of input.
  bool next(std::string_view& line) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      raw = trim(raw);
      if (raw.empty() || raw.front() == '#') continue;
      line = raw;
      return true;
    }
    return false;
  }
};

bool parse_int_pair(std::string_view line, long long& a, long long& b) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip = [&] {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  skip();
  return p == end;
}

std::string at_line(int line_no) { return " (line " + std::to_string(line_no) + ")"; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("edge list is empty");
  long long n = 0;
  long long m = 0;
  if (!parse_int_pair(line, n, m)) {
    throw ParseError("expected header \"n m\"" + at_line(reader.line_no));
  }
  if (n < 1) throw ParseError("vertex count must be positive" + at_line(reader.line_no));
  if (m < 0) throw ParseError("edge count must be non-negative" + at_line(reader.line_no));
  if (n > kMaxVertices) {
    throw CapabilityError("edge list declares " + std::to_string(n) +
                          " vertices; graphs above 64 vertices are not supported");
  }
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    long long u = 0;
    long long v = 0;
    if (!parse_int_pair(line, u, v)) {
      throw ParseError("expected edge \"u v\"" + at_line(reader.line_no));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge endpoint out of range" + at_line(reader.line_no));
    }
    if (u == v) throw ParseError("self-loop" + at_line(reader.line_no));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (reader.next(line)) throw ParseError("unexpected content after edges" + at_line(reader.line_no));
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::vector<ParsedGraph> read_graphs(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  LineReader probe{text};
  std::string_view first;
  if (!probe.next(first)) return {};
  long long a = 0;
  long long b = 0;
  if (parse_int_pair(first, a, b)) {
    return {ParsedGraph{parse_edge_list(text), probe.line_no}};
  }
  std::vector<ParsedGraph> out;
  LineReader reader{text};
  std::string_view line;
  while (reader.next(line)) {
    try {
      out.push_back({parse_graph6(line), reader.line_no});
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + at_line(reader.line_no));
    }
  }
  return out;
}

}  // namespace symbreak
