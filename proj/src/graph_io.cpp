#include "mglpa/graph.hpp"
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

namespace mglpa {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t p = 0;
  while (p < line.size()) {
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    std::size_t q = p;
    while (q < line.size() && !std::isspace(static_cast<unsigned char>(line[q]))) ++q;
    if (q > p) out.push_back(line.substr(p, q - p));
    p = q;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw GraphError("line " + std::to_string(line_no) + ": " + what);
}

std::uint64_t parse_id(std::string_view s, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line_no, "invalid vertex id '" + std::string(s) + "'");
  return v;
}

double parse_weight(std::string_view s, std::size_t line_no) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line_no, "invalid weight '" + std::string(s) + "'");
  if (v < 0) fail(line_no, "negative weight");
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

void write_weight(std::ostream& out, Weight w) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", static_cast<double>(w));
  out << buf;
}

}  // namespace


GraphFormat format_from_path(const std::filesystem::path& path) {
  return lower(path.extension().string()) == ".mtx" ? GraphFormat::matrix_market : GraphFormat::edge_list;
}


Graph read_edge_list(std::istream& in, const LoadOptions& options, std::vector<std::uint64_t>* id_map) {
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, Vertex> remap;
  std::vector<std::uint64_t> original;
  std::uint64_t num_vertices = 0;
  auto vertex_of = [&](std::uint64_t id, std::size_t line_no) -> Vertex {
    if (options.remap_ids) {
      auto [it, inserted] = remap.try_emplace(id, static_cast<Vertex>(original.size()));
      if (inserted) original.push_back(id);
      return it->second;
    }
    if (id >= kNoLabel) fail(line_no, "vertex id too large");
    return static_cast<Vertex>(id);
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#' || tokens[0].front() == '%') {
      // "# vertices N" fixes a minimum vertex count.
      if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "vertices")
        num_vertices = std::max(num_vertices, parse_id(tokens[2], line_no));
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 3) fail(line_no, "expected 'src dst [weight]'");
    Vertex u = vertex_of(parse_id(tokens[0], line_no), line_no);
    Vertex v = vertex_of(parse_id(tokens[1], line_no), line_no);
    double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
    if (!options.remap_ids) num_vertices = std::max<std::uint64_t>(num_vertices, std::max(u, v) + std::uint64_t{1});
    if (w == 0) continue;
    edges.push_back({u, v, static_cast<Weight>(w)});
  }
  if (options.remap_ids) num_vertices = std::max<std::uint64_t>(num_vertices, original.size());
  if (num_vertices == 0) throw GraphError("empty graph");
  if (id_map) {
    *id_map = std::move(original);
    for (std::uint64_t i = id_map->size(); i < num_vertices && options.remap_ids; ++i) id_map->push_back(i);
  }
  return Graph::from_edges(num_vertices, edges);
}


Graph read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw GraphError("empty graph");
  ++line_no;
  auto header = split_tokens(line);
  if (header.size() < 5 || header[0] != "%%MatrixMarket") fail(line_no, "missing %%MatrixMarket header");
  std::string object = lower(header[1]), format = lower(header[2]), field = lower(header[3]), symmetry = lower(header[4]);
  if (object != "matrix" || format != "coordinate") fail(line_no, "only 'matrix coordinate' is supported");
  bool pattern = field == "pattern";
  if (!pattern && field != "real" && field != "integer" && field != "double") fail(line_no, "unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric") fail(line_no, "unsupported symmetry '" + symmetry + "'");

  // Size line follows the comments.
  std::vector<std::string_view> size_tokens;
  while (std::getline(in, line)) {
    ++line_no;
    size_tokens = split_tokens(line);
    if (size_tokens.empty() || size_tokens[0].front() == '%') continue;
    break;
  }
  if (size_tokens.size() != 3) fail(line_no, "expected 'rows cols entries'");
  std::uint64_t rows = parse_id(size_tokens[0], line_no);
  std::uint64_t cols = parse_id(size_tokens[1], line_no);
  std::uint64_t entries = parse_id(size_tokens[2], line_no);
  std::uint64_t n = std::max(rows, cols);
  if (n == 0) throw GraphError("empty graph");
  if (n >= kNoLabel) throw GraphError("too many vertices");

  std::vector<Edge> edges;
  edges.reserve(entries);
  std::uint64_t seen = 0;
  while (seen < entries && std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (tokens.size() != (pattern ? 2u : 3u)) fail(line_no, pattern ? "expected 'row col'" : "expected 'row col value'");
    std::uint64_t r = parse_id(tokens[0], line_no);
    std::uint64_t c = parse_id(tokens[1], line_no);
    if (r == 0 || c == 0 || r > rows || c > cols) fail(line_no, "index out of declared range");
    double w = pattern ? 1.0 : parse_weight(tokens[2], line_no);
    ++seen;
    if (w == 0) continue;
    edges.push_back({static_cast<Vertex>(r - 1), static_cast<Vertex>(c - 1), static_cast<Weight>(w)});
  }
  if (seen < entries) throw GraphError("truncated MatrixMarket file: expected " + std::to_string(entries) + " entries");
  return Graph::from_edges(n, edges);
}


Graph load_graph(const std::filesystem::path& path, GraphFormat format, const LoadOptions& options, std::vector<std::uint64_t>* id_map) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path.string());
  return format == GraphFormat::matrix_market ? read_matrix_market(in) : read_edge_list(in, options, id_map);
}


void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.num_vertices() << '\n';
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    auto js = g.neighbors(i);
    auto ws = g.neighbor_weights(i);
    for (std::size_t t = 0; t < js.size(); ++t) {
      if (js[t] < i) continue;
      out << i << ' ' << js[t] << ' ';
      write_weight(out, ws[t]);
      out << '\n';
    }
  }
}


void write_matrix_market(std::ostream& out, const Graph& g) {
  std::size_t entries = 0;
  for (Vertex i = 0; i < g.num_vertices(); ++i)
    for (Vertex j : g.neighbors(i)) entries += j <= i;
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << g.num_vertices() << ' ' << g.num_vertices() << ' ' << entries << '\n';
  // Lower triangle: row >= col.
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    auto js = g.neighbors(i);
    auto ws = g.neighbor_weights(i);
    for (std::size_t t = 0; t < js.size() && js[t] <= i; ++t) {
      out << i + 1 << ' ' << js[t] + 1 << ' ';
      write_weight(out, ws[t]);
      out << '\n';
    }
  }
}


void save_graph(const std::filesystem::path& path, GraphFormat format, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path.string());
  if (format == GraphFormat::matrix_market) write_matrix_market(out, g);
  else write_edge_list(out, g);
}

}  // namespace mglpa
