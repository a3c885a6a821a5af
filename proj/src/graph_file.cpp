#include "gaingraph/graph_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace gaingraph {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  // from_chars rejects a leading '+'.
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool parse_int(std::string_view s, long long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

Error with_line(const Error& e, int line) {
  return Error(e.code(), "line " + std::to_string(line) + ": " + e.what(), line);
}

}  // namespace

Gain parse_gain_token(std::string_view token) {
  if (token == "1") return Gain(1.0);
  if (token == "-1") return Gain(-1.0);
  if (token == "i") return Gain(0.0, 1.0);
  if (token == "-i") return Gain(0.0, -1.0);
  if (token.starts_with("polar:")) {
    double theta = 0.0;
    if (!parse_double(token.substr(6), theta)) {
      throw Error(Errc::Syntax, "bad polar angle '" + std::string(token) + "'");
    }
    return Gain::polar(theta);
  }
  const auto comma = token.find(',');
  if (comma != std::string_view::npos) {
    double re = 0.0, im = 0.0;
    if (!parse_double(token.substr(0, comma), re) || !parse_double(token.substr(comma + 1), im)) {
      throw Error(Errc::Syntax, "bad complex pair '" + std::string(token) + "'");
    }
    return Gain(Complex(re, im));
  }
  throw Error(Errc::Syntax, "unrecognized gain token '" + std::string(token) + "'");
}

GainGraph parse_graph(std::string_view text) {
  int line_no = 0;
  long long n = -1;
  int header_line = 0;
  std::vector<EdgeSpec> edges;
  std::vector<int> edge_lines;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto tok = split_ws(line);

    if (tok[0] == "vertices") {
      if (n >= 0) throw Error(Errc::BadHeader, "line " + std::to_string(line_no) + ": repeated header", line_no);
      if (tok.size() != 2 || !parse_int(tok[1], n) || n < 0 || n > std::numeric_limits<int>::max()) {
        throw Error(Errc::BadHeader, "line " + std::to_string(line_no) + ": expected 'vertices <n>'", line_no);
      }
      header_line = line_no;
      continue;
    }
    if (n < 0) {
      throw Error(Errc::BadHeader,
                  "line " + std::to_string(line_no) + ": edge before 'vertices <n>' header", line_no);
    }
    if (tok.size() != 3) {
      throw Error(Errc::Syntax, "line " + std::to_string(line_no) + ": expected 'u v gain'", line_no);
    }
    long long u = 0, v = 0;
    if (!parse_int(tok[0], u) || !parse_int(tok[1], v)) {
      throw Error(Errc::Syntax, "line " + std::to_string(line_no) + ": bad vertex index", line_no);
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::BadIndex, "line " + std::to_string(line_no) + ": vertex index out of range", line_no);
    }
    try {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), parse_gain_token(tok[2])});
    } catch (const Error& e) {
      throw with_line(e, line_no);
    }
    edge_lines.push_back(line_no);
  }
  if (n < 0) throw Error(Errc::BadHeader, "missing 'vertices <n>' header", header_line);

  // Locate the offending line for structural errors before building.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u == edges[i].v) {
      throw Error(Errc::SelfLoop, "line " + std::to_string(edge_lines[i]) + ": self-loop", edge_lines[i]);
    }
    for (std::size_t j = 0; j < i; ++j) {
      const bool same = (edges[i].u == edges[j].u && edges[i].v == edges[j].v) ||
                        (edges[i].u == edges[j].v && edges[i].v == edges[j].u);
      if (same) {
        throw Error(Errc::DuplicateEdge,
                    "line " + std::to_string(edge_lines[i]) + ": duplicate of edge on line " +
                        std::to_string(edge_lines[j]),
                    edge_lines[i]);
      }
    }
  }
  return GainGraph(static_cast<int>(n), edges);
}

GainGraph parse_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Syntax, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const GainGraph& g) {
  std::ostringstream os;
  os.precision(17);
  os << "vertices " << g.order() << '\n';
  for (const auto& e : g.edges()) {
    const Complex z = e.gain.value();
    os << e.u << ' ' << e.v << ' ';
    if (z == Complex(1, 0)) {
      os << "1";
    } else if (z == Complex(-1, 0)) {
      os << "-1";
    } else if (z == Complex(0, 1)) {
      os << "i";
    } else if (z == Complex(0, -1)) {
      os << "-i";
    } else {
      os << z.real() << ',' << z.imag();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gaingraph
