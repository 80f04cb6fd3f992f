#include "lporient/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace lporient {

namespace {

// strip comments and surrounding whitespace; empty result = skip line
std::string clean_line(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  auto is_ws = [](unsigned char c) { return std::isspace(c); };
  while (!line.empty() && is_ws(line.back())) line.pop_back();
  std::size_t i = 0;
  while (i < line.size() && is_ws(line[i])) ++i;
  return line.substr(i);
}

VertexId parse_vertex(PolytopeKind kind, int dim, const std::string& tok) {
  if (kind == PolytopeKind::Cube) {
    if (static_cast<int>(tok.size()) != dim)
      throw ParseError("cube vertex '" + tok + "' must have " +
                       std::to_string(dim) + " bits");
    VertexId v = 0;
    for (char c : tok) {
      if (c != '0' && c != '1')
        throw ParseError("cube vertex '" + tok + "' must be binary");
      v = (v << 1) | (c - '0');
    }
    return v;
  }
  if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
    throw ParseError("crosspolytope vertex '" + tok + "' must look like +i");
  int idx = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError("crosspolytope vertex '" + tok + "' must look like +i");
    idx = idx * 10 + (tok[i] - '0');
  }
  if (idx < 1 || idx > dim)
    throw ParseError("pair index in '" + tok + "' out of range");
  return 2 * (idx - 1) + (tok[0] == '-' ? 1 : 0);
}

}  // namespace

Orientation parse_orientation(std::istream& in) {
  std::string line;
  PolytopeKind kind{};
  int dim = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    line = clean_line(line);
    if (line.empty()) continue;
    std::istringstream hs(line);
    std::string word;
    hs >> word;
    if (word == "cube")
      kind = PolytopeKind::Cube;
    else if (word == "crosspolytope")
      kind = PolytopeKind::Crosspolytope;
    else
      throw ParseError("expected 'cube n' or 'crosspolytope d' header");
    if (!(hs >> dim)) throw ParseError("header is missing the dimension");
    std::string rest;
    if (hs >> rest) throw ParseError("trailing tokens after header");
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError("empty orientation input");

  auto model = model_for(kind, dim);
  std::vector<std::uint8_t> dir(model->edges.size(), 0);
  std::vector<char> seen(model->edges.size(), 0);
  while (std::getline(in, line)) {
    line = clean_line(line);
    if (line.empty()) continue;
    std::istringstream es(line);
    std::string a, arrow, b, extra;
    if (!(es >> a >> arrow >> b) || arrow != "->" || (es >> extra))
      throw ParseError("expected 'U -> V', got '" + line + "'");
    VertexId u = parse_vertex(kind, dim, a);
    VertexId v = parse_vertex(kind, dim, b);
    int e = model->edge_index(u, v);
    if (e < 0) throw ParseError("'" + a + "' and '" + b + "' are not adjacent");
    if (seen[e]) throw ParseError("edge '" + line + "' listed twice");
    seen[e] = 1;
    dir[e] = u < v ? 1 : 0;
  }
  for (std::size_t e = 0; e < seen.size(); ++e)
    if (!seen[e]) {
      auto [u, v] = model->edges[e];
      throw ParseError("missing edge between " + vertex_name(kind, dim, u) +
                       " and " + vertex_name(kind, dim, v));
    }
  return Orientation(kind, dim, std::move(dir));
}

Orientation parse_orientation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_orientation(in);
}

void write_orientation(std::ostream& out, const Orientation& o) {
  out << (o.kind() == PolytopeKind::Cube ? "cube " : "crosspolytope ")
      << o.dim() << "\n";
  const auto& m = o.model();
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e)
    out << vertex_name(o.kind(), o.dim(), o.tail(e)) << " -> "
        << vertex_name(o.kind(), o.dim(), o.head(e)) << "\n";
}

std::string orientation_text(const Orientation& o) {
  std::ostringstream out;
  write_orientation(out, o);
  return out.str();
}

Rational parse_rational(const std::string& token) {
  if (token.empty()) throw ParseError("empty rational");
  try {
    auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(BigInt(token));
    BigInt num(token.substr(0, slash));
    BigInt den(token.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + token + "'");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + token + "'");
  }
}

std::string rational_str(const Rational& q) {
  std::ostringstream out;
  if (denominator(q) == 1)
    out << numerator(q);
  else
    out << numerator(q) << "/" << denominator(q);
  return out.str();
}

Realization parse_realization(std::istream& in) {
  std::string line;
  int d = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    line = clean_line(line);
    if (line.empty()) continue;
    std::istringstream hs(line);
    std::string word;
    hs >> word;
    if (word != "crosspolytope")
      throw ParseError("expected 'crosspolytope d' header");
    if (!(hs >> d) || d < 1) throw ParseError("bad dimension in header");
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError("empty realization input");

  Realization rz;
  rz.d = d;
  rz.points.assign(2 * d, {});
  std::vector<char> seen(2 * d, 0);
  while (std::getline(in, line)) {
    line = clean_line(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected '+i: coords', got '" + line + "'");
    VertexId v =
        parse_vertex(PolytopeKind::Crosspolytope, d, line.substr(0, colon));
    if (seen[v]) throw ParseError("vertex listed twice in realization");
    seen[v] = 1;
    std::istringstream cs(line.substr(colon + 1));
    RationalPoint p;
    std::string tok;
    while (cs >> tok) p.coords.push_back(parse_rational(tok));
    if (static_cast<int>(p.coords.size()) != d)
      throw ParseError("vertex line needs exactly " + std::to_string(d) +
                       " coordinates");
    rz.points[v] = std::move(p);
  }
  for (int v = 0; v < 2 * d; ++v)
    if (!seen[v])
      throw ParseError("missing vertex " +
                       vertex_name(PolytopeKind::Crosspolytope, d, v));
  for (int i = 0; i < d; ++i) rz.pairing.emplace_back(2 * i, 2 * i + 1);
  return rz;
}

Realization parse_realization_text(const std::string& text) {
  std::istringstream in(text);
  return parse_realization(in);
}

void write_realization(std::ostream& out, const Realization& rz) {
  out << "crosspolytope " << rz.d << "\n";
  for (int i = 0; i < rz.d; ++i) {
    for (bool negative : {false, true}) {
      int idx = negative ? rz.pairing[i].second : rz.pairing[i].first;
      out << CrossVertex{i + 1, negative}.name() << ":";
      for (const auto& q : rz.points[idx].coords) out << " " << rational_str(q);
      out << "\n";
    }
  }
}

std::string realization_text(const Realization& rz) {
  std::ostringstream out;
  write_realization(out, rz);
  return out.str();
}

}  // namespace lporient
