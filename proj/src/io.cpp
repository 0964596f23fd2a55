#include "hcx/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hcx::io {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

const std::set<std::string, std::less<>> kReportWords = {"VERDICT", "CERTIFICATE", "COUNTEREXAMPLE", "WITNESS", "END",
                                                          "SUMMARY", "PASS",        "REFUTED",        "CELL",    "NOTE"};

Rational parse_rational(const Token& t, std::size_t line) {
  try {
    return Rational::parse(t.text);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, t.column, "malformed rational '" + t.text + "'");
  }
}

Vector parse_numbers(const std::vector<Token>& toks, std::size_t from, std::size_t line) {
  Vector v;
  for (std::size_t i = from; i < toks.size(); ++i) v.push_back(parse_rational(toks[i], line));
  return v;
}

std::size_t parse_count(const std::vector<Token>& toks, std::size_t line) {
  if (toks.size() != 2) throw ParseError(line, toks[0].column, "'" + toks[0].text + "' takes exactly one count");
  Rational r = parse_rational(toks[1], line);
  if (!r.is_integer() || r.sign() < 0 || r > Rational(1000)) throw ParseError(line, toks[1].column, "invalid count '" + toks[1].text + "'");
  return static_cast<std::size_t>(std::stoul(r.str()));
}

void check_len(const Row& r, std::size_t want, const std::string& what) {
  if (r.values.size() != want) {
    throw ParseError(r.line, 1, what + " has " + std::to_string(r.values.size()) + " entries, expected " + std::to_string(want));
  }
}

std::size_t part_index(const Row& r, std::size_t parts) {
  if (r.values.empty()) throw ParseError(r.line, 1, "missing part index");
  const Rational& p = r.values[0];
  if (!p.is_integer() || p < Rational(1) || p > Rational(static_cast<long long>(parts))) {
    throw ParseError(r.line, 1, "invalid part index " + p.str());
  }
  return static_cast<std::size_t>(std::stoul(p.str())) - 1;
}

}  // namespace

Document parse(std::string_view text) {
  Document doc;
  std::size_t line_no = 0;
  // Pending block rows: target list and remaining count.
  std::vector<Row>* block = nullptr;
  std::size_t remaining = 0;
  std::string block_name;
  std::size_t block_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (remaining > 0) {
      const auto& first = toks[0].text;
      bool numeric = !first.empty() && (std::isdigit(static_cast<unsigned char>(first[0])) || first[0] == '-' || first[0] == '+');
      if (!numeric) throw ParseError(line_no, toks[0].column, "expected " + std::to_string(remaining) + " more " + block_name + " rows");
      block->push_back({parse_numbers(toks, 0, line_no), line_no});
      --remaining;
      if (end == text.size()) break;
      continue;
    }
    const std::string& kw = toks[0].text;
    if (kReportWords.count(kw)) {
      // Report lines carry no input data.
    } else if (kw == "dim") {
      doc.dim = parse_count(toks, line_no);
    } else if (kw == "basis") {
      doc.basis.push_back({parse_numbers(toks, 1, line_no), line_no});
    } else if (kw == "le" || kw == "eq") {
      if (doc.pieces.empty()) doc.pieces.emplace_back();
      auto& piece = doc.pieces.back();
      (kw == "le" ? piece.le : piece.eq).push_back({parse_numbers(toks, 1, line_no), line_no});
    } else if (kw == "piece") {
      if (toks.size() != 1) throw ParseError(line_no, toks[1].column, "'piece' takes no arguments");
      doc.pieces.emplace_back();
    } else if (kw == "part") {
      doc.parts.push_back({parse_count(toks, line_no), {}, line_no});
    } else if (kw == "embed") {
      if (doc.parts.empty()) throw ParseError(line_no, toks[0].column, "'embed' before any 'part'");
      if (toks.size() != 1) throw ParseError(line_no, toks[1].column, "'embed' takes no arguments");
      auto& part = doc.parts.back();
      if (!part.embed.empty()) throw ParseError(line_no, toks[0].column, "part already has an embedding");
      if (doc.dim && *doc.dim == 0) {
        part.embed.assign(part.dim, Row{{}, line_no});
      } else {
        block = &part.embed;
        remaining = part.dim;
        block_name = "embed";
        block_line = line_no;
      }
    } else if (kw == "metric") {
      if (!doc.metric.empty()) throw ParseError(line_no, toks[0].column, "second 'metric' block");
      doc.metric_line = line_no;
      block = &doc.metric;
      remaining = parse_count(toks, line_no);
      block_name = "metric";
      block_line = line_no;
    } else if (kw == "ball") {
      doc.balls.push_back({parse_numbers(toks, 1, line_no), line_no});
    } else if (kw == "external") {
      doc.externals.push_back({parse_numbers(toks, 1, line_no), line_no});
    } else if (kw == "point") {
      doc.points.push_back({parse_numbers(toks, 1, line_no), line_no});
    } else {
      throw ParseError(line_no, toks[0].column, "unknown keyword '" + kw + "'");
    }
    if (end == text.size()) break;
  }
  if (remaining > 0) throw ParseError(block_line, 1, "'" + block_name + "' block is missing " + std::to_string(remaining) + " rows");
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::size_t ambient_dim(const Document& doc) {
  if (!doc.dim) throw ParseError(1, 1, "missing 'dim' line");
  if (*doc.dim == 0) throw ParseError(1, 1, "dimension must be at least 1");
  return *doc.dim;
}

LinearSubspace subspace(const Document& doc) {
  const std::size_t n = ambient_dim(doc);
  bool has_eq = !doc.pieces.empty() && !doc.pieces[0].eq.empty();
  if (!doc.basis.empty() && has_eq) throw ParseError(doc.basis[0].line, 1, "give either basis lines or eq lines, not both");
  if (has_eq) {
    linalg::Matrix rows;
    for (const auto& r : doc.pieces[0].eq) {
      check_len(r, n + 1, "eq row");
      if (!r.values.back().is_zero()) throw ParseError(r.line, 1, "a linear subspace needs right-hand side 0");
      rows.emplace_back(r.values.begin(), r.values.end() - 1);
    }
    return LinearSubspace::from_equalities(n, rows);
  }
  linalg::Matrix basis;
  for (const auto& r : doc.basis) {
    check_len(r, n, "basis row");
    basis.push_back(r.values);
  }
  if (linalg::rank(basis, n) != basis.size()) throw ParseError(doc.basis.back().line, 1, "basis vectors are linearly dependent");
  return LinearSubspace::from_basis(n, std::move(basis));
}

std::vector<HPolyhedron> polyhedra(const Document& doc) {
  const std::size_t n = ambient_dim(doc);
  std::vector<HPolyhedron> out;
  for (const auto& piece : doc.pieces) {
    HPolyhedron p(n);
    for (const auto& r : piece.le) {
      check_len(r, n + 1, "le row");
      p.add_le(Vector(r.values.begin(), r.values.end() - 1), r.values.back());
    }
    for (const auto& r : piece.eq) {
      check_len(r, n + 1, "eq row");
      p.add_eq(Vector(r.values.begin(), r.values.end() - 1), r.values.back());
    }
    out.push_back(std::move(p));
  }
  if (out.empty()) out.emplace_back(n);
  return out;
}

GluedSpace gluing(const Document& doc) {
  if (doc.parts.empty()) throw ParseError(1, 1, "no 'part' blocks");
  std::optional<std::size_t> k = doc.dim;
  std::vector<linalg::Matrix> emb;
  for (const auto& part : doc.parts) {
    if (part.embed.size() != part.dim) throw ParseError(part.line, 1, "part is missing its 'embed' block");
    linalg::Matrix m;
    for (const auto& r : part.embed) {
      if (!k) k = r.values.size();
      check_len(r, *k, "embed row");
      m.push_back(r.values);
    }
    emb.push_back(std::move(m));
  }
  return GluedSpace(*k, std::move(emb));
}

FiniteMetricSpace metric(const Document& doc) {
  if (doc.metric.empty()) throw ParseError(1, 1, "no 'metric' block");
  linalg::Matrix d;
  for (const auto& r : doc.metric) {
    check_len(r, doc.metric.size(), "metric row");
    d.push_back(r.values);
  }
  try {
    return FiniteMetricSpace(std::move(d));
  } catch (const std::invalid_argument& e) {
    throw ParseError(doc.metric_line, 1, e.what());
  }
}

std::vector<GluedBall> plain_balls(const Document& doc) {
  const std::size_t n = ambient_dim(doc);
  std::vector<GluedBall> out;
  for (const auto& r : doc.balls) {
    check_len(r, n + 1, "ball line");
    if (r.values.back().sign() < 0) throw ParseError(r.line, 1, "negative radius");
    out.push_back({GluedPoint{0, Point(r.values.begin(), r.values.end() - 1)}, r.values.back()});
  }
  return out;
}

GluedBallFamily glued_balls(const Document& doc, const GluedSpace& g) {
  GluedBallFamily out;
  for (const auto& r : doc.balls) {
    std::size_t part = part_index(r, g.parts());
    check_len(r, g.part_dim(part) + 2, "ball line");
    if (r.values.back().sign() < 0) throw ParseError(r.line, 1, "negative radius");
    out.push_back({GluedPoint{part, Point(r.values.begin() + 1, r.values.end() - 1)}, r.values.back()});
  }
  return out;
}

std::vector<Point> plain_points(const Document& doc) {
  const std::size_t n = ambient_dim(doc);
  std::vector<Point> out;
  for (const auto& r : doc.points) {
    check_len(r, n, "point line");
    out.push_back(r.values);
  }
  return out;
}

std::vector<GluedPoint> glued_points(const Document& doc, const GluedSpace& g) {
  std::vector<GluedPoint> out;
  for (const auto& r : doc.points) {
    std::size_t part = part_index(r, g.parts());
    check_len(r, g.part_dim(part) + 1, "point line");
    out.push_back({part, Point(r.values.begin() + 1, r.values.end())});
  }
  return out;
}

std::string ball_line(const GluedBall& b, bool with_part) {
  std::string out = "ball ";
  if (with_part) out += std::to_string(b.center.part + 1) + " ";
  return out + format_vector(b.center.coords) + " " + b.radius.str();
}

std::string external_line(const GluedBall& b) { return "external " + format_vector(b.center.coords) + " " + b.radius.str(); }

std::string point_line(const Point& p) { return "point " + format_vector(p); }

std::string glued_point_line(const GluedPoint& p) { return "point " + std::to_string(p.part + 1) + " " + format_vector(p.coords); }

}  // namespace hcx::io
