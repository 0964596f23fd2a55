#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcx/gluing.hpp"
#include "hcx/linalg.hpp"
#include "hcx/oracles.hpp"
#include "hcx/polyhedron.hpp"
#include "hcx/subspace.hpp"
#include "hcx/tightspan.hpp"

namespace hcx::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A row of rationals with the line it came from.
struct Row {
  Vector values;
  std::size_t line = 0;
};

struct Piece {
  std::vector<Row> le;
  std::vector<Row> eq;
};

struct PartBlock {
  std::size_t dim = 0;
  std::vector<Row> embed;
  std::size_t line = 0;
};

/// Raw content of an input file. Report lines (VERDICT, CERTIFICATE, …) are
/// skipped so that reports parse back.
struct Document {
  std::optional<std::size_t> dim;
  std::vector<Row> basis;
  std::vector<Piece> pieces;
  std::vector<PartBlock> parts;
  std::vector<Row> metric;
  std::size_t metric_line = 0;
  std::vector<Row> balls;
  std::vector<Row> externals;
  std::vector<Row> points;
};

Document parse(std::string_view text);
Document parse_file(const std::string& path);

/// Builders; each throws ParseError naming the offending line.
std::size_t ambient_dim(const Document& doc);
LinearSubspace subspace(const Document& doc);
std::vector<HPolyhedron> polyhedra(const Document& doc);
GluedSpace gluing(const Document& doc);
FiniteMetricSpace metric(const Document& doc);
/// Ball lines "ball x1 … xn r".
std::vector<GluedBall> plain_balls(const Document& doc);
/// Ball lines "ball part x1 … xn r" with a 1-based part index.
GluedBallFamily glued_balls(const Document& doc, const GluedSpace& g);
std::vector<Point> plain_points(const Document& doc);
std::vector<GluedPoint> glued_points(const Document& doc, const GluedSpace& g);

/// Lines of the input grammar.
std::string ball_line(const GluedBall& b, bool with_part);
std::string external_line(const GluedBall& b);
std::string point_line(const Point& p);
std::string glued_point_line(const GluedPoint& p);

}  // namespace hcx::io
