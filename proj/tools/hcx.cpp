#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "hcx/gluing.hpp"
#include "hcx/io.hpp"
#include "hcx/oracles.hpp"
#include "hcx/polyhedron.hpp"
#include "hcx/subspace.hpp"
#include "hcx/tightspan.hpp"

namespace {

using namespace hcx;

constexpr int kHolds = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

// Ordered report items, rendered as line-oriented text or as JSON.
class Report {
 public:
  void verdict(const std::string& name, const std::string& value) { items_.push_back({"verdict", name, value, {}}); }
  void certificate(const std::string& text) { items_.push_back({"certificate", "", text, {}}); }
  void line(const std::string& text) { items_.push_back({"line", "", text, {}}); }
  void block(const std::string& kind, std::vector<std::string> lines) { items_.push_back({"block", kind, "", std::move(lines)}); }

  [[nodiscard]] std::string text() const {
    std::string out;
    for (const auto& it : items_) {
      if (it.type == "verdict") {
        out += "VERDICT " + it.name + " " + it.value + "\n";
      } else if (it.type == "certificate") {
        out += "CERTIFICATE " + it.value + "\n";
      } else if (it.type == "line") {
        out += it.value + "\n";
      } else {
        out += it.name + "\n";
        for (const auto& l : it.lines) out += l + "\n";
        out += "END\n";
      }
    }
    return out;
  }

  [[nodiscard]] std::string json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& it : items_) {
      nlohmann::ordered_json o;
      o["type"] = it.type;
      if (!it.name.empty()) o["name"] = it.name;
      if (!it.value.empty()) o["value"] = it.value;
      if (it.type == "block") o["lines"] = it.lines;
      j.push_back(std::move(o));
    }
    return j.dump(2) + "\n";
  }

 private:
  struct Item {
    std::string type, name, value;
    std::vector<std::string> lines;
  };
  std::vector<Item> items_;
};

struct Options {
  std::string input;
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  std::string samples;
  std::string format = "text";
  std::string kind = "hyperconvex";
  std::size_t basepoint = 1;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> polyhedron_lines(const HPolyhedron& p) {
  std::vector<std::string> out{"dim " + std::to_string(p.dim())};
  for (const auto& r : p.equalities()) out.push_back("eq " + format_vector(r.coeffs) + " " + r.bound.str());
  for (const auto& r : p.inequalities()) out.push_back("le " + format_vector(r.coeffs) + " " + r.bound.str());
  return out;
}

int classify_subspace(const Options& opt, Report& rep) {
  auto doc = io::parse_file(opt.input);
  auto v = io::subspace(doc);
  rep.verdict("dimension", std::to_string(v.dim()));

  auto hc = is_hyperconvex_subspace(v);
  rep.verdict("hyperconvex", yes_no(hc.hyperconvex));
  if (hc.witness) {
    std::string piv;
    for (auto j : hc.witness->pivots) piv += (piv.empty() ? "" : ",") + std::to_string(j + 1);
    rep.certificate("pivots {" + piv + "} max-row-sum " + hc.witness->max_row_l1().str());
  }
  bool sc = is_strongly_convex_subspace(v);
  rep.verdict("strongly-convex", yes_no(sc));
  auto dec = classify_weh_subspace(v);
  rep.verdict("weh", yes_no(dec.has_value()));
  if (dec) rep.certificate("decomposition " + dec->str());
  bool eh = is_eh_subspace(v);
  rep.verdict("eh", yes_no(eh));

  std::string summary = "SUMMARY WEH: " + yes_no(dec.has_value());
  if (dec) summary += "; decomposition: " + dec->str();
  summary += "; strongly-convex: " + yes_no(sc) + "; EH: " + yes_no(eh);
  rep.line(summary);
  return kHolds;
}

int classify_polyhedron(const Options& opt, Report& rep) {
  auto doc = io::parse_file(opt.input);
  auto pieces = io::polyhedra(doc);
  if (pieces.size() != 1) throw std::invalid_argument("classify-polyhedron expects a single piece");
  auto canon = canonicalize(pieces[0]);
  rep.verdict("empty", yes_no(!canon));
  if (!canon) return kHolds;
  rep.verdict("dimension", std::to_string(canon->dim() - canon->equalities().size()));
  rep.verdict("interior", yes_no(canon->equalities().empty()));
  rep.block("WITNESS", polyhedron_lines(*canon));

  auto cub = is_cuboid(*canon);
  rep.verdict("cuboid", yes_no(cub.cuboid));
  rep.certificate("bounding-box " + format_box(cub.box));

  auto weh = is_weh_polyhedron(*canon);
  rep.verdict("weh", to_string(weh.status));
  if (!weh.reason.empty()) rep.certificate(weh.reason);
  if (weh.allowed_system) rep.block("WITNESS", polyhedron_lines(*weh.allowed_system));
  if (weh.violating) rep.certificate("facet le " + format_vector(weh.violating->coeffs) + " " + weh.violating->bound.str());
  return kHolds;
}

std::vector<std::string> family_lines(const Counterexample& c, bool with_part) {
  std::vector<std::string> out;
  if (c.external) out.push_back(io::external_line(*c.external));
  for (const auto& b : c.balls) out.push_back(io::ball_line(b, with_part));
  return out;
}

int report_oracle(const OracleReport& r, bool with_part, Report& rep) {
  rep.verdict("oracle", r.refuted ? "REFUTED" : "PASS");
  if (!r.refuted) {
    rep.line("PASS budget=" + std::to_string(r.budget));
    return kHolds;
  }
  rep.line("REFUTED budget=" + std::to_string(r.budget) + " used=" + std::to_string(r.budget_used));
  rep.block("COUNTEREXAMPLE", family_lines(*r.counterexample, with_part));
  return kRefuted;
}

std::vector<Point> sample_points(const Options& opt, const io::Document& doc) {
  auto pts = io::plain_points(doc);
  if (!opt.samples.empty()) {
    auto sdoc = io::parse_file(opt.samples);
    if (!sdoc.dim) sdoc.dim = doc.dim;
    auto more = io::plain_points(sdoc);
    pts.insert(pts.end(), more.begin(), more.end());
  }
  return pts;
}

int glue_check(const Options& opt, Report& rep) {
  auto doc = io::parse_file(opt.input);
  if (doc.parts.empty()) {
    auto pieces = io::polyhedra(doc);
    if (pieces.size() != 1) throw std::invalid_argument("glue-check expects a single gluing set");
    auto r = check_gluing_conditions(pieces[0], sample_points(opt, doc));
    rep.verdict("weh", to_string(r.weh.status));
    if (!r.weh.reason.empty()) rep.certificate(r.weh.reason);
    std::size_t failing = 0;
    for (const auto& s : r.samples) {
      if (s.cuboid) continue;
      ++failing;
      std::vector<std::string> lines{io::point_line(s.x)};
      auto proj = polyhedron_lines(s.projection);
      lines.insert(lines.end(), proj.begin() + 1, proj.end());
      rep.block("COUNTEREXAMPLE", std::move(lines));
    }
    rep.verdict("samples", std::to_string(r.samples.size()));
    rep.verdict("non-cuboid-projections", std::to_string(failing));
    rep.verdict("conditions", r.holds ? "hold-on-samples" : "fail");
    return r.holds ? kHolds : kRefuted;
  }

  auto g = io::gluing(doc);
  auto valid = validate_gluing(g);
  rep.verdict("valid", yes_no(valid.ok));
  if (!valid.ok) {
    rep.certificate(valid.error);
    return kInputError;
  }
  bool refuted = false;
  if (g.parts() == 2 && g.k() < g.part_dim(0) && g.k() < g.part_dim(1)) {
    auto d = decide_glued_hyperconvex(g);
    rep.verdict("decision", d.hyperconvex ? "hyperconvex" : "not-hyperconvex");
    rep.certificate(d.certificate);
    refuted = !d.hyperconvex;
  }
  auto fam = io::glued_balls(doc, g);
  if (!fam.empty()) {
    auto hit = glued_family_intersects(g, fam);
    rep.verdict("family-intersects", yes_no(hit.intersects));
    if (hit.witness) rep.block("WITNESS", {io::glued_point_line(*hit.witness)});
    Counterexample c{fam, std::nullopt};
    if (!hit.intersects && verify_hyperconvexity_refutation(g, c)) {
      rep.block("COUNTEREXAMPLE", family_lines(c, true));
      refuted = true;
    }
  }
  auto r = hyperconvexity_oracle(g, {opt.budget, opt.seed});
  refuted = report_oracle(r, true, rep) == kRefuted || refuted;
  rep.verdict("hyperconvex", yes_no(!refuted));
  return refuted ? kRefuted : kHolds;
}

int glue_distance(const Options& opt, Report& rep) {
  auto doc = io::parse_file(opt.input);
  auto g = io::gluing(doc);
  if (auto v = validate_gluing(g); !v.ok) throw std::invalid_argument(v.error);
  auto pts = io::glued_points(doc, g);
  if (pts.size() != 2) throw std::invalid_argument("glue-distance expects exactly two point lines");
  auto d = glued_distance_with_gates(g, pts[0], pts[1]);
  rep.verdict("distance", d.distance.str());
  if (d.gate_a && d.gate_b) {
    rep.block("WITNESS", {io::glued_point_line({pts[0].part, g.embed(pts[0].part, *d.gate_a)}),
                          io::glued_point_line({pts[0].part, g.embed(pts[0].part, *d.gate_b)})});
  }
  return kHolds;
}

int oracle(const Options& opt, Report& rep) {
  auto doc = io::parse_file(opt.input);
  OracleOptions o{opt.budget, opt.seed};
  if (!doc.parts.empty()) {
    if (opt.kind != "hyperconvex") throw std::invalid_argument("glued spaces support --kind hyperconvex only");
    auto g = io::gluing(doc);
    return report_oracle(hyperconvexity_oracle(g, o), true, rep);
  }
  PolySet s(io::ambient_dim(doc), io::polyhedra(doc));
  if (opt.kind == "hyperconvex") return report_oracle(hyperconvexity_oracle(s, o), false, rep);
  if (opt.kind == "eh") return report_oracle(eh_oracle(s, o), false, rep);
  if (opt.kind == "weh") return report_oracle(weh_oracle(s, o), false, rep);
  throw std::invalid_argument("unknown oracle kind '" + opt.kind + "'");
}

int tight_span(const Options& opt, Report& rep) {
  auto doc = io::parse_file(opt.input);
  auto x = io::metric(doc);
  if (opt.basepoint < 1 || opt.basepoint > x.size()) throw std::invalid_argument("basepoint out of range");
  auto cells = enumerate_cells(x);
  std::size_t extremal = 0;
  for (const auto& c : cells) extremal += c.extremal;
  rep.verdict("points", std::to_string(x.size()));
  rep.verdict("cells", std::to_string(cells.size()));
  rep.verdict("extremal-cells", std::to_string(extremal));
  bool all_weh = true;
  for (const auto& c : cells) {
    auto v = cell_weh_certificate(x, c.edges, opt.basepoint - 1);
    all_weh = all_weh && v.status == WehStatus::certified_weh;
    rep.line("CELL edges=" + format_edges(c.edges) + " dim=" + std::to_string(c.dimension) + " extremal=" + yes_no(c.extremal) +
             " weh=" + to_string(v.status));
  }
  rep.verdict("cells-weh", yes_no(all_weh));
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperconvexity toolkit for l-infinity spaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "input file")->required();
    sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "families tested by the oracle")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "oracle seed");
  };

  auto* cs = app.add_subcommand("classify-subspace", "classify a linear subspace");
  add_common(cs);
  auto* cp = app.add_subcommand("classify-polyhedron", "canonicalize and classify a polyhedron");
  add_common(cp);
  auto* gc = app.add_subcommand("glue-check", "check a gluing or the gluing conditions of a set");
  add_common(gc);
  add_search(gc);
  gc->add_option("--samples", opt.samples, "file with extra 'point' lines");
  auto* gd = app.add_subcommand("glue-distance", "distance between two glued points");
  add_common(gd);
  auto* orc = app.add_subcommand("oracle", "run a refutation oracle");
  add_common(orc);
  add_search(orc);
  orc->add_option("--kind", opt.kind, "hyperconvex | eh | weh")->check(CLI::IsMember({"hyperconvex", "eh", "weh"}));
  auto* ts = app.add_subcommand("tight-span", "enumerate cells of the injective hull of a finite metric");
  add_common(ts);
  ts->add_option("--basepoint", opt.basepoint, "1-based basepoint of the translation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  Report rep;
  int code = kHolds;
  try {
    if (*cs) code = classify_subspace(opt, rep);
    if (*cp) code = classify_polyhedron(opt, rep);
    if (*gc) code = glue_check(opt, rep);
    if (*gd) code = glue_distance(opt, rep);
    if (*orc) code = oracle(opt, rep);
    if (*ts) code = tight_span(opt, rep);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::cout << (opt.format == "json" ? rep.json() : rep.text());
  return code;
}
