// qtk: command-line front end.
//
// Exit codes: 0 success, 2 mathematical or validation refusal (structured
// JSON on stderr), 1 any other error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "qtk/catalog.hpp"
#include "qtk/io.hpp"
#include "qtk/report.hpp"
#include "qtk/svg.hpp"
#include "qtk/tiling.hpp"

using namespace qtk;

namespace {

struct Options {
  std::string input;
  std::string example;
  std::string output;
  std::string format = "text";
  std::string normal;
  std::string lambda;
  std::string axis_of;
  std::string type = "p2";
  std::string seed = "acute";
  std::size_t steps = 0;
  bool mirror = false;
  std::string pair;
  bool star = false;
};

class RefusedError : public Error {
 public:
  RefusedError(io::Json payload, const std::string& what) : Error(what), payload_(std::move(payload)) {}
  const io::Json& payload() const { return payload_; }

 private:
  io::Json payload_;
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Error("cannot write '" + o.output + "'");
  out << text;
}

Triple load_triple(const Options& o) {
  if (!o.example.empty()) return catalog::triple_by_name(o.example);
  if (o.input.empty()) throw Error("give an input file or --example NAME");
  return io::triple_from_json(io::parse_document(read_text(o.input)));
}

io::Json validation_json(const std::string& name, const ValidationReport& r, const std::string& what) {
  io::Json j = io::Json::object();
  j["schema_version"] = io::kSchemaVersion;
  j["kind"] = "validation";
  j["name"] = name;
  j["object"] = what;
  j["bounded"] = r.bounded;
  j["full_dimensional"] = r.full_dim;
  j["irredundant"] = r.irredundant_facets;
  j["simple"] = r.simple;
  j["vertex_count"] = r.vertex_count;
  j["certificates"] = "verified";
  j["ok"] = r.ok();
  return j;
}

io::Json lattice_validation(const std::string& name, const Quasilattice& q) {
  return io::Json::object({{"schema_version", io::kSchemaVersion}, {"kind", "validation"}, {"name", name},
                           {"object", "quasilattice"}, {"z_rank", z_rank(q)}, {"discrete", is_discrete(q)},
                           {"ok", true}});
}

int cmd_validate(const Options& o) {
  if (!o.example.empty()) {
    for (const auto& n : catalog::lattice_names())
      if (n == o.example) {
        write_text(o, io::dump(lattice_validation(n, catalog::lattice_by_name(n))));
        return 0;
      }
    Triple t = catalog::triple_by_name(o.example);
    write_text(o, io::dump(validation_json(t.name, validate(t.polytope), "triple")));
    return 0;
  }
  io::Json doc = io::parse_document(read_text(o.input));
  const std::string kind = io::document_kind(doc);
  if (kind == "quasilattice") {
    Quasilattice q = io::quasilattice_from_json(doc);
    write_text(o, io::dump(lattice_validation(doc.value("name", std::string("quasilattice")), q)));
    return 0;
  }
  if (kind == "patch") {
    Patch p = io::patch_from_json(doc);
    if (!check_patch(p)) throw Error("patch: children do not tile their parent");
    auto [a, b] = counts(p);
    write_text(o, io::dump(io::Json::object({{"schema_version", io::kSchemaVersion}, {"kind", "validation"},
                                             {"object", "patch"}, {"depth", p.depth}, {"acute", a},
                                             {"obtuse", b}, {"ok", true}})));
    return 0;
  }
  Triple t = io::triple_from_json(doc);
  write_text(o, io::dump(validation_json(t.name, validate(t.polytope), "triple")));
  return 0;
}

ReportFormat report_format(const Options& o) {
  if (o.format == "text") return ReportFormat::text;
  if (o.format == "json") return ReportFormat::json;
  throw Error("--format must be text or json");
}

int cmd_present(const Options& o) {
  Triple t = load_triple(o);
  Presentation p = build_presentation(t);
  if (report_format(o) == ReportFormat::json)
    write_text(o, io::dump(io::to_json(p)));
  else
    write_text(o, emit_report(t.name, p, {}, ReportFormat::text));
  return 0;
}

int cmd_charts(const Options& o) {
  Triple t = load_triple(o);
  auto charts = build_charts(t);
  if (report_format(o) == ReportFormat::json)
    write_text(o, io::dump(io::charts_to_json(charts, t.field)));
  else
    write_text(o, emit_report(t.name, build_presentation(t), charts, ReportFormat::text));
  return 0;
}

int cmd_report(const Options& o) {
  Triple t = load_triple(o);
  write_text(o, emit_report(t.name, build_presentation(t), build_charts(t), report_format(o)));
  return 0;
}

int cmd_classify(const Options& o) {
  Triple t = load_triple(o);
  Classification c = classify(t);
  write_text(o, o.format == "text" ? classification_text(c) : io::dump(io::to_json(c)));
  if (c.refused()) {
    io::Json r = io::Json::object({{"schema_version", io::kSchemaVersion}, {"kind", "refusal"}, {"name", c.name},
                                   {"space_kind", kind_name(c.kind)}, {"message", c.summary}});
    throw RefusedError(r, c.summary);
  }
  return 0;
}

KVector parse_vector(const std::string& text) {
  KVector v;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) v.push_back(FieldElem::parse(item));
  return v;
}

int cmd_cut(const Options& o) {
  Triple t = load_triple(o);
  KVector normal;
  FieldElem level;
  if (!o.axis_of.empty()) {
    if (o.axis_of != "kite") throw Error("--axis-of supports the kite only");
    std::tie(normal, level) = catalog::kite_axis();
  } else {
    if (o.normal.empty() || o.lambda.empty()) throw Error("cut needs --normal and --lambda, or --axis-of");
    normal = parse_vector(o.normal);
    level = FieldElem::parse(o.lambda);
    if (normal.size() != t.n()) throw Error("--normal has the wrong dimension");
  }
  write_text(o, io::dump(io::to_json(cut_and_present(t, normal, level))));
  return 0;
}

int cmd_tile(const Options& o) {
  TilingSystem s = system_from_name(o.type);
  TileKind k = tile_kind_from_name(o.seed);
  Patch p = deflate(o.mirror ? mirror_doubled_seed(s, k) : seed_patch(s, k), o.steps);
  if (!o.pair.empty()) {
    PairMode m = pair_mode_from_name(o.pair);
    write_text(o, io::dump(io::to_json(pair_tiles(p, m), m)));
    return 0;
  }
  write_text(o, io::dump(io::to_json(p)));
  return 0;
}

int cmd_render(const Options& o) {
  SvgStyle style;
  style.precision = precision_from_env();
  if (o.star) {
    write_text(o, render_star(catalog::pentagon(), style));
    return 0;
  }
  Patch p = io::patch_from_json(io::parse_document(read_text(o.input)));
  if (!o.pair.empty())
    write_text(o, render_svg(pair_tiles(p, pair_mode_from_name(o.pair)).tiles, style));
  else
    write_text(o, render_svg(p, style));
  return 0;
}

void emit_error(const std::string& kind, const std::string& message) {
  io::Json j = io::Json::object({{"schema_version", io::kSchemaVersion}, {"kind", kind}, {"message", message}});
  std::cerr << io::dump(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic toric quasifold presentations and Penrose substitution tilings"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* c) {
    c->add_option("input", o.input, "input JSON file ('-' for stdin)");
    c->add_option("--example", o.example, "use a shipped example instead of a file");
    c->add_option("-o,--output", o.output, "output file (default stdout)");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a triple, quasilattice or patch document");
  add_input(validate_cmd);
  auto* present_cmd = app.add_subcommand("present", "level-set presentation of the quasifold");
  add_input(present_cmd);
  present_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* charts_cmd = app.add_subcommand("charts", "vertex charts and chart groups");
  add_input(charts_cmd);
  charts_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* classify_cmd = app.add_subcommand("classify", "manifold / orbifold / quasifold / refused");
  add_input(classify_cmd);
  classify_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* report_cmd = app.add_subcommand("report", "presentation together with all charts");
  add_input(report_cmd);
  report_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* cut_cmd = app.add_subcommand("cut", "cut the polytope and present both halves");
  add_input(cut_cmd);
  cut_cmd->add_option("--normal", o.normal, "comma-separated field elements, e.g. \"1/2,-1/2+1/2sqrt5\"");
  cut_cmd->add_option("--lambda", o.lambda, "level of the cutting hyperplane");
  cut_cmd->add_option("--axis-of", o.axis_of, "cut along the symmetry axis of a shipped tile (kite)");
  auto* tile_cmd = app.add_subcommand("tile", "deflate a seed half-tile");
  tile_cmd->add_option("--type", o.type, "p2 (kite and dart) or p3 (rhombus)");
  tile_cmd->add_option("--seed", o.seed, "acute or obtuse");
  tile_cmd->add_option("--steps", o.steps, "number of deflations");
  tile_cmd->add_flag("--mirror", o.mirror, "start from the seed and its mirror image");
  tile_cmd->add_option("--pair", o.pair, "emit paired whole tiles: kite_dart or rhombus");
  tile_cmd->add_option("-o,--output", o.output, "output file (default stdout)");
  auto* render_cmd = app.add_subcommand("render", "SVG of a patch (read from a file or stdin)");
  render_cmd->add_option("input", o.input, "patch JSON ('-' or absent for stdin)");
  render_cmd->add_option("--pair", o.pair, "draw paired whole tiles: kite_dart or rhombus");
  render_cmd->add_flag("--star", o.star, "draw the five pentagonal generators");
  render_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*present_cmd) return cmd_present(o);
    if (*charts_cmd) return cmd_charts(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*report_cmd) return cmd_report(o);
    if (*cut_cmd) return cmd_cut(o);
    if (*tile_cmd) return cmd_tile(o);
    if (*render_cmd) return cmd_render(o);
  } catch (const RefusedError& e) {
    std::cerr << io::dump(e.payload());
    return 2;
  } catch (const Refusal& e) {
    std::cerr << io::dump(io::refusal_to_json(o.example.empty() ? o.input : o.example, e));
    return 2;
  } catch (const InvalidTriple& e) {
    emit_error("invalid", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("error", e.what());
    return 1;
  }
  return 1;
}
