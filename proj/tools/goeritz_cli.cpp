// Command-line front end: each command reads one JSON file and prints one
// JSON document. Failures print {"error": kind, "message": text} and exit 1.

#include "goeritz/cyclotomic.hpp"
#include "goeritz/diagram.hpp"
#include "goeritz/error.hpp"
#include "goeritz/io.hpp"
#include "goeritz/medial.hpp"
#include "goeritz/mu.hpp"
#include "goeritz/signed_graph.hpp"
#include "goeritz/tau.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace goeritz;

namespace {

constexpr int kWarnAbove = 12;

struct Options {
  std::string command;
  std::string input;
  int shading = 0;
  std::optional<int> base;
  int max_crossings = 12;
};

Json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string big(const BigInt& x) { return x.str(); }

void warn_size(int count, const char* what) {
  if (count > kWarnAbove) {
    std::cerr << "warning: " << count << " " << what << "; the recursion is exponential in this count\n";
  }
}

int off_diagonal_count(const SymmetricIntMatrix& g) {
  int count = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) count += g(i, j) != 0;
  }
  return count;
}

void guard_crossings(const Diagram& d, int max_crossings) {
  if (d.crossing_count() > max_crossings) {
    throw Error(ErrorKind::TooManyCrossings, std::to_string(d.crossing_count()) + " crossings exceed --max-crossings " +
                                                 std::to_string(max_crossings));
  }
}

const char* verdict(bool ok) { return ok ? "ok" : "failed"; }

Json cmd_mu(const Json& in) {
  const SymmetricIntMatrix g = matrix_from_json(in);
  warn_size(off_diagonal_count(g), "nonzero off-diagonal entries");
  return Json{{"mu", mu(g).to_string()}};
}

Json cmd_tau(const Json& in) {
  const SignedMultigraph g = graph_from_json(in);
  warn_size(g.edge_count(), "edges");
  return Json{{"tau", tau(g).to_string()}};
}

Json cmd_goeritz(const Json& in, const Options& opt) {
  if (in.is_object() && in.contains("vertices")) {
    const SignedMultigraph g = graph_from_json(in);
    const int base = opt.base.value_or(0);
    Json out = to_json(goeritz_from_graph(g, base));
    out["base_vertex"] = base;
    return out;
  }
  const Diagram d = diagram_from_json(in);
  const Shading s = shading(d, opt.shading);
  const GoeritzMatrix gm = opt.base ? goeritz_from_diagram(d, s, *opt.base) : goeritz_from_diagram(d, s);
  Json out = to_json(gm.matrix);
  out["shading"] = opt.shading;
  out["base_face"] = gm.base_face;
  out["region_faces"] = gm.region_faces;
  return out;
}

Json cmd_bracket(const Json& in, const Options& opt) {
  const Diagram d = diagram_from_json(in);
  guard_crossings(d, opt.max_crossings);
  return Json{{"bracket", bracket_state_sum(d).to_string()}};
}

Json cmd_jones(const Json& in, const Options& opt) {
  const Diagram d = diagram_from_json(in);
  guard_crossings(d, opt.max_crossings);
  return Json{{"jones", jones(d).to_string()}};
}

Json cmd_nu(const Json& in) {
  const Diagram d = diagram_from_json(in);
  const auto [s0, s1] = checkerboard(d);
  return Json{{"nu", {nu(d, s0).to_string(), nu(d, s1).to_string()}}};
}

Json determinant_json(const DeterminantSet& ds) {
  return Json{{"det_g", big(ds.det_g)},
              {"det_g_prime", big(ds.det_g_prime)},
              {"nu_abs", big(ds.nu_abs)},
              {"nu_abs_prime", big(ds.nu_abs_prime)},
              {"pairing", verdict(ds.pairing_holds())}};
}

Json cmd_det(const Json& in) { return determinant_json(determinant_set(diagram_from_json(in))); }

Json cmd_realize(const Json& in) { return to_json(graph_from_matrix(matrix_from_json(in))); }

Json cmd_medial(const Json& in) { return to_json(medial(graph_from_json(in)).diagram); }

// Every cross-check recorded here feeds the exit status of analyze.
struct Verdicts {
  Json json = Json::object();
  bool all_ok = true;

  void add(const std::string& name, bool ok) {
    json[name] = verdict(ok);
    all_ok = all_ok && ok;
  }
  void skip(const std::string& name) { json[name] = "skipped"; }
};

Json analyze_shading(const Diagram& d, const Shading& s, const std::optional<LaurentPoly>& bracket,
                     const std::optional<HalfTLaurent>& oracle_jones, Verdicts& v) {
  const std::string tag = "shading" + std::to_string(s.index) + ".";
  const TaitGraph tait = tait_graph(d, s);
  const TaitGraph dual = tait_graph(d, s.opposite());
  const GoeritzMatrix gm = goeritz_from_diagram(d, s);
  const WritheData wd = writhe_data(d, s);
  const CrossingTypes ct = crossing_types_and_euler(d, s);
  const LaurentPoly mu_value = mu(gm.matrix);
  const LaurentPoly tau_value = tau(tait.graph);
  const HalfTLaurent nu_value = nu(d, s);
  const HalfTLaurent euler_jones = jones_with_euler(gm.matrix, ct.euler);

  Json out;
  out["tait_graph"] = to_json(tait.graph);
  out["tait_faces"] = tait.vertex_face;
  out["goeritz"] = to_json(gm.matrix)["matrix"];
  out["base_face"] = gm.base_face;
  out["region_faces"] = gm.region_faces;
  out["w0"] = wd.w0;
  Json types = Json::array();
  for (auto t : ct.types) types.push_back(t == CrossingType::I ? "I" : "II");
  out["crossing_types"] = types;
  out["euler"] = ct.euler.value;
  out["mu"] = mu_value.to_string();
  out["tau"] = tau_value.to_string();
  out["nu"] = nu_value.to_string();
  out["jones_from_goeritz"] = euler_jones.to_string();

  const auto base_vertex = std::find(dual.vertex_face.begin(), dual.vertex_face.end(), gm.base_face);
  v.add(tag + "goeritz_routes",
        gm.matrix == goeritz_from_graph(dual.graph, static_cast<int>(base_vertex - dual.vertex_face.begin())));
  v.add(tag + "det_modulus", det_modulus_check(gm.matrix).holds());

  bool surface_oriented = is_orientable_diag(gm.matrix);
  for (auto t : ct.types) surface_oriented = surface_oriented && t == CrossingType::I;
  if (surface_oriented) {
    v.add(tag + "o_writhe", wd.w - wd.w0 == -gm.matrix.upper_sum());
  } else {
    v.skip(tag + "o_writhe");
  }
  if (bracket) {
    v.add(tag + "bracket_tau", tau_value == *bracket);
    v.add(tag + "bracket_mu", neg_A_pow(3 * wd.w0) * mu_value == *bracket);
    v.add(tag + "nu_jones", nu_value == *oracle_jones);
    v.add(tag + "full_jones", euler_jones == *oracle_jones);
    if (surface_oriented) {
      v.add(tag + "orientable_jones", jones_orientable(gm.matrix) == *oracle_jones);
    } else {
      v.skip(tag + "orientable_jones");
    }
  } else {
    for (const char* name : {"bracket_tau", "bracket_mu", "nu_jones", "full_jones", "orientable_jones"}) {
      v.skip(tag + name);
    }
  }
  return out;
}

int cmd_analyze(const Json& in, const Options& opt) {
  const Diagram d = diagram_from_json(in);
  const FaceStructure faces = faces_and_genus(d);
  Json out;
  out["crossings"] = d.crossing_count();
  out["components"] = d.components().size();
  out["genus"] = faces.genus;
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += d.writhe_sign(c);
  out["w"] = w;

  std::optional<std::pair<Shading, Shading>> shadings;
  try {
    shadings = checkerboard(d);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCheckerboardColorable) throw;
  }
  out["colorable"] = shadings.has_value();
  if (!shadings) {
    out["checks"] = Json::object();
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::optional<LaurentPoly> bracket;
  std::optional<HalfTLaurent> oracle_jones;
  if (faces.genus == 0 && d.crossing_count() <= opt.max_crossings) {
    bracket = bracket_state_sum(d);
    oracle_jones = jones(d);
    out["bracket"] = bracket->to_string();
    out["jones"] = oracle_jones->to_string();
  } else {
    out["bracket"] = nullptr;
    out["jones"] = nullptr;
  }

  Verdicts v;
  out["shadings"] = {analyze_shading(d, shadings->first, bracket, oracle_jones, v),
                     analyze_shading(d, shadings->second, bracket, oracle_jones, v)};
  const DeterminantSet ds = determinant_set(d);
  out["determinants"] = determinant_json(ds);
  v.add("determinant_pairing", ds.pairing_holds());
  out["checks"] = v.json;
  std::cout << out.dump(2) << "\n";
  return v.all_ok ? 0 : 2;
}

int run(const Options& opt) {
  const Json in = read_input(opt.input);
  if (opt.command == "analyze") return cmd_analyze(in, opt);
  Json out;
  if (opt.command == "mu") out = cmd_mu(in);
  else if (opt.command == "tau") out = cmd_tau(in);
  else if (opt.command == "goeritz") out = cmd_goeritz(in, opt);
  else if (opt.command == "bracket") out = cmd_bracket(in, opt);
  else if (opt.command == "jones") out = cmd_jones(in, opt);
  else if (opt.command == "nu") out = cmd_nu(in);
  else if (opt.command == "det") out = cmd_det(in);
  else if (opt.command == "realize") out = cmd_realize(in);
  else if (opt.command == "medial") out = cmd_medial(in);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman bracket, Jones polynomial and Goeritz matrix toolkit"};
  app.require_subcommand(1, 1);
  Options opt;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"mu", "mu polynomial of a matrix file"},
      {"tau", "tau polynomial of a signed graph file"},
      {"goeritz", "Goeritz matrix of a graph or diagram file"},
      {"bracket", "Kauffman bracket of a diagram by state sum"},
      {"jones", "Jones polynomial of a diagram by state sum"},
      {"nu", "nu polynomials of both shadings of a diagram"},
      {"det", "determinant set of a diagram"},
      {"realize", "signed graph whose Goeritz matrix is the given matrix"},
      {"medial", "medial diagram of an embedded signed graph"},
      {"analyze", "full report with every cross-check; exits 2 if one fails"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "input JSON file")->required();
    if (name == "goeritz") {
      sub->add_option("--shading", opt.shading, "checkerboard shading of a diagram")
          ->check(CLI::IsMember({0, 1}));
      sub->add_option("--base", opt.base, "base face (diagram) or base vertex (graph)");
    }
    if (name == "bracket" || name == "jones" || name == "analyze") {
      sub->add_option("--max-crossings", opt.max_crossings, "refuse state sums above this many crossings")
          ->capture_default_str();
    }
    sub->callback([&opt, name = name] { opt.command = name; });
  }
  CLI11_PARSE(app, argc, argv);

  try {
    return run(opt);
  } catch (const Error& e) {
    std::cout << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  }
}
