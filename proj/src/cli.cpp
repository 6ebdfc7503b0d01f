#include "vsenergy/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vsenergy/characterize.hpp"
#include "vsenergy/energy.hpp"
#include "vsenergy/maxeven.hpp"
#include "vsenergy/search.hpp"

namespace vsenergy {

namespace {

using nlohmann::ordered_json;

// Command-line mistakes, reported with exit code 2.
struct CliUsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  bool consume(const std::string& tok) {
    if (s.compare(pos, tok.size(), tok) != 0) return false;
    pos += tok.size();
    return true;
  }

  int parse_int() {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start || pos - start > 7)
      throw std::invalid_argument("malformed graph spec '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  }

  ParsedGraph parse() {
    if (consume("petersen")) return {build_petersen(), std::nullopt};
    if (consume("path:")) return {build_path(parse_int()), std::nullopt};
    if (consume("cycle:")) {
      int n = parse_int();
      return {build_cycle(n), n};
    }
    if (consume("hypercube:")) return {build_hypercube(parse_int()), std::nullopt};
    if (consume("mobius:")) return {build_mobius_ladder(parse_int()), std::nullopt};
    if (consume("product:")) {
      ParsedGraph a = parse();
      if (!consume(",")) throw std::invalid_argument("malformed graph spec '" + s + "'");
      ParsedGraph b = parse();
      return {cartesian_product(a.graph, b.graph), std::nullopt};
    }
    throw std::invalid_argument("malformed graph spec '" + s + "'");
  }
};

}  // namespace

ParsedGraph parse_graph_spec(const std::string& spec) {
  SpecParser p{spec};
  ParsedGraph g = p.parse();
  if (p.pos != spec.size()) throw std::invalid_argument("malformed graph spec '" + spec + "'");
  return g;
}

VertexSet parse_vertex_set(const std::string& text) {
  VertexSet out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                    [](unsigned char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed vertex set '" + text + "'");
    if (tok.size() > 7) throw std::invalid_argument("vertex label too large in '" + text + "'");
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("duplicate vertex in '" + text + "'");
  return out;
}

std::string emit_dot(const Graph& g, const VertexSet& highlight) {
  validate_vertex_set(g, highlight);
  std::ostringstream os;
  os << "graph G {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (std::binary_search(highlight.begin(), highlight.end(), v))
      os << " [style=filled, fillcolor=black, fontcolor=white]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

struct GraphArgs {
  std::string spec;
  std::string edge_list_path;

  ParsedGraph resolve() const {
    if (spec.empty() == edge_list_path.empty())
      throw CliUsageError("exactly one of --graph and --edge-list is required");
    if (!spec.empty()) {
      try {
        return parse_graph_spec(spec);
      } catch (const std::invalid_argument& e) {
        throw CliUsageError(e.what());
      }
    }
    std::ifstream in(edge_list_path);
    if (!in) throw std::runtime_error("cannot open '" + edge_list_path + "'");
    return {read_edge_list(in), std::nullopt};
  }

  std::string label() const { return spec.empty() ? edge_list_path : spec; }
};

struct ObjectiveArgs {
  std::string objective = "wiener";
  std::string direction;
  std::string kernel_file;

  ObjectiveSpec resolve(bool need_direction) const {
    ObjectiveSpec f;
    if (objective == "wiener")
      f.kind = ObjectiveKind::Wiener;
    else if (objective == "harary")
      f.kind = ObjectiveKind::Harary;
    else if (objective == "product")
      f.kind = ObjectiveKind::DistanceProduct;
    else if (objective == "energy")
      f.kind = ObjectiveKind::Energy;
    else
      throw CliUsageError("unknown objective '" + objective + "'");
    if (f.kind == ObjectiveKind::Energy) {
      if (kernel_file.empty())
        throw CliUsageError("--objective energy needs --kernel-file");
      std::ifstream in(kernel_file);
      if (!in) throw std::runtime_error("cannot open '" + kernel_file + "'");
      f.kernel = parse_kernel_file(in, kernel_file);
    } else if (!kernel_file.empty()) {
      throw CliUsageError("--kernel-file only applies to --objective energy");
    }
    if (need_direction) {
      if (direction == "min")
        f.direction = Direction::Minimize;
      else if (direction == "max")
        f.direction = Direction::Maximize;
      else
        throw CliUsageError("--direction must be min or max");
    }
    return f;
  }
};

std::string join_spaced(const VertexSet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(a[i]);
  }
  return out;
}

long long enumeration_cap_from_env() {
  const char* raw = std::getenv("EXTREMAL_ENUM_CAP");
  if (!raw) return kDefaultEnumerationCap;
  std::string text(raw);
  if (text.empty() || text.size() > 18 ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return c >= '0' && c <= '9'; }))
    throw CliUsageError("EXTREMAL_ENUM_CAP must be a positive integer");
  long long cap = std::stoll(text);
  if (cap < 1) throw CliUsageError("EXTREMAL_ENUM_CAP must be a positive integer");
  return cap;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const CliUsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact extremal-subset toolkit for graph distance energies"};
  app.name("vsenergy");
  app.require_subcommand(1);

  GraphArgs graph_args;
  ObjectiveArgs obj_args;
  std::string set_text, start_text, highlight_text, property;
  std::string format = "text", gen_format = "edgelist";
  int m = -1, jrep_n = 0, jrep_m = 0, jrep_r = 0;

  auto add_graph_flags = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_args.spec,
                    "builtin graph spec (path:N, cycle:N, hypercube:D, mobius:K, petersen, "
                    "product:SPEC,SPEC)");
    cmd->add_option("--edge-list", graph_args.edge_list_path, "edge list file ('n m' header)");
  };
  auto add_objective_flags = [&](CLI::App* cmd, bool with_direction) {
    cmd->add_option("--objective", obj_args.objective,
                    "wiener | harary | product | energy (default wiener)");
    cmd->add_option("--kernel-file", obj_args.kernel_file,
                    "kernel table file, lines 'i value' with exact rational values");
    if (with_direction)
      cmd->add_option("--direction", obj_args.direction, "min | max")->required();
  };

  CLI::App* gen = app.add_subcommand("gen", "print a graph as an edge list or DOT");
  add_graph_flags(gen);
  gen->add_option("--format", gen_format, "edgelist | dot (default edgelist)");
  gen->add_option("--highlight", highlight_text, "vertices to fill in DOT output");

  CLI::App* energy_cmd = app.add_subcommand("energy", "evaluate an objective on a vertex set");
  add_graph_flags(energy_cmd);
  energy_cmd->add_option("--set", set_text, "comma separated vertex labels")->required();
  add_objective_flags(energy_cmd, false);

  CLI::App* extremal = app.add_subcommand("extremal", "exhaustive optimum over all m-subsets");
  add_graph_flags(extremal);
  extremal->add_option("--m", m, "subset size")->required();
  add_objective_flags(extremal, true);
  extremal->add_option("--format", format, "text | json (default text)");

  CLI::App* ls = app.add_subcommand("local-search",
                                    "first-improvement swap walk from a start set");
  add_graph_flags(ls);
  ls->add_option("--start", start_text, "comma separated start set")->required();
  add_objective_flags(ls, true);
  ls->add_option("--format", format, "text | json (default text)");

  CLI::App* check = app.add_subcommand("check", "test a named property, prints true or false");
  add_graph_flags(check);
  check->add_option("--set", set_text, "comma separated vertex labels");
  check->add_option("--property", property,
                    "maximally-even | balanced | weakly-balanced | local-min | local-max | ddr")
      ->required();
  add_objective_flags(check, false);

  CLI::App* jrep = app.add_subcommand("jrep", "rounded-arithmetic subset of C_n");
  jrep->add_option("--n", jrep_n, "cycle size")->required();
  jrep->add_option("--m", jrep_m, "subset size")->required();
  jrep->add_option("--r", jrep_r, "offset");

  CLI::App* verify = app.add_subcommand("verify",
                                        "cross-check distance degree regularity against the "
                                        "complement energy identity on every subset");
  add_graph_flags(verify);
  verify->add_option("--kernel-file", obj_args.kernel_file, "extra kernel to include");
  verify->add_option("--format", format, "text | json (default text)");

  std::vector<const char*> argv;
  argv.push_back("vsenergy");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (gen->parsed()) {
    ParsedGraph pg = graph_args.resolve();
    if (gen_format == "edgelist") {
      if (!highlight_text.empty()) throw CliUsageError("--highlight needs --format dot");
      write_edge_list(pg.graph, out);
    } else if (gen_format == "dot") {
      VertexSet hl = parse_vertex_set(highlight_text);
      try {
        validate_vertex_set(pg.graph, hl);
      } catch (const std::invalid_argument& e) {
        throw CliUsageError(e.what());
      }
      out << emit_dot(pg.graph, hl);
    } else {
      throw CliUsageError("--format must be edgelist or dot");
    }
    return 0;
  }

  if (energy_cmd->parsed()) {
    ParsedGraph pg = graph_args.resolve();
    ObjectiveSpec f = obj_args.resolve(false);
    VertexSet a = parse_vertex_set(set_text);
    try {
      validate_vertex_set(pg.graph, a);
    } catch (const std::invalid_argument& e) {
      throw CliUsageError(e.what());
    }
    out << evaluate_objective(pg.graph.distances(), a, f).str() << "\n";
    return 0;
  }

  if (extremal->parsed()) {
    ParsedGraph pg = graph_args.resolve();
    ObjectiveSpec f = obj_args.resolve(true);
    if (m < 0 || m > pg.graph.vertex_count())
      throw CliUsageError("--m must lie in 0.." + std::to_string(pg.graph.vertex_count()));
    ExtremalReport rep =
        brute_force_extremal(pg.graph, f, m, pg.cycle_n, enumeration_cap_from_env());
    if (format == "json") {
      ordered_json j;
      j["graph"] = graph_args.label();
      j["m"] = rep.m;
      j["objective"] = f.kind_name();
      j["direction"] = f.direction == Direction::Minimize ? "min" : "max";
      j["optimum"] = rep.optimum.str();
      j["witnesses"] = rep.witnesses;
      if (pg.cycle_n) j["classes"] = rep.classes;
      out << j.dump(2) << "\n";
    } else if (format == "text") {
      out << "optimum " << rep.optimum.str() << "\n";
      for (const VertexSet& w : rep.witnesses) out << "witness " << join_spaced(w) << "\n";
      if (pg.cycle_n)
        for (const VertexSet& c : rep.classes) out << "class " << join_spaced(c) << "\n";
    } else {
      throw CliUsageError("--format must be text or json");
    }
    return 0;
  }

  if (ls->parsed()) {
    ParsedGraph pg = graph_args.resolve();
    ObjectiveSpec f = obj_args.resolve(true);
    VertexSet start = parse_vertex_set(start_text);
    try {
      validate_vertex_set(pg.graph, start);
    } catch (const std::invalid_argument& e) {
      throw CliUsageError(e.what());
    }
    LocalSearchResult res = f.direction == Direction::Minimize
                                ? descending_local_search(pg.graph, f, start)
                                : ascending_local_search(pg.graph, f, start);
    if (format == "json") {
      ordered_json j;
      j["graph"] = graph_args.label();
      j["objective"] = f.kind_name();
      j["direction"] = f.direction == Direction::Minimize ? "min" : "max";
      j["start"] = start;
      j["set"] = res.set;
      j["value"] = res.value.str();
      j["steps"] = res.steps;
      out << j.dump(2) << "\n";
    } else if (format == "text") {
      out << "set " << join_spaced(res.set) << "\n";
      out << "value " << res.value.str() << "\n";
      out << "steps " << res.steps << "\n";
    } else {
      throw CliUsageError("--format must be text or json");
    }
    return 0;
  }

  if (check->parsed()) {
    ParsedGraph pg = graph_args.resolve();
    bool result = false;
    bool needs_set = property != "ddr";
    if (!needs_set && check->count("--set") > 0)
      throw CliUsageError("--set does not apply to property ddr");
    if (needs_set && check->count("--set") == 0)
      throw CliUsageError("property " + property + " needs --set");
    VertexSet a = parse_vertex_set(set_text);
    if (needs_set) {
      try {
        validate_vertex_set(pg.graph, a);
      } catch (const std::invalid_argument& e) {
        throw CliUsageError(e.what());
      }
    }
    if (property == "maximally-even" || property == "balanced" ||
        property == "weakly-balanced") {
      if (!pg.cycle_n)
        throw CliUsageError("property " + property + " needs --graph cycle:N");
      CyclicVertexSet c(*pg.cycle_n, a);
      if (property == "maximally-even")
        result = is_maximally_even(c);
      else if (property == "balanced")
        result = is_balanced(c);
      else
        result = is_weakly_balanced(c);
    } else if (property == "local-min") {
      result = is_local_minimizer(pg.graph, a, obj_args.resolve(false));
    } else if (property == "local-max") {
      result = is_local_maximizer(pg.graph, a, obj_args.resolve(false));
    } else if (property == "ddr") {
      result = is_distance_degree_regular(pg.graph);
    } else {
      throw CliUsageError("unknown property '" + property + "'");
    }
    out << (result ? "true" : "false") << "\n";
    return 0;
  }

  if (jrep->parsed()) {
    try {
      out << join_spaced(j_representation({jrep_n, jrep_m, jrep_r}).members) << "\n";
    } catch (const std::invalid_argument& e) {
      throw CliUsageError(e.what());
    }
    return 0;
  }

  if (verify->parsed()) {
    ParsedGraph pg = graph_args.resolve();
    int reach = std::max(1, pg.graph.distances().diameter);
    std::vector<Kernel> kernels{kernel_identity(reach), kernel_reciprocal(reach)};
    if (!obj_args.kernel_file.empty()) {
      std::ifstream in(obj_args.kernel_file);
      if (!in) throw std::runtime_error("cannot open '" + obj_args.kernel_file + "'");
      kernels.push_back(parse_kernel_file(in, obj_args.kernel_file));
    }
    DdrReport rep = verify_ddr_equivalence(pg.graph, kernels);
    bool consistent = rep.ddr == rep.identity_holds;
    if (format == "json") {
      ordered_json j;
      j["graph"] = graph_args.label();
      j["ddr"] = rep.ddr;
      j["identity-holds"] = rep.identity_holds;
      if (rep.identity_counterexample) {
        j["identity-counterexample-set"] = *rep.identity_counterexample;
        j["identity-counterexample-kernel"] = rep.identity_counterexample_kernel;
        j["identity-lhs"] = rep.identity_lhs.str();
        j["identity-rhs"] = rep.identity_rhs.str();
      }
      if (rep.fragile_minimizer) {
        j["fragile-minimizer-set"] = *rep.fragile_minimizer;
        j["fragile-minimizer-kernel"] = rep.fragile_minimizer_kernel;
        j["fragile-minimizer-m"] = rep.fragile_minimizer_size;
      }
      j["consistent"] = consistent;
      out << j.dump(2) << "\n";
    } else if (format == "text") {
      out << "ddr " << (rep.ddr ? "true" : "false") << "\n";
      out << "identity-holds " << (rep.identity_holds ? "true" : "false") << "\n";
      if (rep.identity_counterexample) {
        out << "identity-counterexample-set " << join_spaced(*rep.identity_counterexample)
            << "\n";
        out << "identity-counterexample-kernel " << rep.identity_counterexample_kernel << "\n";
        out << "identity-lhs " << rep.identity_lhs.str() << "\n";
        out << "identity-rhs " << rep.identity_rhs.str() << "\n";
      }
      if (rep.fragile_minimizer) {
        out << "fragile-minimizer-set " << join_spaced(*rep.fragile_minimizer) << "\n";
        out << "fragile-minimizer-kernel " << rep.fragile_minimizer_kernel << "\n";
        out << "fragile-minimizer-m " << rep.fragile_minimizer_size << "\n";
      }
      out << "consistent " << (consistent ? "true" : "false") << "\n";
    } else {
      throw CliUsageError("--format must be text or json");
    }
    return consistent ? 0 : 1;
  }

  throw CliUsageError("no verb given");
}

}  // namespace

}  // namespace vsenergy
