#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ipseg/cycles.hpp"
#include "ipseg/intersection.hpp"
#include "ipseg/optimize.hpp"
#include "ipseg/recognizer.hpp"
#include "ipseg/render.hpp"

namespace ipseg::cli {

namespace {

// A failure tied to an input; reported as "<where>: <what>" with exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Model load_model(const std::string& path) {
  const std::string text = read_input(path);
  Model model;
  try {
    model = parse_model(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  }
  if (const auto v = validate(model); !v.empty())
    throw InputError(path + ": segment '" + v.front().segment_id + "' violates " + v.front().rule);
  return model;
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_input(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

// The "# cycle a,b,c" comment emitted by the cycle generators.
std::vector<std::string> cycle_comment(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  const std::string tag = "# cycle ";
  while (std::getline(in, line))
    if (line.rfind(tag, 0) == 0) return CLI::detail::split(line.substr(tag.size()), ',');
  return {};
}

std::string cycle_model_text(const CycleModel& c) {
  std::string order;
  for (const auto& id : c.order) order += (order.empty() ? "" : ",") + id;
  return "# cycle " + order + "\n" + serialize_model(c.model);
}

std::string arcs_text(const ArcDecomposition& d) {
  std::ostringstream out;
  out << "arcs " << d.arcs.size() << '\n';
  for (const auto& arc : d.arcs) {
    if (arc.kind == ArcKind::Interval)
      out << "interval L" << line_number(*arc.line);
    else
      out << "permutation";
    for (const auto& m : arc.members) out << ' ' << m;
    out << '\n';
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-line interval/permutation segment models: generation, intersection graphs, "
               "clique and independent set, arc analysis and brute-force recognition"};
  app.name("ipseg");
  app.require_subcommand(1);

  std::string output;
  std::string input;
  std::function<std::string()> action;

  auto with_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output, "Write to this file instead of standard output");
    return cmd;
  };

  // gen ----------------------------------------------------------------------
  auto* gen = with_output(app.add_subcommand("gen", "Emit a generated model or graph"));
  gen->require_subcommand(1);
  gen->fallthrough();
  std::size_t gen_n = 0;
  auto* g_star = gen->add_subcommand("cycle-star", "Single-line model of C_n");
  g_star->add_option("n", gen_n, "Cycle length (>= 4)")->required();
  g_star->callback([&] { action = [&] { return cycle_model_text(canonical_star_cycle(gen_n)); }; });
  auto* g_two = gen->add_subcommand("cycle-two-arc", "Model of C_n with an interval arc per line");
  g_two->add_option("n", gen_n, "Cycle length (>= 4)")->required();
  g_two->callback([&] { action = [&] { return cycle_model_text(canonical_two_arc_cycle(gen_n)); }; });
  auto* g_c4 = gen->add_subcommand("perm-c4", "C4 from permutation segments only");
  g_c4->callback([&] { action = [&] { return cycle_model_text(permutation_c4()); }; });
  auto* g_gn = gen->add_subcommand("gn", "Graph G_n: C_n with a pendant path of length 2 per vertex");
  g_gn->add_option("n", gen_n, "Cycle length (>= 3)")->required();
  g_gn->callback([&] { action = [&] { return serialize_graph(gn_graph(gen_n)); }; });
  auto* g_g7 = gen->add_subcommand("g7-model", "A model whose intersection graph is G_7");
  g_g7->callback([&] { action = [&] { return serialize_model(g7_model()); }; });
  auto* g_rand = gen->add_subcommand("random", "Pseudo-random model");
  double fraction = 0.5;
  std::int64_t range = 0;
  std::uint64_t seed = 0;
  g_rand->add_option("n", gen_n, "Segment count")->required();
  g_rand->add_option("perm_fraction", fraction, "Share of permutation segments")->required();
  g_rand->add_option("coord_range", range, "Coordinates are drawn from 1..coord_range")->required();
  g_rand->add_option("seed", seed, "Generator seed")->required();
  g_rand->callback([&] {
    action = [&] { return serialize_model(random_model(gen_n, fraction, range, seed)); };
  });

  // model commands -------------------------------------------------------------
  auto model_cmd = [&](const char* name, const char* help, auto fn) {
    auto* cmd = with_output(app.add_subcommand(name, help));
    cmd->add_option("model", input, "Model file ('-' for standard input)")->required();
    cmd->callback([&, fn] { action = [&, fn] { return fn(load_model(input)); }; });
    return cmd;
  };
  model_cmd("graph", "Print the intersection graph", [](const Model& m) {
    return serialize_graph(build_graph(m));
  });
  model_cmd("clique", "Maximum clique of the model's graph", [](const Model& m) {
    return serialize_result(max_clique(m));
  });
  model_cmd("mis", "Maximum independent set of the model's graph", [](const Model& m) {
    return serialize_result(max_is(m));
  });
  model_cmd("normalize", "Remove shared endpoints and compact coordinates to ranks",
            [](const Model& m) { return serialize_model(normalize(m)); });
  model_cmd("render", "Draw the model as SVG", [](const Model& m) { return render_svg(m); });

  auto* arcs = with_output(app.add_subcommand("arcs", "Arc decomposition of a cycle model"));
  std::vector<std::string> cycle;
  arcs->add_option("model", input, "Model file")->required();
  arcs->add_option("--cycle", cycle, "Cycle order as id,id,... (defaults to the '# cycle' comment)")
      ->delimiter(',');
  arcs->callback([&] {
    action = [&] {
      const std::string text = read_input(input);
      const Model m = load_model(input);
      const auto order = cycle.empty() ? cycle_comment(text) : cycle;
      if (order.empty()) throw InputError(input + ": no --cycle given and no '# cycle' comment");
      return arcs_text(arc_decomposition(m, order));
    };
  });

  // graph commands -------------------------------------------------------------
  auto* rec = with_output(app.add_subcommand("recognize", "Search all small models for one of a graph"));
  bool star = false;
  std::size_t max_n = kDefaultEnumBound;
  rec->add_option("graph", input, "Graph file")->required();
  rec->add_flag("--star", star, "Only single-line interval models");
  rec->add_option("--max-n", max_n, "Enumeration bound on vertex count");
  rec->callback([&] {
    action = [&] {
      const Graph g = load_graph(input);
      const auto witness = is_ip_seg(g, star, max_n);
      std::ostringstream text;
      text << "# class " << (star ? "IP-SEG*" : "IP-SEG") << '\n'
           << "# vertices " << g.vertices.size() << '\n';
      if (!witness) {
        text << "# result none\n";
        return text.str();
      }
      text << "# models_visited " << witness->models_visited << '\n'
           << "# result found\n"
           << serialize_model(witness->model);
      return text.str();
    };
  });

  auto* oracle = with_output(app.add_subcommand("oracle", "Exhaustive clique / independent set"));
  std::string which;
  oracle->add_option("problem", which, "clique or mis")
      ->required()
      ->check(CLI::IsMember({"clique", "mis"}));
  oracle->add_option("graph", input, "Graph file")->required();
  oracle->callback([&] {
    action = [&] {
      const Graph g = load_graph(input);
      return serialize_result(which == "clique" ? brute_clique(g) : brute_mis(g));
    };
  });

  auto* lemmas = with_output(app.add_subcommand(
      "lemmas", "Enumerate all models of chordless cycles and check their arc structure"));
  std::size_t lemma_n = 0;
  lemmas->add_option("n", lemma_n, "Cycle length")->required();
  lemmas->add_flag("--star", star, "Only single-line interval models");
  lemmas->callback([&] {
    action = [&] { return format_report(verify_cycle_arc_lemmas(lemma_n, star)); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string text = action();
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw InputError(output + ": cannot open for writing");
      file << text;
    }
  } catch (const std::exception& e) {
    err << "ipseg: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ipseg::cli
