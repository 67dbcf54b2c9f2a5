// Command-line front end: parses arguments into a RunConfig, runs it and
// writes the serialized result.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "anyonwalk/cli_io.hpp"
#include "anyonwalk/errors.hpp"

using namespace anyonwalk;

namespace {

struct Options {
  RunConfig config;
  std::string phi_text;
  std::string t_text;
  std::string k_text;
  std::string out_format = "csv";
  std::string output_path;
  std::string dump_path;
  std::string engine = "auto";
  std::string closure = "plat";
  std::string baseline = "quantum";
  bool emit_distances = false;
  int kauffman_level = 0;
};

void add_walk_options(CLI::App* cmd, Options& o, bool with_engine) {
  cmd->add_option("--t", o.config.t, "Number of walk steps")->required();
  cmd->add_option("--n", o.config.n, "Number of anyons (default 2t+2)");
  cmd->add_option("--coin", o.config.coin, "Coin operator")->check(CLI::IsMember({"H", "U"}));
  cmd->add_option("--initial", o.config.initial, "Initial coin basis state")->check(CLI::IsMember({0, 1}));
  if (with_engine)
    cmd->add_option("--engine", o.engine, "Computation engine")->check(CLI::IsMember({"auto", "dense", "pathsum"}));
}

Engine to_engine(const std::string& name) {
  if (name == "dense") return Engine::Dense;
  if (name == "pathsum") return Engine::Pathsum;
  return Engine::Auto;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum walks of Abelian and non-Abelian anyons"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.config.threads, "Worker threads (default: ANYONWALK_THREADS or all cores)");
  app.add_option("--out", o.out_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", o.output_path, "Output file (default: standard output)");
  app.set_version_flag("--version", kToolVersion);

  auto* abelian = app.add_subcommand("abelian", "Abelian anyon walk with a four-state die");
  abelian->require_subcommand(1);
  auto* variance = abelian->add_subcommand("variance", "Variance surface v(t, phi)");
  variance->add_option("--phi", o.phi_text, "Angle or grid: 0.3, pi/4, 0:pi:9, comma lists")->required();
  variance->add_option("--t", o.t_text, "Step count or grid: 100, 50..100, comma lists")->required();
  variance->add_flag("--analytic", o.config.analytic, "Add the leading-order analytic sheet");
  variance->add_option("--spin", o.config.spin, "Initial die basis state 0..3")->check(CLI::Range(0, 3));

  auto* su2k = app.add_subcommand("su2k", "SU(2)_k anyon walk");
  su2k->require_subcommand(1);
  auto* dist = su2k->add_subcommand("dist", "Position distribution");
  dist->add_option("--k", o.config.k, "Level k >= 2")->required();
  add_walk_options(dist, o, true);
  dist->add_option("--dump-generators", o.dump_path, "Write braid generator triplets to this CSV file");
  auto* sweep = su2k->add_subcommand("sweep", "Distances to the quantum and classical walks over k");
  sweep->add_option("--k", o.k_text, "Levels: 2..100, 40,60,80")->required();
  add_walk_options(sweep, o, true);
  sweep->add_flag("--emit-distances", o.emit_distances, "Emit k, d_q, d_c rows");

  auto* dsn = app.add_subcommand("dsn", "D(S_N) quantum-double anyon walk");
  dsn->require_subcommand(1);
  auto* dsn_dist = dsn->add_subcommand("dist", "Exact position distribution");
  dsn_dist->add_option("--N", o.config.N, "Symmetric group order N >= 5")->required();
  dsn_dist->add_option("--t", o.config.t, "Number of walk steps")->required();
  dsn_dist->add_option("--coin", o.config.coin, "Coin operator")->check(CLI::IsMember({"H", "U"}))->default_str("U");

  auto* kauffman = app.add_subcommand("kauffman", "Kauffman bracket of a closed braid");
  kauffman->add_option("--n", o.config.strands, "Strand count")->required();
  kauffman->add_option("--word", o.config.word, "Signed generator indices, \"1 -2 1\"")->required();
  kauffman->add_option("--closure", o.closure, "Closure")->check(CLI::IsMember({"plat", "markov"}));
  auto* level_opt = kauffman->add_option("--k", o.kauffman_level, "Evaluate at the SU(2)_k parameter");
  auto* exact_opt = kauffman->add_flag("--exact", o.config.exact, "Exact Laurent polynomial in A");
  level_opt->excludes(exact_opt);

  auto* baseline = app.add_subcommand("baseline", "Standard quantum or classical walk");
  baseline->add_option("--kind", o.baseline, "Baseline walk")->check(CLI::IsMember({"quantum", "classical"}));
  add_walk_options(baseline, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(ErrorKind::Usage);
  }

  try {
    RunConfig& c = o.config;
    c.format = o.out_format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    c.engine = to_engine(o.engine);
    if (*variance) {
      c.command = Command::AbelianVariance;
      c.phi_grid = parse_real_grid(o.phi_text);
      c.t_grid = parse_int_grid(o.t_text);
    } else if (*dist) {
      c.command = Command::Su2kDist;
    } else if (*sweep) {
      c.command = Command::Su2kSweep;
      if (!o.emit_distances) throw usage_error("su2k sweep emits distance rows only; pass --emit-distances");
      c.levels = parse_int_grid(o.k_text);
      if (c.engine == Engine::Auto) c.engine = Engine::Dense;
    } else if (*dsn_dist) {
      c.command = Command::DsnDist;
      if (dsn_dist->count("--coin") == 0) c.coin = "U";
    } else if (*kauffman) {
      c.command = Command::Kauffman;
      c.closure = o.closure == "markov" ? Closure::Markov : Closure::Plat;
      if (*level_opt) c.level = o.kauffman_level;
    } else if (*baseline) {
      c.command = Command::Baseline;
      c.baseline = o.baseline == "classical" ? BaselineKind::Classical : BaselineKind::Quantum;
    }

    if ((c.command == Command::Su2kDist || c.command == Command::Su2kSweep)) {
      const int n = c.n == 0 ? 2 * c.t + 2 : c.n;
      if (n % 4 != 2)
        std::cerr << "warning: n = " << n << " is not twice an odd number; the vacuum pairs are not symmetric about s0\n";
    }

    const ResultEnvelope env = dispatch(c);

    if (!o.dump_path.empty()) {
      std::ofstream dump(o.dump_path);
      if (!dump) throw domain_error("unwritable-sink", "cannot open " + o.dump_path);
      write_generator_triplets(dump, build_su2k(c.k), c.n == 0 ? 2 * c.t + 2 : c.n);
    }

    if (o.output_path.empty()) {
      serialize(env, c.format, std::cout);
    } else {
      std::ofstream out(o.output_path);
      if (!out) throw domain_error("unwritable-sink", "cannot open " + o.output_path);
      serialize(env, c.format, out);
    }
  } catch (const AnyonWalkError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(ErrorKind::Numeric);
  }
  return EXIT_SUCCESS;
}
