#include "anyonwalk/cli_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/fusion_braid.hpp"
#include "anyonwalk/quantum_double.hpp"

namespace anyonwalk {

namespace {

using nlohmann::json;

const char* command_name(Command c) {
  switch (c) {
    case Command::AbelianVariance: return "abelian variance";
    case Command::Su2kDist: return "su2k dist";
    case Command::Su2kSweep: return "su2k sweep";
    case Command::DsnDist: return "dsn dist";
    case Command::Kauffman: return "kauffman";
    case Command::Baseline: return "baseline";
  }
  return "";
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Dense: return "dense";
    case Engine::Pathsum: return "pathsum";
  }
  return "";
}

const char* closure_name(Closure c) { return c == Closure::Plat ? "plat" : "markov"; }

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw usage_error("not a number: '" + text + "'");
  }
  if (used != text.size()) throw usage_error("not a number: '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw usage_error("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw usage_error("not an integer: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

double parse_pi_real(const std::string& text) {
  static const std::regex pattern(R"(^([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)(pi)?(?:/(\d+\.?\d*))?$)");
  std::smatch m;
  if (text.empty() || !std::regex_match(text, m, pattern)) throw usage_error("not a number: '" + text + "'");
  const std::string coeff = m[1].str();
  double v = 1.0;
  if (coeff == "-")
    v = -1.0;
  else if (!coeff.empty() && coeff != "+")
    v = parse_real(coeff);
  else if (!m[2].matched)
    throw usage_error("not a number: '" + text + "'");
  if (m[2].matched) v *= std::numbers::pi;
  if (m[3].matched) v /= parse_real(m[3].str());
  return v;
}

json distribution_meta_json(const DistributionMeta& m) {
  return json{{"model", m.model}, {"t", m.t}, {"n", m.n}, {"s0", m.s0}, {"initial", m.initial}};
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      out += '"';
      for (char c : f) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    } else {
      out += f;
    }
  }
  return out + "\n";
}

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::vector<std::vector<double>> grid_from_json(const json& j) {
  return j.get<std::vector<std::vector<double>>>();
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots));
    const int hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw usage_error("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw usage_error("empty integer grid");
  return out;
}

std::vector<double> parse_real_grid(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(parse_pi_real(item));
    } else if (parts.size() == 3) {
      const double lo = parse_pi_real(parts[0]);
      const double hi = parse_pi_real(parts[1]);
      const int count = parse_int(parts[2]);
      if (count < 1) throw usage_error("linspace needs at least one point: '" + item + "'");
      for (int j = 0; j < count; ++j) out.push_back(count == 1 ? lo : lo + (hi - lo) * j / (count - 1));
    } else {
      throw usage_error("grid items are values or start:stop:count, got '" + item + "'");
    }
  }
  if (out.empty()) throw usage_error("empty real grid");
  return out;
}

void RunConfig::validate() const {
  if (format != OutputFormat::Csv && format != OutputFormat::Json) throw usage_error("unknown output format");
  switch (command) {
    case Command::AbelianVariance:
      if (phi_grid.empty() || t_grid.empty()) throw usage_error("--phi and --t are required");
      for (int v : t_grid)
        if (v < 0) throw usage_error("--t values must be non-negative");
      if (spin < 0 || spin > 3) throw usage_error("--spin must be in 0..3");
      break;
    case Command::Su2kDist:
    case Command::Su2kSweep:
      if (t < 0) throw usage_error("--t must be non-negative");
      if (command == Command::Su2kSweep && levels.empty()) throw usage_error("--k needs at least one level");
      if (n != 0 && n < 2 * t + 2) throw usage_error("--n must be at least 2t+2 = " + std::to_string(2 * t + 2));
      if (coin != "H" && coin != "U") throw usage_error("--coin must be H or U");
      if (initial != 0 && initial != 1) throw usage_error("--initial must be 0 or 1");
      break;
    case Command::DsnDist:
      if (t < 0) throw usage_error("--t must be non-negative");
      if (coin != "H" && coin != "U") throw usage_error("--coin must be H or U");
      break;
    case Command::Kauffman:
      if (strands < 1) throw usage_error("--n must be positive");
      if (!exact && !level) throw usage_error("kauffman needs --exact or --k <level>");
      break;
    case Command::Baseline:
      if (t < 0) throw usage_error("--t must be non-negative");
      if (coin != "H" && coin != "U") throw usage_error("--coin must be H or U");
      break;
  }
}

json RunConfig::to_json() const {
  json j{{"command", command_name(command)}};
  switch (command) {
    case Command::AbelianVariance:
      j["phi"] = phi_grid;
      j["t"] = t_grid;
      j["analytic"] = analytic;
      j["spin"] = spin;
      break;
    case Command::Su2kDist:
      j.update(json{{"k", k}, {"t", t}, {"n", n}, {"engine", engine_name(engine)}, {"coin", coin}, {"initial", initial}});
      break;
    case Command::Su2kSweep:
      j.update(json{{"k", levels}, {"t", t}, {"n", n}, {"engine", engine_name(engine)}, {"coin", coin}, {"initial", initial}});
      break;
    case Command::DsnDist:
      j.update(json{{"N", N}, {"t", t}, {"coin", coin}});
      break;
    case Command::Kauffman:
      j.update(json{{"n", strands}, {"word", word}, {"closure", closure_name(closure)}, {"exact", exact}});
      j["k"] = level ? json(*level) : json(nullptr);
      break;
    case Command::Baseline:
      j.update(json{{"kind", baseline == BaselineKind::Quantum ? "quantum" : "classical"}, {"t", t}, {"coin", coin}, {"initial", initial}});
      break;
  }
  return j;
}

ResultEnvelope dispatch(const RunConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  ResultEnvelope env;
  env.meta.config = config.to_json();
  switch (config.command) {
    case Command::AbelianVariance: {
      Spinor spin = Spinor::Zero();
      spin(config.spin) = 1.0;
      env.payload = variance_surface(config.phi_grid, config.t_grid, spin, config.analytic, config.threads);
      env.meta.engine = config.analytic ? "simulation+analytic" : "simulation";
      break;
    }
    case Command::Su2kDist: {
      const AnyonModel model = build_su2k(config.k);
      const WalkGeometry geom = WalkGeometry::for_steps(config.t, config.n);
      Distribution d = su2k_distribution(model, geom, config.t, coin_by_name(config.coin, config.initial),
                                         config.engine, config.threads);
      env.meta.engine = d.meta.engine;
      env.payload = std::move(d);
      break;
    }
    case Command::Su2kSweep: {
      const Engine engine = config.engine == Engine::Auto ? Engine::Dense : config.engine;
      env.payload = sweep_levels(config.levels, config.t, config.n, coin_by_name(config.coin, config.initial), engine,
                                 config.threads);
      env.meta.engine = engine_name(engine);
      break;
    }
    case Command::DsnDist: {
      Distribution d = double_walk_distribution(config.N, config.t, coin_by_name(config.coin, 0), config.threads);
      env.meta.engine = d.meta.engine;
      env.payload = std::move(d);
      break;
    }
    case Command::Kauffman: {
      const BraidWord w = BraidWord::parse(config.strands, config.word);
      PolynomialResult r{config.strands, w.to_string(), closure_name(config.closure), std::nullopt, std::nullopt};
      if (config.exact) r.exact = bracket(w, config.closure).to_string();
      if (config.level) r.value = bracket(w, config.closure, build_su2k(*config.level).kauffman_a());
      env.payload = std::move(r);
      env.meta.engine = "temperley-lieb";
      break;
    }
    case Command::Baseline: {
      Distribution d = config.baseline == BaselineKind::Quantum
                           ? baseline_quantum(config.t, coin_by_name(config.coin, config.initial))
                           : baseline_classical(config.t);
      env.meta.engine = d.meta.engine;
      env.payload = std::move(d);
      break;
    }
  }
  env.meta.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return env;
}

void serialize(const ResultEnvelope& env, OutputFormat format, std::ostream& out) {
  out << serialize(env, format);
  if (!out) throw domain_error("unwritable-sink", "failed to write output");
}

std::string serialize(const ResultEnvelope& env, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out;
    if (const auto* d = std::get_if<Distribution>(&env.payload)) {
      const bool exact = !d->exact.empty();
      out += exact ? "s,P,P_exact\n" : "s,P\n";
      for (std::size_t i = 0; i < d->probs.size(); ++i) {
        std::vector<std::string> row{std::to_string(d->positions[i]), format_real(d->probs[i])};
        if (exact) row.push_back(d->exact[i]);
        out += csv_line(row);
      }
    } else if (const auto* s = std::get_if<VarianceSurface>(&env.payload)) {
      out += "t,phi,v_sim,v_analytic\n";
      for (std::size_t ti = 0; ti < s->t_grid.size(); ++ti)
        for (std::size_t pi = 0; pi < s->phi_grid.size(); ++pi)
          out += csv_line({std::to_string(s->t_grid[ti]), format_real(s->phi_grid[pi]),
                           format_real(s->simulated[ti][pi]),
                           s->analytic ? format_real((*s->analytic)[ti][pi]) : std::string()});
    } else if (const auto* rows = std::get_if<std::vector<SweepRow>>(&env.payload)) {
      out += "k,d_q,d_c\n";
      for (const SweepRow& r : *rows) out += csv_line({std::to_string(r.k), format_real(r.d_q), format_real(r.d_c)});
    } else {
      const auto& p = std::get<PolynomialResult>(env.payload);
      out += "n,word,closure,re,im,exact\n";
      out += csv_line({std::to_string(p.strands), p.word, p.closure, p.value ? format_real(p.value->real()) : "",
                       p.value ? format_real(p.value->imag()) : "", p.exact.value_or("")});
    }
    return out;
  }

  json j;
  json meta{{"tool_version", env.meta.version},
            {"engine", env.meta.engine},
            {"config", env.meta.config},
            {"wall_seconds", env.meta.wall_seconds}};
  if (const auto* d = std::get_if<Distribution>(&env.payload)) {
    j["kind"] = "distribution";
    j["positions"] = d->positions;
    j["probs"] = d->probs;
    if (!d->exact.empty()) j["exact"] = d->exact;
    meta.update(distribution_meta_json(d->meta));
    meta["engine"] = d->meta.engine;
  } else if (const auto* s = std::get_if<VarianceSurface>(&env.payload)) {
    j["kind"] = "surface";
    j["phi"] = s->phi_grid;
    j["t"] = s->t_grid;
    j["v_sim"] = s->simulated;
    j["v_analytic"] = s->analytic ? json(*s->analytic) : json(nullptr);
  } else if (const auto* rows = std::get_if<std::vector<SweepRow>>(&env.payload)) {
    j["kind"] = "sweep";
    j["rows"] = json::array();
    for (const SweepRow& r : *rows) j["rows"].push_back(json{{"k", r.k}, {"d_q", r.d_q}, {"d_c", r.d_c}});
  } else {
    const auto& p = std::get<PolynomialResult>(env.payload);
    j["kind"] = "polynomial";
    j["n"] = p.strands;
    j["word"] = p.word;
    j["closure"] = p.closure;
    j["exact"] = p.exact ? json(*p.exact) : json(nullptr);
    j["value"] = p.value ? json::array({p.value->real(), p.value->imag()}) : json(nullptr);
  }
  j["meta"] = meta;
  return j.dump(2) + "\n";
}

ResultEnvelope parse_envelope(const std::string& text, OutputFormat format) {
  ResultEnvelope env;
  if (format == OutputFormat::Csv) {
    std::istringstream in(text);
    std::string header, line;
    if (!std::getline(in, header)) throw usage_error("empty CSV input");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line))
      if (!line.empty()) rows.push_back(csv_fields(line));
    if (header == "s,P" || header == "s,P,P_exact") {
      Distribution d;
      for (const auto& r : rows) {
        d.positions.push_back(parse_int(r.at(0)));
        d.probs.push_back(parse_real(r.at(1)));
        if (header != "s,P") d.exact.push_back(r.at(2));
      }
      env.payload = std::move(d);
    } else if (header == "t,phi,v_sim,v_analytic") {
      VarianceSurface s;
      for (const auto& r : rows) {
        const int t = parse_int(r.at(0));
        const double phi = parse_real(r.at(1));
        if (s.t_grid.empty() || s.t_grid.back() != t) {
          s.t_grid.push_back(t);
          s.simulated.emplace_back();
          if (!r.at(3).empty()) {
            if (!s.analytic) s.analytic.emplace();
            s.analytic->emplace_back();
          }
        }
        if (s.t_grid.size() == 1) s.phi_grid.push_back(phi);
        s.simulated.back().push_back(parse_real(r.at(2)));
        if (!r.at(3).empty()) s.analytic->back().push_back(parse_real(r.at(3)));
      }
      env.payload = std::move(s);
    } else if (header == "k,d_q,d_c") {
      std::vector<SweepRow> out;
      for (const auto& r : rows) out.push_back({parse_int(r.at(0)), parse_real(r.at(1)), parse_real(r.at(2))});
      env.payload = std::move(out);
    } else if (header == "n,word,closure,re,im,exact") {
      const auto& r = rows.at(0);
      PolynomialResult p{parse_int(r.at(0)), r.at(1), r.at(2), std::nullopt, std::nullopt};
      if (!r.at(3).empty()) p.value = std::complex<double>(parse_real(r.at(3)), parse_real(r.at(4)));
      if (!r.at(5).empty()) p.exact = r.at(5);
      env.payload = std::move(p);
    } else {
      throw usage_error("unrecognised CSV header '" + header + "'");
    }
    return env;
  }

  const json j = json::parse(text);
  const json& meta = j.at("meta");
  env.meta.version = meta.at("tool_version").get<std::string>();
  env.meta.engine = meta.at("engine").get<std::string>();
  env.meta.config = meta.at("config");
  env.meta.wall_seconds = meta.at("wall_seconds").get<double>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "distribution") {
    Distribution d;
    d.positions = j.at("positions").get<std::vector<int>>();
    d.probs = j.at("probs").get<std::vector<double>>();
    if (j.contains("exact")) d.exact = j.at("exact").get<std::vector<std::string>>();
    d.meta = DistributionMeta{meta.at("engine").get<std::string>(), meta.at("model").get<std::string>(),
                              meta.at("t").get<int>(),           meta.at("n").get<int>(),
                              meta.at("s0").get<int>(),          meta.at("initial").get<std::string>()};
    env.payload = std::move(d);
  } else if (kind == "surface") {
    VarianceSurface s;
    s.phi_grid = j.at("phi").get<std::vector<double>>();
    s.t_grid = j.at("t").get<std::vector<int>>();
    s.simulated = grid_from_json(j.at("v_sim"));
    if (!j.at("v_analytic").is_null()) s.analytic = grid_from_json(j.at("v_analytic"));
    env.payload = std::move(s);
  } else if (kind == "sweep") {
    std::vector<SweepRow> rows;
    for (const auto& r : j.at("rows")) rows.push_back({r.at("k").get<int>(), r.at("d_q").get<double>(), r.at("d_c").get<double>()});
    env.payload = std::move(rows);
  } else if (kind == "polynomial") {
    PolynomialResult p{j.at("n").get<int>(), j.at("word").get<std::string>(), j.at("closure").get<std::string>(),
                       std::nullopt, std::nullopt};
    if (!j.at("exact").is_null()) p.exact = j.at("exact").get<std::string>();
    if (!j.at("value").is_null()) p.value = std::complex<double>(j.at("value").at(0).get<double>(), j.at("value").at(1).get<double>());
    env.payload = std::move(p);
  } else {
    throw usage_error("unknown payload kind '" + kind + "'");
  }
  return env;
}

void write_generator_triplets(std::ostream& out, const AnyonModel& model, int n) {
  const FusionSpace space = enumerate_fusion_basis(model, n);
  out << "generator,row,col,re,im\n";
  for (int i = 1; i < n; ++i) {
    const SparseMatrix m = braid_generator(space, i).matrix;
    for (Eigen::Index r = 0; r < m.outerSize(); ++r)
      for (SparseMatrix::InnerIterator it(m, r); it; ++it)
        out << i << ',' << it.row() << ',' << it.col() << ',' << format_real(it.value().real()) << ','
            << format_real(it.value().imag()) << '\n';
  }
  if (!out) throw domain_error("unwritable-sink", "failed to write generator triplets");
}

}  // namespace anyonwalk
