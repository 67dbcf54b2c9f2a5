#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "anyonwalk/distribution.hpp"
#include "anyonwalk/kauffman.hpp"
#include "anyonwalk/walk_abelian.hpp"
#include "anyonwalk/walk_nonabelian.hpp"

namespace anyonwalk {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { AbelianVariance, Su2kDist, Su2kSweep, DsnDist, Kauffman, Baseline };
enum class OutputFormat { Csv, Json };
enum class BaselineKind { Quantum, Classical };

struct RunConfig {
  Command command = Command::Su2kDist;

  // abelian variance
  std::vector<double> phi_grid;
  std::vector<int> t_grid;
  bool analytic = false;
  int spin = 0;  // initial die basis state 0..3

  // walks
  int k = 2;
  std::vector<int> levels;
  int t = 1;
  int n = 0;  // 0: minimal 2t + 2
  int N = 5;
  Engine engine = Engine::Auto;
  std::string coin = "H";
  int initial = 0;
  BaselineKind baseline = BaselineKind::Quantum;

  // kauffman
  int strands = 2;
  std::string word;
  Closure closure = Closure::Plat;
  bool exact = false;
  std::optional<int> level;

  unsigned threads = 0;
  OutputFormat format = OutputFormat::Csv;

  /// Throws usage errors with a message naming the offending option.
  void validate() const;
  nlohmann::json to_json() const;
};

struct PolynomialResult {
  int strands = 2;
  std::string word;
  std::string closure;                       // "plat" or "markov"
  std::optional<std::string> exact;          // Laurent polynomial in A
  std::optional<std::complex<double>> value; // evaluated at the model's A

  bool operator==(const PolynomialResult&) const = default;
};

using Payload = std::variant<Distribution, VarianceSurface, std::vector<SweepRow>, PolynomialResult>;

struct EnvelopeMeta {
  std::string version = kToolVersion;
  std::string engine;
  nlohmann::json config;
  double wall_seconds = 0.0;

  bool operator==(const EnvelopeMeta&) const = default;
};

struct ResultEnvelope {
  Payload payload;
  EnvelopeMeta meta;

  bool operator==(const ResultEnvelope&) const = default;
};

/// Runs the configured computation.
ResultEnvelope dispatch(const RunConfig& config);

/// CSV carries the payload only, under one header row; JSON carries the
/// payload and the metadata.
std::string serialize(const ResultEnvelope& env, OutputFormat format);
void serialize(const ResultEnvelope& env, OutputFormat format, std::ostream& out);

/// Inverse of serialize. CSV input yields an envelope with default metadata
/// (and distribution metadata left empty).
ResultEnvelope parse_envelope(const std::string& text, OutputFormat format);

/// Decimal with 17 significant digits, which round-trips any double.
std::string format_real(double v);

/// Comma-separated integers or inclusive ranges "a..b".
std::vector<int> parse_int_grid(const std::string& text);
/// Comma-separated reals or "a:b:count" inclusive linspace. Each real may be
/// written with a pi factor: "pi", "3pi/4", "0.5pi".
std::vector<double> parse_real_grid(const std::string& text);

/// CSV triplets "generator,row,col,re,im" of every braid generator b_i
/// (1 <= i < n) in the fusion basis of n anyons.
void write_generator_triplets(std::ostream& out, const AnyonModel& model, int n);

}  // namespace anyonwalk
