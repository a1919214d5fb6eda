#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "charsum/bounds.hpp"

namespace charsum {

// One (chi1, chi2, T) measurement.
struct SweepRecord {
  std::uint64_t q1 = 0, chi1 = 0, q2 = 0, chi2 = 0;
  double T = 0;
  double abs_S = 0;
  double bound = 0;
  double ratio = 0;  // abs_S / bound
  std::string regime;
  double ms = 0;
};

enum class GridKind {
  Explicit,  // the listed T values for every pair
  Regime,    // grid_points log-spaced values across branch 1 of the selected bound
};

struct SweepConfig {
  std::uint64_t q1_min = 3, q1_max = 3;
  std::uint64_t q2_min = 3, q2_max = 3;
  bool primitive_only = true;
  bool prime_only = false;
  // Per modulus, keep this many characters spread evenly over the
  // canonical order; 0 keeps all.
  std::size_t chars_per_modulus = 0;

  GridKind grid = GridKind::Regime;
  std::vector<double> T_values;
  std::size_t grid_points = 4;

  Theorem theorem = Theorem::Theorem1Small;
  int r = 2;
  double eps = 0.0;

  unsigned jobs = 1;
  // Wall time is only recorded on request; otherwise ms = 0 keeps the
  // output byte-deterministic.
  bool timing = false;
  // Every n-th record (in canonical order) is checked against the naive sum.
  std::size_t spot_check_stride = 100;

  std::string output;
  std::string format = "csv";

  // Throws std::invalid_argument.
  void validate() const;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::uint64_t skipped_below_range = 0;
  std::uint64_t spot_checks = 0;
};

// One record per selected (chi1, chi2, T) with q1 <= q2, ordered by
// (q1, chi1, q2, chi2, T). |S| comes from the hyperbola method; spot
// checks against the naive sum throw VerificationFailure on mismatch.
// Tuples with T below the bound's range are skipped and counted.
SweepResult sweep(const SweepConfig& cfg);

// T grid used for one modulus pair.
std::vector<double> sweep_grid(const SweepConfig& cfg, std::uint64_t q1, std::uint64_t q2);

using RecordSelector = std::function<bool(const SweepRecord&)>;
// Maximum ratio over the selected records; throws std::invalid_argument on
// an empty selection.
double fit_constant(const std::vector<SweepRecord>& records, const RecordSelector& selector = {});

inline constexpr const char* kCsvHeader = "q1,chi1,q2,chi2,T,abs_S,bound,ratio,regime,ms";

// LF line endings, 12 significant digits for reals.
std::string to_csv(const std::vector<SweepRecord>& records);
void write_csv(const std::vector<SweepRecord>& records, const std::string& path);
std::vector<SweepRecord> parse_csv(std::istream& in);
std::vector<SweepRecord> read_csv(const std::string& path);
// JSON array of objects with the CSV field names.
std::string to_json(const std::vector<SweepRecord>& records);

// Flat key=value text; '#' starts a comment, repeated keys form lists.
using KeyValues = std::map<std::string, std::vector<std::string>>;
KeyValues parse_key_values(std::istream& in);
SweepConfig sweep_config_from(const KeyValues& kv);
SweepConfig load_sweep_config(const std::string& path);

Theorem parse_theorem(const std::string& name);
std::string theorem_name(Theorem t);

}  // namespace charsum
