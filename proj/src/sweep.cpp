#include "charsum/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "charsum/characters.hpp"
#include "charsum/charsums.hpp"
#include "charsum/verify.hpp"
#include "parallel.hpp"

namespace charsum {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Selected {
  std::uint64_t index;
  DirichletCharacter chi;
};

std::vector<Selected> select_characters(const SweepConfig& cfg, std::uint64_t q) {
  auto chars = enumerate_characters(q);
  std::vector<std::uint64_t> keep;
  for (std::uint64_t i = 0; i < chars.size(); ++i) {
    if (!cfg.primitive_only || chars[i].is_primitive()) keep.push_back(i);
  }
  if (cfg.chars_per_modulus > 0 && keep.size() > cfg.chars_per_modulus) {
    std::vector<std::uint64_t> spread;
    for (std::size_t i = 0; i < cfg.chars_per_modulus; ++i) {
      spread.push_back(keep[i * keep.size() / cfg.chars_per_modulus]);
    }
    keep = std::move(spread);
  }
  std::vector<Selected> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back({i, chars[i]});
  return out;
}

std::pair<double, double> regime_range(const SweepConfig& cfg, double q1, double q2) {
  switch (cfg.theorem) {
    case Theorem::Theorem1Small:
      return {theorem1_lower(q1, q2, 1), theorem1_threshold(q1, q2, 1)};
    case Theorem::Theorem1Large:
      return {theorem1_lower(q1, q2, 2), theorem1_threshold(q1, q2, 2)};
    case Theorem::Corollary1:
      return {std::pow(q1, 2.0 / 3.0), corollary1_threshold(q1, 1)};
    case Theorem::Theorem2:
      return {theorem2_lower(q1, q2, cfg.r), theorem2_threshold(q1, q2, cfg.r)};
  }
  throw std::logic_error("regime_range: unknown theorem");
}

RegimeBound bound_for(const SweepConfig& cfg, double T, std::uint64_t q1, std::uint64_t q2) {
  const auto a = static_cast<double>(q1);
  const auto b = static_cast<double>(q2);
  switch (cfg.theorem) {
    case Theorem::Theorem1Small: return theorem1_bound(T, a, b, cfg.eps, 1);
    case Theorem::Theorem1Large: return theorem1_bound(T, a, b, cfg.eps, 2);
    case Theorem::Corollary1: return corollary1_bound(T, a, cfg.eps);
    case Theorem::Theorem2: return theorem2_bound(T, q1, q2, cfg.r);
  }
  throw std::logic_error("bound_for: unknown theorem");
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config: " + key + " expects a boolean, got '" + v + "'");
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  unsigned long long out = 0;
  try {
    out = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty() || v.front() == '-') {
    throw std::invalid_argument("config: " + key + " expects an unsigned integer, got '" + v + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) {
    throw std::invalid_argument("config: " + key + " expects a number, got '" + v + "'");
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Theorem parse_theorem(const std::string& name) {
  if (name == "thm1v1") return Theorem::Theorem1Small;
  if (name == "thm1v2") return Theorem::Theorem1Large;
  if (name == "cor1") return Theorem::Corollary1;
  if (name == "thm2") return Theorem::Theorem2;
  throw std::invalid_argument("unknown theorem '" + name + "' (thm1v1, thm1v2, cor1, thm2)");
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Theorem1Small: return "thm1v1";
    case Theorem::Theorem1Large: return "thm1v2";
    case Theorem::Corollary1: return "cor1";
    case Theorem::Theorem2: return "thm2";
  }
  return "?";
}

void SweepConfig::validate() const {
  if (q1_min < 1 || q2_min < 1) throw std::invalid_argument("sweep: moduli must be >= 1");
  if (q1_min > q1_max || q2_min > q2_max) throw std::invalid_argument("sweep: empty modulus range");
  if (q1_max > 100'000 || q2_max > 100'000) throw std::invalid_argument("sweep: moduli above 100000");
  if (grid == GridKind::Regime && (grid_points == 0 || grid_points > 10'000)) {
    throw std::invalid_argument("sweep: grid_points must be in [1, 10000]");
  }
  if (grid == GridKind::Explicit) {
    if (T_values.size() > 10'000) throw std::invalid_argument("sweep: too many T values");
    for (double T : T_values) {
      if (!(T > 1.0) || !std::isfinite(T)) throw std::invalid_argument("sweep: T values must be > 1");
    }
  }
  if (theorem == Theorem::Theorem2 && !prime_only) {
    throw std::invalid_argument("sweep: thm2 needs prime_only = true");
  }
  if (theorem == Theorem::Theorem2 && r < 2) throw std::invalid_argument("sweep: thm2 needs r >= 2");
  if (jobs < 1) throw std::invalid_argument("sweep: jobs must be >= 1");
  if (spot_check_stride < 1) throw std::invalid_argument("sweep: spot_check_stride must be >= 1");
  if (format != "csv" && format != "json") throw std::invalid_argument("sweep: format must be csv or json");
}

std::vector<double> sweep_grid(const SweepConfig& cfg, std::uint64_t q1, std::uint64_t q2) {
  if (cfg.grid == GridKind::Explicit) {
    auto v = cfg.T_values;
    std::sort(v.begin(), v.end());
    return v;
  }
  const auto [lo, hi] = regime_range(cfg, static_cast<double>(q1), static_cast<double>(q2));
  const std::size_t n = cfg.grid_points;
  std::vector<double> out;
  if (n == 1 || !(hi > lo)) return {lo};
  const double a = std::log(lo);
  const double b = std::log(hi);
  out.push_back(lo);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out.push_back(std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1)));
  }
  out.push_back(hi);
  return out;
}

SweepResult sweep(const SweepConfig& cfg) {
  cfg.validate();

  std::map<std::uint64_t, std::vector<Selected>> by_modulus;
  auto moduli_in = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (auto q = lo; q <= hi; ++q) {
      if (cfg.prime_only && !is_prime(q)) continue;
      out.push_back(q);
    }
    return out;
  };
  const auto m1 = moduli_in(cfg.q1_min, cfg.q1_max);
  const auto m2 = moduli_in(cfg.q2_min, cfg.q2_max);
  for (auto q : m1) by_modulus.try_emplace(q, select_characters(cfg, q));
  for (auto q : m2) by_modulus.try_emplace(q, select_characters(cfg, q));

  struct PairTask {
    std::uint64_t q1, q2;
    const Selected* a;
    const Selected* b;
  };
  std::vector<PairTask> tasks;
  for (auto q1 : m1) {
    for (const auto& a : by_modulus.at(q1)) {
      for (auto q2 : m2) {
        if (q1 > q2) continue;
        if (cfg.theorem == Theorem::Corollary1 && q1 != q2) continue;
        for (const auto& b : by_modulus.at(q2)) tasks.push_back({q1, q2, &a, &b});
      }
    }
  }

  const std::size_t grid_size =
      cfg.grid == GridKind::Explicit ? cfg.T_values.size() : cfg.grid_points;
  std::vector<std::vector<SweepRecord>> slots(tasks.size());
  std::vector<std::uint64_t> skipped(tasks.size(), 0);
  std::vector<std::uint64_t> checks(tasks.size(), 0);

  detail::parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
    const auto& task = tasks[i];
    const auto grid = sweep_grid(cfg, task.q1, task.q2);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double T = grid[g];
      std::optional<RegimeBound> bound;
      try {
        bound = bound_for(cfg, T, task.q1, task.q2);
      } catch (const BelowRangeError&) {
        ++skipped[i];
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      const auto S = convolution_sum_hyperbola(task.a->chi, task.b->chi, T);
      const auto stop = std::chrono::steady_clock::now();

      const std::size_t sequence = i * grid_size + g;
      if (sequence % cfg.spot_check_stride == 0) {
        const auto naive = convolution_sum_naive(task.a->chi, task.b->chi, T);
        ++checks[i];
        if (!approx_equal(S, naive, 1e-9)) {
          throw VerificationFailure("sweep: hyperbola and naive sums disagree at q1=" +
                                    std::to_string(task.q1) + " q2=" + std::to_string(task.q2) +
                                    " T=" + fmt12(T));
        }
      }

      SweepRecord rec;
      rec.q1 = task.q1;
      rec.chi1 = task.a->index;
      rec.q2 = task.q2;
      rec.chi2 = task.b->index;
      rec.T = T;
      rec.abs_S = S.magnitude();
      rec.bound = bound->value;
      rec.ratio = rec.abs_S / rec.bound;
      rec.regime = bound->label();
      rec.ms = cfg.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
      slots[i].push_back(std::move(rec));
    }
  });

  SweepResult result;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (auto& r : slots[i]) result.records.push_back(std::move(r));
    result.skipped_below_range += skipped[i];
    result.spot_checks += checks[i];
  }
  return result;
}

double fit_constant(const std::vector<SweepRecord>& records, const RecordSelector& selector) {
  bool any = false;
  double best = 0.0;
  for (const auto& r : records) {
    if (selector && !selector(r)) continue;
    best = any ? std::max(best, r.ratio) : r.ratio;
    any = true;
  }
  if (!any) throw std::invalid_argument("fit_constant: empty selection");
  return best;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.q1) + ',' + std::to_string(r.chi1) + ',' + std::to_string(r.q2) + ',' +
           std::to_string(r.chi2) + ',' + fmt12(r.T) + ',' + fmt12(r.abs_S) + ',' + fmt12(r.bound) +
           ',' + fmt12(r.ratio) + ',' + r.regime + ',' + fmt12(r.ms) + '\n';
  }
  return out;
}

void write_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << to_csv(records);
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::vector<SweepRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("parse_csv: missing or unexpected header");
  }
  std::vector<SweepRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 10) throw std::invalid_argument("parse_csv: expected 10 fields: " + line);
    SweepRecord r;
    r.q1 = parse_uint("q1", f[0]);
    r.chi1 = parse_uint("chi1", f[1]);
    r.q2 = parse_uint("q2", f[2]);
    r.chi2 = parse_uint("chi2", f[3]);
    r.T = parse_real("T", f[4]);
    r.abs_S = parse_real("abs_S", f[5]);
    r.bound = parse_real("bound", f[6]);
    r.ratio = parse_real("ratio", f[7]);
    r.regime = f[8];
    r.ms = parse_real("ms", f[9]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SweepRecord> read_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  return parse_csv(f);
}

std::string to_json(const std::vector<SweepRecord>& records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"q1", r.q1},
                   {"chi1", r.chi1},
                   {"q2", r.q2},
                   {"chi2", r.chi2},
                   {"T", r.T},
                   {"abs_S", r.abs_S},
                   {"bound", r.bound},
                   {"ratio", r.ratio},
                   {"regime", r.regime},
                   {"ms", r.ms}});
  }
  return arr.dump(2) + "\n";
}

KeyValues parse_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    auto key = trim(line.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    kv[key].push_back(trim(line.substr(eq + 1)));
  }
  return kv;
}

SweepConfig sweep_config_from(const KeyValues& kv) {
  SweepConfig cfg;
  auto single = [&](const std::string& key) -> const std::string& {
    const auto& vals = kv.at(key);
    if (vals.size() != 1) throw std::invalid_argument("config: " + key + " given more than once");
    return vals.front();
  };
  for (const auto& [key, vals] : kv) {
    if (key == "T") {
      cfg.grid = GridKind::Explicit;
      for (const auto& v : vals) cfg.T_values.push_back(parse_real(key, v));
    } else if (key == "q1_min") {
      cfg.q1_min = parse_uint(key, single(key));
    } else if (key == "q1_max") {
      cfg.q1_max = parse_uint(key, single(key));
    } else if (key == "q2_min") {
      cfg.q2_min = parse_uint(key, single(key));
    } else if (key == "q2_max") {
      cfg.q2_max = parse_uint(key, single(key));
    } else if (key == "primitive") {
      cfg.primitive_only = parse_bool(key, single(key));
    } else if (key == "prime_only") {
      cfg.prime_only = parse_bool(key, single(key));
    } else if (key == "chars_per_modulus") {
      cfg.chars_per_modulus = parse_uint(key, single(key));
    } else if (key == "grid_points") {
      cfg.grid_points = parse_uint(key, single(key));
    } else if (key == "theorem") {
      cfg.theorem = parse_theorem(single(key));
    } else if (key == "r") {
      cfg.r = static_cast<int>(parse_uint(key, single(key)));
    } else if (key == "eps") {
      cfg.eps = parse_real(key, single(key));
    } else if (key == "jobs") {
      cfg.jobs = static_cast<unsigned>(parse_uint(key, single(key)));
    } else if (key == "timing") {
      cfg.timing = parse_bool(key, single(key));
    } else if (key == "spot_check_stride") {
      cfg.spot_check_stride = parse_uint(key, single(key));
    } else if (key == "output") {
      cfg.output = single(key);
    } else if (key == "format") {
      cfg.format = single(key);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config " + path);
  return sweep_config_from(parse_key_values(f));
}

}  // namespace charsum
