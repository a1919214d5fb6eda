#include "charsum/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "charsum/bounds.hpp"
#include "charsum/characters.hpp"
#include "charsum/charsums.hpp"
#include "charsum/geometry.hpp"
#include "charsum/sweep.hpp"
#include "charsum/verify.hpp"

namespace charsum {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Complex value with parts below the rounding noise shown as 0.
std::string format_complex(std::complex<double> z) {
  const double noise = 1e-9 * std::max(1.0, std::abs(z));
  double re = std::abs(z.real()) < noise ? 0.0 : z.real();
  double im = std::abs(z.imag()) < noise ? 0.0 : z.imag();
  return fmt12(re) + (im < 0 ? " - " : " + ") + fmt12(std::abs(im)) + "i";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

struct CharRef {
  std::uint64_t q = 1;
  std::uint64_t index = 0;
};

void add_char_options(CLI::App* cmd, CharRef& a, CharRef& b) {
  cmd->add_option("--q1", a.q, "modulus of chi1")->required();
  cmd->add_option("--chi1", a.index, "canonical index of chi1")->required();
  cmd->add_option("--q2", b.q, "modulus of chi2")->required();
  cmd->add_option("--chi2", b.index, "canonical index of chi2")->required();
}

int cmd_chars(std::uint64_t q, bool primitive_only, std::ostream& out) {
  if (q < 1) throw std::invalid_argument("--q must be >= 1");
  const auto chars = enumerate_characters(q);
  out << "# q=" << q << " phi=" << chars.size() << "\n";
  out << "index,order,conductor,primitive,exponents\n";
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& chi = chars[i];
    const auto cond = chi.conductor();
    if (primitive_only && cond != q) continue;
    out << i << ',' << chi.order() << ',' << cond << ',' << (cond == q ? "yes" : "no") << ',';
    for (std::size_t k = 0; k < chi.exponents().size(); ++k) {
      out << (k ? " " : "") << chi.exponents()[k];
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_sum(const CharRef& a, const CharRef& b, double T, const std::string& algo,
            std::ostream& out) {
  const auto chi1 = character_at(a.q, a.index);
  const auto chi2 = character_at(b.q, b.index);
  if (algo == "naive" || algo == "hyperbola") {
    const auto s = algo == "naive" ? convolution_sum_naive(chi1, chi2, T)
                                   : convolution_sum_hyperbola(chi1, chi2, T);
    const auto z = s.to_complex();
    out << "S = " << format_complex(z) << "\n|S| = " << fmt12(std::abs(z)) << "\n";
    return kExitOk;
  }
  const auto naive = convolution_sum_naive(chi1, chi2, T);
  const auto fast = convolution_sum_hyperbola(chi1, chi2, T);
  const auto z = fast.to_complex();
  out << "S = " << format_complex(z) << "\n|S| = " << fmt12(std::abs(z)) << "\n";
  out << "naive = " << format_complex(naive.to_complex()) << "\n";
  if (!approx_equal(naive, fast, 1e-9)) {
    throw VerificationFailure("naive and hyperbola sums disagree");
  }
  out << "agree: yes\n";
  return kExitOk;
}

int cmd_verify_lemmas(double T, int k, int depth, std::size_t chains, std::uint64_t seed,
                      std::ostream& out) {
  if (!(T > 1.0)) throw std::invalid_argument("--T must be > 1");
  if (k < 1) throw std::invalid_argument("--k must be >= 1");
  if (depth < 0) throw std::invalid_argument("--depth must be >= 0");
  bool all_ok = true;
  auto line = [&](bool ok, const std::string& name, const std::string& detail) {
    all_ok = all_ok && ok;
    out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  };

  const auto chain = check_chain_areas(chains, seed);
  line(chain.ok(1e-12), "chain areas closed form",
       std::to_string(chain.chains) + " chains, max rel err phi=" + fmt12(chain.max_rel_err_phi) +
           " u=" + fmt12(chain.max_rel_err_u_phi) + " next=" + fmt12(chain.max_rel_err_next));

  const auto fam = check_family(T, k, depth);
  std::string counts;
  for (auto c : fam.per_order) counts += (counts.empty() ? "" : " ") + std::to_string(c);
  line(fam.count_violations == 0, "order counts 2^l", counts);
  line(fam.on_gamma_violations == 0 && fam.ratio_violations == 0 && fam.contraction_violations == 0,
       "vertex on hyperbola and width ratio", std::to_string(fam.members) + " members");
  line(fam.r_area_violations == 0, "|r(P)| <= |P|/4", "max ratio " + fmt12(fam.max_r_ratio));
  line(fam.u_area_violations == 0, "|u(P)| <= |P|/(4(1-3d/2x))", "max ratio " + fmt12(fam.max_u_ratio));
  line(fam.order_area_violations == 0, "order-l area bound", "max ratio " + fmt12(fam.max_order_ratio));

  if (T >= 4.0) {
    for (double e : {0.6, 0.75, 0.9}) {
      const double t = std::pow(T, e);
      if (!(t > 1.0 && t < T)) continue;
      const auto m = measure_strip(T, t);
      line(m.per_t_log_T <= 5.0, "strip count t=T^" + fmt12(e),
           "count=" + std::to_string(m.count) + " count/(t ln T)=" + fmt12(m.per_t_log_T) +
               " count/t=" + fmt12(m.per_t));
    }
  }
  const auto scan = scan_divisor_residual(lattice_bound(T));
  line(scan.max_normalized < 3.0, "divisor residual",
       "max |r(T)|/sqrt(T)=" + fmt12(scan.max_normalized) + " at T=" + std::to_string(scan.argmax));
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_cover(double T, int k, int depth, double t, std::ostream& out) {
  if (!(T > 1.0)) throw std::invalid_argument("--T must be > 1");
  if (depth < 0) depth = minimum_depth(T);
  const auto r = cover_check(T, k, depth, t);
  out << "T=" << fmt12(T) << " k=" << k << " depth=" << depth << " t=" << fmt12(t) << "\n"
      << "slab_points=" << r.slab_points << "\ncovered=" << r.covered
      << "\nmultiply_covered=" << r.multiply_covered << "\nuncovered_in_strip=" << r.uncovered_in_strip
      << "\nuncovered=" << r.uncovered << "\noutside_slab=" << r.outside_slab << "\n"
      << (r.ok() ? "PASS" : "FAIL") << "\n";
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

unsigned resolve_jobs(unsigned flag_jobs, unsigned config_jobs) {
  if (flag_jobs > 0) return flag_jobs;
  if (const char* env = std::getenv("CHARSUM_JOBS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw std::invalid_argument("CHARSUM_JOBS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return config_jobs;
}

int cmd_sweep(const std::string& config, const std::string& out_path, unsigned jobs,
              const std::string& format, bool timing, std::ostream& out, std::ostream& err) {
  auto cfg = load_sweep_config(config);
  cfg.jobs = resolve_jobs(jobs, cfg.jobs);
  if (!out_path.empty()) cfg.output = out_path;
  if (!format.empty()) cfg.format = format;
  if (timing) cfg.timing = true;
  cfg.validate();
  const auto result = sweep(cfg);
  const auto text = cfg.format == "json" ? to_json(result.records) : to_csv(result.records);
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
  } else {
    write_text(cfg.output, text);
  }
  err << "sweep: " << result.records.size() << " records, " << result.skipped_below_range
      << " below range, " << result.spot_checks << " naive spot checks";
  if (!result.records.empty()) err << ", max ratio " << fmt12(fit_constant(result.records));
  err << "\n";
  return kExitOk;
}

int cmd_bench(const CharRef& a, const CharRef& b, const std::vector<double>& Ts, int reps,
              std::ostream& out) {
  const auto chi1 = character_at(a.q, a.index);
  const auto chi2 = character_at(b.q, b.index);
  using clock = std::chrono::steady_clock;
  bool agree_all = true;
  out << "T,naive_ms,hyperbola_ms,speedup,agree\n";
  for (double T : Ts) {
    CyclotomicSum naive, fast;
    const auto t0 = clock::now();
    for (int i = 0; i < reps; ++i) naive = convolution_sum_naive(chi1, chi2, T);
    const auto t1 = clock::now();
    for (int i = 0; i < reps; ++i) fast = convolution_sum_hyperbola(chi1, chi2, T);
    const auto t2 = clock::now();
    const double naive_ms = std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
    const double fast_ms = std::chrono::duration<double, std::milli>(t2 - t1).count() / reps;
    const bool agree = approx_equal(naive, fast, 1e-9);
    agree_all = agree_all && agree;
    out << fmt12(T) << ',' << fmt12(naive_ms) << ',' << fmt12(fast_ms) << ','
        << fmt12(fast_ms > 0 ? naive_ms / fast_ms : 0.0) << ',' << (agree ? "yes" : "no") << "\n";
  }
  if (!agree_all) throw VerificationFailure("bench: naive and hyperbola sums disagree");
  return kExitOk;
}

int cmd_family_svg(double T, int k, int depth, double min_width, const std::string& path,
                   std::ostream& out) {
  const auto family = generate_family(T, k, depth, min_width);
  const auto svg = family_svg(T, k, family);
  if (path.empty() || path == "-") {
    out << svg;
  } else {
    write_text(path, svg);
  }
  return kExitOk;
}

int cmd_burgess(std::uint64_t q_max, unsigned jobs, const std::string& path, std::ostream& out,
                std::ostream& err) {
  const auto records = burgess_scan(q_max, resolve_jobs(jobs, 1));
  const auto csv = burgess_csv(records);
  if (path.empty() || path == "-") {
    out << csv;
  } else {
    write_text(path, csv);
  }
  bool ok = true;
  double c = 0;
  for (const auto& r : records) {
    ok = ok && r.max_abs <= r.pv_bound;
    c = std::max(c, r.c_burgess);
  }
  err << "burgess-scan: " << records.size() << " primes, max fitted r=2 constant " << fmt12(c)
      << ", sqrt(q) ln q " << (ok ? "holds" : "VIOLATED") << "\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convolution sums of Dirichlet characters: exact evaluation and bound checks",
               "charsum"};
  app.require_subcommand(1);

  std::uint64_t chars_q = 1;
  bool chars_primitive = false;
  auto* chars = app.add_subcommand("chars", "list characters mod q");
  chars->add_option("--q", chars_q, "modulus")->required();
  chars->add_flag("--primitive-only", chars_primitive, "only primitive characters");

  CharRef sa, sb;
  double sum_T = 0;
  std::string sum_algo = "hyperbola";
  auto* sum = app.add_subcommand("sum", "evaluate S(T) = sum_{xy<=T} chi1(x) chi2(y)");
  add_char_options(sum, sa, sb);
  sum->add_option("--T", sum_T, "hyperbola parameter")->required();
  sum->add_option("--algo", sum_algo, "hyperbola, naive or both")
      ->check(CLI::IsMember({"hyperbola", "naive", "both"}));

  double vl_T = 16;
  int vl_k = 1, vl_depth = 6;
  std::size_t vl_chains = 1000;
  std::uint64_t vl_seed = 1;
  auto* vl = app.add_subcommand("verify-lemmas", "check the rectangle lemmas on a generated family");
  vl->add_option("--T", vl_T, "hyperbola parameter")->required();
  vl->add_option("--k", vl_k, "slab index")->required();
  vl->add_option("--depth", vl_depth, "maximum order")->required();
  vl->add_option("--chains", vl_chains, "random chains for the closed-form check");
  vl->add_option("--seed", vl_seed, "random seed");

  double cv_T = 16, cv_t = 1;
  int cv_k = 1, cv_depth = -1;
  auto* cv = app.add_subcommand("cover", "classify slab points against U_k and the family");
  cv->add_option("--T", cv_T, "hyperbola parameter")->required();
  cv->add_option("--k", cv_k, "slab index")->required();
  cv->add_option("--depth", cv_depth, "maximum order (default ceil(log2 T) + 2)");
  cv->add_option("--t", cv_t, "strip half-width");

  std::string sw_config, sw_out, sw_format;
  unsigned sw_jobs = 0;
  bool sw_timing = false;
  auto* sw = app.add_subcommand("sweep", "run a sweep config and write records");
  sw->add_option("--config", sw_config, "key=value config file")->required();
  sw->add_option("--out", sw_out, "output path (default: config output, else stdout)");
  sw->add_option("--jobs", sw_jobs, "worker threads (fallback: CHARSUM_JOBS)");
  sw->add_option("--format", sw_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sw->add_flag("--timing", sw_timing, "record wall time per record");

  CharRef ba, bb;
  std::vector<double> bench_T;
  int bench_reps = 1;
  auto* bench = app.add_subcommand("bench", "naive vs hyperbola timing table");
  add_char_options(bench, ba, bb);
  bench->add_option("--T", bench_T, "one or more T values")->required();
  bench->add_option("--reps", bench_reps, "repetitions")->check(CLI::PositiveNumber);

  double fs_T = 16, fs_min_width = 0;
  int fs_k = 1, fs_depth = 4;
  std::string fs_out;
  auto* fs = app.add_subcommand("family-svg", "draw U_k and its family as SVG");
  fs->add_option("--T", fs_T, "hyperbola parameter")->required();
  fs->add_option("--k", fs_k, "slab index")->required();
  fs->add_option("--depth", fs_depth, "maximum order");
  fs->add_option("--min-width", fs_min_width, "prune narrower rectangles");
  fs->add_option("--out", fs_out, "output path (default stdout)");

  std::uint64_t bs_qmax = 2000;
  unsigned bs_jobs = 0;
  std::string bs_out;
  auto* bs = app.add_subcommand("burgess-scan", "interval maxima for every character mod prime q");
  bs->add_option("--q-max", bs_qmax, "largest prime modulus");
  bs->add_option("--jobs", bs_jobs, "worker threads (fallback: CHARSUM_JOBS)");
  bs->add_option("--out", bs_out, "output path (default stdout)");

  try {
    std::vector<std::string> argv_store{"charsum"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "charsum: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (chars->parsed()) return cmd_chars(chars_q, chars_primitive, out);
    if (sum->parsed()) return cmd_sum(sa, sb, sum_T, sum_algo, out);
    if (vl->parsed()) return cmd_verify_lemmas(vl_T, vl_k, vl_depth, vl_chains, vl_seed, out);
    if (cv->parsed()) return cmd_cover(cv_T, cv_k, cv_depth, cv_t, out);
    if (sw->parsed()) return cmd_sweep(sw_config, sw_out, sw_jobs, sw_format, sw_timing, out, err);
    if (bench->parsed()) return cmd_bench(ba, bb, bench_T, bench_reps, out);
    if (fs->parsed()) return cmd_family_svg(fs_T, fs_k, fs_depth, fs_min_width, fs_out, out);
    if (bs->parsed()) return cmd_burgess(bs_qmax, bs_jobs, bs_out, out, err);
  } catch (const VerificationFailure& e) {
    err << "charsum: verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, domain_error: bad input
    err << "charsum: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "charsum: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace charsum
