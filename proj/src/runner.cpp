#include "seczeros/runner.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "seczeros/errors.hpp"
#include "seczeros/format.hpp"

namespace sz {

namespace {

namespace fs = std::filesystem;

int resolve_workers(int configured, std::size_t jobs) {
  int w = configured;
  if (w <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    w = static_cast<int>(hw == 0 ? 1 : hw);
    w = std::min(w, 8);
  }
  w = std::min<int>(w, static_cast<int>(jobs));
  return std::max(w, 1);
}

// Runs fn(0..count-1) on a small pool.  Each worker widens the MPFR exponent
// range before touching Real values.  fn must confine failures to its slot;
// anything that escapes aborts the run after the pool drains.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  workers = resolve_workers(workers, count);
  if (workers == 1) {
    init_numeric_thread();
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      init_numeric_thread();
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

std::optional<std::string> read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path ensure_out_dir(const ScenarioConfig& cfg) {
  fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.out_dir + ": " + ec.message());
  return dir;
}

}  // namespace

GaugeRun compute_gauge(const ScenarioConfig& cfg) {
  validate(cfg);
  init_numeric_thread();
  CoefficientSequence seq = make_sequence(cfg);
  GaugeRun run{profile(seq, cfg.n_grid, cfg.gamma_grid, cfg.tail_fraction), std::nullopt};
  double radius = cfg.radius.value_or(seq.declared_radius.value_or(0.0));
  if (radius > 0.0 && std::isfinite(radius)) {
    run.gaps = ostrowski_gaps(seq, radius, cfg.n_grid, cfg.gamma_grid, cfg.tail_fraction);
  }
  return run;
}

namespace {

std::string make_verdict(const ScenarioConfig& cfg, const ZerosSlot& top) {
  const EquidistributionReport& r = top.report;
  double inf_mass = r.infinity.value();
  std::ostringstream detail;
  detail << "star_discrepancy=" << fmt_g17(r.star_disc) << " infinity_mass=" << fmt_g17(inf_mass)
         << " annulus_mass(0.2)=" << fmt_g17(r.annulus_02) << " at n=" << top.n;
  bool disc_ok = r.star_disc < cfg.verdict_discrepancy;
  bool inf_ok = inf_mass < cfg.verdict_infinity;
  bool ann_ok = r.annulus_02 > cfg.verdict_annulus;
  if (inf_ok && ann_ok && disc_ok) {
    return "consistent with Szego class: yes (" + detail.str() + ")";
  }
  if (!inf_ok) {
    return "consistent with Szego class: no (infinity_mass=" + fmt_g17(inf_mass) +
           " >= " + fmt_g17(cfg.verdict_infinity) + " at n=" + std::to_string(top.n) + ")";
  }
  if (!ann_ok) {
    return "consistent with Szego class: no (annulus_mass(0.2)=" + fmt_g17(r.annulus_02) +
           " <= " + fmt_g17(cfg.verdict_annulus) + " at n=" + std::to_string(top.n) + ")";
  }
  return "consistent with Szego class: inconclusive (star_discrepancy=" +
         fmt_g17(r.star_disc) + " >= " + fmt_g17(cfg.verdict_discrepancy) +
         " at n=" + std::to_string(top.n) + ")";
}

}  // namespace

ZerosRun compute_zeros(const ScenarioConfig& cfg) {
  validate(cfg);
  init_numeric_thread();
  CoefficientSequence seq = make_sequence(cfg);
  std::int64_t multiplicity = 0;
  if (cfg.strip) {
    auto [stripped, m] = strip_origin(seq);
    seq = std::move(stripped);
    multiplicity = m;
  }

  ZerosRun run;
  run.origin_multiplicity = multiplicity;
  run.slots.resize(cfg.n_grid.size());
  for (std::size_t i = 0; i < cfg.n_grid.size(); ++i) run.slots[i].n = cfg.n_grid[i];

  parallel_for(run.slots.size(), cfg.workers, [&](std::size_t i) {
    ZerosSlot& slot = run.slots[i];
    try {
      std::int64_t n_section = slot.n - multiplicity;
      if (n_section < 1) {
        throw DomainError("n <= origin multiplicity " + std::to_string(multiplicity));
      }
      slot.section = build(seq, n_section, cfg.mode, cfg.precision);
      slot.section.origin_multiplicity_stripped = multiplicity;
      slot.section_roots = find_roots(slot.section, cfg.max_iter, cfg.rel_tol);

      slot.augmented_roots = slot.section_roots;
      slot.augmented_roots.nominal_n = slot.n;
      for (std::int64_t k = 0; k < multiplicity; ++k) {
        slot.augmented_roots.finite_roots.push_back(Complex::zero(cfg.precision));
      }
      std::sort(slot.augmented_roots.finite_roots.begin(),
                slot.augmented_roots.finite_roots.end(),
                [](const Complex& a, const Complex& b) {
                  if (a.re < b.re) return true;
                  if (b.re < a.re) return false;
                  return a.im < b.im;
                });
      slot.measure = measure_from_roots(slot.augmented_roots);
      ZeroCountingMeasure own = measure_from_roots(slot.section_roots);
      slot.report = equidistribution_report(slot.measure, &slot.section, &own);
      slot.report.n = slot.n;
      slot.ok = true;
    } catch (const Error& e) {
      slot.error = e.what();
    }
  });

  const ZerosSlot* top = nullptr;
  for (const ZerosSlot& slot : run.slots) {
    if (slot.ok) top = &slot;
    if (!slot.ok) {
      run.warnings.push_back("n=" + std::to_string(slot.n) + ": " + slot.error);
    }
  }
  if (top == nullptr) {
    std::string detail;
    for (const std::string& w : run.warnings) detail += "\n  " + w;
    throw NumericError("zeros: every n in the grid failed:" + detail);
  }
  run.verdict = make_verdict(cfg, *top);
  return run;
}

BoundsRun compute_bounds(const ScenarioConfig& cfg) {
  validate(cfg);
  init_numeric_thread();
  CoefficientSequence seq = make_sequence(cfg);
  std::int64_t multiplicity = 0;
  if (cfg.strip) {
    auto [stripped, m] = strip_origin(seq);
    seq = std::move(stripped);
    multiplicity = m;
  }

  BoundsRun run;
  run.origin_multiplicity = multiplicity;
  run.slots.resize(cfg.n_grid.size());
  for (std::size_t i = 0; i < cfg.n_grid.size(); ++i) run.slots[i].n = cfg.n_grid[i];

  parallel_for(run.slots.size(), cfg.workers, [&](std::size_t i) {
    BoundsSlot& slot = run.slots[i];
    try {
      std::int64_t n_section = slot.n - multiplicity;
      if (n_section < 1) {
        throw DomainError("n <= origin multiplicity " + std::to_string(multiplicity));
      }
      NormalizedSection section = build(seq, n_section, cfg.mode, cfg.precision);
      section.origin_multiplicity_stripped = multiplicity;
      std::int64_t deg = section.effective_degree;
      std::set<std::int64_t> ms{1, deg};
      std::int64_t m_gamma =
          static_cast<std::int64_t>(cfg.bounds_gamma * static_cast<double>(deg)) + 1;
      ms.insert(std::min(deg, std::max<std::int64_t>(1, m_gamma)));
      std::vector<std::int64_t> m_list(ms.begin(), ms.end());

      if (cfg.bounds_counts) {
        SphericalRootSet roots = find_roots(section, cfg.max_iter, cfg.rel_tol);
        slot.report = bounds_report(section, m_list, &roots);
      } else {
        slot.report = bounds_report(section, m_list, nullptr);
      }
      slot.ok = true;
    } catch (const Error& e) {
      slot.error = e.what();
    }
  });

  bool any_ok = false;
  for (const BoundsSlot& slot : run.slots) {
    if (slot.ok) {
      any_ok = true;
    } else {
      run.warnings.push_back("n=" + std::to_string(slot.n) + ": " + slot.error);
    }
  }
  if (!any_ok) {
    std::string detail;
    for (const std::string& w : run.warnings) detail += "\n  " + w;
    throw NumericError("bounds: every n in the grid failed:" + detail);
  }
  return run;
}

namespace {

std::string gauge_summary_text(const GaugeRun& run, const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "sequence=" << run.profile.sequence_name << "\n";
  out << "tail_fraction=" << fmt_g17(cfg.tail_fraction) << "\n";
  for (std::size_t j = 0; j < run.profile.gamma_grid.size(); ++j) {
    out << "L_hat(gamma=" << fmt_label(run.profile.gamma_grid[j])
        << ")=" << fmt_g17(run.profile.l_hat[j]) << "\n";
  }
  out << "G_hat=" << fmt_g17(run.profile.g_hat) << "\n";
  if (run.gaps) {
    out << "ostrowski_radius=" << fmt_g17(run.gaps->radius) << "\n";
    for (const OstrowskiGammaRow& row : run.gaps->rows) {
      out << "ostrowski(gamma=" << fmt_label(row.gamma)
          << ") tail_inf_A=" << fmt_g17(row.tail_inf_window)
          << " triggered=" << (row.triggered ? "yes" : "no") << "\n";
    }
    out << "has_ostrowski_gaps=" << (run.gaps->has_gaps ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace

void cmd_gauge(const ScenarioConfig& cfg) {
  GaugeRun run = compute_gauge(cfg);
  fs::path dir = ensure_out_dir(cfg);
  write_gauge_csv(run.profile, (dir / "gauge.csv").string());
  write_text_file(dir / "gauge_summary.txt", gauge_summary_text(run, cfg));
  std::printf("G_hat=%s\n", fmt_g17(run.profile.g_hat).c_str());
}

void cmd_zeros(const ScenarioConfig& cfg) {
  ZerosRun run = compute_zeros(cfg);
  fs::path dir = ensure_out_dir(cfg);
  std::vector<EquidistributionReport> rows;
  for (const ZerosSlot& slot : run.slots) {
    if (!slot.ok) continue;
    rows.push_back(slot.report);
    write_root_dump(slot.augmented_roots,
                    (dir / ("roots_n" + std::to_string(slot.n) + ".txt")).string());
    if (cfg.dump_sections) {
      write_section_dump(slot.section,
                         (dir / ("section_n" + std::to_string(slot.n) + ".txt")).string());
    }
  }
  write_measures_csv(rows, (dir / "measures.csv").string());
  std::string verdict_text = run.verdict + "\n";
  for (const std::string& w : run.warnings) verdict_text += "warning: " + w + "\n";
  write_text_file(dir / "verdict.txt", verdict_text);
  for (const std::string& w : run.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("%s\n", run.verdict.c_str());
}

void cmd_bounds(const ScenarioConfig& cfg) {
  BoundsRun run = compute_bounds(cfg);
  fs::path dir = ensure_out_dir(cfg);
  for (const BoundsSlot& slot : run.slots) {
    if (!slot.ok) continue;
    write_bounds_csv(slot.report, (dir / ("bounds_n" + std::to_string(slot.n) + ".csv")).string());
  }
  for (const std::string& w : run.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw NumericError("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

void cmd_report(const ScenarioConfig& cfg) {
  validate(cfg);
  fs::path dir = ensure_out_dir(cfg);

  std::vector<std::string> expected = {"gauge.csv", "gauge_summary.txt", "measures.csv",
                                       "verdict.txt"};
  for (std::int64_t n : cfg.n_grid) {
    expected.push_back("roots_n" + std::to_string(n) + ".txt");
    expected.push_back("bounds_n" + std::to_string(n) + ".csv");
    if (cfg.dump_sections) expected.push_back("section_n" + std::to_string(n) + ".txt");
  }
  std::sort(expected.begin(), expected.end());

  std::ostringstream manifest;
  manifest << "# run manifest\n";
  manifest << canonical_config_text(cfg);
  manifest << "files:\n";
  std::vector<std::string> missing;
  for (const std::string& name : expected) {
    auto content = read_text_file(dir / name);
    if (!content) {
      missing.push_back(name);
      continue;
    }
    manifest << name << " sha256=" << sha256_hex(*content) << " bytes=" << content->size()
             << "\n";
  }
  for (const std::string& name : missing) manifest << "missing: " << name << "\n";
  auto verdict = read_text_file(dir / "verdict.txt");
  if (verdict && !verdict->empty()) {
    std::istringstream vs(*verdict);
    std::string first_line;
    std::getline(vs, first_line);
    manifest << "verdict: " << first_line << "\n";
  }
  write_text_file(dir / "manifest.txt", manifest.str());
  std::printf("manifest written with %zu files, %zu missing\n", expected.size() - missing.size(),
              missing.size());
}

}  // namespace sz
