#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "whframes/errors.hpp"
#include "whframes/io.hpp"
#include "whframes/mub.hpp"
#include "whframes/sic.hpp"

namespace whframes::cli {
namespace {

using io::json;

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// key: value lines, nested objects flattened with dots.
void pretty_into(const json& j, const std::string& prefix, std::ostringstream& os) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      pretty_into(value, name, os);
    } else {
      os << name << ": " << scalar_text(value) << "\n";
    }
  }
}

// header row of the top-level keys, one value row
std::string csv_of(const json& j) {
  std::ostringstream head, row;
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    head << (first ? "" : ",") << key;
    std::string text = scalar_text(value);
    if (text.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      text = quoted + "\"";
    }
    row << (first ? "" : ",") << text;
    first = false;
  }
  return head.str() + "\n" + row.str() + "\n";
}

std::string render(const RunConfig& cfg, const json& report, const std::string& csv = "") {
  if (cfg.format == "pretty") {
    std::ostringstream os;
    pretty_into(report, "", os);
    return os.str();
  }
  if (cfg.format == "csv") return csv.empty() ? csv_of(report) : csv;
  return report.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

void emit(const RunConfig& cfg, const json& report, const std::string& csv = "") {
  const std::string text = render(cfg, report, csv);
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.output_path, text);
  }
}

// Runs a command body, mapping input and precondition errors to exit code 2.
template <class Body>
int guarded(Body body) {
  try {
    return body();
  } catch (const DataIntegrityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const AmbiguousClassification& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

sic::Fiducial load(const RunConfig& cfg) {
  if (cfg.fiducial == "builtin:grassl6") return sic::grassl_fiducial();
  if (cfg.fiducial.rfind("builtin:", 0) == 0) throw std::invalid_argument("unknown built-in fiducial " + cfg.fiducial);
  return io::load_fiducial(cfg.fiducial, cfg.tol());
}

}  // namespace

int cmd_sic_verify(const RunConfig& cfg) {
  return guarded([&] {
    sic::Fiducial f = load(cfg);
    if (cfg.exact && !f.is_exact()) throw std::invalid_argument("--exact needs an exact fiducial");
    if (cfg.float_mode && f.is_exact()) f = sic::make_fiducial(f.numeric(), cfg.tol());
    if (!f.normalized) {
      // an unnormalized fiducial is not a SIC candidate; rescale floats, reject exact
      if (f.is_exact()) throw std::invalid_argument("exact fiducial is not normalized");
      const Eigen::VectorXcd v = f.numeric();
      if (v.norm() == 0.0) throw std::invalid_argument("zero fiducial");
      f = sic::make_fiducial(Eigen::VectorXcd(v / v.norm()), cfg.tol());
    }
    const auto report = sic::verify_sic(sic::heisenberg_orbit(f), cfg.tol());
    json j = io::to_json(report);
    j["fiducial"] = cfg.fiducial;
    emit(cfg, j);
    return report.pass ? kPass : kCheckFailed;
  });
}

int cmd_sic_search(const RunConfig& cfg) {
  return guarded([&] {
    const int d = cfg.d.value_or(3);
    if (d < 2 || d > group::kMaxEnumerationDimension) throw std::invalid_argument("sic search needs 2 <= d <= 12");
    const std::size_t restarts = cfg.restarts.value_or(20);
    if (restarts < 1) throw std::invalid_argument("--restarts must be at least 1");
    sic::SearchOptions opts;
    opts.success_tol = cfg.tol();
    const auto subspaces = cfg.zauner ? sic::canonical_zauner_subspaces(d) : std::vector<sic::SearchParameterization>{};
    const auto r = sic::search_fiducial(d, restarts, cfg.seed, subspaces, opts);
    const bool ok = std::abs(r.potential - r.target) <= cfg.tol();
    std::cerr << "search d=" << d << (cfg.zauner ? " (zauner)" : "") << ": " << r.successes << "/" << restarts
              << " restarts reached the bound";
    if (r.first_success) std::cerr << ", first at restart " << *r.first_success;
    std::cerr << "\n";

    json j{{"d", d},
           {"seed", cfg.seed},
           {"restarts", restarts},
           {"zauner", cfg.zauner},
           {"potential", r.potential},
           {"target", r.target},
           {"deviation", r.potential - r.target},
           {"success", ok},
           {"successes", r.successes},
           {"first_success", r.first_success ? json(*r.first_success) : json(nullptr)},
           {"best_restart", r.best_restart}};
    if (!cfg.output_path.empty()) write_file(cfg.output_path, io::to_json(r.fiducial).dump(2) + "\n");
    j["fiducial"] = io::to_json(r.fiducial);
    RunConfig to_stdout = cfg;
    to_stdout.output_path.clear();
    if (cfg.format != "json") j.erase("fiducial");
    emit(to_stdout, j);
    return ok ? kPass : kCheckFailed;
  });
}

int cmd_sic_orbits(const RunConfig& cfg) {
  return guarded([&] {
    const int d = cfg.d.value_or(6);
    if (d != 6) throw std::invalid_argument("sic orbits supports only d = 6");
    sic::Fiducial f = load(cfg);
    if (f.d != 6) throw std::invalid_argument("fiducial is not in dimension 6");
    const double tol = cfg.tolerance.value_or(1e-6);
    const auto c = sic::clifford_orbit_count(sic::make_fiducial(f.numeric(), 1e-8), tol);
    json j{{"d", d}, {"images", c.images}, {"classes", c.classes}, {"separation", c.separation}, {"tolerance", tol}};
    if (cfg.with_conjugates) j["classes_with_conjugates"] = c.classes_with_conjugates;
    emit(cfg, j);
    return kPass;
  });
}

int cmd_mub_analyze(const RunConfig& cfg) {
  return guarded([&] {
    if (cfg.d.value_or(6) != 6) throw std::invalid_argument("mub analyze supports only d = 6");
    const auto a = mub::analyze_dim6();
    emit(cfg, io::to_json(a), io::neighborhoods_csv(a));
    return a.pass() ? kPass : kCheckFailed;
  });
}

int cmd_mub_triple(const RunConfig& cfg) {
  return guarded([&] {
    const int d = cfg.d.value_or(6);
    if (d < 2 || d > group::kMaxEnumerationDimension) throw std::invalid_argument("mub triple needs 2 <= d <= 12");
    mub::MubSet ms;
    try {
      ms = mub::standard_triple(d, cfg.k);
    } catch (const PreconditionViolation& e) {
      throw std::invalid_argument(std::string(e.what()) + " (k = " + std::to_string(cfg.k) + ", d = " + std::to_string(d) + ")");
    }
    if (cfg.float_mode) {
      for (auto& b : ms.bases) b.vectors = b.numeric();
    }
    const auto r = mub::verify_mub(ms, cfg.tol());
    json j = io::to_json(r);
    j["d"] = d;
    j["k"] = cfg.k;
    json labels = json::array();
    for (const auto& b : ms.bases) labels.push_back(b.label);
    j["bases"] = labels;
    emit(cfg, j);
    return r.pass ? kPass : kCheckFailed;
  });
}

int cmd_mub_dim4(const RunConfig& cfg) {
  return guarded([&] {
    if (cfg.d.value_or(4) != 4) throw std::invalid_argument("mub dim4 is the d = 4 family");
    const auto ms = mub::dim4_family(cfg.a, cfg.b);
    const auto r = mub::verify_mub(ms, cfg.tol());
    const std::size_t restarts = cfg.restarts.value_or(200);
    const double residual = mub::dim4_fourth_vector_residual(cfg.a, cfg.b, restarts, cfg.seed);
    const bool maximal = residual >= 1e-3;
    json j = io::to_json(r);
    j["a"] = cfg.a;
    j["b"] = cfg.b;
    j["seed"] = cfg.seed;
    j["restarts"] = restarts;
    j["fourth_vector_residual"] = residual;
    j["maximal"] = maximal;
    emit(cfg, j);
    return r.pass && maximal ? kPass : kCheckFailed;
  });
}

int cmd_mub_solve(const RunConfig& cfg) {
  return guarded([&] {
    const int d = cfg.d.value_or(6);
    if (d < 2 || d > 12) throw std::invalid_argument("mub solve needs 2 <= d <= 12");
    const std::size_t restarts = cfg.restarts.value_or(500);
    const auto s = mub::solve_unbiased_numeric(d, restarts, cfg.seed);
    json vectors = json::array();
    for (const auto& v : s.clusters) {
      json row = json::array();
      for (Eigen::Index k = 0; k < v.size(); ++k) row.push_back(io::to_json(v(k)));
      vectors.push_back(row);
    }
    json j{{"d", d}, {"seed", cfg.seed}, {"restarts", restarts}, {"converged", s.converged}, {"clusters", s.clusters.size()}};
    if (d == 6) {
      std::vector<Eigen::VectorXcd> appendix;
      for (const auto& v : mub::appendix_vectors()) appendix.push_back(mub::normalized_embedding(v));
      double worst = 0.0;
      for (const auto& v : s.clusters) worst = std::max(worst, mub::closest_up_to_phase(v, appendix).second);
      j["worst_match_distance"] = worst;
    }
    if (cfg.format == "json") j["vectors"] = vectors;
    emit(cfg, j);
    return kPass;
  });
}

}  // namespace whframes::cli
