#include "multiplane/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "multiplane/serialize.hpp"

namespace multiplane::cli {

using serialize::json;

namespace {

struct RunConfig {
  std::string seed = "0";
  std::int64_t coeff_bound = 20;
  int retries = 32;
  int fiber_samples = 5;
  Int d_max = 1000;
  int shear_attempts = 8;
  std::string output;
};

template <class T>
void env_default(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return;
  std::istringstream is(raw);
  T parsed{};
  if (!(is >> parsed) || !is.eof()) throw std::invalid_argument(std::string("environment variable ") + name + " is not an integer");
  value = parsed;
}

void require_positive(Int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string("constraint ") + what + " >= 1 violated");
}

std::uint64_t resolve_seed(const std::string& s) {
  if (s == "auto") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (s.empty() || s[0] == '-') throw std::invalid_argument("");
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw std::invalid_argument("seed must be a non-negative integer or \"auto\"");
  return v;
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw serialize::FormatError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw serialize::FormatError(path + ": " + e.what());
  }
}

branch::VerifyOptions verify_options(const RunConfig& c) {
  branch::VerifyOptions o;
  o.fiber_samples = c.fiber_samples;
  o.census.max_shear_attempts = c.shear_attempts;
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Int x = 0, y = 0, e = 0, e_prime = 0, m = 0, h = 0, ell = 0;
  std::string cover_path;

  try {
    env_default("MULTIPLANE_COEFF_BOUND", cfg.coeff_bound);
    env_default("MULTIPLANE_RETRIES", cfg.retries);
    env_default("MULTIPLANE_FIBER_SAMPLES", cfg.fiber_samples);
    env_default("MULTIPLANE_D_MAX", cfg.d_max);
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalidInput;
  }

  CLI::App app{"Construct, verify and classify simpler multiple planes."};
  app.name("multiplane");
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariants", "Numerical invariants of the triple cover for a split (x, y)");
  inv->add_option("--x", x)->required();
  inv->add_option("--y", y)->required();
  inv->add_option("-o,--output", cfg.output, "Output path (default stdout)");

  auto* con = app.add_subcommand("construct", "Sample and certify a general triple cover");
  con->add_option("--x", x)->required();
  con->add_option("--y", y)->required();
  con->add_option("--seed", cfg.seed, "Integer seed or \"auto\"")->required();
  con->add_option("--coeff-bound", cfg.coeff_bound)->capture_default_str();
  con->add_option("--retries", cfg.retries)->capture_default_str();
  con->add_option("--fiber-samples", cfg.fiber_samples)->capture_default_str();
  con->add_option("--shear-attempts", cfg.shear_attempts)->capture_default_str();
  con->add_option("-o,--output", cfg.output, "Cover file path (default stdout)");

  auto* ver = app.add_subcommand("verify", "Re-run every generality check on a cover file");
  ver->add_option("cover", cover_path, "Cover file")->required();
  ver->add_option("--fiber-samples", cfg.fiber_samples)->capture_default_str();
  ver->add_option("--shear-attempts", cfg.shear_attempts)->capture_default_str();
  ver->add_option("-o,--output", cfg.output);

  auto* par = app.add_subcommand("params", "Parameters (h, ell, k) of the degree-3 construction for e");
  par->add_option("--e", e)->required();
  par->add_option("-o,--output", cfg.output);

  auto* net = app.add_subcommand("net", "Build the net through Z for (m, h, ell)");
  net->set_help_flag("--help", "Print this help message and exit");  // -h is taken by --h
  net->add_option("--m", m)->required();
  net->add_option("--h", h)->required();
  net->add_option("--ell", ell)->required();
  net->add_option("--seed", cfg.seed, "Integer seed or \"auto\"")->required();
  net->add_option("--coeff-bound", cfg.coeff_bound)->capture_default_str();
  net->add_option("--retries", cfg.retries)->capture_default_str();
  net->add_option("--shear-attempts", cfg.shear_attempts)->capture_default_str();
  net->add_option("-o,--output", cfg.output);

  auto* cre = app.add_subcommand("cremona", "Decide Cremona equivalence of two degree-m multiple planes");
  cre->add_option("--m", m)->required();
  cre->add_option("--e", e)->required();
  cre->add_option("--eprime,--e-prime", e_prime)->required();
  cre->add_option("--d-max", cfg.d_max)->capture_default_str();
  cre->add_option("-o,--output", cfg.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    require_positive(cfg.coeff_bound, "coeff_bound");
    require_positive(cfg.retries, "retries");
    require_positive(cfg.fiber_samples, "fiber_samples");
    require_positive(cfg.d_max, "d_max");
    require_positive(cfg.shear_attempts, "shear_attempts");

    if (inv->parsed()) {
      const invariants::TschirnhausenSplit split(x, y);
      emit(serialize::invariants_to_json(invariants::cover_invariants(split), x, y), cfg.output, out);
      return kExitOk;
    }
    if (con->parsed()) {
      const invariants::TschirnhausenSplit split(x, y);
      const std::uint64_t seed = resolve_seed(cfg.seed);
      try {
        auto g = branch::construct_general_cover(split, seed, cfg.coeff_bound, cfg.retries, verify_options(cfg));
        json doc = serialize::cover_to_json(g.sections);
        doc["requested_seed"] = seed;
        doc["attempts"] = g.attempts;
        doc["report"] = serialize::report_to_json(g.report);
        emit(doc, cfg.output, out);
        return kExitOk;
      } catch (const branch::RetryExhausted& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitNotGeneral;
      }
    }
    if (ver->parsed()) {
      const json doc = read_json_file(cover_path);
      const auto sections = serialize::cover_from_json(doc);
      const auto report = branch::verify_general_cover(sections, verify_options(cfg));
      json j = serialize::report_to_json(report);
      if (doc.contains("report")) j["matches_stored"] = doc["report"] == j;
      emit(j, cfg.output, out);
      return report.general ? kExitOk : kExitNotGeneral;
    }
    if (par->parsed()) {
      emit(serialize::params_to_json(e, construct::params_for_e(e)), cfg.output, out);
      return kExitOk;
    }
    if (net->parsed()) {
      const construct::ConstructionParams p(m, h, ell);
      const std::uint64_t seed = resolve_seed(cfg.seed);
      construct::NetOptions o;
      o.coeff_bound = cfg.coeff_bound;
      o.retries = cfg.retries;
      o.census.max_shear_attempts = cfg.shear_attempts;
      try {
        emit(serialize::net_to_json(construct::build_net(p, seed, o), seed), cfg.output, out);
        return kExitOk;
      } catch (const construct::NetRetryExhausted& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitNotGeneral;
      }
    }
    if (cre->parsed()) {
      const cremona::MultiplaneClass a(m, e), b(m, e_prime);
      emit(serialize::cremona_to_json(cremona::cremona_equivalent(a, b, cfg.d_max)), cfg.output, out);
      return kExitOk;
    }
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitNotGeneral;
  }
  return kExitInvalidInput;
}

}  // namespace multiplane::cli
