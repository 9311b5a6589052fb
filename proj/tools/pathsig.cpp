#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathsig/grouplike.hpp"
#include "pathsig/io.hpp"
#include "pathsig/path.hpp"
#include "pathsig/rough.hpp"
#include "pathsig/tensor.hpp"

namespace ps = pathsig;

namespace {

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  ss << f.rdbuf();
  return ss.str();
}

// tensor documents start with '{'; everything else is treated as CSV
bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

std::pair<double, double> window(const ps::RunConfig& cfg,
                                 const ps::SampledPath& p) {
  if (cfg.interval) return *cfg.interval;
  return {p.times.front(), p.times.back()};
}

int cmd_sig(const ps::RunConfig& cfg, const std::string& file, bool take_log) {
  ps::SampledPath p = ps::read_csv(slurp(file));
  const auto [s, t] = window(cfg, p);
  ps::TruncatedTensor x = ps::path_signature(p, cfg.depth, s, t, cfg.cap);
  if (take_log) x = ps::log(x);
  std::cout << ps::write_tensor_json(x, {s, t}, p.source_range) << "\n";
  return 0;
}

ps::TruncatedTensor load_signature(const ps::RunConfig& cfg, bool depth_given,
                                   const std::string& file) {
  const std::string text = slurp(file);
  if (looks_like_json(text)) {
    ps::TruncatedTensor x = ps::read_tensor_json(text, cfg.cap).tensor;
    if (depth_given) {
      if (x.depth() < cfg.depth)
        throw std::runtime_error("tensor depth below requested depth");
      if (x.depth() > cfg.depth) x = ps::project(x, cfg.depth);
    }
    return x;
  }
  return ps::path_signature(ps::read_csv(text), cfg.depth, cfg.cap);
}

int cmd_dist(const ps::RunConfig& cfg, bool depth_given, const std::string& f1,
             const std::string& f2) {
  ps::TruncatedTensor a = load_signature(cfg, depth_given, f1);
  ps::TruncatedTensor b = load_signature(cfg, depth_given, f2);
  if (a.dim() != b.dim()) throw std::runtime_error("tensor dimensions differ");
  // without an explicit --depth, two documents may disagree; compare at the
  // shallower depth, which projection reaches losslessly
  if (a.depth() > b.depth()) a = ps::project(a, b.depth());
  if (b.depth() > a.depth()) b = ps::project(b, a.depth());
  std::cout << ps::format_double(ps::rho_metric(a, b)) << "\n";
  return 0;
}

int cmd_levy(const ps::RunConfig& cfg, const std::string& file) {
  ps::SampledPath p = ps::read_csv(slurp(file));
  const std::vector<double> A = ps::levy_area(p, cfg.cap);
  std::string out = "{\"d\":" + std::to_string(p.d) + ",\"levy\":[";
  for (std::size_t i = 0; i < p.d; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < p.d; ++j) {
      if (j) out += ',';
      out += ps::format_double(A[i * p.d + j]);
    }
    out += ']';
  }
  out += "]}";
  std::cout << out << "\n";
  return 0;
}

int cmd_young(const ps::RunConfig& cfg, std::optional<double> beta,
              std::size_t refine, const std::string& fy,
              const std::string& fx) {
  ps::SampledPath Y = ps::read_csv(slurp(fy));
  ps::SampledPath X = ps::read_csv(slurp(fx));
  ps::YoungOptions yo;
  yo.alpha = cfg.alpha;
  yo.beta = beta;
  yo.strict = cfg.strict;
  const ps::YoungResult r = ps::young_integral(Y, X, refine, yo);
  if (r.exponents_ok)
    std::cerr << "note: Young condition alpha + beta > 1 "
              << (*r.exponents_ok ? "holds" : "fails") << "\n";
  std::string line;
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    if (i) line += ' ';
    line += ps::format_double(r.values[i]);
  }
  std::cout << line << "\n";
  return 0;
}

int cmd_check_chen(const ps::RunConfig& cfg, const std::string& file) {
  ps::SampledPath p = ps::read_csv(slurp(file));
  ps::SignaturePath sp = ps::signature_path(p, cfg.depth, cfg.cap);
  const ps::ChenReport rep = ps::is_multiplicative(sp, cfg.tol);
  std::string out = std::string("{\"check\":\"chen\",\"pass\":") +
                    (rep.pass ? "true" : "false") +
                    ",\"residual\":" + ps::format_double(rep.residual) +
                    ",\"worst\":{\"s\":" + ps::format_double(rep.ts) +
                    ",\"u\":" + ps::format_double(rep.tu) +
                    ",\"t\":" + ps::format_double(rep.tt) + "}" +
                    ",\"subsampled\":" + (rep.subsampled ? "true" : "false") +
                    "}";
  std::cout << out << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_check_shuffle(const ps::RunConfig& cfg, const std::string& file) {
  const std::string text = slurp(file);
  const ps::TruncatedTensor x =
      looks_like_json(text)
          ? ps::read_tensor_json(text, cfg.cap).tensor
          : ps::path_signature(ps::read_csv(text), cfg.depth, cfg.cap);
  const ps::GrouplikeReport rep = ps::is_grouplike(x, cfg.tol);
  std::string out = std::string("{\"check\":\"shuffle\",\"pass\":") +
                    (rep.pass ? "true" : "false") +
                    ",\"residual\":" + ps::format_double(rep.residual) +
                    ",\"worst\":{\"u\":\"" + ps::word_to_string(rep.u) +
                    "\",\"v\":\"" + ps::word_to_string(rep.v) + "\"}}";
  std::cout << out << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_holder(const ps::RunConfig& cfg, const std::string& file) {
  if (!cfg.alpha) throw std::runtime_error("holder requires --alpha");
  ps::SampledPath p = ps::read_csv(slurp(file));
  const double a = *cfg.alpha;
  const double path_holder = ps::holder_norm(p, a);
  ps::SignaturePath sp = ps::signature_path(p, cfg.depth, cfg.cap);
  const std::vector<double> levels = ps::graded_holder(sp, a);
  const double rho = ps::rho_holder(sp, a, cfg.tol);
  std::string out = "{\"alpha\":" + ps::format_double(a) +
                    ",\"depth\":" + std::to_string(cfg.depth) +
                    ",\"path_holder\":" + ps::format_double(path_holder) +
                    ",\"levels\":[";
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k) out += ',';
    out += ps::format_double(levels[k]);
  }
  out += "],\"rho_holder\":" + ps::format_double(rho) + "}";
  std::cout << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signature and rough-path toolkit for sampled time series"};
  app.require_subcommand(1);

  ps::RunConfig cfg;
  // a pair consumes exactly two tokens, so a trailing positional survives
  std::pair<double, double> interval{0.0, 0.0};
  double alpha = 0.0;
  app.add_option("--depth", cfg.depth, "truncation depth N >= 1")
      ->check(CLI::PositiveNumber);
  app.add_option("--interval", interval,
                 "window S T inside [0,1] (default: full sampled range)");
  app.add_option("--alpha", alpha, "Holder exponent in (0,1)");
  app.add_option("--tol", cfg.tol, "check tolerance (default 1e-8)");
  app.add_flag("--strict", cfg.strict,
               "young: require declared exponents with alpha + beta > 1");
  app.add_option("--cap", cfg.cap, "max stored coefficients per tensor");

  std::string sig_file = "-", logsig_file = "-", levy_file = "-";
  std::string chen_file = "-", shuffle_file = "-", holder_file = "-";
  std::string dist_a, dist_b, young_y, young_x;
  std::size_t refine = 10000;
  double beta = 0.0;

  CLI::App* c_sig = app.add_subcommand("sig", "signature of a CSV path");
  c_sig->add_option("input", sig_file, "CSV file (default: stdin)");
  CLI::App* c_logsig =
      app.add_subcommand("logsig", "log-signature of a CSV path");
  c_logsig->add_option("input", logsig_file, "CSV file (default: stdin)");
  CLI::App* c_dist = app.add_subcommand(
      "dist", "rho_N distance between two signatures (CSV or tensor JSON)");
  c_dist->add_option("a", dist_a, "first input")->required();
  c_dist->add_option("b", dist_b, "second input")->required();
  CLI::App* c_levy = app.add_subcommand("levy", "Levy area matrix of a path");
  c_levy->add_option("input", levy_file, "CSV file (default: stdin)");
  CLI::App* c_young = app.add_subcommand(
      "young", "left-point Young integral of integrand Y against path X");
  c_young->add_option("Y", young_y, "integrand CSV")->required();
  c_young->add_option("X", young_x, "integrator CSV")->required();
  c_young->add_option("--refine", refine, "uniform refinement steps")
      ->check(CLI::PositiveNumber);
  c_young->add_option("--beta", beta, "integrand Holder exponent in (0,1)");
  CLI::App* c_chen =
      app.add_subcommand("check-chen", "two-parameter multiplicativity check");
  c_chen->add_option("input", chen_file, "CSV file (default: stdin)");
  CLI::App* c_shuffle = app.add_subcommand(
      "check-shuffle", "shuffle-character (group-like) check");
  c_shuffle->add_option("input", shuffle_file,
                        "CSV or tensor JSON (default: stdin)");
  CLI::App* c_holder = app.add_subcommand(
      "holder", "Holder constants of the path and its signature levels");
  c_holder->add_option("input", holder_file, "CSV file (default: stdin)");
  CLI::App* c_depth = app.add_subcommand(
      "depth-for-alpha", "smallest admissible truncation depth floor(1/alpha)");

  for (CLI::App* sub : {c_sig, c_logsig, c_dist, c_levy, c_young, c_chen,
                        c_shuffle, c_holder, c_depth})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.count("--alpha")) cfg.alpha = alpha;
    if (app.count("--interval")) {
      if (!(0.0 <= interval.first && interval.first <= interval.second &&
            interval.second <= 1.0))
        throw std::runtime_error("interval must satisfy 0 <= S <= T <= 1");
      cfg.interval = interval;
    }
    if (!(cfg.tol > 0.0)) throw std::runtime_error("tolerance must be positive");
    const bool depth_given = app.count("--depth") > 0;

    if (app.got_subcommand(c_sig)) return cmd_sig(cfg, sig_file, false);
    if (app.got_subcommand(c_logsig)) return cmd_sig(cfg, logsig_file, true);
    if (app.got_subcommand(c_dist))
      return cmd_dist(cfg, depth_given, dist_a, dist_b);
    if (app.got_subcommand(c_levy)) return cmd_levy(cfg, levy_file);
    if (app.got_subcommand(c_young)) {
      std::optional<double> beta_opt;
      if (c_young->count("--beta")) beta_opt = beta;
      return cmd_young(cfg, beta_opt, refine, young_y, young_x);
    }
    if (app.got_subcommand(c_chen)) return cmd_check_chen(cfg, chen_file);
    if (app.got_subcommand(c_shuffle))
      return cmd_check_shuffle(cfg, shuffle_file);
    if (app.got_subcommand(c_holder)) return cmd_holder(cfg, holder_file);
    if (app.got_subcommand(c_depth)) {
      if (!cfg.alpha)
        throw std::runtime_error("depth-for-alpha requires --alpha");
      std::cout << ps::minimal_depth(*cfg.alpha) << "\n";
      return 0;
    }
    throw std::runtime_error("unknown command");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
