#include "stfd/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "stfd/errors.hpp"
#include "stfd/sampling.hpp"
#include "stfd/specfun.hpp"
#include "stfd/stable.hpp"
#include "stfd/stats.hpp"
#include "stfd/subordination.hpp"
#include "stfd/walker.hpp"

namespace stfd::cli {
namespace {

// Bad command-line values detected after parsing (exit 2).
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Density table failed its declared mass check (exit 4); the table itself
// is still written for inspection.
struct MassFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Resolved-configuration echo written as '#' comment lines ahead of the CSV
// header, so every output records how it was produced.
struct Meta {
  std::vector<std::pair<std::string, std::string>> kv;
  void add(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }
  void add(const std::string& k, double v) { kv.emplace_back(k, fmt(v)); }
  void add(const std::string& k, std::uint64_t v) {
    kv.emplace_back(k, std::to_string(v));
  }
  void write(std::ostream& os) const {
    for (const auto& [k, v] : kv) os << "# " << k << ": " << v << "\n";
  }
};

std::string resolve_output(const std::string& flag, const std::string& name) {
  if (!flag.empty()) return flag;
  const char* dir = std::getenv("STFD_OUTPUT_DIR");
  if (dir != nullptr && *dir != '\0') return std::string(dir) + "/" + name;
  return name;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageFailure("cannot open output file: " + path);
  return os;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw UsageFailure("--points must be >= 2 for a grid");
  if (!(b > a)) throw UsageFailure("grid upper bound must exceed lower bound");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] =
        a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  xs.back() = b;
  return xs;
}

// Abscissae for point-or-grid commands: --x alone gives one point, --x with
// --x2 a linspace grid.
std::vector<double> point_or_grid(double x, bool has_x2, double x2,
                                  int points) {
  if (!has_x2) return {x};
  return linspace(x, x2, points);
}

void write_rows(std::ostream& os, const char* header,
                const std::vector<double>& a, const std::vector<double>& b) {
  os << header << "\n";
  for (std::size_t i = 0; i < a.size(); ++i)
    os << fmt(a[i]) << ',' << fmt(b[i]) << '\n';
}

// Step-function polyline through the points (a_n, b_n): hold the previous
// ordinate to the new abscissa (horizontal segment), then jump (vertical
// segment). 2N+1 rows for N steps.
void write_steps(std::ostream& os, const std::vector<double>& a,
                 const std::vector<double>& b) {
  os << "t,x\n";
  os << fmt(a[0]) << ',' << fmt(b[0]) << '\n';
  for (std::size_t i = 1; i < a.size(); ++i) {
    os << fmt(a[i]) << ',' << fmt(b[i - 1]) << '\n';
    os << fmt(a[i]) << ',' << fmt(b[i]) << '\n';
  }
}

int cmd_mlf(double a, double b, double z, bool has_z2, double z2, int points,
            const std::string& out_flag) {
  const specfun::MlParams p(a, b);
  const auto zs = point_or_grid(z, has_z2, z2, points);
  std::vector<double> es(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    es[i] = specfun::mittag_leffler(p, zs[i]);
  Meta m;
  m.add("command", std::string("mlf"));
  m.add("a", a);
  m.add("b", b);
  m.add("z", z);
  if (has_z2) {
    m.add("z2", z2);
    m.add("points", std::uint64_t(points));
  }
  auto os = open_output(resolve_output(out_flag, "mlf.csv"));
  m.write(os);
  write_rows(os, "z,E", zs, es);
  return 0;
}

int cmd_wright(double nu, double x, bool has_x2, double x2, int points,
               const std::string& out_flag) {
  const specfun::WrightOrder o(nu);
  const auto xs = point_or_grid(x, has_x2, x2, points);
  std::vector<double> ms(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    ms[i] = specfun::wright_m(o, xs[i]);
  Meta m;
  m.add("command", std::string("wright"));
  m.add("nu", nu);
  m.add("x", x);
  if (has_x2) {
    m.add("x2", x2);
    m.add("points", std::uint64_t(points));
  }
  auto os = open_output(resolve_output(out_flag, "wright.csv"));
  m.write(os);
  write_rows(os, "x,M", xs, ms);
  return 0;
}

int cmd_stable_pdf(double alpha, double theta, double x, bool has_x2,
                   double x2, int points, const std::string& out_flag) {
  const stable::StableParams p(alpha, theta);
  const auto xs = point_or_grid(x, has_x2, x2, points);
  std::vector<double> ps(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    ps[i] = stable::stable_pdf(p, xs[i]);
  Meta m;
  m.add("command", std::string("stable-pdf"));
  m.add("alpha", alpha);
  m.add("theta", theta);
  m.add("x", x);
  if (has_x2) {
    m.add("x2", x2);
    m.add("points", std::uint64_t(points));
  }
  auto os = open_output(resolve_output(out_flag, "stable_pdf.csv"));
  m.write(os);
  write_rows(os, "x,p", xs, ps);
  return 0;
}

int cmd_green(double alpha, double theta, double beta, double t, double xmin,
              double xmax, int points, double rel_tol, bool force,
              const std::string& out_flag) {
  const subordination::DiffusionParams p(alpha, theta, beta);
  subordination::GreenOptions opt;
  opt.rel_tol = rel_tol;
  opt.force_quadrature = force;
  const auto grid =
      subordination::tabulate_green(p, t, linspace(xmin, xmax, points), opt);
  Meta m;
  m.add("command", std::string("green"));
  m.add("alpha", alpha);
  m.add("theta", theta);
  m.add("beta", beta);
  m.add("t", t);
  m.add("xmin", xmin);
  m.add("xmax", xmax);
  m.add("points", std::uint64_t(points));
  m.add("rel_tol", rel_tol);
  m.add("force_quadrature", std::string(force ? "true" : "false"));
  auto os = open_output(resolve_output(out_flag, "green.csv"));
  m.write(os);
  write_rows(os, "x,u", grid.xs, grid.us);
  const double total = grid.total_mass();
  os << "# trapezoid_mass: " << fmt(grid.trapezoid_mass()) << "\n";
  os << "# tail_mass: " << fmt(grid.tail_mass) << "\n";
  os << "# total_mass: " << fmt(total) << "\n";
  os.flush();
  if (std::fabs(total - 1.0) > 0.01)
    throw MassFailure("density mass check failed: total mass " + fmt(total) +
                      " outside [0.99, 1.01]; refine the grid or widen it");
  return 0;
}

int cmd_drift(double beta, double t, double xmin, double xmax, int points,
              const std::string& out_flag) {
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  const auto xs = linspace(xmin, xmax, points);
  std::vector<double> us(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    us[i] = subordination::drift_green(beta, xs[i], t);
  Meta m;
  m.add("command", std::string("drift"));
  m.add("beta", beta);
  m.add("t", t);
  m.add("xmin", xmin);
  m.add("xmax", xmax);
  m.add("points", std::uint64_t(points));
  double trap = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i)
    trap += 0.5 * (us[i] + us[i - 1]) * (xs[i] - xs[i - 1]);
  const double tb = std::pow(t, -beta);
  double tail = (xmax > 0.0) ? subordination::mwright_tail(beta, xmax * tb)
                             : 1.0;
  if (xmin > 0.0) tail += 1.0 - subordination::mwright_tail(beta, xmin * tb);
  const double total = trap + tail;
  auto os = open_output(resolve_output(out_flag, "drift.csv"));
  m.write(os);
  write_rows(os, "x,u", xs, us);
  os << "# trapezoid_mass: " << fmt(trap) << "\n";
  os << "# tail_mass: " << fmt(tail) << "\n";
  os << "# total_mass: " << fmt(total) << "\n";
  os.flush();
  if (std::fabs(total - 1.0) > 0.01)
    throw MassFailure("density mass check failed: total mass " + fmt(total) +
                      " outside [0.99, 1.01]; refine the grid or widen it");
  return 0;
}

walker::WalkConfig make_config(double alpha, double theta, double beta,
                               double tau_star, std::uint64_t steps,
                               std::uint64_t seed, std::uint64_t traj) {
  return walker::WalkConfig(subordination::DiffusionParams(alpha, theta, beta),
                            tau_star, steps, seed, traj);
}

void add_walk_meta(Meta& m, const walker::WalkConfig& cfg) {
  m.add("alpha", cfg.params.alpha);
  m.add("theta", cfg.params.theta);
  m.add("beta", cfg.params.beta);
  m.add("tau_star", cfg.tau_star);
  m.add("steps", cfg.n_steps);
  m.add("seed", cfg.seed);
  m.add("trajectory_id", cfg.trajectory_id);
  m.add("tau", cfg.tau());
  m.add("h", cfg.h());
}

int cmd_simulate(double alpha, double theta, double beta, double tau_star,
                 std::uint64_t steps, std::uint64_t seed, std::uint64_t traj,
                 const std::string& emit, const std::string& out_flag) {
  const auto cfg = make_config(alpha, theta, beta, tau_star, steps, seed, traj);
  const auto path = walker::simulate_walk(cfg);
  Meta m;
  m.add("command", std::string("simulate"));
  add_walk_meta(m, cfg);
  m.add("emit", emit);
  const std::string default_name =
      (emit == "trajectory") ? "trajectory.csv" : emit + "_steps.csv";
  auto os = open_output(resolve_output(out_flag, default_name));
  m.write(os);
  if (emit == "trajectory") {
    os << "n,t_star,t,x\n";
    for (const auto& s : path.snapshots)
      os << s.n << ',' << fmt(s.t_star) << ',' << fmt(s.t_bar) << ','
         << fmt(s.x_bar) << '\n';
    return 0;
  }
  std::vector<double> a, b;
  a.reserve(path.snapshots.size());
  b.reserve(path.snapshots.size());
  if (emit == "subordinated") {
    for (const auto& s : path.snapshots) a.push_back(s.t_bar);
    for (const auto& s : path.snapshots) b.push_back(s.x_bar);
  } else if (emit == "leading") {
    for (const auto& s : path.snapshots) a.push_back(s.t_star);
    for (const auto& s : path.snapshots) b.push_back(s.t_bar);
  } else if (emit == "parent") {
    for (const auto& s : path.snapshots) a.push_back(s.t_star);
    for (const auto& s : path.snapshots) b.push_back(s.x_bar);
  } else {  // directing
    const auto f = walker::invert_leading(path);
    a = f.knots;
    b = f.values;
  }
  write_steps(os, a, b);
  return 0;
}

int cmd_invert(double alpha, double theta, double beta, double tau_star,
               std::uint64_t steps, std::uint64_t seed, std::uint64_t traj,
               const std::string& out_flag) {
  const auto cfg = make_config(alpha, theta, beta, tau_star, steps, seed, traj);
  const auto f = walker::invert_leading(walker::simulate_walk(cfg));
  Meta m;
  m.add("command", std::string("invert"));
  add_walk_meta(m, cfg);
  auto os = open_output(resolve_output(out_flag, "directing_steps.csv"));
  m.write(os);
  write_steps(os, f.knots, f.values);
  return 0;
}

int cmd_verify(double alpha, double theta, double beta, double t_obs,
               std::uint64_t paths, double tau_star, std::uint64_t seed,
               unsigned workers, double threshold, int grid_points,
               double rel_tol, const std::string& out_flag) {
  const auto start = std::chrono::steady_clock::now();
  const subordination::DiffusionParams p(alpha, theta, beta);
  if (paths < 100) throw UsageFailure("--paths must be >= 100");
  const auto positions = walker::ensemble_positions(
      p, tau_star, t_obs, static_cast<std::size_t>(paths), seed, workers);

  // Reference CDF grid: span the 99.9% envelope of the sample (tail mass
  // beyond the edges is carried analytically), never hit x = 0 where the
  // alpha <= 1 density diverges.
  std::vector<double> mag(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i)
    mag[i] = std::fabs(positions[i]);
  std::sort(mag.begin(), mag.end());
  const double q =
      mag[static_cast<std::size_t>(0.999 * double(mag.size() - 1))];
  const double scale = std::pow(t_obs, beta / alpha);
  const double half_width = std::max(1.5 * q, 4.0 * scale);
  int pts = std::max(grid_points, 51);
  if (alpha <= 1.0 && pts % 2 == 1) ++pts;
  subordination::GreenOptions gopt;
  gopt.rel_tol = rel_tol;
  const auto grid = subordination::tabulate_green(
      p, t_obs, linspace(-half_width, half_width, pts), gopt);
  const double left_tail =
      subordination::green_tail_mass(p, t_obs, grid.xs.front());
  const stats::TabulatedCdf cdf(grid.xs, grid.us, left_tail);
  const double ks =
      stats::ks_one_sample(positions, [&](double x) { return cdf(x); });
  const bool pass = ks < threshold;
  const double runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  nlohmann::ordered_json j;
  j["params"] = {{"alpha", alpha}, {"theta", theta}, {"beta", beta}};
  j["n_paths"] = paths;
  j["tau_star"] = tau_star;
  j["t_obs"] = t_obs;
  j["ks_sup"] = ks;
  j["pass"] = pass;
  j["seed"] = seed;
  j["runtime_s"] = runtime_s;
  j["threshold"] = threshold;
  j["workers"] = workers;
  j["grid_points"] = pts;
  j["grid_half_width"] = half_width;
  j["rel_tol"] = rel_tol;
  auto os = open_output(resolve_output(out_flag, "verify.json"));
  os << j.dump(2) << "\n";
  os.flush();
  std::cout << "verify: ks_sup=" << fmt(ks) << " threshold=" << fmt(threshold)
            << " pass=" << (pass ? "true" : "false") << "\n";
  return pass ? 0 : 1;
}

int cmd_lint(const std::string& file, bool monotone) {
  std::ifstream in(file);
  if (!in) throw UsageFailure("cannot open input file: " + file);
  std::string line;
  std::size_t line_no = 0;
  // Skip metadata comments, then require the step-CSV header.
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    break;
  }
  if (line != "t,x") {
    std::cerr << "lint: " << file << ":" << line_no
              << ": expected header 't,x'\n";
    return 1;
  }
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double t = 0.0, x = 0.0;
    char tail = '\0';
    if (std::sscanf(line.c_str(), "%lf,%lf%c", &t, &x, &tail) != 2) {
      std::cerr << "lint: " << file << ":" << line_no << ": malformed row\n";
      return 1;
    }
    rows.emplace_back(t, x);
  }
  if (rows.empty()) {
    std::cerr << "lint: " << file << ": no data rows\n";
    return 1;
  }
  // Structure: horizontal and vertical segments strictly alternating,
  // starting horizontal; time never decreases. Exact duplicates are
  // tolerated as degenerate segments.
  int expect_horizontal = 1;
  std::size_t horizontals = 0, verticals = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double dt = rows[i].first - rows[i - 1].first;
    const double dx = rows[i].second - rows[i - 1].second;
    if (dt < 0.0) {
      std::cerr << "lint: " << file << ": segment " << i
                << ": time decreases\n";
      return 1;
    }
    if (monotone && dx < 0.0) {
      std::cerr << "lint: " << file << ": segment " << i
                << ": ordinate decreases on a monotone path\n";
      return 1;
    }
    if (dt == 0.0 && dx == 0.0) continue;
    const bool horizontal = (dt > 0.0 && dx == 0.0);
    const bool vertical = (dt == 0.0 && dx != 0.0);
    if (!horizontal && !vertical) {
      std::cerr << "lint: " << file << ": segment " << i
                << ": diagonal segment (both t and x change)\n";
      return 1;
    }
    if (horizontal != (expect_horizontal == 1)) {
      std::cerr << "lint: " << file << ": segment " << i << ": expected a "
                << (expect_horizontal ? "horizontal" : "vertical")
                << " segment\n";
      return 1;
    }
    expect_horizontal = horizontal ? 0 : 1;
    horizontals += horizontal ? 1 : 0;
    verticals += vertical ? 1 : 0;
  }
  std::cout << "lint: ok (" << horizontals << " horizontal, " << verticals
            << " vertical segments)\n";
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"space-time fractional diffusion toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // mlf
  double ml_a = 0, ml_b = 1.0, ml_z = 0, ml_z2 = 0;
  int ml_points = 101;
  std::string ml_out, ml_format = "csv";
  auto* mlf = app.add_subcommand(
      "mlf", "evaluate the Mittag-Leffler function E_{a,b}(z)");
  mlf->add_option("--a", ml_a, "first order parameter, > 0")->required();
  mlf->add_option("--b", ml_b, "second parameter")->capture_default_str();
  mlf->add_option("--z", ml_z, "argument (grid start with --z2)")->required();
  auto* ml_z2_opt = mlf->add_option("--z2", ml_z2, "grid end");
  mlf->add_option("--points", ml_points, "grid size with --z2")->capture_default_str();
  mlf->add_option("--output", ml_out, "output file path");
  mlf->add_option("--format", ml_format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"csv"}));
  mlf->callback([&]() {
    rc = cmd_mlf(ml_a, ml_b, ml_z, ml_z2_opt->count() > 0, ml_z2, ml_points,
                 ml_out);
  });

  // wright
  double w_nu = 0, w_x = 0, w_x2 = 0;
  int w_points = 101;
  std::string w_out, w_format = "csv";
  auto* wright = app.add_subcommand(
      "wright", "evaluate the M-Wright function M_nu(x)");
  wright->add_option("--nu", w_nu, "order in (0, 1)")->required();
  wright->add_option("--x", w_x, "argument (grid start with --x2)")
      ->required();
  auto* w_x2_opt = wright->add_option("--x2", w_x2, "grid end");
  wright->add_option("--points", w_points, "grid size with --x2")->capture_default_str();
  wright->add_option("--output", w_out, "output file path");
  wright->add_option("--format", w_format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"csv"}));
  wright->callback([&]() {
    rc = cmd_wright(w_nu, w_x, w_x2_opt->count() > 0, w_x2, w_points, w_out);
  });

  // stable-pdf
  double s_alpha = 0, s_theta = 0, s_x = 0, s_x2 = 0;
  int s_points = 101;
  std::string s_out, s_format = "csv";
  auto* spdf = app.add_subcommand(
      "stable-pdf", "evaluate a stable density in the Feller parameterization");
  spdf->add_option("--alpha", s_alpha, "stability order in (0, 2]")
      ->required();
  spdf->add_option("--theta", s_theta, "skewness, |theta| <= min(alpha, 2-alpha)")->capture_default_str();
  spdf->add_option("--x", s_x, "argument (grid start with --x2)")->required();
  auto* s_x2_opt = spdf->add_option("--x2", s_x2, "grid end");
  spdf->add_option("--points", s_points, "grid size with --x2")->capture_default_str();
  spdf->add_option("--output", s_out, "output file path");
  spdf->add_option("--format", s_format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"csv"}));
  spdf->callback([&]() {
    rc = cmd_stable_pdf(s_alpha, s_theta, s_x, s_x2_opt->count() > 0, s_x2,
                        s_points, s_out);
  });

  // green
  double g_alpha = 0, g_theta = 0, g_beta = 0, g_t = 0, g_xmin = 0, g_xmax = 0;
  int g_points = 201;
  double g_rel_tol = 1e-6;
  bool g_force = false;
  std::string g_out, g_format = "csv";
  auto* green = app.add_subcommand(
      "green", "tabulate the space-time fractional diffusion Green function");
  green->add_option("--alpha", g_alpha, "spatial order in (0, 2]")->required();
  green->add_option("--theta", g_theta, "spatial skewness")->capture_default_str();
  green->add_option("--beta", g_beta, "temporal order in (0, 1]")->required();
  green->add_option("--t", g_t, "time, > 0")->required();
  green->add_option("--xmin", g_xmin, "grid start")->required();
  green->add_option("--xmax", g_xmax, "grid end")->required();
  green->add_option("--points", g_points, "grid size")->capture_default_str();
  green->add_option("--rel-tol", g_rel_tol, "quadrature relative tolerance")->capture_default_str();
  green->add_flag("--force-quadrature", g_force,
                  "run the subordination quadrature even where a closed form "
                  "exists");
  green->add_option("--output", g_out, "output file path");
  green->add_option("--format", g_format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"csv"}));
  green->callback([&]() {
    rc = cmd_green(g_alpha, g_theta, g_beta, g_t, g_xmin, g_xmax, g_points,
                   g_rel_tol, g_force, g_out);
  });

  // drift
  double d_beta = 0, d_t = 0, d_xmin = 0, d_xmax = 0;
  int d_points = 201;
  std::string d_out, d_format = "csv";
  auto* drift = app.add_subcommand(
      "drift", "tabulate the time-fractional drift fundamental solution");
  drift->add_option("--beta", d_beta, "temporal order in (0, 1)")->required();
  drift->add_option("--t", d_t, "time, > 0")->required();
  drift->add_option("--xmin", d_xmin, "grid start")->capture_default_str();
  drift->add_option("--xmax", d_xmax, "grid end")->required();
  drift->add_option("--points", d_points, "grid size")->capture_default_str();
  drift->add_option("--output", d_out, "output file path");
  drift->add_option("--format", d_format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"csv"}));
  drift->callback([&]() {
    rc = cmd_drift(d_beta, d_t, d_xmin, d_xmax, d_points, d_out);
  });

  // simulate
  double sim_alpha = 0, sim_theta = 0, sim_beta = 0, sim_tau = 0;
  std::uint64_t sim_steps = 0, sim_seed = 0, sim_traj = 0;
  std::string sim_emit = "trajectory", sim_out, sim_format = "csv";
  auto* simulate = app.add_subcommand(
      "simulate", "simulate one subordinated random-walk trajectory");
  simulate->add_option("--alpha", sim_alpha, "spatial order in (0, 2]")
      ->required();
  simulate->add_option("--theta", sim_theta, "spatial skewness")->capture_default_str();
  simulate->add_option("--beta", sim_beta, "temporal order in (0, 1]")
      ->required();
  simulate->add_option("--tau-star", sim_tau, "operational step, > 0")
      ->required();
  simulate->add_option("--steps", sim_steps, "number of steps, >= 1")
      ->required();
  simulate->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
  simulate->add_option("--trajectory-id", sim_traj, "RNG sub-stream")->capture_default_str();
  simulate
      ->add_option("--emit", sim_emit,
                   "trajectory | subordinated | leading | parent | directing")->capture_default_str()
      ->check(CLI::IsMember(
          {"trajectory", "subordinated", "leading", "parent", "directing"}));
  simulate->add_option("--output", sim_out, "output file path");
  simulate->add_option("--format", sim_format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"csv"}));
  simulate->callback([&]() {
    rc = cmd_simulate(sim_alpha, sim_theta, sim_beta, sim_tau, sim_steps,
                      sim_seed, sim_traj, sim_emit, sim_out);
  });

  // invert
  double inv_alpha = 0, inv_theta = 0, inv_beta = 0, inv_tau = 0;
  std::uint64_t inv_steps = 0, inv_seed = 0, inv_traj = 0;
  std::string inv_out, inv_format = "csv";
  auto* invert = app.add_subcommand(
      "invert",
      "simulate a leading walk and emit the inverted (directing) step "
      "function");
  invert->add_option("--alpha", inv_alpha, "spatial order in (0, 2]")
      ->required();
  invert->add_option("--theta", inv_theta, "spatial skewness")->capture_default_str();
  invert->add_option("--beta", inv_beta, "temporal order in (0, 1]")
      ->required();
  invert->add_option("--tau-star", inv_tau, "operational step, > 0")
      ->required();
  invert->add_option("--steps", inv_steps, "number of steps, >= 1")
      ->required();
  invert->add_option("--seed", inv_seed, "RNG seed")->capture_default_str();
  invert->add_option("--trajectory-id", inv_traj, "RNG sub-stream")->capture_default_str();
  invert->add_option("--output", inv_out, "output file path");
  invert->add_option("--format", inv_format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"csv"}));
  invert->callback([&]() {
    rc = cmd_invert(inv_alpha, inv_theta, inv_beta, inv_tau, inv_steps,
                    inv_seed, inv_traj, inv_out);
  });

  // verify
  double v_alpha = 0, v_theta = 0, v_beta = 0, v_t = 0, v_tau = 0;
  std::uint64_t v_paths = 0, v_seed = 0;
  unsigned v_workers = 0;
  double v_threshold = 0.01, v_rel_tol = 1e-6;
  int v_grid_points = 2001;
  std::string v_out, v_format = "json";
  auto* verify = app.add_subcommand(
      "verify",
      "Monte Carlo vs quadrature: KS test of simulated positions against "
      "the tabulated Green function CDF");
  verify->add_option("--alpha", v_alpha, "spatial order in (0, 2]")
      ->required();
  verify->add_option("--theta", v_theta, "spatial skewness")->capture_default_str();
  verify->add_option("--beta", v_beta, "temporal order in (0, 1]")
      ->required();
  verify->add_option("--t", v_t, "observation time, > 0")->required();
  verify->add_option("--paths", v_paths, "ensemble size, >= 100")->required();
  verify->add_option("--tau-star", v_tau, "operational step, > 0")
      ->required();
  verify->add_option("--seed", v_seed, "RNG seed")->capture_default_str();
  verify->add_option("--workers", v_workers,
                     "worker threads (0 = hardware)")->capture_default_str();
  verify->add_option("--threshold", v_threshold, "KS pass threshold")->capture_default_str();
  verify->add_option("--grid-points", v_grid_points,
                     "reference CDF grid size")->capture_default_str();
  verify->add_option("--rel-tol", v_rel_tol,
                     "quadrature relative tolerance")->capture_default_str();
  verify->add_option("--output", v_out, "output file path");
  verify->add_option("--format", v_format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"json"}));
  verify->callback([&]() {
    rc = cmd_verify(v_alpha, v_theta, v_beta, v_t, v_paths, v_tau, v_seed,
                    v_workers, v_threshold, v_grid_points, v_rel_tol, v_out);
  });

  // lint
  std::string lint_file;
  bool lint_monotone = false;
  auto* lint = app.add_subcommand(
      "lint", "validate step-function CSV structure (alternating "
              "horizontal/vertical segments)");
  lint->add_option("--file", lint_file, "step CSV to validate")->required();
  lint->add_flag("--monotone", lint_monotone,
                 "additionally require a non-decreasing ordinate");
  lint->callback([&]() { rc = cmd_lint(lint_file, lint_monotone); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DiracLimitError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what()
              << " (achieved error " << fmt(e.achieved_error())
              << ", best value " << fmt(e.best_value()) << ")\n";
    return 4;
  } catch (const MassFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace stfd::cli
