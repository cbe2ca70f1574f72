// cvc3: curvature analysis of left-invariant metrics on 3-dimensional Lie
// groups with constant vector curvature.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "cvc/adapted_frame.hpp"
#include "cvc/error.hpp"
#include "cvc/families.hpp"
#include "cvc/geodesic_ode.hpp"
#include "cvc/jacobi_rank.hpp"
#include "cvc/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

struct FamilyFlags {
  std::string variant;
  double mu = 1.0;
  double c = 0.0;
  double f = 0.0;
  double g = 0.0;
  double kappa = 1.0;
  double epsilon = -1.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("variant", variant,
                    "cvc1-type1 | cvc1-type2 | cvc1-nonunimodular | cvc-minus1 | "
                    "cvc0-product | cvc0-solvable | space-form")
        ->required();
    cmd->add_option("--mu", mu, "mu (cvc1-type1, cvc-minus1)");
    cmd->add_option("--c", c, "c (cvc1-type2)");
    cmd->add_option("--f", f, "f (cvc1-nonunimodular, cvc0-solvable)");
    cmd->add_option("--g", g, "g (cvc1-nonunimodular, cvc0-solvable)");
    cmd->add_option("--kappa", kappa, "kappa in {-1, 1} (cvc0-product)");
    cmd->add_option("--epsilon", epsilon, "curvature (space-form)");
  }

  cvc::FamilySpec spec() const {
    const auto v = cvc::family_variant_from_string(variant);
    if (!v) throw cvc::Error(cvc::ErrorCode::ParameterOutOfRange, "unknown variant '" + variant + "'");
    cvc::FamilySpec s;
    s.variant = *v;
    s.mu = mu;
    s.c = c;
    s.f = f;
    s.g = g;
    s.kappa = kappa;
    s.epsilon = epsilon;
    return s;
  }
};

int exit_code_for(const cvc::Error& e) {
  return e.code() == cvc::ErrorCode::EllNonpositive ? kExitInfeasible : kExitInput;
}

int run_report(const std::string& path, const std::string& eps_flag, double tol, int samples,
               std::uint64_t seed, const std::string& format) {
  cvc::ReportOptions opt;
  opt.tol = tol;
  opt.samples = samples;
  opt.seed = seed;
  if (eps_flag != "all") opt.epsilons = {std::stod(eps_flag)};
  const cvc::InputDocument in = cvc::load_input(path);
  const nlohmann::json rep = cvc::build_report(in, opt);
  if (format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << cvc::render_text(rep);
  }
  return kExitOk;
}

int run_family(const FamilyFlags& flags, const std::string& out) {
  const cvc::FamilyModel model = cvc::build(flags.spec());
  const std::string text = cvc::family_document(model).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw cvc::Error(cvc::ErrorCode::MalformedInput, "cannot write '" + out + "'");
    os << text;
  }
  return kExitOk;
}

struct OdeFlags {
  int epsilon = -1;
  double trA0 = 0.0;
  double detA0 = 0.0;
  std::optional<double> lambda0;
  cvc::FrameInitial init;
  double t_min = -3.0;
  double t_max = 3.0;
  double step = 1e-3;
  std::string out;
};

int run_ode(const OdeFlags& flags) {
  const cvc::EllParams p{flags.epsilon, flags.trA0, flags.detA0};
  cvc::FrameInitial init = flags.init;
  init.lambda0 = flags.lambda0.value_or(flags.epsilon + 1.0);
  const cvc::OdeTrajectory traj =
      cvc::integrate_frame_ode(p, init, flags.t_min, flags.t_max, flags.step);

  std::ostream& info = flags.out.empty() ? std::cerr : std::cout;
  if (flags.out.empty()) {
    cvc::write_csv(std::cout, traj);
  } else {
    std::ofstream os(flags.out, std::ios::binary);
    if (!os) throw cvc::Error(cvc::ErrorCode::MalformedInput, "cannot write '" + flags.out + "'");
    cvc::write_csv(os, traj);
  }
  if (flags.epsilon == -1) {
    if (cvc::admissible_minus1(flags.trA0, flags.detA0)) {
      info << "asymptotic class: "
           << cvc::to_string(cvc::asymptotic_class_minus1(flags.trA0, flags.detA0)) << "\n";
    } else {
      info << "asymptotic class: none (l vanishes outside the span)\n";
    }
  }
  return kExitOk;
}

cvc::Vec3 direction_for(const cvc::FamilyModel& model, const std::string& dir) {
  if (dir == "e1") return cvc::Vec3::UnitX();
  if (dir == "e2") return cvc::Vec3::UnitY();
  if (dir == "e3") return cvc::Vec3::UnitZ();
  // auto: first frame vector whose integral curve is a geodesic
  for (int i = 0; i < 3; ++i) {
    try {
      cvc::jacobi_system(model, cvc::Vec3::Unit(i));
      return cvc::Vec3::Unit(i);
    } catch (const cvc::Error& e) {
      if (e.code() != cvc::ErrorCode::NotGeodesicDirection) throw;
    }
  }
  throw cvc::Error(cvc::ErrorCode::NotGeodesicDirection, "no frame vector is a geodesic direction");
}

int run_rank(const FamilyFlags& flags, const std::string& dir, double t_max, double tol) {
  const cvc::FamilyModel model = cvc::build(flags.spec());
  const cvc::Vec3 d = direction_for(model, dir);
  cvc::RankOptions opt;
  opt.t_max = t_max;
  opt.tol = tol;
  const cvc::RankVerdict v = cvc::hyperbolic_rank_test(model, d, opt);
  std::cout << model.name << " along (" << d.transpose() << "): "
            << (v.has_hyperbolic_rank_witness ? "witness found" : "no witness") << "\n"
            << "max_sec_deviation = " << cvc::format_double(v.max_sec_deviation) << "\n"
            << "rms_sec_deviation = " << cvc::format_double(v.rms_sec_deviation) << "\n";
  if (v.witness) {
    std::cout << "witness J(0) = (" << v.witness->J.transpose() << "), J'(0) = ("
              << v.witness->Jprime.transpose() << ")\n";
  }
  return kExitOk;
}

int run_verify(const std::string& path, double epsilon, std::optional<double> lambda, double tol) {
  const cvc::InputDocument in = cvc::load_input(path);
  if (!in.table) {
    throw cvc::Error(cvc::ErrorCode::MalformedInput, "verify expects a christoffel_table file");
  }
  const cvc::ChristoffelTable& t = *in.table;
  // Default lambda: the value that makes the first equation hold.
  const double lam = lambda.value_or(
      -(t.f * t.f + t.g * t.g + t.c * (t.a12 - t.a21) + t.a11 * t.a22 - t.a12 * t.a21));
  const auto res = cvc::verify_homogeneous(t, epsilon, lam);
  bool ok = true;
  std::cout << "epsilon = " << cvc::format_double(epsilon) << "\n"
            << "lambda = " << cvc::format_double(lam) << "\n";
  for (std::size_t i = 0; i < res.size(); ++i) {
    const bool pass = std::abs(res[i]) <= tol;
    ok = ok && pass;
    std::cout << cvc::kHomogeneousEquationNames[i] << " = " << cvc::format_double(res[i])
              << (pass ? "" : "  FAIL") << "\n";
  }
  std::cout << (ok ? "homogeneous cvc solution" : "not a homogeneous cvc solution") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant vector curvature analysis of 3-dimensional metric Lie algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cvc::kToolVersion));

  std::string report_path, eps_flag = "all", format = "text";
  double report_tol = 1e-8;
  int samples = 500;
  std::uint64_t seed = 42;
  auto* report = app.add_subcommand("report", "Analyse a metric_lie_algebra, christoffel_table or family file");
  report->add_option("path", report_path, "input JSON file")->required();
  report->add_option("--epsilon", eps_flag, "all | -1 | 0 | 1")
      ->check(CLI::IsMember({"all", "-1", "0", "1"}));
  report->add_option("--tol", report_tol, "tolerance for equality with epsilon");
  report->add_option("--samples", samples, "unit vectors sampled by the brute-force check")
      ->check(CLI::PositiveNumber);
  report->add_option("--seed", seed, "sampler seed");
  report->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  FamilyFlags family_flags;
  std::string family_out;
  auto* family = app.add_subcommand("family", "Write a model of a homogeneous cvc family");
  family_flags.add_to(family);
  family->add_option("--out", family_out, "output path (stdout if omitted)");

  OdeFlags ode_flags;
  auto* ode = app.add_subcommand("ode", "Integrate the frame system along an e3-geodesic");
  ode->add_option("--epsilon", ode_flags.epsilon, "-1 | 0 | 1")->check(CLI::IsMember({-1, 0, 1}));
  ode->add_option("--trA0", ode_flags.trA0, "tr A at t = 0");
  ode->add_option("--detA0", ode_flags.detA0, "det A at t = 0");
  ode->add_option("--lambda0", ode_flags.lambda0, "lambda at t = 0 (default epsilon + 1)");
  ode->add_option("--b0", ode_flags.init.b0, "b at t = 0");
  ode->add_option("--sigma0", ode_flags.init.sigma0, "sigma at t = 0");
  ode->add_option("--tau0", ode_flags.init.tau0, "tau at t = 0");
  ode->add_option("--c", ode_flags.init.c, "c (constant)");
  ode->add_option("--f0", ode_flags.init.f0, "f at t = 0");
  ode->add_option("--g0", ode_flags.init.g0, "g at t = 0");
  ode->add_option("--t-min", ode_flags.t_min, "start of the span");
  ode->add_option("--t-max", ode_flags.t_max, "end of the span");
  ode->add_option("--step", ode_flags.step, "RK4 step")->check(CLI::PositiveNumber);
  ode->add_option("--out", ode_flags.out, "CSV path (stdout if omitted)");

  FamilyFlags rank_flags;
  std::string rank_dir = "auto";
  double rank_t_max = 3.0, rank_tol = 1e-6;
  auto* rank = app.add_subcommand("rank", "Search for a Jacobi field with sec = -1 along a geodesic");
  rank_flags.add_to(rank);
  rank->add_option("--dir", rank_dir, "auto | e1 | e2 | e3")
      ->check(CLI::IsMember({"auto", "e1", "e2", "e3"}));
  rank->add_option("--t-max", rank_t_max, "length of the geodesic segment")->check(CLI::PositiveNumber);
  rank->add_option("--tol", rank_tol, "RMS deviation threshold");

  std::string verify_path;
  double verify_eps = 1.0, verify_tol = 1e-8;
  std::optional<double> verify_lambda;
  auto* verify = app.add_subcommand("verify", "Check the homogeneous curvature equations for a table");
  verify->add_option("path", verify_path, "christoffel_table JSON file")->required();
  verify->add_option("--epsilon", verify_eps, "curvature of planes through e3");
  verify->add_option("--lambda", verify_lambda, "curvature of the plane orthogonal to e3");
  verify->add_option("--tol", verify_tol, "residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*report) return run_report(report_path, eps_flag, report_tol, samples, seed, format);
    if (*family) return run_family(family_flags, family_out);
    if (*ode) return run_ode(ode_flags);
    if (*rank) return run_rank(rank_flags, rank_dir, rank_t_max, rank_tol);
    if (*verify) return run_verify(verify_path, verify_eps, verify_lambda, verify_tol);
  } catch (const cvc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitInput;
}
