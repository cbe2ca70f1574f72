#include "cvc/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cvc/adapted_frame.hpp"
#include "cvc/connection_curvature.hpp"
#include "cvc/cvc_analysis.hpp"
#include "cvc/error.hpp"

namespace cvc {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

// Rounding noise below this is written as zero.
constexpr double kChop = 1e-13;

double chop(double x) { return std::abs(x) < kChop ? 0.0 : x; }

json vec_json(const Vec3& v) { return json::array({chop(v(0)), chop(v(1)), chop(v(2))}); }

json mat_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(vec_json(m.row(i).transpose()));
  return rows;
}

json tensor_json(const Tensor3& c) {
  json out = json::array();
  for (const auto& plane : c) {
    json rows = json::array();
    for (const auto& row : plane) rows.push_back(json::array({chop(row[0]), chop(row[1]), chop(row[2])}));
    out.push_back(rows);
  }
  return out;
}

double number_field(const json& doc, const char* key) {
  if (!doc.contains(key)) malformed(std::string("missing field '") + key + "'");
  if (!doc.at(key).is_number()) malformed(std::string("field '") + key + "' must be a number");
  return doc.at(key).get<double>();
}

FamilySpec parse_family(const json& doc) {
  if (!doc.contains("variant") || !doc.at("variant").is_string()) malformed("family needs a 'variant' string");
  const std::string name = doc.at("variant").get<std::string>();
  const auto variant = family_variant_from_string(name);
  if (!variant) malformed("unknown family variant '" + name + "'");
  const json params = doc.value("parameters", json::object());
  if (!params.is_object()) malformed("'parameters' must be an object");
  switch (*variant) {
    case FamilyVariant::CVC1_TYPE_I: return FamilySpec::type1(number_field(params, "mu"));
    case FamilyVariant::CVC1_TYPE_II: return FamilySpec::type2(number_field(params, "c"));
    case FamilyVariant::CVC1_NONUNIMODULAR:
      return FamilySpec::nonunimodular(number_field(params, "f"), number_field(params, "g"));
    case FamilyVariant::CVC_MINUS1: return FamilySpec::minus1(number_field(params, "mu"));
    case FamilyVariant::CVC0_PRODUCT: return FamilySpec::product(number_field(params, "kappa"));
    case FamilyVariant::CVC0_SOLVABLE:
      return FamilySpec::solvable(number_field(params, "f"), number_field(params, "g"));
    case FamilyVariant::SPACE_FORM: return FamilySpec::space_form(number_field(params, "epsilon"));
  }
  malformed("unknown family variant");
}

}  // namespace

InputDocument parse_input(const json& doc) {
  if (!doc.is_object()) malformed("top level must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) malformed("missing 'kind'");
  InputDocument in;
  in.kind = doc.at("kind").get<std::string>();
  if (doc.contains("metadata")) {
    if (!doc.at("metadata").is_object()) malformed("'metadata' must be an object");
    in.metadata = doc.at("metadata");
  }
  try {
    if (in.kind == "metric_lie_algebra") {
      if (!doc.contains("structure_constants")) malformed("missing field 'structure_constants'");
      if (!doc.contains("gram")) malformed("missing field 'gram'");
      in.algebra = MetricLieAlgebra::from_nested(
          doc.at("structure_constants").get<std::vector<std::vector<std::vector<double>>>>(),
          doc.at("gram").get<std::vector<std::vector<double>>>());
    } else if (in.kind == "christoffel_table") {
      ChristoffelTable t;
      t.a11 = number_field(doc, "a11");
      t.a12 = number_field(doc, "a12");
      t.a21 = number_field(doc, "a21");
      t.a22 = number_field(doc, "a22");
      t.f = number_field(doc, "f");
      t.g = number_field(doc, "g");
      t.c = number_field(doc, "c");
      in.table = t;
    } else if (in.kind == "family") {
      in.family = parse_family(doc);
    } else {
      malformed("unknown kind '" + in.kind + "'");
    }
  } catch (const json::exception& e) {
    malformed(std::string("bad value: ") + e.what());
  }
  return in;
}

InputDocument load_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) malformed("cannot open '" + path + "'");
  json doc;
  try {
    is >> doc;
  } catch (const json::exception& e) {
    malformed("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_input(doc);
}

json table_to_json(const ChristoffelTable& t) {
  return json{{"kind", "christoffel_table"}, {"a11", t.a11}, {"a12", t.a12}, {"a21", t.a21},
              {"a22", t.a22},                {"f", t.f},     {"g", t.g},     {"c", t.c}};
}

json family_parameters(const FamilySpec& s) {
  switch (s.variant) {
    case FamilyVariant::CVC1_TYPE_I:
    case FamilyVariant::CVC_MINUS1: return {{"mu", s.mu}};
    case FamilyVariant::CVC1_TYPE_II: return {{"c", s.c}};
    case FamilyVariant::CVC1_NONUNIMODULAR:
    case FamilyVariant::CVC0_SOLVABLE: return {{"f", s.f}, {"g", s.g}};
    case FamilyVariant::CVC0_PRODUCT: return {{"kappa", s.kappa}};
    case FamilyVariant::SPACE_FORM: return {{"epsilon", s.epsilon}};
  }
  return json::object();
}

json family_document(const FamilyModel& model) {
  const json family{{"variant", std::string(to_string(model.spec.variant))},
                    {"parameters", family_parameters(model.spec)}};
  if (!model.algebra) {
    json doc = family;
    doc["kind"] = "family";
    doc["metadata"] = {{"name", model.name}};
    return doc;
  }
  return json{{"kind", "metric_lie_algebra"},
              {"structure_constants", tensor_json(model.algebra->structure_constants)},
              {"gram", mat_json(model.algebra->gram)},
              {"metadata",
               {{"name", model.name},
                {"family", family},
                {"no_finite_volume_quotient", model.no_finite_volume_quotient}}}};
}

namespace {

// Adapted table at e3 in normal form: b >= 0, then A0 diagonal with positive
// first entry, or, when A0 vanishes, (f, g) rotated onto (|(f, g)|, 0).
std::optional<ChristoffelTable> normal_form(const MetricLieAlgebra& ortho, const Vec3& e3) {
  const AdaptedFrame frame = adapted_frame(ortho, e3);
  if (frame.mismatch > 1e-6) return std::nullopt;
  ChristoffelTable t = frame.table;
  if (decompose(t).b < 0.0) t = flip_e3(t);
  const ADecomposition d = decompose(t);
  if (d.sigma * d.sigma + d.tau * d.tau > 1e-14) {
    t = rotate_frame(t, canonical_frame_angle(d));
  } else {
    t = rotate_frame(t, std::atan2(t.g, t.f));
  }
  return t;
}

bool same_normal_form(const ChristoffelTable& x, const ChristoffelTable& y, double tol) {
  const double fx = x.f * x.f + x.g * x.g;
  const double fy = y.f * y.f + y.g * y.g;
  return std::abs(x.a11 - y.a11) <= tol && std::abs(x.a12 - y.a12) <= tol &&
         std::abs(x.a21 - y.a21) <= tol && std::abs(x.a22 - y.a22) <= tol &&
         std::abs(x.c - y.c) <= tol && std::abs(fx - fy) <= tol;
}

std::optional<FamilySpec> candidate_for(double eps, const ChristoffelTable& nf, double tol) {
  const ADecomposition d = decompose(nf);
  const double fg = nf.f * nf.f + nf.g * nf.g;
  if (eps == 1.0) {
    if (std::abs(d.sigma) <= tol) {
      return fg <= tol * tol ? FamilySpec::type2(nf.c) : FamilySpec::nonunimodular(std::sqrt(fg), 0.0);
    }
    if (d.b > 0.0) {
      const double alpha = d.sigma / d.b;
      if (alpha > 0.0 && alpha < 1.0) return FamilySpec::type1(type1_mu_from_alpha(alpha));
    }
    return std::nullopt;
  }
  if (eps == -1.0) {
    const double mu = d.sigma + d.b;
    if (mu >= 1.0 - tol) return FamilySpec::minus1(std::max(mu, 1.0));
    return std::nullopt;
  }
  if (fg > tol * tol) return FamilySpec::solvable(std::sqrt(fg), 0.0);
  return std::nullopt;
}

}  // namespace

std::optional<FamilyMatch> match_family(const MetricLieAlgebra& ortho, const CurvatureData& cd,
                                        double tol) {
  const Vec3& tri = cd.lambda_triple;
  if (tri.maxCoeff() - tri.minCoeff() <= tol) {
    const FamilyModel m = build(FamilySpec::space_form(chop(tri.mean())));
    return FamilyMatch{m.spec, m.name, m.no_finite_volume_quotient};
  }
  for (double eps : {-1.0, 0.0, 1.0}) {
    const CvcReport rep = cvc_status(cd, eps);
    if (!rep.e3_direction) continue;
    const auto nf = normal_form(ortho, *rep.e3_direction);
    if (!nf) continue;
    const auto spec = candidate_for(eps, *nf, tol);
    if (!spec) continue;
    FamilyModel cand;
    try {
      cand = build(*spec);
    } catch (const Error&) {
      continue;
    }
    const CvcReport cand_rep = cvc_status(cand.curvature, eps);
    if (!cand_rep.e3_direction) continue;
    const auto cand_nf = normal_form(*cand.algebra, *cand_rep.e3_direction);
    if (!cand_nf || !same_normal_form(*nf, *cand_nf, tol)) continue;
    return FamilyMatch{cand.spec, cand.name, cand.no_finite_volume_quotient};
  }
  return std::nullopt;
}

json build_report(const InputDocument& input, const ReportOptions& opt) {
  json rep;
  rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  rep["seed"] = opt.seed;
  rep["tolerances"] = {{"tol", opt.tol},
                       {"sampled_tol", kSampledTol},
                       {"samples", opt.samples},
                       {"angles", opt.angles}};
  rep["input"] = {{"kind", input.kind}, {"metadata", input.metadata}};

  std::optional<MetricLieAlgebra> algebra = input.algebra;
  std::optional<FamilyModel> family_model;
  if (input.table) {
    rep["input"]["table"] = table_to_json(*input.table);
    try {
      algebra = christoffel_to_brackets(*input.table);
    } catch (const Error& e) {
      malformed(std::string("jacobi_identity: ") + e.what());
    }
  }
  if (input.family) {
    rep["input"]["family"] = {{"variant", std::string(to_string(input.family->variant))},
                              {"parameters", family_parameters(*input.family)}};
    family_model = build(*input.family);
    algebra = family_model->algebra;
  }

  CurvatureData cd;
  Mat3 to_input = Mat3::Identity();
  std::optional<MetricLieAlgebra> ortho;
  json residuals;
  if (algebra) {
    const ValidationReport v = validate(*algebra);
    rep["validation"] = {{"antisymmetry", v.antisymmetry},
                         {"jacobi_identity", v.jacobi},
                         {"gram_symmetry", v.gram_symmetry},
                         {"gram_min_eigenvalue", v.gram_min_eigenvalue},
                         {"pass", v.pass()}};
    if (!v.pass()) {
      std::ostringstream os;
      os << v.first_failure() << " violated (antisymmetry " << v.antisymmetry << ", jacobi "
         << v.jacobi << ", gram min eigenvalue " << v.gram_min_eigenvalue << ")";
      malformed(os.str());
    }
    to_input = orthonormal_basis(algebra->gram);
    ortho = orthonormalize(*algebra);
    const ConnectionCoefficients conn = levi_civita(*ortho);
    cd = riemann_tensor(conn, *ortho);
    const ConnectionResiduals cr = connection_residuals(conn, *ortho);
    residuals["metric_compatibility"] = cr.metric_compatibility;
    residuals["torsion"] = cr.torsion;
  } else {
    rep["validation"] = nullptr;
    cd = family_model->curvature;
  }

  const CurvatureResiduals kr = curvature_residuals(cd);
  residuals["antisymmetry"] = kr.antisymmetry;
  residuals["pair_symmetry"] = kr.pair_symmetry;
  residuals["bianchi"] = kr.bianchi;
  residuals["scalar_identity"] = kr.scalar_identity;
  residuals["ricci_spectrum"] = kr.ricci_spectrum;
  rep["residuals"] = residuals;

  rep["curvature"] = {{"lambda_triple", vec_json(cd.lambda_triple)},
                      {"ricci_eigenvalues", vec_json(cd.ricci_eigenvalues)},
                      {"scalar", chop(cd.scalar)},
                      {"sec_range", json::array({chop(cd.lambda_triple.minCoeff()),
                                                 chop(cd.lambda_triple.maxCoeff())})}};

  BruteforceOptions bf;
  bf.n_vectors = opt.samples;
  bf.n_angles = opt.angles;
  bf.seed = opt.seed;
  json verdicts = json::array();
  for (double eps : opt.epsilons) {
    const CvcReport r = cvc_status(cd, eps, opt.tol);
    json entry{{"epsilon", eps},
               {"is_cvc", r.is_cvc},
               {"extremality", std::string(to_string(r.extremality))},
               {"isotropic", r.isotropic},
               {"lambda", nullptr},
               {"e3_direction", nullptr},
               {"bruteforce", cvc_bruteforce(cd, eps, bf)}};
    if (r.lambda) entry["lambda"] = chop(*r.lambda);
    if (r.e3_direction) {
      // Express e3 in the input basis, not in the Gram-Schmidt one.
      entry["e3_direction"] = vec_json(to_input * *r.e3_direction);
    }
    verdicts.push_back(entry);
  }
  rep["cvc"] = verdicts;

  if (ortho) {
    const MilnorForm mf = milnor_map(*ortho);
    rep["milnor"] = {{"L", mat_json(mf.L)},
                     {"unimodular", mf.unimodular},
                     {"eigenvalues", vec_json(mf.eigenvalues)},
                     {"group", std::string(to_string(mf.group_label))}};
  } else {
    rep["milnor"] = nullptr;
  }

  std::optional<FamilyMatch> match;
  if (ortho) {
    match = match_family(*ortho, cd);
  } else if (family_model) {
    match = FamilyMatch{family_model->spec, family_model->name,
                        family_model->no_finite_volume_quotient};
  }
  if (match) {
    rep["family_match"] = {{"variant", std::string(to_string(match->spec.variant))},
                           {"name", match->name},
                           {"parameters", family_parameters(match->spec)},
                           {"no_finite_volume_quotient", match->no_finite_volume_quotient}};
  } else {
    rep["family_match"] = nullptr;
  }
  return rep;
}

namespace {

bool is_flat(const json& j) {
  if (j.is_object()) return false;
  if (j.is_array()) {
    for (const auto& x : j)
      if (!is_flat(x)) return false;
  }
  return true;
}

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    if (j.empty()) os << path << " = {}\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array() && !is_flat(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << " = " << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const OdeTrajectory& traj) {
  os << "t,ell,trA,detA,lambda,b,sigma,tau,f,g,theta\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double row[] = {traj.times[i], traj.ell[i],   traj.trA[i],   traj.detA[i],
                          traj.lambda[i], traj.b[i],    traj.sigma[i], traj.tau[i],
                          traj.f[i],      traj.g[i],    traj.theta[i]};
    for (std::size_t k = 0; k < std::size(row); ++k) {
      if (k) os << ',';
      os << format_double(row[k]);
    }
    os << '\n';
  }
}

}  // namespace cvc
