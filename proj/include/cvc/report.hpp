#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvc/christoffel_table.hpp"
#include "cvc/families.hpp"
#include "cvc/geodesic_ode.hpp"
#include "cvc/lie_metric.hpp"

namespace cvc {

inline constexpr const char* kToolName = "cvc3";
inline constexpr const char* kToolVersion = "0.1.0";

/// Parsed input file. Exactly one of algebra, table, family is set,
/// according to kind.
struct InputDocument {
  std::string kind;
  std::optional<MetricLieAlgebra> algebra;
  std::optional<ChristoffelTable> table;
  std::optional<FamilySpec> family;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Throws MALFORMED_INPUT on unknown kinds, missing fields or wrong shapes.
InputDocument parse_input(const nlohmann::json& doc);
InputDocument load_input(const std::string& path);

nlohmann::json table_to_json(const ChristoffelTable& t);
nlohmann::json family_parameters(const FamilySpec& spec);
/// Document the family command writes: a metric_lie_algebra when the model
/// has one, otherwise a family reference.
nlohmann::json family_document(const FamilyModel& model);

struct ReportOptions {
  std::vector<double> epsilons{-1.0, 0.0, 1.0};
  double tol = 1e-8;
  int samples = 500;
  int angles = 256;
  std::uint64_t seed = 42;
};

struct FamilyMatch {
  FamilySpec spec;
  std::string name;
  bool no_finite_volume_quotient = false;
};

/// Looks for a built family isometric to the given orthonormal algebra:
/// reads the adapted table at each extremal cvc point, puts it in normal
/// form and compares it with the candidate family's normal form.
std::optional<FamilyMatch> match_family(const MetricLieAlgebra& orthonormal_mla,
                                        const CurvatureData& cd, double tol = 1e-6);

/// Runs validation, curvature, cvc verdicts, Milnor classification and the
/// family match. Throws MALFORMED_INPUT naming the failing invariant.
nlohmann::json build_report(const InputDocument& input, const ReportOptions& opt);

/// One "path = value" line per leaf of the report.
std::string render_text(const nlohmann::json& report);

/// t,ell,trA,detA,lambda,b,sigma,tau,f,g,theta with LF line endings.
void write_csv(std::ostream& os, const OdeTrajectory& traj);

/// Shortest round-trip decimal form; "nan", "inf", "-inf" otherwise.
std::string format_double(double x);

}  // namespace cvc
