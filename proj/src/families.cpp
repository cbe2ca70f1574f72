#include "cvc/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "cvc/adapted_frame.hpp"
#include "cvc/error.hpp"

namespace cvc {

namespace {

constexpr std::array<std::pair<FamilyVariant, std::string_view>, 7> kNames{{
    {FamilyVariant::CVC1_TYPE_I, "cvc1-type1"},
    {FamilyVariant::CVC1_TYPE_II, "cvc1-type2"},
    {FamilyVariant::CVC1_NONUNIMODULAR, "cvc1-nonunimodular"},
    {FamilyVariant::CVC_MINUS1, "cvc-minus1"},
    {FamilyVariant::CVC0_PRODUCT, "cvc0-product"},
    {FamilyVariant::CVC0_SOLVABLE, "cvc0-solvable"},
    {FamilyVariant::SPACE_FORM, "space-form"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, what);
}

std::string format_name(std::string_view base, std::initializer_list<std::pair<const char*, double>> params) {
  std::ostringstream os;
  os << base << '(';
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) os << ", ";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    os << key << '=' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    first = false;
  }
  os << ')';
  return os.str();
}

std::pair<double, double> range_of(double a, double b) { return {std::min(a, b), std::max(a, b)}; }

Extremality extremality_for(double epsilon, double lambda) {
  if (lambda == epsilon) return Extremality::BOTH;
  return lambda < epsilon ? Extremality::SEC_AT_MOST : Extremality::SEC_AT_LEAST;
}

}  // namespace

std::string_view to_string(FamilyVariant v) {
  for (const auto& [variant, name] : kNames)
    if (variant == v) return name;
  return "unknown";
}

std::optional<FamilyVariant> family_variant_from_string(std::string_view name) {
  for (const auto& [variant, n] : kNames)
    if (n == name) return variant;
  return std::nullopt;
}

FamilySpec FamilySpec::type1(double mu) {
  FamilySpec s;
  s.variant = FamilyVariant::CVC1_TYPE_I;
  s.mu = mu;
  return s;
}

FamilySpec FamilySpec::type2(double c) {
  FamilySpec s;
  s.variant = FamilyVariant::CVC1_TYPE_II;
  s.c = c;
  return s;
}

FamilySpec FamilySpec::nonunimodular(double f, double g) {
  FamilySpec s;
  s.variant = FamilyVariant::CVC1_NONUNIMODULAR;
  s.f = f;
  s.g = g;
  return s;
}

FamilySpec FamilySpec::minus1(double mu) {
  FamilySpec s;
  s.variant = FamilyVariant::CVC_MINUS1;
  s.mu = mu;
  return s;
}

FamilySpec FamilySpec::product(double kappa) {
  FamilySpec s;
  s.variant = FamilyVariant::CVC0_PRODUCT;
  s.kappa = kappa;
  return s;
}

FamilySpec FamilySpec::solvable(double f, double g) {
  FamilySpec s;
  s.variant = FamilyVariant::CVC0_SOLVABLE;
  s.f = f;
  s.g = g;
  return s;
}

FamilySpec FamilySpec::space_form(double epsilon) {
  FamilySpec s;
  s.variant = FamilyVariant::SPACE_FORM;
  s.epsilon = epsilon;
  return s;
}

FamilyModel build(const FamilySpec& spec) {
  FamilyModel m;
  m.spec = spec;
  ChristoffelTable t;
  const std::string_view base = to_string(spec.variant);

  switch (spec.variant) {
    case FamilyVariant::CVC1_TYPE_I:
      require(std::isfinite(spec.mu) && spec.mu > 0.0 && spec.mu < 1.0, "type I needs mu in (0, 1)");
      t.a12 = spec.mu;
      t.a21 = -1.0 / spec.mu;
      m.name = format_name(base, {{"mu", spec.mu}});
      m.expected_epsilon = 1.0;
      m.expected_lambda = -1.0;
      m.expected_group = GroupLabel::SU2;
      break;

    case FamilyVariant::CVC1_TYPE_II:
      require(std::isfinite(spec.c), "type II needs a finite c");
      t.a12 = 1.0;
      t.a21 = -1.0;
      t.c = spec.c;
      m.name = format_name(base, {{"c", spec.c}});
      m.expected_epsilon = 1.0;
      m.expected_lambda = -(2.0 * spec.c + 1.0);
      m.expected_group = spec.c > 1.0   ? GroupLabel::SL2R_UNIVERSAL_COVER
                         : spec.c < 1.0 ? GroupLabel::SU2
                                        : GroupLabel::HEISENBERG;
      break;

    case FamilyVariant::CVC1_NONUNIMODULAR: {
      require(std::isfinite(spec.f) && std::isfinite(spec.g), "f and g must be finite");
      t.a12 = 1.0;
      t.a21 = -1.0;
      t.c = 1.0;
      t.f = spec.f;
      t.g = spec.g;
      const double fg = spec.f * spec.f + spec.g * spec.g;
      m.name = format_name(base, {{"f", spec.f}, {"g", spec.g}});
      m.expected_epsilon = 1.0;
      m.expected_lambda = -(3.0 + fg);
      m.expected_group =
          fg == 0.0 ? GroupLabel::HEISENBERG : GroupLabel::NONUNIMODULAR_SOLVABLE;
      m.no_finite_volume_quotient = fg != 0.0;
      break;
    }

    case FamilyVariant::CVC_MINUS1:
      require(std::isfinite(spec.mu) && spec.mu >= 1.0, "cvc(-1) family needs mu >= 1");
      t.a12 = spec.mu;
      t.a21 = 1.0 / spec.mu;
      m.name = format_name(base, {{"mu", spec.mu}});
      m.expected_epsilon = -1.0;
      m.expected_lambda = 1.0;
      m.expected_group = spec.mu == 1.0 ? GroupLabel::E11 : GroupLabel::SL2R_UNIVERSAL_COVER;
      break;

    case FamilyVariant::CVC0_PRODUCT:
      require(spec.kappa == 1.0 || spec.kappa == -1.0, "product needs kappa in {-1, 1}");
      m.name = format_name(base, {{"kappa", spec.kappa}});
      m.expected_epsilon = 0.0;
      m.expected_lambda = spec.kappa;
      m.curvature = curvature_from_triple(Vec3(spec.kappa, 0.0, 0.0));
      m.expected_extremality = extremality_for(0.0, spec.kappa);
      m.expected_sec_range = range_of(0.0, spec.kappa);
      return m;

    case FamilyVariant::CVC0_SOLVABLE: {
      require(std::isfinite(spec.f) && std::isfinite(spec.g), "f and g must be finite");
      require(spec.f != 0.0 || spec.g != 0.0, "solvable cvc(0) family needs (f, g) != (0, 0)");
      t.f = spec.f;
      t.g = spec.g;
      m.name = format_name(base, {{"f", spec.f}, {"g", spec.g}});
      m.expected_epsilon = 0.0;
      m.expected_lambda = -(spec.f * spec.f + spec.g * spec.g);
      m.expected_group = GroupLabel::NONUNIMODULAR_SOLVABLE;
      m.no_finite_volume_quotient = true;
      break;
    }

    case FamilyVariant::SPACE_FORM: {
      const double eps = spec.epsilon;
      require(std::isfinite(eps), "epsilon must be finite");
      if (eps < 0.0) {
        // Horospherical frame of H^3 scaled to curvature eps.
        t.a11 = t.a22 = std::sqrt(-eps);
        m.expected_group = GroupLabel::NONUNIMODULAR_SOLVABLE;
      } else if (eps > 0.0) {
        // Round S^3 as the degenerate member of the Berger-type table.
        const double r = std::sqrt(eps);
        t.a12 = r;
        t.a21 = -r;
        t.c = -r;
        m.expected_group = GroupLabel::SU2;
      } else {
        m.expected_group = GroupLabel::ABELIAN_R3;
      }
      m.name = format_name(base, {{"epsilon", eps}});
      m.expected_epsilon = eps;
      m.expected_lambda = eps;
      break;
    }
  }

  m.table = t;
  m.algebra = christoffel_to_brackets(t);
  m.curvature = curvature_of(*m.algebra);
  m.expected_extremality = extremality_for(m.expected_epsilon, m.expected_lambda);
  m.expected_sec_range = range_of(m.expected_epsilon, m.expected_lambda);
  return m;
}

double type1_mu_from_alpha(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  return std::sqrt((1.0 - alpha) / (1.0 + alpha));
}

IsometryInvariant isometry_invariant(const FamilyModel& model) {
  const CvcReport rep = cvc_status(model.curvature, model.expected_epsilon);
  if (rep.isotropic) {
    throw Error(ErrorCode::IsotropicModel, "all planes have curvature " +
                                               std::to_string(model.expected_epsilon));
  }
  if (!rep.lambda || !rep.e3_direction) {
    throw Error(ErrorCode::NotCvcExtremal, model.name + " is not an extremal cvc model");
  }
  IsometryInvariant inv;
  inv.plane_curvature = *rep.lambda;
  if (model.algebra) {
    const AdaptedFrame frame = adapted_frame(*model.algebra, *rep.e3_direction);
    const ADecomposition d = decompose(frame.table);
    inv.a0_norm_sq = d.sigma * d.sigma + d.tau * d.tau;
  }
  return inv;
}

}  // namespace cvc
