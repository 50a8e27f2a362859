#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace halving {

using Real = long double;
static_assert(std::numeric_limits<Real>::digits >= 64, "cubic solver needs an extended-precision long double");

/// a x^3 + b x^2 + c x + d
struct CubicPolynomial {
  Real a = 1;
  Real b = 0;
  Real c = 0;
  Real d = 0;

  Real operator()(Real x) const { return ((a * x + b) * x + c) * x + d; }

  CubicPolynomial scaled(Real lambda) const { return {a * lambda, b * lambda, c * lambda, d * lambda}; }
};

/// Shift p, the combined term q and r from Cardano's substitution x = y + p,
/// under which a x^3 + ... = a (y^3 - 3 (p^2 - r) y - 2 q).
struct CardanoIntermediates {
  Real p = 0;
  Real q = 0;
  Real r = 0;
  Real radicand = 0;  // q^2 + (r - p^2)^3

  /// p^2 - r: positive exactly when the depressed cubic can have three real roots.
  Real t() const { return p * p - r; }

  /// Depressed cubic y^3 - 3 t y - 2 q, evaluated by Horner.
  Real depressed(Real y) const { return (y * y - 3 * t()) * y - 2 * q; }
};

enum class DiscriminantClass { one_real, three_real_distinct, repeated };

inline std::string_view to_string(DiscriminantClass c) {
  switch (c) {
    case DiscriminantClass::one_real: return "one-real";
    case DiscriminantClass::three_real_distinct: return "three-real-distinct";
    case DiscriminantClass::repeated: return "repeated";
  }
  return "unknown";
}

struct CubicRoots {
  std::vector<Real> real_roots;  // ascending, repeated roots listed with multiplicity
  DiscriminantClass discriminant_class = DiscriminantClass::one_real;
};

// |radicand| <= kRepeatedBand * scale^6 counts as zero, where scale is the
// natural size of the depressed roots. A repeated cubic whose depressed
// scale is below kTripleBand * |p| is treated as a triple root.
inline constexpr Real kRepeatedBand = 1e-12L;
inline constexpr Real kTripleBand = 1e-9L;

inline CardanoIntermediates cardano_intermediates(const CubicPolynomial& P) {
  if (P.a == 0) throw Error(ErrorCode::zero_leading_coefficient, "a must be non-zero");
  CardanoIntermediates ci;
  ci.p = -P.b / (3 * P.a);
  ci.q = ci.p * ci.p * ci.p + (P.b * P.c - 3 * P.a * P.d) / (6 * P.a * P.a);
  ci.r = P.c / (3 * P.a);
  const Real s = ci.r - ci.p * ci.p;
  ci.radicand = ci.q * ci.q + s * s * s;
  return ci;
}

/// All real roots in closed form. A non-negative radicand uses the two real
/// cube roots {q + sqrt(D)}^(1/3) + {q - sqrt(D)}^(1/3) + p; the second cube
/// root is taken as t / (first) so neither term suffers cancellation. A
/// negative radicand (casus irreducibilis) uses the trigonometric form.
inline CubicRoots solve_cubic(const CubicPolynomial& P) {
  const CardanoIntermediates ci = cardano_intermediates(P);
  const Real p = ci.p, q = ci.q, t = ci.t();
  const Real scale = std::max(std::cbrt(std::fabs(q)), std::sqrt(std::fabs(t)));
  CubicRoots out;

  if (scale == 0 || scale <= kTripleBand * std::fabs(p)) {
    out.real_roots = {p, p, p};
    out.discriminant_class = DiscriminantClass::repeated;
    return out;
  }

  const Real scale2 = scale * scale;
  const Real band = kRepeatedBand * scale2 * scale2 * scale2;
  if (std::fabs(ci.radicand) <= band) {
    // q^2 = t^3: y = 2 cbrt(q) once and y = -cbrt(q) twice.
    const Real w = std::cbrt(q);
    out.real_roots = {p + 2 * w, p - w, p - w};
    out.discriminant_class = DiscriminantClass::repeated;
  } else if (ci.radicand > 0) {
    const Real u = std::cbrt(q + std::copysign(std::sqrt(ci.radicand), q));
    const Real v = u == 0 ? 0 : t / u;
    out.real_roots = {p + u + v};
    out.discriminant_class = DiscriminantClass::one_real;
  } else {
    const Real root_t = std::sqrt(t);
    const Real cos3 = std::clamp(q / (t * root_t), Real{-1}, Real{1});
    const Real phi = std::acos(cos3);
    constexpr Real two_pi = 2 * std::numbers::pi_v<Real>;
    for (int k = 0; k < 3; ++k) out.real_roots.push_back(p + 2 * root_t * std::cos((phi + two_pi * k) / 3));
    out.discriminant_class = DiscriminantClass::three_real_distinct;
  }
  std::sort(out.real_roots.begin(), out.real_roots.end());
  return out;
}

inline std::optional<Real> largest_positive_root(const CubicPolynomial& P) {
  const CubicRoots roots = solve_cubic(P);
  std::optional<Real> best;
  for (Real x : roots.real_roots) {
    if (x > 0 && (!best || x > *best)) best = x;
  }
  return best;
}

/// 1e-9 * max(|a| rho^3, |b| rho^2, |c| rho, |d|) with rho = max(1, |x|).
inline Real residual_tolerance(const CubicPolynomial& P, Real x) {
  const Real rho = std::max(Real{1}, std::fabs(x));
  return 1e-9L * std::max({std::fabs(P.a) * rho * rho * rho, std::fabs(P.b) * rho * rho, std::fabs(P.c) * rho,
                           std::fabs(P.d)});
}

}  // namespace halving
