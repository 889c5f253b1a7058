////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of stummel, a numerical analyzer for Stummel classes,   //
//  Morrey spaces and Lorentz spaces.                                         //
//                                                                            //
//  Copyright 2026 stummel developers                                         //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#ifndef STUMMEL_QUAD_HPP
#define STUMMEL_QUAD_HPP

#include "stummel/extended.hpp"
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace stummel {

  /// One power-log monomial  coef * s^(a-1) * |ln s|^b  supported on (lo, hi).
  ///
  /// The "a-1" convention makes `a` the exponent that decides integrability
  /// at the origin after the polar reduction: the term diverges at 0 iff
  /// a < 0, or a == 0 and b >= -1. A log factor (b != 0) is only allowed on
  /// supports inside (0, 1]; every catalog and scale function keeps its log
  /// factors there.
  struct PowerLogTerm {
    double coef = 1.0;
    double a = 0.0;
    double b = 0.0;
    double lo = 0.0;
    double hi = 0.0;//may be +inf

    double operator()(double s) const;
  };

  /// coef * t^a * |ln t|^b on (lo, hi): a piece of a scale function or of
  /// |f|^p for a radial catalog member.
  struct Monomial {
    double coef = 1.0;
    double a = 0.0;
    double b = 0.0;
    double lo = 0.0;
    double hi = 0.0;

    double operator()(double t) const;
    Monomial pow(double p) const;
    //The term m(s)/s in the integrator's s^(a-1) convention.
    PowerLogTerm overS() const { return PowerLogTerm{ coef, a, b, lo, hi }; }
  };

  //Pointwise product of two monomials; support is the intersection (possibly empty).
  Monomial operator*(const Monomial&, const Monomial&);

  //All pairwise products of two piecewise power-log functions.
  std::vector<Monomial> multiply(const std::vector<Monomial>&, const std::vector<Monomial>&);

  bool divergesAtZero(double a, double b);
  bool divergesAtInfinity(double a, double b);

  /// Sum of power-log terms; the polar-reduced form of every radial integral
  /// the analyzer needs.
  struct RadialIntegrand {
    std::vector<PowerLogTerm> terms;

    void add(PowerLogTerm t);
    //Merges terms with equal (a, b, lo, hi) and drops zero coefficients.
    void canonicalize();
    double operator()(double s) const;
  };

  //Integral of one term over (lo, hi) intersected with its support. Closed
  //form via the incomplete gamma function under u = -ln s where possible,
  //adaptive Gauss-Kronrod otherwise.
  Extended integrateTerm(const PowerLogTerm&, double lo, double hi);

  //int_0^r of the integrand; r may be +inf. Divergence is decided by the
  //exponent test, never by a timeout.
  Extended integrateRadial(const RadialIntegrand&, double r);

  using Integrand = std::function<double(double)>;

  struct QuadOptions {
    double relTol = 1e-10;
    double absTol = 0.0;
    int maxSubdivisions = 4000;
  };

  //Globally adaptive Gauss-Kronrod (7/15) on [a, b]. Throws
  //NonconvergentQuadrature when the tolerance is not met within budget.
  double integrateGK(const Integrand&, double a, double b, const QuadOptions& = {});

  //Same, after splitting [a, b] at the given interior breakpoints.
  double integrateGK(const Integrand&, double a, double b, std::span<const double> breakpoints,
                     const QuadOptions& = {});

  //int_0^r for integrands with an integrable singularity at 0, summed over
  //dyadic panels [r 2^-(k+1), r 2^-k] until the geometric tail is negligible.
  double integrateDyadicFromZero(const Integrand&, double r, std::span<const double> breakpoints = {},
                                 const QuadOptions& = {});

  //int_a^inf, a > 0, summed over dyadic panels [a 2^k, a 2^(k+1)].
  double integrateDyadicToInfinity(const Integrand&, double a, std::span<const double> breakpoints = {},
                                   const QuadOptions& = {});

  struct McEstimate {
    double value = 0.0;
    double stdError = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
  };

  using PointIntegrand = std::function<double(std::span<const double>)>;

  inline constexpr int kMcStrata = 64;
  inline constexpr double kMcInnerFraction = 1e-14;

  //Monte-Carlo estimate of the integral over B(center, r) in R^n, n <= 3.
  //Radii are stratified into 64 log-uniform shells spanning
  //[1e-14 r, r]; within each shell points are uniform in volume. Each stratum
  //draws from its own substream derived from the master seed, so the result
  //does not depend on evaluation order.
  McEstimate integrateBallMc(const PointIntegrand&, std::span<const double> center, double r,
                             std::uint64_t samples, std::uint64_t seed);

  //SplitMix64 step, used to derive independent substream seeds.
  std::uint64_t splitmix64(std::uint64_t x);

}

#endif
