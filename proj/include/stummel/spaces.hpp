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

#ifndef STUMMEL_SPACES_HPP
#define STUMMEL_SPACES_HPP

#include "stummel/catalog.hpp"
#include "stummel/extended.hpp"
#include "stummel/scale.hpp"
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stummel {

  enum class SpaceFamily { Morrey, WeakMorrey, Lorentz, Lebesgue, WeakLebesgue };
  const char* spaceFamilyName(SpaceFamily);

  /// A function space.
  ///
  /// Morrey / WeakMorrey: exponent p with either a classical index lambda in
  /// [0, n] (norm sup r^(-lambda/p) ||f||_{L^p(B(x,r))}) or a scale Psi
  /// (norm sup |B(x,r)|^(-1/p) Psi(r)^-1 ||f||_{L^p(B(x,r))}). The classical
  /// norm equals v_n^(1/p) times the generalized one for Psi(t) = t^((lambda-n)/p).
  /// Lorentz: first index kappa in `p`, second index in `secondary` (may be inf).
  struct SpaceSpec {
    SpaceFamily family = SpaceFamily::Lebesgue;
    double p = 1.0;
    double secondary = 1.0;
    std::optional<double> lambda;
    ScaleFunction scale;

    static SpaceSpec classicalMorrey(double p, double lambda);
    static SpaceSpec generalizedMorrey(double p, const ScaleFunction& psi);
    static SpaceSpec classicalWeakMorrey(double p, double lambda);
    static SpaceSpec generalizedWeakMorrey(double p, const ScaleFunction& psi);
    static SpaceSpec lorentz(double kappa, double p);
    static SpaceSpec lebesgue(double p);
    static SpaceSpec weakLebesgue(double p);

    void validate(int n) const;
    //Psi(t) = t^((lambda - n)/p) for a classical spec.
    ScaleFunction equivalentScale(int n) const;
    //v_n^(1/p): classical norm = factor * generalized norm.
    double classicalFactor(int n) const;

    bool operator==(const SpaceSpec&) const = default;
  };

  struct Witness {
    std::optional<double> center;//first coordinate; the others are zero
    std::optional<double> r;
    std::optional<double> t;
    std::string note;
  };

  struct NormReport {
    SpaceSpec spec;
    Extended value;
    Witness witness;
  };

  //|{ y : |f(y)| > sigma }|
  Extended distributionFunction(const TestFunction&, double sigma);

  //Intervals of s in the profile's support on which phi(s) > sigma.
  std::vector<std::pair<double, double>> superLevelSet(const RadialProfile&, double sigma);

  enum class RearrangementKind { Constant, Power, Numeric };

  /// One piece of f* on [tLo, tHi).
  ///   Constant:  f*(t) = value
  ///   Power:     f*(t) = phi(((t + shift)/v_n)^(1/n))
  ///   Numeric:   f*(t) = inf{ sigma : D_f(sigma) <= t } by bisection
  struct RearrangementPiece {
    double tLo = 0.0;
    double tHi = 0.0;
    RearrangementKind kind = RearrangementKind::Constant;
    double value = 0.0;
    double shift = 0.0;
  };

  struct RearrangementProfile {
    std::vector<RearrangementPiece> pieces;
    Extended totalSupport;
    TestFunction source;

    double operator()(double t) const;
    std::vector<double> breakpoints() const;
  };

  RearrangementProfile decreasingRearrangement(const TestFunction&);

  //(int_0^inf (t^(1/kappa) f*(t))^p dt/t)^(1/p), or sup_t t^(1/kappa) f*(t) for p = inf.
  Extended lorentzNorm(const TestFunction&, double kappa, double p);

  Extended lebesgueNorm(const TestFunction&, double p);
  //sup_sigma sigma D_f(sigma)^(1/p)
  Extended weakLebesgueNorm(const TestFunction&, double p);

  //||f||_{L^p(B(c e1, r))}^p
  Extended ballLpPower(const TestFunction&, double p, double c, double r);
  //sup_t t |{ y in B(c e1, r) : |f(y)| > t }|^(1/p), with the maximising t.
  std::pair<double, double> ballWeakNorm(const TestFunction&, double p, double c, double r);

  NormReport morreyNorm(const TestFunction&, const SpaceSpec&);
  NormReport weakMorreyNorm(const TestFunction&, const SpaceSpec&);

  //Dispatches on spec.family.
  NormReport computeNorm(const TestFunction&, const SpaceSpec&);

  //Exponents whose magnitude is below this count as zero in envelope tests.
  inline constexpr double kExponentTolerance = 1e-9;

}

#endif
