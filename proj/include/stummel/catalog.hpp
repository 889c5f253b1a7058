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

#ifndef STUMMEL_CATALOG_HPP
#define STUMMEL_CATALOG_HPP

#include "stummel/geometry.hpp"
#include "stummel/quad.hpp"
#include "stummel/scale.hpp"
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace stummel {

  enum class FunctionKind { RadialPowerLog, TailPower, BumpSum, Indicator, Zero };
  const char* functionKindName(FunctionKind);

  /// A catalog member f: R^n -> [0, inf).
  ///
  ///   RadialPowerLog  (|y|^-g |ln|y||^-h)^(1/p_root) on |y| < R
  ///   TailPower       (|y|^-g)^(1/p_root) on |y| > 1, zero inside
  ///   BumpSum         (sum_{k=3..K} 8^(alpha k) chi_{B(x_k, 8^-k)})^(1/p_root),
  ///                   x_k = (2^-k, 0, ..., 0)
  ///   Indicator       chi_{B(0, R)}
  ///   Zero
  struct TestFunction {
    FunctionKind kind = FunctionKind::Zero;
    int n = 1;
    double g = 0.0;
    double h = 0.0;
    double R = std::numeric_limits<double>::infinity();
    double alpha = 0.5;
    int K = 3;
    double pRoot = 1.0;

    static TestFunction radialPowerLog(int n, double g, double h, double R, double pRoot = 1.0);
    static TestFunction tailPower(int n, double g, double pRoot = 1.0);
    static TestFunction bumpSum(int n, double alpha, int K, double pRoot = 1.0);
    static TestFunction indicator(int n, double R);
    static TestFunction zero(int n);

    void validate() const;
    bool operator==(const TestFunction&) const = default;
  };

  struct BumpSpec {
    int k;
    double center;//first coordinate; the others are zero
    double radius;
    double height;//value of f on the bump (p_root applied)
  };

  std::vector<BumpSpec> bumps(const TestFunction&);

  //Exact check that the bump supports are pairwise disjoint, done in scaled
  //integer arithmetic on the first coordinate (centres 2^-k, radii 8^-k).
  bool bumpSupportsDisjoint(int K);

  //K large enough that some bump B(x_k, 8^-k) fits inside every radius >= rMin.
  int defaultBumpCount(double rMin);

  /// The 1-D profile phi with f(y) = phi(|y|) for radial members.
  ///
  /// phi is a single monomial  scale * s^-pow * |ln s|^-logpow  on (lo, hi)
  /// (zero elsewhere); `nonincreasing` says whether the supremum of every
  /// radial ball integral is attained at the origin.
  struct RadialProfile {
    double scale = 1.0;
    double pow = 0.0;
    double logpow = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool nonincreasing = true;

    double operator()(double s) const;
    //phi^p as a monomial in s.
    Monomial powerMonomial(double p) const;
    //Left limit at the right end of the support (sup of phi near `hi`).
    double leftLimitAtHi() const;
  };

  //sup of the profile over its open support (infinite when unbounded).
  double profileSup(const RadialProfile&);

  struct NotRadial {
    std::vector<double> singularCenters;//first coordinates of the bump centres
  };

  using ProfileResult = std::variant<RadialProfile, NotRadial>;

  //radial_profile
  ProfileResult radialProfile(const TestFunction&);
  std::optional<RadialProfile> radialProfileIf(const TestFunction&);

  //eval_function. Throws SingularPoint at the origin of a singular radial member.
  double evalFunction(const TestFunction&, std::span<const double> y);

  //Whether int_{B(0,1)} |f|^p is finite (the standing L^p_loc assumption).
  bool locallyIntegrable(const TestFunction&, double p);

  //sup |f| (infinite for singular members).
  double supNorm(const TestFunction&);

  //Largest t <= min(e^-1, t0) such that Psi(t)|ln t|^2 is nondecreasing on
  //(0, t]; the support radius of the Stummel-not-Morrey construction.
  double nondecreasingLogSquareRadius(const ScaleFunction& psi);

  //f = (chi_{B(0,delta)} / (Psi(|y|) |ln|y||^2))^(1/p) for a power-law Psi =
  //C t^a, with delta from nondecreasingLogSquareRadius.
  TestFunction stummelNotMorreyExample(int n, const ScaleFunction& psi, double p);

}

#endif
