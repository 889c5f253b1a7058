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

#include "stummel/geometry.hpp"
#include "stummel/errors.hpp"
#include <algorithm>
#include <cmath>
#include <numbers>

namespace stummel {

  Geometry Geometry::of(int n)
  {
    require(n >= 1, "dimension must be a positive integer");
    Geometry g;
    g.n = n;
    const double half = 0.5 * n;
    g.v_n = std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0));
    //Keep the small dimensions exact to the last bit.
    if (n == 1)
      g.v_n = 2.0;
    else if (n == 2)
      g.v_n = std::numbers::pi;
    else if (n == 3)
      g.v_n = 4.0 * std::numbers::pi / 3.0;
    g.omega = n * g.v_n;
    return g;
  }

  double Geometry::ballVolume(double r) const
  {
    return v_n * std::pow(r, n);
  }

  double Geometry::sphereArea(double s) const
  {
    return n == 1 ? 2.0 : omega * std::pow(s, n - 1);
  }

  namespace {
    //acos(1 - x) without cancellation for small x
    double halfAngle(double x)
    {
      return 2.0 * std::asin(std::sqrt(0.5 * x));
    }
  }

  double sphereBallOverlap(int n, double s, double d, double rho)
  {
    return sphereBallOverlapOffset(n, d, s - d, rho);
  }

  double sphereBallOverlapOffset(int n, double d, double u, double rho)
  {
    require(n >= 1 && n <= 3, "sphereBallOverlap supports n <= 3");
    const double s = d + u;
    if (s <= 0.0 || rho <= 0.0)
      return 0.0;
    const Geometry g = Geometry::of(n);
    if (s + d < rho)
      return g.sphereArea(s);
    if (u >= rho || u <= -rho)
      return 0.0;
    if (n == 1)
      return 1.0;
    //1 - cos(theta), factored to survive s, d >> rho
    const double oneMinusCos = std::clamp((rho - u) * (rho + u) / (2.0 * s * d), 0.0, 2.0);
    if (n == 2)
      return 2.0 * s * halfAngle(oneMinusCos);
    return 2.0 * std::numbers::pi * s * s * oneMinusCos;
  }

  double ballBallOverlap(int n, double r1, double r2, double d)
  {
    require(n >= 1 && n <= 3, "ballBallOverlap supports n <= 3");
    if (r1 <= 0.0 || r2 <= 0.0 || d >= r1 + r2)
      return 0.0;
    const Geometry g = Geometry::of(n);
    if (d <= std::fabs(r1 - r2))
      return g.ballVolume(std::min(r1, r2));
    if (n == 1)
      return std::min(r1, d + r2) - std::max(-r1, d - r2);
    if (n == 2) {
      const double a1 = halfAngle(std::clamp((r2 - d + r1) * (r2 + d - r1) / (2.0 * d * r1), 0.0, 2.0));
      const double a2 = halfAngle(std::clamp((r1 - d + r2) * (r1 + d - r2) / (2.0 * d * r2), 0.0, 2.0));
      const double k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
      return r1 * r1 * a1 + r2 * r2 * a2 - 0.5 * std::sqrt(std::max(0.0, k));
    }
    const double s = r1 + r2 - d;
    return std::numbers::pi * s * s * (d * d + 2.0 * d * (r1 + r2) - 3.0 * (r1 - r2) * (r1 - r2)) / (12.0 * d);
  }

}
