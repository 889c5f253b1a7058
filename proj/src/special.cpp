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

#include "stummel/special.hpp"
#include "stummel/errors.hpp"
#include <cmath>
#include <limits>

namespace stummel {

  namespace {

    constexpr double kInf = std::numeric_limits<double>::infinity();
    constexpr int kMaxIter = 100000;
    constexpr double kEulerGamma = 0.57721566490153286060651209;

    //Series for gamma(s,x) * x^-s * e^x = sum_k x^k / (s (s+1) ... (s+k)), s>0.
    double lowerSeriesSum(double s, double x)
    {
      double term = 1.0 / s;
      double sum = term;
      for (int k = 1; k < kMaxIter; ++k) {
        term *= x / (s + k);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kIncGammaTol * 1e-2)
          return sum;
      }
      fail(ErrorCode::NonconvergentQuadrature, "incomplete gamma series did not converge");
    }

    //Continued fraction for Gamma(s,x) * x^-s * e^x (modified Lentz), x > 0.
    double upperContinuedFraction(double s, double x)
    {
      constexpr double tiny = 1e-300;
      double b = x + 1.0 - s;
      double c = 1.0 / tiny;
      double d = 1.0 / b;
      double h = d;
      for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny)
          d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
          c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kIncGammaTol * 1e-2)
          return h;
      }
      fail(ErrorCode::NonconvergentQuadrature, "incomplete gamma continued fraction did not converge");
    }

    double upperGammaPositive(double s, double x)
    {
      if (x == 0.0)
        return std::tgamma(s);
      if (x < s + 1.0) {
        const double logPrefactor = s * std::log(x) - x - std::lgamma(s);
        const double P = std::exp(logPrefactor) * lowerSeriesSum(s, x);
        return std::tgamma(s) * (1.0 - P);
      }
      return std::exp(s * std::log(x) - x) * upperContinuedFraction(s, x);
    }

  }

  double expintE1(double x)
  {
    require(x > 0.0, "E1 requires x > 0");
    if (x >= 1.0)
      return std::exp(-x) * upperContinuedFraction(0.0, x);
    //E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k < kMaxIter; ++k) {
      term *= -x / k;
      const double add = term / k;
      sum += add;
      if (std::fabs(add) < 1e-17 * std::fabs(sum))
        break;
    }
    return -kEulerGamma - std::log(x) - sum;
  }

  double upperGamma(double s, double x)
  {
    require(x >= 0.0 && std::isfinite(s), "upperGamma requires x >= 0 and finite s");
    if (s > 0.0)
      return upperGammaPositive(s, x);
    if (x == 0.0)
      return kInf;
    if (x >= s + 1.0)
      return std::exp(s * std::log(x) - x) * upperContinuedFraction(s, x);

    //Small x, nonpositive shape: recur downwards,
    //Gamma(j,x) = (Gamma(j+1,x) - x^j e^-x) / j.
    const double m = std::ceil(-s);
    const double base = s + m;
    double value;
    double j;
    if (base == 0.0) {
      value = expintE1(x);
      j = -1.0;
    } else {
      value = upperGammaPositive(base, x);
      j = base - 1.0;
    }
    const double ex = std::exp(-x);
    for (; j >= s - 0.5; j -= 1.0)
      value = (value - std::pow(x, j) * ex) / j;
    return value;
  }

  double lowerGammaP(double s, double x)
  {
    require(s > 0.0 && x >= 0.0, "lowerGammaP requires s > 0, x >= 0");
    if (x == 0.0)
      return 0.0;
    if (x < s + 1.0)
      return std::exp(s * std::log(x) - x - std::lgamma(s)) * lowerSeriesSum(s, x);
    return 1.0 - std::exp(s * std::log(x) - x - std::lgamma(s)) * upperContinuedFraction(s, x);
  }

  double betaFunction(double a, double b)
  {
    require(a > 0.0 && b > 0.0, "beta function requires positive arguments");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
  }

}
