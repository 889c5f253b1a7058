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

#ifndef STUMMEL_SPECIAL_HPP
#define STUMMEL_SPECIAL_HPP

namespace stummel {

  //Upper incomplete gamma function Gamma(s,x) = int_x^inf u^(s-1) e^(-u) du,
  //for any real shape s and x >= 0. Returns +inf where the integral diverges
  //(x == 0 and s <= 0). Uses the power series below x = s+1 and the Legendre
  //continued fraction above it; nonpositive shapes with small x are reached
  //by downward recurrence from a positive shape (or from E1 at s = 0).
  double upperGamma(double s, double x);

  //Regularised lower incomplete gamma P(s,x), s > 0.
  double lowerGammaP(double s, double x);

  //Exponential integral E1(x) = Gamma(0,x), x > 0.
  double expintE1(double x);

  //Euler beta function B(a,b), a,b > 0.
  double betaFunction(double a, double b);

  inline constexpr double kIncGammaTol = 1e-14;

}

#endif
