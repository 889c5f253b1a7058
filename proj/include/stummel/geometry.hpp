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

#ifndef STUMMEL_GEOMETRY_HPP
#define STUMMEL_GEOMETRY_HPP

namespace stummel {

  /// Euclidean constants of R^n: unit-ball volume v_n and unit-sphere
  /// surface measure omega_{n-1} = n v_n (omega_0 = 2 counts the two points
  /// of the 0-sphere).
  struct Geometry {
    int n = 1;
    double v_n = 2.0;
    double omega = 2.0;

    static Geometry of(int n);

    double ballVolume(double r) const;
    double sphereArea(double s) const;
  };

  //Measure (n-1 dimensional; counting measure when n = 1) of the part of the
  //sphere |y - x| = s inside the open ball B(x', rho), where d = |x - x'|.
  double sphereBallOverlap(int n, double s, double d, double rho);
  //Same with s = d + u; exact for |u| << d.
  double sphereBallOverlapOffset(int n, double d, double u, double rho);

  //Volume of B(x, r1) intersected with B(x', r2), d = |x - x'|. Exact for n <= 3.
  double ballBallOverlap(int n, double r1, double r2, double d);

}

#endif
