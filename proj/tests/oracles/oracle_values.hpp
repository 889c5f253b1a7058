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

// Generated by tests/oracles/oracles.py; do not edit.
#ifndef STUMMEL_TEST_ORACLE_VALUES_HPP
#define STUMMEL_TEST_ORACLE_VALUES_HPP

namespace oracle {
  //int_0^1 psi(t)/t, psi = t^0.5 |ln t|^-2
  inline constexpr double kIntegralPowerLogHalfMinus2 = 0.39030803280223986316;
  //A1 for t^0.5 |ln t|^-2
  inline constexpr double kDoublingA1PowerLog = 2.564337497933179704;
  //A3 for t^0.5 |ln t|^-2
  inline constexpr double kRightDoublingA3PowerLog = 2.564337497933179704;
  //A2 (n = 1) for t^0.5 |ln t|^-2
  inline constexpr double kAlmostDecreasingA2PowerLog = 1.4715177646857692864;
  //int_0^0.1 t^-0.5 * t^0.75 |ln t| / t
  inline constexpr double kProductIntegral = 14.176816213268987702;
  //Gamma(2.5, 0.7)
  inline constexpr double kUpperGamma_2p5_0p7 = 1.228726964865296512;
  //Gamma(-1.5, 0.3)
  inline constexpr double kUpperGamma_m1p5_0p3 = 2.2387393793796465983;
  //Gamma(0.0, 2.0)
  inline constexpr double kUpperGamma_0_2 = 0.048900510708061119567;
  //Gamma(-0.5, 40.0)
  inline constexpr double kUpperGamma_m0p5_40 = 1.6199610039846914983e-20;
  //Gamma(3.0, 25.0)
  inline constexpr double kUpperGamma_3_25 = 9.4021379965806419426e-9;
  //n=2, chi_B(0,1), p=1, psi=t^0.5, centre 0.7, r=0.6
  inline constexpr double kBallN2IndicatorOff = 8.864203554225369294;
  //n=3, |y|^-1, p=1, psi=t^1.5, centre 0.5, r=0.8
  inline constexpr double kBallN3InvOff = 10.631719304241347799;
  //n=2, |y|^-1/2 on |y|<1, p=2, psi=t, centre 0.3, r=0.5
  inline constexpr double kBallN2PowerOff = 11.602518180742771532;
  //n=1, |y|^-1/2 on |y|>1, psi=t^0.5, centre 1.2, r=0.5
  inline constexpr double kBallN1Tail = 2.055958885365498244;
  //sup_c ball integral: |y|^-2 on |y|>1, psi=t^0.5, r=0.5
  inline constexpr double kEtaTailN1 = 1.4892366939833009411;
  //n=1 bump sum alpha=0.5 K=4, psi=t^0.5, centre 0.126, r=0.07
  inline constexpr double kBumpN1 = 3.9804201909084282927;
  //n=2 bump sum alpha=1 K=4, psi=t, centre 0.126, r=0.05
  inline constexpr double kBumpN2 = 5.8485792608150436219;
  //|y|^-2 on |y|>1, classical Morrey p=1 lambda=0.5
  inline constexpr double kMorreyTailHalf = 0.76980035891950101935;
  //|y|^-1/4, classical weak Morrey p=1 lambda=0.75
  inline constexpr double kWeakMorreyQuarter = 2.0;
  //|y|^-1/2 on |y|>1, n=1, kappa=3, p=1
  inline constexpr double kLorentzTailN1 = 10.599832494151064214;
  //|y|^-1 on |y|>1, n=2, kappa=3, p=1
  inline constexpr double kLorentzTailN2 = 12.321747208584481349;
  //bump sum n=1 alpha=0.5 K=4, kappa=2, p=1
  inline constexpr double kLorentzBumpK4 = 4.8284271247461900976;
  //|y|^-1/4 on |y|<1, n=1, kappa=2, p=1
  inline constexpr double kLorentzQuarter = 5.6568542494922297579;
  //|y|^-1/2 on |y|>1, n=1, kappa=3, p=inf
  inline constexpr double kLorentzTailN1Sup = 0.91648642466573508426;
}

#endif
