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

#ifndef STUMMEL_INCLUSION_HPP
#define STUMMEL_INCLUSION_HPP

#include "stummel/catalog.hpp"
#include "stummel/scale.hpp"
#include "stummel/spaces.hpp"
#include "stummel/stummel.hpp"
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stummel {

  enum class TheoremId {
    Prop3_1,
    Prop3_2,
    Cor3_2,
    Cor3_3,
    Cor3_5,
    Thm4_1,
    Thm4_5,
    Cor4_6,
    Thm4_8,
    Thm4_9,
    Thm4_10a,
    Thm4_10b,
    Lem5_4,
    Lem5_5,
    Thm5_6
  };

  const char* theoremIdName(TheoremId);
  std::optional<TheoremId> parseTheoremId(std::string_view);
  std::span<const TheoremId> allTheorems();

  enum class Conclusion { Includes, NotApplicable, Unknown };
  const char* conclusionName(Conclusion);

  struct HypothesisItem {
    std::string description;
    Verdict status = Verdict::Unknown;
    std::optional<double> certificate;
  };

  struct HypothesisChecklist {
    TheoremId theorem = TheoremId::Thm4_1;
    std::string statement;//the inclusion claimed when every item holds
    std::vector<HypothesisItem> items;
    Conclusion conclusion = Conclusion::Unknown;
    std::string note;
  };

  //Parameters for check_theorem. Which ones are required depends on the
  //theorem; a missing one throws MissingParameter. `p` is the single index
  //of the one-exponent statements; kappa and the Lorentz p1/p2 may be inf.
  struct TheoremParams {
    std::optional<int> n;
    std::optional<double> p;
    std::optional<double> p1;
    std::optional<double> p2;
    std::optional<double> lambda;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> kappa;
    std::optional<double> sigma;
    std::optional<ScaleFunction> psi;
    std::optional<ScaleFunction> psi1;
    std::optional<ScaleFunction> psi2;
  };

  HypothesisChecklist checkTheorem(TheoremId, const TheoremParams&);

  /// psi2 <= c psi1 on (0, delta), decided from the leading power-log pieces.
  struct Domination {
    Verdict status = Verdict::Unknown;
    std::optional<double> c;
    std::optional<double> delta;
  };
  Domination dominatesNearZero(const ScaleFunction& psi1, const ScaleFunction& psi2);

  struct BoundReport {
    double maxRatio = 0.0;//sup over r of the ratio, grid plus local polish
    double atRadius = 0.0;
    double refinedMaxRatio = 0.0;//same on the 2x refined grid
    double relativeChange = 0.0;
    bool stable = false;//relativeChange <= 5%
    Extended norm;//||f||_{L^{p1,psi1}}
    std::vector<double> r;
    std::vector<double> ratios;
  };

  inline constexpr double kStabilityTolerance = 0.05;

  //eta_{p2,psi2} f(r) / [ (int_0^{r/2} psi1^p2 psi2 / t dt)^(1/p2) ||f||_{L^{p1,psi1}} ]
  //over the grid. Throws InapplicableHypotheses unless the hypotheses of the
  //Morrey-to-Stummel inclusion hold and the norm of f is finite.
  BoundReport verifyQuantitativeBound(const TestFunction& f, double p1, double p2, const ScaleFunction& psi1,
                                      const ScaleFunction& psi2, const std::vector<double>& grid,
                                      const EtaOptions& = {});

  struct EnvelopeFit {
    double sigma = 0.0;//eta <= c r^(sigma/p)
    double c = 0.0;
    double residual = 0.0;//max |eta / (c r^(sigma/p)) - 1| over the fitted points
    double slope = 0.0;
    int points = 0;
    double p = 1.0;
  };

  inline constexpr int kEnvelopePoints = 16;
  inline constexpr double kMaxEnvelopeResidual = 1e-3;

  //Least squares of ln eta against ln r over the smallest 16 radii with a
  //finite positive value. Throws UnfittableCurve with fewer than 4 such points.
  EnvelopeFit fitEnvelope(const ModulusCurve&);

  struct MorreyPrediction {
    double lambda = 0.0;//n + sigma - alpha p2 / p1
    bool boundary = false;//lambda reached n
    NormReport strong;
    bool strongFinite = false;
    std::optional<double> weakLambda;//n - alpha + sigma, p1 = p2 only
    std::optional<NormReport> weak;
    bool weakFinite = false;
    std::string note;
  };

  //Throws ResidualTooLarge when fit.residual > 1e-3 and InapplicableHypotheses
  //for sigma <= 0.
  MorreyPrediction predictAndCheckMorrey(const EnvelopeFit& fit, const TestFunction& f, double p1, double p2,
                                         double alpha, int n);

  struct ClaimRow {
    std::string claimId;
    std::string anchor;
    std::vector<std::pair<std::string, double>> params;
    std::string expected;
    std::string computed;
    bool agrees = false;
    bool flagged = false;//known discrepancy between the printed claim and the computation
    std::string note;
  };

  //Every claim at fixed desk-scale parameters, sorted by claim id.
  std::vector<ClaimRow> verifyPaper(const EtaOptions& = {});

  //true iff every non-flagged row agrees
  bool allAgree(const std::vector<ClaimRow>&);

}

#endif
