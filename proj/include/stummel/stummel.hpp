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

#ifndef STUMMEL_STUMMEL_HPP
#define STUMMEL_STUMMEL_HPP

#include "stummel/catalog.hpp"
#include "stummel/extended.hpp"
#include "stummel/scale.hpp"
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stummel {

  inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

  struct EtaOptions {
    std::uint64_t seed = kDefaultSeed;
    int perturbations = 32;//random candidate centres per radius
  };

  //Stummel p-modulus
  //  eta(r) = sup_x ( int_{|x-y|<r} |f|^p Psi(|x-y|) / |x-y|^n dy )^(1/p).
  //Radial nonincreasing members take the supremum at the origin in closed
  //form; other members maximise over a candidate centre set.
  Extended eta(const TestFunction& f, double p, const ScaleFunction& psi, double r,
               const EtaOptions& = {});

  //The integral (before the 1/p root) with the ball centred at (c, 0, ..., 0).
  Extended ballIntegralAt(const TestFunction& f, double p, const ScaleFunction& psi, double c, double r);

  //n points, log-spaced in [rMin, rMax].
  std::vector<double> logGrid(double rMin, double rMax, int points);
  //48 points in [1e-12, 1e2].
  std::vector<double> defaultGrid();

  struct ModulusCurve {
    std::vector<double> r;
    std::vector<Extended> values;
    TestFunction f;
    double p = 1.0;
    ScaleFunction psi;

    bool allFinite() const;
    std::optional<double> firstDivergent() const;
  };

  //Element-wise eta over a strictly increasing grid, evaluated in parallel.
  //Candidate-centre values are lower bounds of the supremum; the curve keeps
  //their running maximum, which is again a lower bound because the true
  //modulus is nondecreasing. A divergent value propagates to all larger r.
  ModulusCurve modulusCurve(const TestFunction& f, double p, const ScaleFunction& psi,
                            const std::vector<double>& grid, const EtaOptions& = {});

  enum class Membership { Member, NonMember, Inconclusive };
  const char* membershipName(Membership);

  struct MembershipVerdict {
    Membership status = Membership::Inconclusive;
    std::string space;
    std::optional<double> limitEstimate;//eta at r_min
    std::optional<double> lowerBound;
    std::optional<double> divergentAt;
    std::string method;
  };

  struct Classification {
    MembershipVerdict stummel;//S_{p,Psi}
    MembershipVerdict bounded;//S~_{p,Psi}
    ModulusCurve curve;
  };

  inline constexpr double kVanishingRatio = 1e-3;

  //Requires grid.front() <= 1e-8.
  Classification classify(const TestFunction& f, double p, const ScaleFunction& psi,
                          const std::vector<double>& grid, const EtaOptions& = {});

  //For a bump sum read as the infinite family (K -> inf): inf over k of the
  //single-bump contribution ( h_k^p omega int_0^{8^-k} Psi(s)/s ds )^(1/p)
  //when it stays away from zero, else nullopt.
  std::optional<double> bumpFamilyLowerBound(const TestFunction& f, double p, const ScaleFunction& psi);

  struct DoublingReport {
    double maxRatio = 1.0;
    double atRadius = 0.0;
    std::vector<double> ratios;
  };

  //max over the grid of eta(2r)/eta(r); 0/0 counts as 1. Throws
  //UndefinedOnDivergent when the curve is not finite.
  DoublingReport doublingCheck(const ModulusCurve&, const EtaOptions& = {});

}

#endif
