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

#ifndef STUMMEL_SCALE_HPP
#define STUMMEL_SCALE_HPP

#include "stummel/extended.hpp"
#include "stummel/quad.hpp"
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stummel {

  enum class ScaleKind { PurePower, PowerLog, Tabulated };

  /// A scale function Psi: (0, inf) -> (0, inf).
  ///
  /// PurePower:  Psi(t) = C t^a.
  /// PowerLog:   Psi(t) = C t^a |ln t|^b on (0, t0], continued for t > t0 as
  ///             Psi(t0) (t/t0)^a so that Psi stays positive and doubling on
  ///             all of (0, inf). Requires t0 < 1.
  /// Tabulated:  sampled (t, Psi(t)) pairs, interpolated linearly in
  ///             (ln t, ln Psi). Integrals extend the first and last segments
  ///             as power laws beyond the table.
  struct ScaleFunction {
    ScaleKind kind = ScaleKind::PurePower;
    double a = 0.0;
    double b = 0.0;
    double t0 = kDefaultT0;
    double scaleConst = 1.0;
    std::vector<std::pair<double, double>> table;

    static constexpr double kDefaultT0 = 0.1353352832366127;//e^-2

    static ScaleFunction purePower(double a, double c = 1.0);
    static ScaleFunction powerLog(double a, double b, double t0 = kDefaultT0, double c = 1.0);
    static ScaleFunction tabulated(std::vector<std::pair<double, double>> points);
    //Psi(t) = t^((lambda - n) / p), the classical Morrey normalisation.
    static ScaleFunction classicalMorrey(double lambda, int n, double p);

    //Throws InvalidArgument on a violated invariant.
    void validate() const;

    //eval_scale. Throws NonPositiveArgument for t <= 0 and OutOfTableRange
    //for tabulated scales outside the table.
    double operator()(double t) const;

    //Psi evaluated through pieces(); agrees with operator() inside a table
    //and extrapolates tabulated scales outside it.
    double extendedValue(double t) const;

    //Psi as a sum of power-log monomials with disjoint supports covering (0, inf).
    std::vector<Monomial> pieces() const;

    //Exponents (a, b) of the leading behaviour as t -> 0 and t -> inf.
    std::pair<double, double> exponentsAtZero() const;
    double exponentAtInfinity() const;

    bool operator==(const ScaleFunction&) const = default;
  };

  enum class Verdict { Holds, Fails, Unknown };
  const char* verdictName(Verdict);

  enum class CheckMethod { Analytic, Sampled };

  struct ConditionReport {
    Verdict integrable = Verdict::Unknown;       //int_0^1 Psi(t)/t dt < inf
    Verdict doubling = Verdict::Unknown;         //1/A1 <= Psi(s)/Psi(r) <= A1, 1 <= s/r <= 2
    std::optional<double> A1;
    Verdict almostDecreasing = Verdict::Unknown; //Psi(r)/r^n <= A2 Psi(s)/s^n, s <= r
    std::optional<double> A2;
    Verdict rightDoubling = Verdict::Unknown;    //Psi(s)/Psi(r) <= A3, 1 <= s/r <= 2
    std::optional<double> A3;
    CheckMethod method = CheckMethod::Analytic;
    int n = 1;
    std::string note;
  };

  //Decides the four structural conditions. The almost-decreasing condition
  //compares Psi(t)/t^n and therefore depends on the ambient dimension n.
  ConditionReport checkConditions(const ScaleFunction&, int n, double sampleTolerance = 1e-9);

  //int_0^r Psi(t)/t dt, closed form.
  Extended integralScaleOverT(const ScaleFunction&, double r);

  //int_0^r Psi1(t)^p2 Psi2(t)/t dt, closed form.
  Extended productIntegral(const ScaleFunction& psi1, double p2, const ScaleFunction& psi2, double r);

}

#endif
