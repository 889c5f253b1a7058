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

#include "stummel/catalog.hpp"
#include "stummel/errors.hpp"
#include <algorithm>
#include <cmath>
#include <limits>

namespace stummel {

  namespace {
    constexpr double kInf = std::numeric_limits<double>::infinity();

    double norm(std::span<const double> y)
    {
      double s = 0.0;
      for (double v : y)
        s += v * v;
      return std::sqrt(s);
    }
  }

  double profileSup(const RadialProfile& ph)
  {
    if (ph.scale == 0.0 || !(ph.lo < ph.hi))
      return 0.0;
    if (ph.lo == 0.0) {
      if (ph.pow > 0.0 || (ph.pow == 0.0 && ph.logpow < 0.0))
        return kInf;
    }
    if (std::isinf(ph.hi) && ph.pow < 0.0)
      return kInf;
    std::vector<double> cands;
    auto probe = [&](double s) {
      if (s > ph.lo && s < ph.hi)
        cands.push_back(ph(s));
    };
    if (ph.lo > 0.0)
      cands.push_back(ph(std::nextafter(ph.lo, kInf)));
    if (std::isfinite(ph.hi))
      cands.push_back(ph.leftLimitAtHi());
    else
      cands.push_back(ph.pow == 0.0 ? ph.scale : 0.0);
    if (ph.lo == 0.0)
      cands.push_back(ph.pow < 0.0 ? 0.0 : (ph.logpow > 0.0 ? 0.0 : ph.scale));
    if (ph.pow != 0.0 && ph.logpow != 0.0)
      probe(std::exp(-ph.logpow / ph.pow));
    return *std::max_element(cands.begin(), cands.end());
  }

  const char* functionKindName(FunctionKind k)
  {
    switch (k) {
    case FunctionKind::RadialPowerLog: return "radial_powerlog";
    case FunctionKind::TailPower: return "tail_power";
    case FunctionKind::BumpSum: return "bumpsum";
    case FunctionKind::Indicator: return "indicator";
    case FunctionKind::Zero: return "zero";
    }
    return "zero";
  }

  TestFunction TestFunction::radialPowerLog(int n, double g, double h, double R, double pRoot)
  {
    TestFunction f;
    f.kind = FunctionKind::RadialPowerLog;
    f.n = n;
    f.g = g;
    f.h = h;
    f.R = R;
    f.pRoot = pRoot;
    f.validate();
    return f;
  }

  TestFunction TestFunction::tailPower(int n, double g, double pRoot)
  {
    TestFunction f;
    f.kind = FunctionKind::TailPower;
    f.n = n;
    f.g = g;
    f.pRoot = pRoot;
    f.validate();
    return f;
  }

  TestFunction TestFunction::bumpSum(int n, double alpha, int K, double pRoot)
  {
    TestFunction f;
    f.kind = FunctionKind::BumpSum;
    f.n = n;
    f.alpha = alpha;
    f.K = K;
    f.pRoot = pRoot;
    f.validate();
    return f;
  }

  TestFunction TestFunction::indicator(int n, double R)
  {
    TestFunction f;
    f.kind = FunctionKind::Indicator;
    f.n = n;
    f.R = R;
    f.validate();
    return f;
  }

  TestFunction TestFunction::zero(int n)
  {
    TestFunction f;
    f.kind = FunctionKind::Zero;
    f.n = n;
    f.validate();
    return f;
  }

  void TestFunction::validate() const
  {
    require(n >= 1, "dimension n must be a positive integer");
    require(pRoot >= 1.0 && std::isfinite(pRoot), "p_root must be a finite real >= 1");
    switch (kind) {
    case FunctionKind::RadialPowerLog:
      require(std::isfinite(g) && std::isfinite(h), "g and h must be finite");
      require(R > 0.0, "support radius R must be positive");
      if (h != 0.0)
        require(R < 1.0, "a log factor needs support radius R < 1");
      break;
    case FunctionKind::TailPower:
      require(std::isfinite(g), "g must be finite");
      break;
    case FunctionKind::BumpSum:
      require(alpha > 0.0 && alpha < n, "bump-sum alpha must lie in (0, n)");
      require(K >= 3, "bump-sum truncation K must be >= 3");
      require(K <= 60, "bump-sum truncation K must be <= 60");
      break;
    case FunctionKind::Indicator:
      require(R > 0.0, "indicator radius must be positive");
      break;
    case FunctionKind::Zero:
      break;
    }
  }

  std::vector<BumpSpec> bumps(const TestFunction& f)
  {
    std::vector<BumpSpec> out;
    if (f.kind != FunctionKind::BumpSum)
      return out;
    for (int k = 3; k <= f.K; ++k)
      out.push_back(BumpSpec{ k, std::ldexp(1.0, -k), std::pow(8.0, -k),
                              std::pow(8.0, f.alpha * k / f.pRoot) });
    return out;
  }

  bool bumpSupportsDisjoint(int K)
  {
    require(K >= 3 && K <= 40, "exact disjointness check supports 3 <= K <= 40");
    using u128 = unsigned __int128;
    const int shift = 3 * K;
    auto center = [&](int k) { return u128(1) << (shift - k); };
    auto radius = [&](int k) { return u128(1) << (shift - 3 * k); };
    for (int j = 3; j <= K; ++j)
      for (int k = j + 1; k <= K; ++k) {
        const u128 gap = center(j) - center(k);
        if (!(gap > radius(j) + radius(k)))
          return false;
      }
    return true;
  }

  int defaultBumpCount(double rMin)
  {
    require(rMin > 0.0, "r_min must be positive");
    const int k = static_cast<int>(std::ceil(std::log(1.0 / rMin) / std::log(8.0))) + 2;
    return std::max(3, k);
  }

  double RadialProfile::operator()(double s) const
  {
    if (!(s > lo && s < hi) || scale == 0.0)
      return 0.0;
    double v = scale;
    if (pow != 0.0)
      v *= std::pow(s, -pow);
    if (logpow != 0.0)
      v *= std::pow(std::fabs(std::log(s)), -logpow);
    return v;
  }

  Monomial RadialProfile::powerMonomial(double p) const
  {
    return Monomial{ std::pow(scale, p), -pow * p, -logpow * p, lo, hi };
  }

  double RadialProfile::leftLimitAtHi() const
  {
    if (scale == 0.0)
      return 0.0;
    if (std::isinf(hi))
      return pow > 0.0 ? 0.0 : (pow == 0.0 ? scale : kInf);
    double v = scale * std::pow(hi, -pow);
    if (logpow != 0.0)
      v *= std::pow(std::fabs(std::log(hi)), -logpow);
    return v;
  }

  ProfileResult radialProfile(const TestFunction& f)
  {
    f.validate();
    RadialProfile ph;
    switch (f.kind) {
    case FunctionKind::RadialPowerLog: {
      ph.pow = f.g / f.pRoot;
      ph.logpow = f.h / f.pRoot;
      ph.lo = 0.0;
      ph.hi = f.R;
      //log-derivative -pow + logpow/|ln s| <= 0 on (0, R)
      if (ph.pow < 0.0)
        ph.nonincreasing = false;
      else if (ph.logpow == 0.0)
        ph.nonincreasing = true;
      else
        ph.nonincreasing = ph.pow * std::fabs(std::log(f.R)) >= ph.logpow;
      return ph;
    }
    case FunctionKind::TailPower:
      ph.pow = f.g / f.pRoot;
      ph.lo = 1.0;
      ph.hi = kInf;
      ph.nonincreasing = false;
      return ph;
    case FunctionKind::Indicator:
      ph.lo = 0.0;
      ph.hi = f.R;
      return ph;
    case FunctionKind::Zero:
      ph.scale = 0.0;
      ph.lo = 0.0;
      ph.hi = 0.0;
      return ph;
    case FunctionKind::BumpSum: {
      NotRadial nr;
      for (const auto& b : bumps(f))
        nr.singularCenters.push_back(b.center);
      return nr;
    }
    }
    return ph;
  }

  std::optional<RadialProfile> radialProfileIf(const TestFunction& f)
  {
    auto res = radialProfile(f);
    if (auto* ph = std::get_if<RadialProfile>(&res))
      return *ph;
    return std::nullopt;
  }

  double evalFunction(const TestFunction& f, std::span<const double> y)
  {
    require(static_cast<int>(y.size()) == f.n, "point dimension does not match the function");
    if (f.kind == FunctionKind::BumpSum) {
      for (const auto& b : bumps(f)) {
        double d2 = (y[0] - b.center) * (y[0] - b.center);
        for (std::size_t i = 1; i < y.size(); ++i)
          d2 += y[i] * y[i];
        if (std::sqrt(d2) < b.radius)
          return b.height;
      }
      return 0.0;
    }
    const RadialProfile ph = *radialProfileIf(f);
    const double s = norm(y);
    if (s == 0.0) {
      if (ph.scale == 0.0 || ph.lo > 0.0 || !(ph.hi > 0.0))
        return 0.0;
      if (ph.pow > 0.0 || (ph.pow == 0.0 && ph.logpow < 0.0))
        fail(ErrorCode::SingularPoint, "function evaluated at its singular centre");
      if (ph.pow < 0.0 || ph.logpow > 0.0)
        return 0.0;
      return ph.scale;
    }
    return ph(s);
  }

  bool locallyIntegrable(const TestFunction& f, double p)
  {
    auto ph = radialProfileIf(f);
    if (!ph || ph->scale == 0.0 || ph->lo > 0.0)
      return true;
    const Monomial m = ph->powerMonomial(p);
    return !divergesAtZero(m.a + f.n, m.b);
  }

  double supNorm(const TestFunction& f)
  {
    if (f.kind == FunctionKind::BumpSum) {
      double m = 0.0;
      for (const auto& b : bumps(f))
        m = std::max(m, b.height);
      return m;
    }
    return profileSup(*radialProfileIf(f));
  }

  double nondecreasingLogSquareRadius(const ScaleFunction& psi)
  {
    require(psi.kind != ScaleKind::Tabulated, "support radius rule needs a power-log scale");
    const double a = psi.a;
    const double c = (psi.kind == ScaleKind::PowerLog ? psi.b : 0.0) + 2.0;
    double delta = std::exp(-1.0);
    if (psi.kind == ScaleKind::PowerLog)
      delta = std::min(delta, psi.t0);
    //d/dt ln(t^a |ln t|^c) = (a - c/|ln t|)/t
    if (c > 0.0) {
      require(a > 0.0, "Psi(t)|ln t|^2 is not nondecreasing near 0 for this scale");
      delta = std::min(delta, std::exp(-c / a));
    } else {
      require(a >= 0.0, "Psi(t)|ln t|^2 is not nondecreasing near 0 for this scale");
    }
    return delta;
  }

  TestFunction stummelNotMorreyExample(int n, const ScaleFunction& psi, double p)
  {
    require(psi.scaleConst == 1.0, "the construction expects scale_const = 1");
    const double delta = nondecreasingLogSquareRadius(psi);
    const double b = psi.kind == ScaleKind::PowerLog ? psi.b : 0.0;
    return TestFunction::radialPowerLog(n, psi.a, b + 2.0, delta, p);
  }

}
