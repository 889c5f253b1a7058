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

#include "stummel/quad.hpp"
#include "stummel/errors.hpp"
#include "stummel/special.hpp"
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <queue>
#include <random>

namespace stummel {

  namespace {

    constexpr double kInf = std::numeric_limits<double>::infinity();

    constexpr std::array<double, 8> kXgk = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000 };
    constexpr std::array<double, 8> kWgk = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714 };
    constexpr std::array<double, 4> kWg = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327 };

    struct Panel {
      double a, b, value, error;
      bool operator<(const Panel& o) const { return error < o.error; }
    };

    Panel gk15(const Integrand& f, double a, double b)
    {
      const double c = 0.5 * (a + b);
      const double h = 0.5 * (b - a);
      const double fc = f(c);
      double kron = fc * kWgk[7];
      double gauss = fc * kWg[3];
      for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
          gauss += kWg[j / 2] * (f1 + f2);
      }
      return Panel{ a, b, kron * h, std::fabs((kron - gauss) * h) };
    }

    //Tail model  C s^(a-1) |ln s|^b  (b = 0 when `logs` is off), fitted
    //through three samples and checked at further ones. Empty when the
    //samples do not follow the model to within `tol`.
    struct TailFit {
      PowerLogTerm term;
      double deviation = 0.0;
    };

    std::optional<TailFit> fitTail(const Integrand& f, const std::array<double, 6>& s, bool logs, double tol)
    {
      std::array<double, 6> y{};
      for (std::size_t i = 0; i < s.size(); ++i) {
        const double v = f(s[i]);
        if (!(v > 0.0) || !std::isfinite(v))
          return std::nullopt;
        y[i] = std::log(v);
      }
      auto x1 = [](double t) { return std::log(t); };
      auto x2 = [](double t) { return std::log(std::fabs(std::log(t))); };
      double lnC, am1, b = 0.0;
      if (logs) {
        //3x3 solve through points 0, 2, 4
        const double a11 = x1(s[2]) - x1(s[0]), a12 = x2(s[2]) - x2(s[0]), r1 = y[2] - y[0];
        const double a21 = x1(s[4]) - x1(s[0]), a22 = x2(s[4]) - x2(s[0]), r2 = y[4] - y[0];
        const double det = a11 * a22 - a12 * a21;
        if (!(std::fabs(det) > 0.0))
          return std::nullopt;
        am1 = (r1 * a22 - a12 * r2) / det;
        b = (a11 * r2 - r1 * a21) / det;
        lnC = y[0] - am1 * x1(s[0]) - b * x2(s[0]);
      } else {
        am1 = (y[4] - y[0]) / (x1(s[4]) - x1(s[0]));
        lnC = y[0] - am1 * x1(s[0]);
      }
      TailFit fit{ PowerLogTerm{ std::exp(lnC), am1 + 1.0, b, 0.0, kInf }, 0.0 };
      for (std::size_t i = 0; i < s.size(); ++i) {
        const double model = lnC + am1 * x1(s[i]) + b * (logs ? x2(s[i]) : 0.0);
        fit.deviation = std::max(fit.deviation, std::fabs(std::expm1(y[i] - model)));
      }
      if (!(fit.deviation <= tol) || !std::isfinite(fit.term.coef))
        return std::nullopt;
      return fit;
    }

    double panelIntegral(const Integrand& f, double lo, double hi, std::span<const double> breakpoints,
                         const QuadOptions& opt)
    {
      std::vector<double> inner;
      for (double x : breakpoints)
        if (x > lo && x < hi)
          inner.push_back(x);
      QuadOptions o = opt;
      o.absTol = std::max(opt.absTol, 0.0);
      return integrateGK(f, lo, hi, inner, o);
    }

    double uniform01(std::mt19937_64& rng)
    {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

  }

  double PowerLogTerm::operator()(double s) const
  {
    if (!(s > lo && s < hi))
      return 0.0;
    double v = coef * std::pow(s, a - 1.0);
    if (b != 0.0)
      v *= std::pow(std::fabs(std::log(s)), b);
    return v;
  }

  double Monomial::operator()(double t) const
  {
    if (!(t > lo && t < hi))
      return 0.0;
    double v = coef * std::pow(t, a);
    if (b != 0.0)
      v *= std::pow(std::fabs(std::log(t)), b);
    return v;
  }

  Monomial Monomial::pow(double p) const
  {
    return Monomial{ std::pow(coef, p), a * p, b * p, lo, hi };
  }

  Monomial operator*(const Monomial& x, const Monomial& y)
  {
    return Monomial{ x.coef * y.coef, x.a + y.a, x.b + y.b, std::max(x.lo, y.lo), std::min(x.hi, y.hi) };
  }

  std::vector<Monomial> multiply(const std::vector<Monomial>& xs, const std::vector<Monomial>& ys)
  {
    std::vector<Monomial> out;
    for (const auto& x : xs)
      for (const auto& y : ys) {
        Monomial m = x * y;
        if (m.lo < m.hi && m.coef != 0.0)
          out.push_back(m);
      }
    return out;
  }

  bool divergesAtZero(double a, double b)
  {
    return a < 0.0 || (a == 0.0 && b >= -1.0);
  }

  bool divergesAtInfinity(double a, double b)
  {
    return a > 0.0 || (a == 0.0 && b >= -1.0);
  }

  void RadialIntegrand::add(PowerLogTerm t)
  {
    if (t.coef != 0.0 && t.lo < t.hi)
      terms.push_back(t);
  }

  void RadialIntegrand::canonicalize()
  {
    std::vector<PowerLogTerm> merged;
    for (const auto& t : terms) {
      if (t.coef == 0.0 || !(t.lo < t.hi))
        continue;
      auto it = std::find_if(merged.begin(), merged.end(), [&](const PowerLogTerm& m) {
        return m.a == t.a && m.b == t.b && m.lo == t.lo && m.hi == t.hi;
      });
      if (it == merged.end())
        merged.push_back(t);
      else
        it->coef += t.coef;
    }
    std::erase_if(merged, [](const PowerLogTerm& t) { return t.coef == 0.0; });
    std::sort(merged.begin(), merged.end(), [](const PowerLogTerm& x, const PowerLogTerm& y) {
      if (x.lo != y.lo) return x.lo < y.lo;
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });
    terms = std::move(merged);
  }

  double RadialIntegrand::operator()(double s) const
  {
    double v = 0.0;
    for (const auto& t : terms)
      v += t(s);
    return v;
  }

  Extended integrateTerm(const PowerLogTerm& t, double lo, double hi)
  {
    const double L = std::max(lo, t.lo);
    const double H = std::min(hi, t.hi);
    if (!(L < H) || t.coef == 0.0)
      return Extended::finite(0.0);
    require(L >= 0.0, "power-log term support must lie in [0, inf)");
    const double a = t.a;
    const double b = t.b;
    if (L == 0.0 && divergesAtZero(a, b))
      return Extended::infinite();

    if (b == 0.0) {
      if (std::isinf(H) && a >= 0.0)
        return Extended::infinite();
      double v;
      if (a == 0.0) {
        v = std::log(H / L);
      } else if (L == 0.0) {
        v = std::pow(H, a) / a;
      } else if (std::isinf(H)) {
        v = -std::pow(L, a) / a;
      } else {
        v = std::pow(L, a) * std::expm1(a * std::log(H / L)) / a;
      }
      return Extended::finite(t.coef * v);
    }

    require(H <= 1.0, "log factors are only supported on (0, 1]");
    const double uHi = -std::log(H);//small end of the u-range
    const double uLo = L == 0.0 ? kInf : -std::log(L);
    if (uHi == 0.0 && b <= -1.0)
      return Extended::infinite();

    double v;
    if (a > 0.0) {
      const double shape = b + 1.0;
      const double g1 = upperGamma(shape, a * uHi);
      const double g2 = std::isinf(uLo) ? 0.0 : upperGamma(shape, a * uLo);
      if (g1 == 0.0) {
        v = 0.0;//underflow: the whole range sits deep in the exponential tail
      } else if (g2 < 0.5 * g1) {
        v = std::exp(-shape * std::log(a)) * (g1 - g2);
      } else {
        v = integrateGK([a, b](double u) { return std::exp(-a * u) * std::pow(u, b); }, uHi, uLo,
                        QuadOptions{ 1e-13, 0.0, 4000 });
      }
    } else if (a == 0.0) {
      if (b == -1.0) {
        v = std::log(uLo / uHi);
      } else {
        const double e = b + 1.0;
        const double top = std::isinf(uLo) ? 0.0 : std::pow(uLo, e);
        const double bottom = std::pow(uHi, e);
        v = (top - bottom) / e;
      }
    } else {
      v = integrateGK([a, b](double u) { return std::exp(-a * u) * std::pow(u, b); }, uHi, uLo,
                      QuadOptions{ 1e-12, 0.0, 4000 });
    }
    if (std::isinf(v))
      return Extended::infinite();
    return Extended::finite(t.coef * v);
  }

  Extended integrateRadial(const RadialIntegrand& ig, double r)
  {
    require(r > 0.0, "integration radius must be positive");
    Extended total = Extended::finite(0.0);
    for (const auto& t : ig.terms) {
      total += integrateTerm(t, 0.0, r);
      if (total.isInfinite())
        return total;
    }
    return total;
  }

  double integrateGK(const Integrand& f, double a, double b, const QuadOptions& opt)
  {
    if (a == b)
      return 0.0;
    require(a < b && std::isfinite(a) && std::isfinite(b), "integrateGK needs a finite interval a < b");
    std::priority_queue<Panel> queue;
    Panel first = gk15(f, a, b);
    double total = first.value;
    double err = first.error;
    queue.push(first);
    int subdivisions = 0;
    while (err > std::max(opt.absTol, opt.relTol * std::fabs(total))) {
      if (subdivisions >= opt.maxSubdivisions)
        fail(ErrorCode::NonconvergentQuadrature, "adaptive quadrature exhausted its panel budget");
      Panel worst = queue.top();
      const double mid = 0.5 * (worst.a + worst.b);
      if (!(mid > worst.a && mid < worst.b)) {
        //Panel at machine resolution; its error is roundoff.
        break;
      }
      queue.pop();
      const Panel left = gk15(f, worst.a, mid);
      const Panel right = gk15(f, mid, worst.b);
      total += left.value + right.value - worst.value;
      err += left.error + right.error - worst.error;
      queue.push(left);
      queue.push(right);
      ++subdivisions;
      if (subdivisions % 64 == 0) {
        //Recompute sums to shed accumulated cancellation.
        std::priority_queue<Panel> copy = queue;
        total = 0.0;
        err = 0.0;
        while (!copy.empty()) {
          total += copy.top().value;
          err += copy.top().error;
          copy.pop();
        }
      }
    }
    return total;
  }

  double integrateGK(const Integrand& f, double a, double b, std::span<const double> breakpoints,
                     const QuadOptions& opt)
  {
    std::vector<double> pts{ a };
    for (double x : breakpoints)
      if (x > a && x < b)
        pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      total += integrateGK(f, pts[i], pts[i + 1], opt);
    return total;
  }

  double integrateDyadicFromZero(const Integrand& f, double r, std::span<const double> breakpoints,
                                 const QuadOptions& opt)
  {
    require(r > 0.0 && std::isfinite(r), "dyadic integration needs finite r > 0");
    const double lowestBreak =
      std::accumulate(breakpoints.begin(), breakpoints.end(), r, [](double m, double x) { return x > 0.0 ? std::min(m, x) : m; });
    double sum = 0.0;
    double hi = r;
    int zeros = 0;
    for (int k = 0; k < 1100; ++k) {
      const double lo = 0.5 * hi;
      if (lo == 0.0)
        break;
      const double panel = panelIntegral(f, lo, hi, breakpoints, opt);
      sum += panel;
      hi = lo;
      zeros = panel == 0.0 ? zeros + 1 : 0;
      if (zeros >= 64)
        break;
      if (k < 2 || hi >= 0.5 || hi > lowestBreak || panel == 0.0)
        continue;
      //remaining (0, hi): close it with the fitted tail once the model holds
      std::array<double, 6> s{};
      for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = std::ldexp(hi, -int(8 * i));
      const auto fit = fitTail(f, s, true, 0.5);
      if (!fit || !(fit->term.a > 0.0))
        continue;
      PowerLogTerm t = fit->term;
      t.hi = hi;
      const double tail = integrateTerm(t, 0.0, hi).value();
      if (fit->deviation * tail <= 0.1 * opt.relTol * std::fabs(sum + tail) ||
          tail <= 1e-3 * opt.relTol * std::fabs(sum))
        return sum + tail;
    }
    return sum;
  }

  double integrateDyadicToInfinity(const Integrand& f, double a, std::span<const double> breakpoints,
                                   const QuadOptions& opt)
  {
    require(a > 0.0 && std::isfinite(a), "dyadic integration needs finite a > 0");
    const double highestBreak =
      std::accumulate(breakpoints.begin(), breakpoints.end(), a, [](double m, double x) { return std::max(m, x); });
    double sum = 0.0;
    double lo = a;
    int zeros = 0;
    for (int k = 0; k < 1100; ++k) {
      const double hi = 2.0 * lo;
      if (std::isinf(hi))
        break;
      const double panel = panelIntegral(f, lo, hi, breakpoints, opt);
      sum += panel;
      lo = hi;
      zeros = panel == 0.0 ? zeros + 1 : 0;
      if (zeros >= 64)
        break;
      if (k < 2 || lo < highestBreak || panel == 0.0)
        continue;
      std::array<double, 6> s{};
      for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = std::ldexp(lo, int(8 * i));
      const auto fit = fitTail(f, s, false, 0.5);
      if (!fit || !(fit->term.a < 0.0))
        continue;
      const double tail = integrateTerm(fit->term, lo, kInf).value();
      if (fit->deviation * tail <= 0.1 * opt.relTol * std::fabs(sum + tail) ||
          tail <= 1e-3 * opt.relTol * std::fabs(sum))
        return sum + tail;
    }
    return sum;
  }

  std::uint64_t splitmix64(std::uint64_t x)
  {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  McEstimate integrateBallMc(const PointIntegrand& f, std::span<const double> center, double r,
                             std::uint64_t samples, std::uint64_t seed)
  {
    const int n = static_cast<int>(center.size());
    if (n > 3)
      fail(ErrorCode::DimensionTooLarge, "Monte-Carlo ball integration supports n <= 3");
    require(n >= 1, "dimension must be positive");
    require(r > 0.0, "ball radius must be positive");
    require(samples >= 2 * kMcStrata, "Monte-Carlo needs at least two samples per stratum");

    const std::uint64_t perStratum = samples / kMcStrata;
    const double vn = n == 1 ? 2.0 : (n == 2 ? std::numbers::pi : 4.0 * std::numbers::pi / 3.0);
    const double logInner = std::log(kMcInnerFraction);

    McEstimate est;
    est.seed = seed;
    est.samples = perStratum * kMcStrata;
    double variance = 0.0;
    std::vector<double> y(n);
    for (int j = 0; j < kMcStrata; ++j) {
      const double s0 = r * std::exp(logInner * (1.0 - double(j) / kMcStrata));
      const double s1 = r * std::exp(logInner * (1.0 - double(j + 1) / kMcStrata));
      const double p0 = std::pow(s0, n);
      const double p1 = std::pow(s1, n);
      const double shellVolume = vn * (p1 - p0);
      std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(j) + 1)));
      double mean = 0.0;
      double m2 = 0.0;
      for (std::uint64_t i = 0; i < perStratum; ++i) {
        const double s = std::pow(p0 + uniform01(rng) * (p1 - p0), 1.0 / n);
        if (n == 1) {
          y[0] = center[0] + (uniform01(rng) < 0.5 ? -s : s);
        } else if (n == 2) {
          const double phi = 2.0 * std::numbers::pi * uniform01(rng);
          y[0] = center[0] + s * std::cos(phi);
          y[1] = center[1] + s * std::sin(phi);
        } else {
          const double z = 2.0 * uniform01(rng) - 1.0;
          const double phi = 2.0 * std::numbers::pi * uniform01(rng);
          const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
          y[0] = center[0] + s * rho * std::cos(phi);
          y[1] = center[1] + s * rho * std::sin(phi);
          y[2] = center[2] + s * z;
        }
        const double v = f(y);
        //Welford
        const double delta = v - mean;
        mean += delta / double(i + 1);
        m2 += delta * (v - mean);
      }
      const double sampleVar = perStratum > 1 ? m2 / double(perStratum - 1) : 0.0;
      est.value += shellVolume * mean;
      variance += shellVolume * shellVolume * sampleVar / double(perStratum);
    }
    est.stdError = std::sqrt(variance);
    return est;
  }

}
