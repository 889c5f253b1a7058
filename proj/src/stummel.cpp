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

#include "stummel/stummel.hpp"
#include "stummel/errors.hpp"
#include "stummel/geometry.hpp"
#include "stummel/parallel.hpp"
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace stummel {

  namespace {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const QuadOptions kNested{ 1e-9, 0.0, 4000 };

    bool psiDivergesAtZero(const ScaleFunction& psi)
    {
      const auto [a, b] = psi.exponentsAtZero();
      return divergesAtZero(a, b);
    }

    //int_lo^hi Psi(s)/s ds
    Extended psiOverS(const ScaleFunction& psi, double lo, double hi)
    {
      Extended acc = Extended::finite(0.0);
      if (!(lo < hi))
        return acc;
      for (const auto& m : psi.pieces())
        acc += integrateTerm(m.overS(), lo, hi);
      return acc;
    }

    std::vector<double> psiBreaks(const ScaleFunction& psi)
    {
      std::vector<double> out;
      for (const auto& m : psi.pieces())
        if (m.lo > 0.0)
          out.push_back(m.lo);
      return out;
    }

    std::mt19937_64 radiusRng(std::uint64_t seed, double r)
    {
      return std::mt19937_64(splitmix64(seed ^ splitmix64(std::bit_cast<std::uint64_t>(r))));
    }

    double unit(std::mt19937_64& g)
    {
      //53 raw bits; std::uniform_real_distribution is not portable bit-for-bit
      return static_cast<double>(g() >> 11) * 0x1.0p-53;
    }

    Extended originIntegral(const RadialProfile& ph, int n, double p, const ScaleFunction& psi, double r)
    {
      if (ph.scale == 0.0 || !(ph.lo < ph.hi))
        return Extended::finite(0.0);
      const double omega = Geometry::of(n).omega;
      RadialIntegrand ig;
      for (const auto& m : multiply({ ph.powerMonomial(p) }, psi.pieces())) {
        PowerLogTerm t = m.overS();
        t.coef *= omega;
        ig.add(t);
      }
      ig.canonicalize();
      return integrateRadial(ig, r);
    }

    //Mass of phi^p on the sphere |y - c e1| = s.
    //int_{|c-s|}^{c+s} rho fp(rho) drho, written as rho = M + u, |u| <= m so
    //that thin shells (s << c or c << s) keep their relative accuracy.
    double shellIntegral(const Monomial& fp, double c, double s)
    {
      const double M = std::max(c, s), m = std::min(c, s);
      const double L = M - m;
      const PowerLogTerm t{ fp.coef, fp.a + 2.0, fp.b, fp.lo, fp.hi };
      if (!(fp.lo <= L && fp.hi >= M + m) || !(L > 0.0) || m > 0.25 * M)
        return integrateTerm(t, L, M + m).value();
      if (fp.b == 0.0) {
        const double a = t.a;
        const double lr = std::log1p(2.0 * m / L);//ln(H/L)
        return a == 0.0 ? t.coef * lr : t.coef * std::pow(L, a) * std::expm1(a * lr) / a;
      }
      return integrateGK([&](double u) { return t(M + u); }, -m, m, kNested);
    }

    double sphereMass(const Monomial& fp, const RadialProfile& ph, int n, double c, double s)
    {
      if (c == 0.0)
        return Geometry::of(n).sphereArea(s) * fp(s);
      if (n == 1)
        return fp(c + s) + fp(std::fabs(c - s));
      if (n == 3) {
        const double lo = std::fabs(c - s);
        if (!(lo < ph.hi) || !(c + s > ph.lo))
          return 0.0;
        return 2.0 * std::numbers::pi * s / c * shellIntegral(fp, c, s);
      }
      //omega_{n-2} s^(n-1) int_0^pi phi^p(rho(theta)) sin^(n-2) theta dtheta
      const double lo = std::fabs(c - s);
      if (!(lo < ph.hi) || !(c + s > ph.lo))
        return 0.0;
      const double omegaLow = n == 2 ? 2.0 : Geometry::of(n - 1).omega;
      std::vector<double> bps;
      for (double L : { ph.lo, ph.hi }) {
        if (!(L > 0.0) || std::isinf(L))
          continue;
        const double ct = (L * L - c * c - s * s) / (2.0 * c * s);
        if (ct > -1.0 && ct < 1.0)
          bps.push_back(std::acos(ct));
      }
      std::sort(bps.begin(), bps.end());
      auto inner = [&](double th) {
        const double h = std::cos(0.5 * th);
        const double rho = std::sqrt((c - s) * (c - s) + 4.0 * c * s * h * h);
        const double w = n == 2 ? 1.0 : std::pow(std::sin(th), n - 2);
        return fp(rho) * w;
      };
      return omegaLow * std::pow(s, n - 1) * integrateGK(inner, 0.0, std::numbers::pi, bps, kNested);
    }

    Extended offsetIntegral(const RadialProfile& ph, int n, double p, const ScaleFunction& psi, double c, double r)
    {
      if (c == 0.0)
        return originIntegral(ph, n, p, psi, r);
      if (ph.scale == 0.0 || !(ph.lo < ph.hi))
        return Extended::finite(0.0);
      const Monomial fp = ph.powerMonomial(p);
      std::vector<double> bps = psiBreaks(psi);
      bps.push_back(c);
      for (double L : { ph.lo, ph.hi })
        if (std::isfinite(L)) {
          bps.push_back(std::fabs(c - L));
          bps.push_back(c + L);
        }
      std::erase_if(bps, [&](double b) { return !(b > 0.0 && b < r); });
      std::sort(bps.begin(), bps.end());
      bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
      auto integrand = [&](double s) {
        const double m = sphereMass(fp, ph, n, c, s);
        return m == 0.0 ? 0.0 : psi.extendedValue(s) * std::pow(s, -n) * m;
      };
      return Extended::finite(integrateDyadicFromZero(integrand, r, bps, kNested));
    }

    Extended supOverOffsets(const RadialProfile& ph, int n, double p, const ScaleFunction& psi, double r,
                            const EtaOptions& opt)
    {
      std::vector<double> edges;
      if (ph.lo > 0.0)
        edges.push_back(ph.lo);
      if (std::isfinite(ph.hi))
        edges.push_back(ph.hi);
      if (ph.pow != 0.0 && ph.logpow / ph.pow > 0.0) {
        const double s = std::exp(-ph.logpow / ph.pow);
        if (s > ph.lo && s < ph.hi)
          edges.push_back(s);
      }
      std::vector<double> cands{ 0.0 };
      for (double E : edges)
        for (int j = -8; j <= 8; ++j)
          if (E + j * r / 8.0 >= 0.0)
            cands.push_back(E + j * r / 8.0);
      auto rng = radiusRng(opt.seed, r);
      std::vector<double> anchors = edges;
      anchors.push_back(0.0);
      for (int i = 0; i < opt.perturbations; ++i) {
        const double E = anchors[rng() % anchors.size()];
        cands.push_back(std::fabs(E + (2.0 * unit(rng) - 1.0) * r));
      }

      double best = -1.0;
      double bestC = 0.0;
      auto value = [&](double c) { return offsetIntegral(ph, n, p, psi, c, r); };
      for (double c : cands) {
        const Extended v = value(c);
        if (v.isInfinite())
          return v;
        if (v.value() > best) {
          best = v.value();
          bestC = c;
        }
      }
      //golden-section polish around the best candidate
      double lo = std::max(0.0, bestC - r / 8.0);
      double hi = bestC + r / 8.0;
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = hi - g * (hi - lo);
      double x2 = lo + g * (hi - lo);
      double f1 = value(x1).value();
      double f2 = value(x2).value();
      for (int it = 0; it < 24; ++it) {
        if (f1 > f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - g * (hi - lo);
          f1 = value(x1).value();
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + g * (hi - lo);
          f2 = value(x2).value();
        }
      }
      best = std::max({ best, f1, f2 });
      return Extended::finite(best);
    }

    //Integral over B(x, r) of the bump sum, one closed-form or 1-D piece per bump.
    Extended bumpIntegralAt(const TestFunction& f, double p, const ScaleFunction& psi,
                            const std::vector<double>& x, double r)
    {
      const int n = f.n;
      if (n > 3)
        fail(ErrorCode::DimensionTooLarge, "bump-sum moduli support n <= 3");
      const double omega = Geometry::of(n).omega;
      Extended acc = Extended::finite(0.0);
      for (const auto& b : bumps(f)) {
        double d2 = (x[0] - b.center) * (x[0] - b.center);
        for (int i = 1; i < n; ++i)
          d2 += x[i] * x[i];
        const double d = std::sqrt(d2);
        const double rho = b.radius;
        if (d >= r + rho)
          continue;
        Extended J = Extended::finite(0.0);
        if (n == 1) {
          const double xs = x[0];
          J += psiOverS(psi, std::max(0.0, b.center - rho - xs), std::min(r, b.center + rho - xs));
          J += psiOverS(psi, std::max(0.0, xs - b.center - rho), std::min(r, xs - b.center + rho));
        } else {
          if (d < rho)
            J += psiOverS(psi, 0.0, std::min(r, rho - d)).scaled(omega);
          const double lo = std::fabs(rho - d);
          const double hi = std::min(r, d + rho);
          if (lo < hi) {
            auto g = [&](double u) {
              const double s = d + u;
              return psi.extendedValue(s) * std::pow(s, -n) * sphereBallOverlapOffset(n, d, u, rho);
            };
            J += Extended::finite(integrateGK(g, lo - d, hi - d, kNested));
          }
        }
        acc += J.scaled(std::pow(b.height, p));
        if (acc.isInfinite())
          return acc;
      }
      return acc;
    }

    Extended bumpSup(const TestFunction& f, double p, const ScaleFunction& psi, double r, const EtaOptions& opt)
    {
      const auto bs = bumps(f);
      std::vector<std::vector<double>> cands;
      auto axis = [&](double c) {
        std::vector<double> x(f.n, 0.0);
        x[0] = c;
        cands.push_back(std::move(x));
      };
      axis(0.0);
      for (std::size_t i = 0; i < bs.size(); ++i) {
        axis(bs[i].center);
        if (i + 1 < bs.size())
          axis(0.5 * (bs[i].center + bs[i + 1].center));
      }
      auto rng = radiusRng(opt.seed, r);
      for (int i = 0; i < opt.perturbations && !bs.empty(); ++i) {
        const auto& b = bs[rng() % bs.size()];
        std::vector<double> x(f.n);
        for (int j = 0; j < f.n; ++j)
          x[j] = (2.0 * unit(rng) - 1.0) * b.radius;
        x[0] += b.center;
        cands.push_back(std::move(x));
      }
      Extended best = Extended::finite(0.0);
      for (const auto& x : cands) {
        best = max(best, bumpIntegralAt(f, p, psi, x, r));
        if (best.isInfinite())
          break;
      }
      return best;
    }

    double tailSlope(const ModulusCurve& c)
    {
      std::vector<double> xs, ys;
      for (std::size_t i = 0; i < c.r.size() && xs.size() < 16; ++i)
        if (c.values[i].isFinite() && c.values[i].value() > 0.0) {
          xs.push_back(std::log(c.r[i]));
          ys.push_back(std::log(c.values[i].value()));
        }
      if (xs.size() < 2)
        return 0.0;
      double mx = 0.0, my = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
      }
      mx /= xs.size();
      my /= xs.size();
      double sxy = 0.0, sxx = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
      }
      return sxx > 0.0 ? sxy / sxx : 0.0;
    }
  }

  const char* membershipName(Membership m)
  {
    switch (m) {
    case Membership::Member: return "member";
    case Membership::NonMember: return "non_member";
    case Membership::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
  }

  Extended ballIntegralAt(const TestFunction& f, double p, const ScaleFunction& psi, double c, double r)
  {
    f.validate();
    psi.validate();
    require(p >= 1.0, "p must be >= 1");
    if (!(r > 0.0))
      fail(ErrorCode::NonPositiveArgument, "radius must be positive");
    if (f.kind == FunctionKind::BumpSum) {
      std::vector<double> x(f.n, 0.0);
      x[0] = c;
      return bumpIntegralAt(f, p, psi, x, r);
    }
    const RadialProfile ph = *radialProfileIf(f);
    if (c != 0.0 && !locallyIntegrable(f, p) && std::fabs(c) < r)
      return Extended::infinite();
    return offsetIntegral(ph, f.n, p, psi, std::fabs(c), r);
  }

  Extended eta(const TestFunction& f, double p, const ScaleFunction& psi, double r, const EtaOptions& opt)
  {
    f.validate();
    psi.validate();
    require(p >= 1.0, "p must be >= 1");
    if (!(r > 0.0))
      fail(ErrorCode::NonPositiveArgument, "radius must be positive");
    if (f.kind == FunctionKind::Zero)
      return Extended::finite(0.0);
    if (!locallyIntegrable(f, p) || psiDivergesAtZero(psi))
      return Extended::infinite();
    const ProfileResult prof = radialProfile(f);
    if (const auto* ph = std::get_if<RadialProfile>(&prof)) {
      if (ph->scale == 0.0 || !(ph->lo < ph->hi))
        return Extended::finite(0.0);
      if (ph->nonincreasing)
        return originIntegral(*ph, f.n, p, psi, r).root(p);
      return supOverOffsets(*ph, f.n, p, psi, r, opt).root(p);
    }
    return bumpSup(f, p, psi, r, opt).root(p);
  }

  std::vector<double> logGrid(double rMin, double rMax, int points)
  {
    require(rMin > 0.0 && rMin < rMax && std::isfinite(rMax), "grid needs 0 < r_min < r_max < inf");
    require(points >= 2, "grid needs at least two points");
    std::vector<double> g(points);
    const double step = std::log(rMax / rMin) / (points - 1);
    for (int i = 0; i < points; ++i)
      g[i] = rMin * std::exp(step * i);
    g.front() = rMin;
    g.back() = rMax;
    return g;
  }

  std::vector<double> defaultGrid()
  {
    return logGrid(1e-12, 1e2, 48);
  }

  bool ModulusCurve::allFinite() const
  {
    return std::all_of(values.begin(), values.end(), [](const Extended& v) { return v.isFinite(); });
  }

  std::optional<double> ModulusCurve::firstDivergent() const
  {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i].isInfinite())
        return r[i];
    return std::nullopt;
  }

  ModulusCurve modulusCurve(const TestFunction& f, double p, const ScaleFunction& psi,
                            const std::vector<double>& grid, const EtaOptions& opt)
  {
    require(!grid.empty(), "grid must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!(grid[i] > 0.0))
        fail(ErrorCode::NonPositiveArgument, "grid radii must be positive");
      if (i > 0)
        require(grid[i] > grid[i - 1], "grid must be strictly increasing");
    }
    ModulusCurve c;
    c.r = grid;
    c.f = f;
    c.p = p;
    c.psi = psi;
    c.values.assign(grid.size(), Extended::finite(0.0));
    parallelFor(grid.size(), [&](std::size_t i) { c.values[i] = eta(f, p, psi, grid[i], opt); });
    for (std::size_t i = 1; i < c.values.size(); ++i)
      c.values[i] = max(c.values[i], c.values[i - 1]);
    return c;
  }

  std::optional<double> bumpFamilyLowerBound(const TestFunction& f, double p, const ScaleFunction& psi)
  {
    if (f.kind != FunctionKind::BumpSum)
      return std::nullopt;
    const auto [a, b] = psi.exponentsAtZero();
    const double e = f.alpha * p / f.pRoot - a;
    if (!(e > 0.0 || (e == 0.0 && b >= 0.0)))
      return std::nullopt;
    const double omega = Geometry::of(f.n).omega;
    double inf = kInf;
    for (int k = 3; k <= 300; ++k) {
      const Extended I = integralScaleOverT(psi, std::pow(8.0, -k));
      if (I.isInfinite())
        return std::nullopt;
      const double w = std::pow(8.0, f.alpha * k * p / f.pRoot) * omega * I.value();
      inf = std::min(inf, w);
    }
    return std::pow(inf, 1.0 / p);
  }

  Classification classify(const TestFunction& f, double p, const ScaleFunction& psi,
                          const std::vector<double>& grid, const EtaOptions& opt)
  {
    require(!grid.empty() && grid.front() <= 1e-8, "classification grid must reach r_min <= 1e-8");
    Classification out;
    out.curve = modulusCurve(f, p, psi, grid, opt);
    auto& S = out.stummel;
    auto& B = out.bounded;
    S.space = "stummel";
    B.space = "bounded_stummel";
    const auto& v = out.curve.values;
    if (v.front().isFinite()) {
      S.limitEstimate = v.front().value();
      B.limitEstimate = v.front().value();
    }
    if (auto d = out.curve.firstDivergent()) {
      S.status = B.status = Membership::NonMember;
      S.divergentAt = B.divergentAt = *d;
      S.method = B.method = "divergent_integral";
      return out;
    }
    B.status = Membership::Member;
    B.method = "finite_curve";

    if (f.kind == FunctionKind::Zero) {
      S.status = Membership::Member;
      S.method = "zero_function";
      return out;
    }
    if (f.kind == FunctionKind::BumpSum) {
      if (auto lb = bumpFamilyLowerBound(f, p, psi)) {
        S.status = Membership::NonMember;
        S.lowerBound = *lb;
        S.method = "bump_family_lower_bound";
        return out;
      }
    } else {
      const RadialProfile ph = *radialProfileIf(f);
      if (ph.nonincreasing) {
        S.status = Membership::Member;
        S.method = "radial_origin_closed_form";
        return out;
      }
      if (std::isfinite(supNorm(f))) {
        S.status = Membership::Member;
        S.method = "bounded_function";
        return out;
      }
    }
    const double v0 = v.front().value();
    const double vMax = v.back().value();
    S.method = "vanishing_test";
    S.status = (v0 < kVanishingRatio * vMax && tailSlope(out.curve) > 0.0) ? Membership::Member
                                                                            : Membership::Inconclusive;
    return out;
  }

  DoublingReport doublingCheck(const ModulusCurve& c, const EtaOptions& opt)
  {
    if (!c.allFinite())
      fail(ErrorCode::UndefinedOnDivergent, "doubling check needs a finite modulus curve");
    const std::size_t m = c.r.size();
    std::vector<double> at1(m), at2(m);
    parallelFor(2 * m, [&](std::size_t i) {
      const std::size_t j = i % m;
      const double r = i < m ? c.r[j] : 2.0 * c.r[j];
      const Extended e = eta(c.f, c.p, c.psi, r, opt);
      if (e.isInfinite())
        fail(ErrorCode::UndefinedOnDivergent, "modulus diverges at 2r");
      (i < m ? at1 : at2)[j] = e.value();
    });
    DoublingReport rep;
    rep.ratios.resize(m);
    rep.maxRatio = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      double q;
      if (at1[j] == 0.0)
        q = at2[j] == 0.0 ? 1.0 : kInf;
      else
        q = at2[j] / at1[j];
      rep.ratios[j] = q;
      if (q > rep.maxRatio) {
        rep.maxRatio = q;
        rep.atRadius = c.r[j];
      }
    }
    return rep;
  }

}
