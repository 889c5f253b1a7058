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

#include "stummel/spaces.hpp"
#include "stummel/errors.hpp"
#include "stummel/geometry.hpp"
#include "stummel/parallel.hpp"
#include "stummel/special.hpp"
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace stummel {

  namespace {
    constexpr double kInf = std::numeric_limits<double>::infinity();

    double rawProfile(const RadialProfile& ph, double s)
    {
      double v = ph.scale;
      if (ph.pow != 0.0)
        v *= std::pow(s, -ph.pow);
      if (ph.logpow != 0.0)
        v *= std::pow(std::fabs(std::log(s)), -ph.logpow);
      return v;
    }

    double edgeValue(const RadialProfile& ph, double s)
    {
      if (s == 0.0) {
        if (ph.pow != 0.0)
          return ph.pow > 0.0 ? kInf : 0.0;
        if (ph.logpow != 0.0)
          return ph.logpow < 0.0 ? kInf : 0.0;
        return ph.scale;
      }
      if (std::isinf(s)) {
        if (ph.pow != 0.0)
          return ph.pow > 0.0 ? 0.0 : kInf;
        return ph.scale;
      }
      return rawProfile(ph, s);
    }

    //nonincreasing on its own support
    bool monotoneOnSupport(const RadialProfile& ph)
    {
      return ph.nonincreasing || (ph.lo > 0.0 && ph.pow >= 0.0 && ph.logpow == 0.0);
    }

    double lens(int n, double r, double rho, double c)
    {
      if (!(rho > 0.0))
        return 0.0;
      if (std::isinf(rho))
        return Geometry::of(n).ballVolume(r);
      return ballBallOverlap(n, r, rho, c);
    }

    bool isZero(double e) { return std::fabs(e) <= kExponentTolerance; }

    /// C r^E |ln r|^L as r -> 0 or r -> inf.
    struct PowLog {
      double C = 0.0;
      double E = 0.0;
      double L = 0.0;
      bool infinite = false;
      bool zero = false;

      static PowLog inf()
      {
        PowLog a;
        a.infinite = true;
        return a;
      }
      static PowLog vanishing()
      {
        PowLog a;
        a.zero = true;
        return a;
      }
      PowLog operator*(const PowLog& o) const
      {
        if (infinite || o.infinite)
          return inf();
        if (zero || o.zero)
          return vanishing();
        return PowLog{ C * o.C, E + o.E, L + o.L };
      }
    };

    enum class Tail { Vanishes, Limit, Diverges };

    Tail decide(const PowLog& a, bool atZero)
    {
      if (a.infinite)
        return Tail::Diverges;
      if (a.zero || a.C == 0.0)
        return Tail::Vanishes;
      if (!isZero(a.E)) {
        const bool grows = atZero ? a.E < 0.0 : a.E > 0.0;
        return grows ? Tail::Diverges : Tail::Vanishes;
      }
      if (isZero(a.L))
        return Tail::Limit;
      return a.L > 0.0 ? Tail::Diverges : Tail::Vanishes;
    }

    struct Normaliser {
      bool classical = true;
      double lambda = 0.0;
      double p = 1.0;
      int n = 1;
      ScaleFunction psi;
      double v = 1.0;

      Normaliser(const SpaceSpec& s, int dim) : classical(s.lambda.has_value()), lambda(s.lambda.value_or(0.0)), p(s.p), n(dim), psi(s.scale), v(Geometry::of(dim).v_n) {}

      double operator()(double r) const
      {
        if (classical)
          return std::pow(r, -lambda / p);
        return std::pow(v * std::pow(r, n), -1.0 / p) / psi.extendedValue(r);
      }
      PowLog atZero() const
      {
        if (classical)
          return PowLog{ 1.0, -lambda / p, 0.0 };
        const Monomial m = psi.pieces().front();
        return PowLog{ std::pow(v, -1.0 / p) / m.coef, -n / p - m.a, -m.b };
      }
      PowLog atInf() const
      {
        if (classical)
          return PowLog{ 1.0, -lambda / p, 0.0 };
        const Monomial m = psi.pieces().back();
        return PowLog{ std::pow(v, -1.0 / p) / m.coef, -n / p - m.a, 0.0 };
      }
      std::vector<double> breaks() const
      {
        std::vector<double> out;
        if (!classical)
          for (const auto& m : psi.pieces())
            if (m.lo > 0.0)
              out.push_back(m.lo);
        return out;
      }
    };

    struct SupResult {
      Extended value;
      Witness witness;
    };

    struct Sample {
      double value = 0.0;
      double center = 0.0;
      std::optional<double> t;
    };

    using RadiusFunctional = std::function<Sample(double)>;

    //sup over r in (0, inf) of F(r): analytic tails plus a log grid with
    //golden-section polish around the best grid point.
    SupResult supOverRadius(const RadiusFunctional& F, const PowLog& a0, const PowLog& aInf,
                            std::vector<double> scales, int points)
    {
      SupResult res;
      const Tail t0 = decide(a0, true);
      const Tail tI = decide(aInf, false);
      if (t0 == Tail::Diverges) {
        res.value = Extended::infinite();
        res.witness.note = "diverges as r -> 0";
        return res;
      }
      if (tI == Tail::Diverges) {
        res.value = Extended::infinite();
        res.witness.note = "diverges as r -> inf";
        return res;
      }
      double best = 0.0;
      if (t0 == Tail::Limit && a0.C > best) {
        best = a0.C;
        res.witness.note = "limit as r -> 0";
      }
      if (tI == Tail::Limit && aInf.C > best) {
        best = aInf.C;
        res.witness.note = "limit as r -> inf";
      }
      std::erase_if(scales, [](double s) { return !(s > 0.0) || std::isinf(s); });
      double lo = 1e-12;
      double hi = 1e4;
      for (double s : scales) {
        lo = std::min(lo, 1e-6 * s);
        hi = std::max(hi, 1e6 * s);
      }
      std::vector<double> grid(points);
      for (int i = 0; i < points; ++i)
        grid[i] = lo * std::pow(hi / lo, double(i) / (points - 1));
      for (double s : scales)
        grid.push_back(s);
      std::sort(grid.begin(), grid.end());
      std::vector<Sample> vals(grid.size());
      parallelFor(grid.size(), [&](std::size_t i) { vals[i] = F(grid[i]); });
      std::size_t arg = 0;
      for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i].value > vals[arg].value)
          arg = i;
      Sample top = vals[arg];
      double rTop = grid[arg];
      //golden section in ln r between the neighbours
      double a = std::log(grid[arg > 0 ? arg - 1 : 0]);
      double b = std::log(grid[std::min(arg + 1, grid.size() - 1)]);
      if (a < b) {
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = b - g * (b - a), x2 = a + g * (b - a);
        Sample f1 = F(std::exp(x1)), f2 = F(std::exp(x2));
        for (int it = 0; it < 40; ++it) {
          if (f1.value > f2.value) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = F(std::exp(x1));
          } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = F(std::exp(x2));
          }
        }
        if (f1.value > top.value) {
          top = f1;
          rTop = std::exp(x1);
        }
        if (f2.value > top.value) {
          top = f2;
          rTop = std::exp(x2);
        }
      }
      if (top.value >= best) {
        best = top.value;
        res.witness.note.clear();
        res.witness.center = top.center;
        res.witness.r = rTop;
        res.witness.t = top.t;
      }
      res.value = Extended::finite(best);
      return res;
    }

    //Asymptotics of ||f||_{L^p(B(0,r))} as r -> 0 for a radial profile on (0, hi).
    PowLog strongOriginAtZero(const RadialProfile& ph, int n, double p)
    {
      if (ph.scale == 0.0 || ph.lo > 0.0)
        return PowLog::vanishing();
      const Monomial fp = ph.powerMonomial(p);
      const double c = fp.coef * Geometry::of(n).omega;
      const double A = fp.a + n;
      if (A > 0.0 && !isZero(A))
        return PowLog{ std::pow(c / A, 1.0 / p), A / p, fp.b / p };
      if (isZero(A) && fp.b < -1.0)
        return PowLog{ std::pow(c / (-fp.b - 1.0), 1.0 / p), 0.0, (fp.b + 1.0) / p };
      return PowLog::inf();
    }

    PowLog strongAtInf(const TestFunction& f, const RadialProfile* ph, double p)
    {
      const Extended total = lebesgueNorm(f, p);
      if (total.isFinite())
        return PowLog{ total.value(), 0.0, 0.0 };
      if (ph && std::isinf(ph->hi)) {
        const Monomial fp = ph->powerMonomial(p);
        const double c = fp.coef * Geometry::of(f.n).omega;
        const double A = fp.a + f.n;
        if (A > 0.0 && !isZero(A))
          return PowLog{ std::pow(c / A, 1.0 / p), A / p, 0.0 };
        return PowLog{ std::pow(c, 1.0 / p), 0.0, 1.0 / p };
      }
      return PowLog::inf();
    }

    PowLog weakOriginAtZero(const RadialProfile& ph, int n, double p)
    {
      if (ph.scale == 0.0 || ph.lo > 0.0)
        return PowLog::vanishing();
      const double v = Geometry::of(n).v_n;
      const double eH = n / p - ph.pow;
      if ((eH > 0.0 && !isZero(eH)) || (isZero(eH) && ph.logpow >= 0.0))
        return PowLog{ std::pow(v, 1.0 / p) * ph.scale, isZero(eH) ? 0.0 : eH, -ph.logpow };
      return PowLog::inf();
    }

    PowLog weakAtInf(const TestFunction& f, const RadialProfile* ph, double p)
    {
      const Extended total = weakLebesgueNorm(f, p);
      if (total.isFinite())
        return PowLog{ total.value(), 0.0, 0.0 };
      if (ph && std::isinf(ph->hi))
        return PowLog{ std::pow(Geometry::of(f.n).v_n, 1.0 / p) * ph->scale, f.n / p - ph->pow, 0.0 };
      return PowLog::inf();
    }

    PowLog boundedAtZero(const TestFunction& f, double p)
    {
      const double M = supNorm(f);
      return PowLog{ M * std::pow(Geometry::of(f.n).v_n, 1.0 / p), f.n / p, 0.0 };
    }

    std::vector<double> functionScales(const TestFunction& f)
    {
      std::vector<double> out;
      if (f.kind == FunctionKind::BumpSum) {
        for (const auto& b : bumps(f)) {
          out.push_back(b.radius);
          out.push_back(b.center);
        }
        return out;
      }
      if (auto ph = radialProfileIf(f)) {
        if (ph->lo > 0.0)
          out.push_back(ph->lo);
        if (std::isfinite(ph->hi) && ph->hi > 0.0)
          out.push_back(ph->hi);
      }
      return out;
    }

    std::vector<double> candidateCenters(const TestFunction& f, double r)
    {
      std::vector<double> out{ 0.0 };
      if (f.kind == FunctionKind::BumpSum) {
        const auto bs = bumps(f);
        for (std::size_t i = 0; i < bs.size(); ++i) {
          out.push_back(bs[i].center);
          out.push_back(bs[i].center + 0.5 * bs[i].radius);
          out.push_back(bs[i].center - 0.5 * bs[i].radius);
          if (i + 1 < bs.size())
            out.push_back(0.5 * (bs[i].center + bs[i + 1].center));
        }
        for (const auto& b : bs)
          for (double off : { -1.0, 1.0 })
            out.push_back(b.center + off * r);
        return out;
      }
      const RadialProfile ph = *radialProfileIf(f);
      std::vector<double> edges;
      if (ph.lo > 0.0)
        edges.push_back(ph.lo);
      if (std::isfinite(ph.hi))
        edges.push_back(ph.hi);
      for (double E : edges)
        for (int j = -8; j <= 8; ++j)
          if (E + j * r / 8.0 >= 0.0)
            out.push_back(E + j * r / 8.0);
      return out;
    }

    Sample bestCenter(const TestFunction& f, double r, const std::function<Sample(double)>& at)
    {
      Sample best;
      best.value = -1.0;
      for (double c : candidateCenters(f, r)) {
        const Sample s = at(c);
        if (s.value > best.value)
          best = s;
      }
      if (f.kind != FunctionKind::BumpSum) {
        double lo = std::max(0.0, best.center - r / 8.0);
        double hi = best.center + r / 8.0;
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        Sample f1 = at(x1), f2 = at(x2);
        for (int it = 0; it < 24; ++it) {
          if (f1.value > f2.value) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = at(x1);
          } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = at(x2);
          }
        }
        for (const Sample& s : { f1, f2 })
          if (s.value > best.value)
            best = s;
      }
      return best;
    }
  }

  const char* spaceFamilyName(SpaceFamily f)
  {
    switch (f) {
    case SpaceFamily::Morrey: return "morrey";
    case SpaceFamily::WeakMorrey: return "weak_morrey";
    case SpaceFamily::Lorentz: return "lorentz";
    case SpaceFamily::Lebesgue: return "lebesgue";
    case SpaceFamily::WeakLebesgue: return "weak_lebesgue";
    }
    return "lebesgue";
  }

  SpaceSpec SpaceSpec::classicalMorrey(double p, double lambda)
  {
    SpaceSpec s;
    s.family = SpaceFamily::Morrey;
    s.p = p;
    s.lambda = lambda;
    return s;
  }

  SpaceSpec SpaceSpec::generalizedMorrey(double p, const ScaleFunction& psi)
  {
    SpaceSpec s;
    s.family = SpaceFamily::Morrey;
    s.p = p;
    s.scale = psi;
    return s;
  }

  SpaceSpec SpaceSpec::classicalWeakMorrey(double p, double lambda)
  {
    SpaceSpec s = classicalMorrey(p, lambda);
    s.family = SpaceFamily::WeakMorrey;
    return s;
  }

  SpaceSpec SpaceSpec::generalizedWeakMorrey(double p, const ScaleFunction& psi)
  {
    SpaceSpec s = generalizedMorrey(p, psi);
    s.family = SpaceFamily::WeakMorrey;
    return s;
  }

  SpaceSpec SpaceSpec::lorentz(double kappa, double p)
  {
    SpaceSpec s;
    s.family = SpaceFamily::Lorentz;
    s.p = kappa;
    s.secondary = p;
    return s;
  }

  SpaceSpec SpaceSpec::lebesgue(double p)
  {
    SpaceSpec s;
    s.family = SpaceFamily::Lebesgue;
    s.p = p;
    return s;
  }

  SpaceSpec SpaceSpec::weakLebesgue(double p)
  {
    SpaceSpec s = lebesgue(p);
    s.family = SpaceFamily::WeakLebesgue;
    return s;
  }

  void SpaceSpec::validate(int n) const
  {
    require(n >= 1, "dimension must be positive");
    switch (family) {
    case SpaceFamily::Morrey:
    case SpaceFamily::WeakMorrey:
      require(p >= 1.0 && std::isfinite(p), "Morrey exponent p must be a finite real >= 1");
      if (lambda)
        require(*lambda >= 0.0 && *lambda <= n, "classical Morrey index lambda must lie in [0, n]");
      else
        scale.validate();
      break;
    case SpaceFamily::Lorentz:
      require(p > 0.0 && std::isfinite(p), "Lorentz index kappa must be a positive finite real");
      require(secondary > 0.0, "Lorentz second index must be positive");
      break;
    case SpaceFamily::Lebesgue:
    case SpaceFamily::WeakLebesgue:
      require(p > 0.0, "Lebesgue exponent must be positive");
      break;
    }
  }

  ScaleFunction SpaceSpec::equivalentScale(int n) const
  {
    require(lambda.has_value(), "spec has no classical index");
    return ScaleFunction::classicalMorrey(*lambda, n, p);
  }

  double SpaceSpec::classicalFactor(int n) const
  {
    return std::pow(Geometry::of(n).v_n, 1.0 / p);
  }

  std::vector<std::pair<double, double>> superLevelSet(const RadialProfile& ph, double sigma)
  {
    std::vector<std::pair<double, double>> out;
    if (ph.scale == 0.0 || !(ph.lo < ph.hi))
      return out;
    std::vector<double> cuts{ ph.lo };
    if (ph.pow != 0.0 && ph.logpow != 0.0) {
      const double s = std::exp(-ph.logpow / ph.pow);
      if (s > ph.lo && s < ph.hi)
        cuts.push_back(s);
    }
    cuts.push_back(ph.hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double a = cuts[i];
      const double b = cuts[i + 1];
      const double va = edgeValue(ph, a);
      const double vb = edgeValue(ph, b);
      if (va <= sigma && vb <= sigma)
        continue;
      if (va > sigma && vb > sigma) {
        out.emplace_back(a, b);
        continue;
      }
      const bool dec = va > vb;
      if (ph.logpow == 0.0 && ph.pow != 0.0) {
        const double root = std::pow(ph.scale / sigma, 1.0 / ph.pow);
        if (dec)
          out.emplace_back(a, std::clamp(root, a, b));
        else
          out.emplace_back(std::clamp(root, a, b), b);
        continue;
      }
      double ua = a == 0.0 ? -740.0 : std::log(a);
      double ub = std::isinf(b) ? 709.0 : std::log(b);
      for (int it = 0; it < 200 && ub - ua > 1e-15 * std::max(1.0, std::fabs(ua)); ++it) {
        const double um = 0.5 * (ua + ub);
        if ((rawProfile(ph, std::exp(um)) > sigma) == dec)
          ua = um;
        else
          ub = um;
      }
      const double root = std::exp(0.5 * (ua + ub));
      if (dec)
        out.emplace_back(a, root);
      else
        out.emplace_back(root, b);
    }
    //merge touching pieces
    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : out) {
      if (!merged.empty() && merged.back().second >= iv.first)
        merged.back().second = std::max(merged.back().second, iv.second);
      else
        merged.push_back(iv);
    }
    return merged;
  }

  Extended distributionFunction(const TestFunction& f, double sigma)
  {
    f.validate();
    if (!(sigma > 0.0))
      fail(ErrorCode::NonPositiveArgument, "distribution function needs sigma > 0");
    const Geometry g = Geometry::of(f.n);
    if (f.kind == FunctionKind::Zero)
      return Extended::finite(0.0);
    if (f.kind == FunctionKind::BumpSum) {
      double m = 0.0;
      for (const auto& b : bumps(f))
        if (b.height > sigma)
          m += g.ballVolume(b.radius);
      return Extended::finite(m);
    }
    double m = 0.0;
    for (const auto& [a, b] : superLevelSet(*radialProfileIf(f), sigma)) {
      if (std::isinf(b))
        return Extended::infinite();
      m += g.v_n * (std::pow(b, f.n) - std::pow(a, f.n));
    }
    return Extended::finite(m);
  }

  double RearrangementProfile::operator()(double t) const
  {
    if (!(t >= 0.0))
      fail(ErrorCode::NonPositiveArgument, "rearrangement needs t >= 0");
    for (const auto& pc : pieces) {
      if (!(t >= pc.tLo && t < pc.tHi))
        continue;
      switch (pc.kind) {
      case RearrangementKind::Constant:
        return pc.value;
      case RearrangementKind::Power: {
        const Geometry g = Geometry::of(source.n);
        const double s = std::pow((t + pc.shift) / g.v_n, 1.0 / source.n);
        const RadialProfile ph = *radialProfileIf(source);
        if (s <= ph.lo)
          return edgeValue(ph, std::nextafter(ph.lo, kInf));
        return ph(s);
      }
      case RearrangementKind::Numeric: {
        //inf{ sigma : D(sigma) <= t }
        double hi = supNorm(source);
        if (std::isinf(hi)) {
          hi = 1.0;
          while (distributionFunction(source, hi).value() > t && hi < 1e300)
            hi *= 2.0;
        }
        double lo = 0.0;
        for (int it = 0; it < 200; ++it) {
          const double mid = lo == 0.0 ? 0.5 * hi : std::sqrt(lo * hi);
          if (distributionFunction(source, mid).value() <= t)
            hi = mid;
          else
            lo = mid;
          if (hi - lo <= 1e-15 * hi)
            break;
        }
        return hi;
      }
      }
    }
    return 0.0;
  }

  std::vector<double> RearrangementProfile::breakpoints() const
  {
    std::vector<double> out;
    for (const auto& pc : pieces)
      if (pc.tLo > 0.0)
        out.push_back(pc.tLo);
    return out;
  }

  RearrangementProfile decreasingRearrangement(const TestFunction& f)
  {
    f.validate();
    RearrangementProfile prof;
    prof.source = f;
    prof.totalSupport = Extended::finite(0.0);
    const Geometry g = Geometry::of(f.n);
    if (f.kind == FunctionKind::Zero)
      return prof;
    if (f.kind == FunctionKind::BumpSum) {
      auto bs = bumps(f);
      std::stable_sort(bs.begin(), bs.end(), [](const BumpSpec& x, const BumpSpec& y) { return x.height > y.height; });
      double t = 0.0;
      for (const auto& b : bs) {
        const double w = g.ballVolume(b.radius);
        prof.pieces.push_back(RearrangementPiece{ t, t + w, RearrangementKind::Constant, b.height, 0.0 });
        t += w;
      }
      prof.totalSupport = Extended::finite(t);
      return prof;
    }
    const RadialProfile ph = *radialProfileIf(f);
    if (ph.scale == 0.0 || !(ph.lo < ph.hi))
      return prof;
    const double total = std::isinf(ph.hi) ? kInf : g.v_n * (std::pow(ph.hi, f.n) - std::pow(ph.lo, f.n));
    prof.totalSupport = Extended::fromDouble(total);
    if (std::isinf(ph.hi) && ph.pow < 0.0) {
      prof.pieces.push_back(RearrangementPiece{ 0.0, kInf, RearrangementKind::Constant, kInf, 0.0 });
      return prof;
    }
    if (monotoneOnSupport(ph)) {
      prof.pieces.push_back(RearrangementPiece{ 0.0, total, RearrangementKind::Power, 0.0, g.v_n * std::pow(ph.lo, f.n) });
      return prof;
    }
    prof.pieces.push_back(RearrangementPiece{ 0.0, total, RearrangementKind::Numeric, 0.0, 0.0 });
    return prof;
  }

  Extended lorentzNorm(const TestFunction& f, double kappa, double p)
  {
    f.validate();
    require(kappa > 0.0 && std::isfinite(kappa), "Lorentz index kappa must be a positive finite real");
    require(p > 0.0, "Lorentz second index must be positive");
    const bool supForm = std::isinf(p);
    const Geometry g = Geometry::of(f.n);
    const int n = f.n;
    if (f.kind == FunctionKind::Zero)
      return Extended::finite(0.0);

    if (f.kind == FunctionKind::BumpSum) {
      const auto prof = decreasingRearrangement(f);
      double acc = 0.0;
      for (const auto& pc : prof.pieces) {
        if (supForm)
          acc = std::max(acc, pc.value * std::pow(pc.tHi, 1.0 / kappa));
        else
          acc += std::pow(pc.value, p) * kappa / p * (std::pow(pc.tHi, p / kappa) - std::pow(pc.tLo, p / kappa));
      }
      return Extended::finite(supForm ? acc : std::pow(acc, 1.0 / p));
    }

    const RadialProfile ph = *radialProfileIf(f);
    if (ph.scale == 0.0 || !(ph.lo < ph.hi))
      return Extended::finite(0.0);

    if (ph.nonincreasing) {
      //t = v s^n
      if (supForm) {
        RadialProfile h = ph;
        h.pow = ph.pow - n / kappa;
        return Extended::fromDouble(std::pow(g.v_n, 1.0 / kappa) * profileSup(h));
      }
      const PowerLogTerm term{ n * std::pow(g.v_n, p / kappa) * std::pow(ph.scale, p), n * p / kappa - ph.pow * p,
                               -ph.logpow * p, 0.0, ph.hi };
      return integrateTerm(term, 0.0, ph.hi).root(p);
    }

    if (std::isinf(ph.hi) && ph.pow < 0.0)
      return Extended::infinite();

    if (monotoneOnSupport(ph) && std::isinf(ph.hi)) {
      //f*(t) = scale ((t + w)/v)^(-gamma/n)
      const double gam = ph.pow;
      const double w = g.v_n * std::pow(ph.lo, n);
      const double q = gam / n;
      if (supForm) {
        const double d = q - 1.0 / kappa;
        if (d < 0.0 && !isZero(d))
          return Extended::infinite();
        if (isZero(d))
          return Extended::finite(ph.scale * std::pow(g.v_n, q));
        const double ts = w * (1.0 / kappa) / d;
        return Extended::finite(std::pow(ts, 1.0 / kappa) * ph.scale * std::pow((ts + w) / g.v_n, -q));
      }
      const double x = p / kappa;
      const double y = gam * p / n - x;
      if (y <= 0.0 || isZero(y))
        return Extended::infinite();
      const double I = std::pow(ph.scale, p) * std::pow(g.v_n, gam * p / n) * std::pow(w, -y) * betaFunction(x, y);
      return Extended::finite(std::pow(I, 1.0 / p));
    }

    //bounded support, non-monotone profile
    const auto prof = decreasingRearrangement(f);
    const double total = prof.totalSupport.value();
    if (supForm) {
      double best = 0.0;
      for (int i = 0; i <= 400; ++i) {
        const double t = total * std::pow(1e-12, 1.0 - i / 400.0) * (1.0 - 1e-12);
        best = std::max(best, std::pow(t, 1.0 / kappa) * prof(t));
      }
      return Extended::finite(best);
    }
    auto integrand = [&](double t) { return std::pow(t, p / kappa - 1.0) * std::pow(prof(t), p); };
    QuadOptions opt;
    opt.relTol = 1e-9;
    return Extended::finite(std::pow(integrateDyadicFromZero(integrand, total, {}, opt), 1.0 / p));
  }

  Extended lebesgueNorm(const TestFunction& f, double p)
  {
    f.validate();
    require(p > 0.0, "Lebesgue exponent must be positive");
    if (std::isinf(p))
      return Extended::fromDouble(supNorm(f));
    const Geometry g = Geometry::of(f.n);
    if (f.kind == FunctionKind::Zero)
      return Extended::finite(0.0);
    if (f.kind == FunctionKind::BumpSum) {
      double acc = 0.0;
      for (const auto& b : bumps(f))
        acc += std::pow(b.height, p) * g.ballVolume(b.radius);
      return Extended::finite(std::pow(acc, 1.0 / p));
    }
    const RadialProfile ph = *radialProfileIf(f);
    if (ph.scale == 0.0 || !(ph.lo < ph.hi))
      return Extended::finite(0.0);
    const Monomial fp = ph.powerMonomial(p);
    const PowerLogTerm term{ g.omega * fp.coef, fp.a + f.n, fp.b, fp.lo, fp.hi };
    return integrateTerm(term, 0.0, kInf).root(p);
  }

  Extended weakLebesgueNorm(const TestFunction& f, double p)
  {
    require(p > 0.0 && std::isfinite(p), "weak Lebesgue exponent must be a positive finite real");
    return lorentzNorm(f, p, kInf);
  }

  Extended ballLpPower(const TestFunction& f, double p, double c, double r)
  {
    f.validate();
    require(p > 0.0, "exponent must be positive");
    if (!(r > 0.0))
      fail(ErrorCode::NonPositiveArgument, "ball radius must be positive");
    c = std::fabs(c);
    const int n = f.n;
    if (f.kind == FunctionKind::Zero)
      return Extended::finite(0.0);
    if (f.kind == FunctionKind::BumpSum) {
      if (n > 3)
        fail(ErrorCode::DimensionTooLarge, "bump-sum ball integrals support n <= 3");
      double acc = 0.0;
      for (const auto& b : bumps(f)) {
        const double d = std::fabs(c - b.center);
        if (d < r + b.radius)
          acc += std::pow(b.height, p) * ballBallOverlap(n, r, b.radius, d);
      }
      return Extended::finite(acc);
    }
    const RadialProfile ph = *radialProfileIf(f);
    if (ph.scale == 0.0 || !(ph.lo < ph.hi))
      return Extended::finite(0.0);
    const Monomial fp = ph.powerMonomial(p);
    const double omega = Geometry::of(n).omega;
    const PowerLogTerm full{ omega * fp.coef, fp.a + n, fp.b, fp.lo, fp.hi };
    if (c == 0.0)
      return integrateTerm(full, 0.0, r);
    if (!locallyIntegrable(f, p) && c <= r)
      return Extended::infinite();
    if (n == 1) {
      //y in (c - r, c + r): |y| sweeps (max(0, c - r), c + r) and, left of 0, (0, r - c)
      const PowerLogTerm line{ fp.coef, fp.a + 1.0, fp.b, fp.lo, fp.hi };
      Extended acc = integrateTerm(line, std::max(0.0, c - r), c + r);
      if (r > c)
        acc += integrateTerm(line, 0.0, r - c);
      return acc;
    }
    if (n > 3)
      fail(ErrorCode::DimensionTooLarge, "off-centre ball integrals support n <= 3");
    Extended acc = Extended::finite(0.0);
    if (r > c)
      acc += integrateTerm(full, 0.0, r - c);
    const double lo = std::max(ph.lo, std::fabs(r - c));
    const double hi = std::min(ph.hi, r + c);
    if (lo < hi) {
      auto g = [&](double u) { return fp(c + u) * sphereBallOverlapOffset(n, c, u, r); };
      acc += Extended::finite(integrateGK(g, lo - c, hi - c));
    }
    return acc;
  }

  std::pair<double, double> ballWeakNorm(const TestFunction& f, double p, double c, double r)
  {
    f.validate();
    require(p > 0.0 && std::isfinite(p), "exponent must be a positive finite real");
    if (!(r > 0.0))
      fail(ErrorCode::NonPositiveArgument, "ball radius must be positive");
    c = std::fabs(c);
    const int n = f.n;
    if (n > 3)
      fail(ErrorCode::DimensionTooLarge, "weak ball norms support n <= 3");
    if (f.kind == FunctionKind::Zero)
      return { 0.0, 0.0 };
    if (f.kind == FunctionKind::BumpSum) {
      auto bs = bumps(f);
      std::stable_sort(bs.begin(), bs.end(), [](const BumpSpec& x, const BumpSpec& y) { return x.height > y.height; });
      double m = 0.0, best = 0.0, bestT = 0.0;
      for (const auto& b : bs) {
        const double d = std::fabs(c - b.center);
        if (d < r + b.radius)
          m += ballBallOverlap(n, r, b.radius, d);
        const double v = b.height * std::pow(m, 1.0 / p);
        if (v > best) {
          best = v;
          bestT = b.height;
        }
      }
      return { best, bestT };
    }
    const RadialProfile ph = *radialProfileIf(f);
    if (ph.scale == 0.0 || !(ph.lo < ph.hi))
      return { 0.0, 0.0 };
    auto measure = [&](double t) {
      double m = 0.0;
      for (const auto& [a, b] : superLevelSet(ph, t))
        m += lens(n, r, b, c) - lens(n, r, a, c);
      return std::max(m, 0.0);
    };
    auto value = [&](double t) { return t * std::pow(measure(t), 1.0 / p); };
    double sLo = std::max(ph.lo, c > r ? c - r : 0.0);
    const double sHi = std::min(ph.hi, c + r);
    if (!(sLo < sHi))
      return { 0.0, 0.0 };
    if (sLo == 0.0)
      sLo = 1e-12 * sHi;
    std::vector<double> ts;
    const int m = 96;
    for (int i = 0; i <= m; ++i) {
      const double s = sLo * std::pow(sHi / sLo, double(i) / m);
      const double t = rawProfile(ph, std::clamp(s, std::nextafter(ph.lo, kInf), std::nextafter(ph.hi, 0.0)));
      if (t > 0.0 && std::isfinite(t))
        ts.push_back(t * (1.0 - 1e-12));
    }
    if (ts.empty())
      return { 0.0, 0.0 };
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::size_t arg = 0;
    std::vector<double> vs(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      vs[i] = value(ts[i]);
      if (vs[i] > vs[arg])
        arg = i;
    }
    double best = vs[arg], bestT = ts[arg];
    if (ts.size() >= 3) {
      double a = std::log(ts[arg > 0 ? arg - 1 : 0]);
      double b = std::log(ts[std::min(arg + 1, ts.size() - 1)]);
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      for (int it = 0; it < 40 && a < b; ++it) {
        const double x1 = b - g * (b - a), x2 = a + g * (b - a);
        const double f1 = value(std::exp(x1)), f2 = value(std::exp(x2));
        if (f1 > best) {
          best = f1;
          bestT = std::exp(x1);
        }
        if (f2 > best) {
          best = f2;
          bestT = std::exp(x2);
        }
        if (f1 > f2)
          b = x2;
        else
          a = x1;
      }
    }
    return { best, bestT };
  }

  NormReport morreyNorm(const TestFunction& f, const SpaceSpec& spec)
  {
    f.validate();
    spec.validate(f.n);
    require(spec.family == SpaceFamily::Morrey, "spec is not a Morrey space");
    NormReport rep;
    rep.spec = spec;
    if (f.kind == FunctionKind::Zero) {
      rep.value = Extended::finite(0.0);
      return rep;
    }
    const Normaliser N(spec, f.n);
    const double p = spec.p;
    std::vector<double> scales = functionScales(f);
    for (double b : N.breaks())
      scales.push_back(b);
    const auto ph = radialProfileIf(f);
    SupResult res;
    if (ph && ph->nonincreasing) {
      const Monomial fp = ph->powerMonomial(p);
      const PowerLogTerm full{ Geometry::of(f.n).omega * fp.coef, fp.a + f.n, fp.b, fp.lo, fp.hi };
      auto F = [&](double r) {
        const Extended G = integrateTerm(full, 0.0, r).root(p);
        return Sample{ G.value() * N(r), 0.0, std::nullopt };
      };
      res = supOverRadius(F, N.atZero() * strongOriginAtZero(*ph, f.n, p), N.atInf() * strongAtInf(f, &*ph, p),
                          scales, 600);
    } else {
      const bool bounded = std::isfinite(supNorm(f));
      const PowLog g0 = bounded ? boundedAtZero(f, p) : strongOriginAtZero(*ph, f.n, p);
      auto F = [&](double r) {
        const double nr = N(r);
        return bestCenter(f, r, [&](double c) {
          return Sample{ ballLpPower(f, p, c, r).root(p).value() * nr, c, std::nullopt };
        });
      };
      res = supOverRadius(F, N.atZero() * g0, N.atInf() * strongAtInf(f, ph ? &*ph : nullptr, p), scales, 96);
    }
    rep.value = res.value;
    rep.witness = res.witness;
    return rep;
  }

  NormReport weakMorreyNorm(const TestFunction& f, const SpaceSpec& spec)
  {
    f.validate();
    spec.validate(f.n);
    require(spec.family == SpaceFamily::WeakMorrey, "spec is not a weak Morrey space");
    NormReport rep;
    rep.spec = spec;
    if (f.kind == FunctionKind::Zero) {
      rep.value = Extended::finite(0.0);
      return rep;
    }
    const Normaliser N(spec, f.n);
    const double p = spec.p;
    const double v = Geometry::of(f.n).v_n;
    std::vector<double> scales = functionScales(f);
    for (double b : N.breaks())
      scales.push_back(b);
    const auto ph = radialProfileIf(f);
    SupResult res;
    if (ph && ph->nonincreasing) {
      //level sets are centred balls: v^(1/p) sup_{s < min(r, R)} phi(s) s^(n/p)
      auto F = [&](double r) {
        RadialProfile h = *ph;
        h.pow = ph->pow - f.n / p;
        h.hi = std::min(r, ph->hi);
        return Sample{ std::pow(v, 1.0 / p) * profileSup(h) * N(r), 0.0, std::nullopt };
      };
      res = supOverRadius(F, N.atZero() * weakOriginAtZero(*ph, f.n, p), N.atInf() * weakAtInf(f, &*ph, p),
                          scales, 600);
    } else {
      const bool bounded = std::isfinite(supNorm(f));
      const PowLog g0 = bounded ? boundedAtZero(f, p) : weakOriginAtZero(*ph, f.n, p);
      auto F = [&](double r) {
        const double nr = N(r);
        return bestCenter(f, r, [&](double c) {
          const auto [w, t] = ballWeakNorm(f, p, c, r);
          return Sample{ w * nr, c, t };
        });
      };
      res = supOverRadius(F, N.atZero() * g0, N.atInf() * weakAtInf(f, ph ? &*ph : nullptr, p), scales, 96);
    }
    rep.value = res.value;
    rep.witness = res.witness;
    return rep;
  }

  NormReport computeNorm(const TestFunction& f, const SpaceSpec& spec)
  {
    spec.validate(f.n);
    switch (spec.family) {
    case SpaceFamily::Morrey:
      return morreyNorm(f, spec);
    case SpaceFamily::WeakMorrey:
      return weakMorreyNorm(f, spec);
    case SpaceFamily::Lorentz:
      return NormReport{ spec, lorentzNorm(f, spec.p, spec.secondary), {} };
    case SpaceFamily::Lebesgue:
      return NormReport{ spec, lebesgueNorm(f, spec.p), {} };
    case SpaceFamily::WeakLebesgue:
      return NormReport{ spec, weakLebesgueNorm(f, spec.p), {} };
    }
    return {};
  }

}
