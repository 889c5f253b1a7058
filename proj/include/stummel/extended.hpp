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

#ifndef STUMMEL_EXTENDED_HPP
#define STUMMEL_EXTENDED_HPP

#include <cmath>
#include <limits>
#include <string>

namespace stummel {

  /// A nonnegative quantity that may be +infinity. Divergent integrals and
  /// infinite norms are results, not failures, so they travel as values.
  class Extended {
  public:
    constexpr Extended() = default;
    static constexpr Extended finite(double v) { return Extended(v, false); }
    static constexpr Extended infinite() { return Extended(0.0, true); }
    static Extended fromDouble(double v)
    {
      return std::isinf(v) ? infinite() : finite(v);
    }

    constexpr bool isFinite() const { return !m_inf; }
    constexpr bool isInfinite() const { return m_inf; }

    //+inf when infinite:
    double value() const
    {
      return m_inf ? std::numeric_limits<double>::infinity() : m_v;
    }

    Extended operator+(const Extended& o) const
    {
      if (m_inf || o.m_inf)
        return infinite();
      return finite(m_v + o.m_v);
    }
    Extended& operator+=(const Extended& o) { return *this = *this + o; }

    Extended scaled(double c) const
    {
      if (m_inf)
        return c == 0.0 ? finite(0.0) : infinite();
      return finite(c * m_v);
    }

    Extended root(double p) const
    {
      if (m_inf)
        return infinite();
      return finite(p == 1.0 ? m_v : std::pow(m_v, 1.0 / p));
    }

    friend bool operator==(const Extended& a, const Extended& b)
    {
      return a.m_inf == b.m_inf && (a.m_inf || a.m_v == b.m_v);
    }

    std::string str() const;

  private:
    constexpr Extended(double v, bool inf) : m_v(v), m_inf(inf) {}
    double m_v = 0.0;
    bool m_inf = false;
  };

  inline Extended max(const Extended& a, const Extended& b)
  {
    if (a.isInfinite() || b.isInfinite())
      return Extended::infinite();
    return Extended::finite(std::max(a.value(), b.value()));
  }

  /// Formats doubles losslessly (17 significant digits); "inf" for infinity.
  std::string formatDouble(double);

  inline std::string Extended::str() const
  {
    return formatDouble(value());
  }

}

#endif
