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

#include "stummel/stummel.h"
#include "stummel/errors.hpp"
#include "stummel/json_io.hpp"
#include "stummel/runner.hpp"
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct stummel_scale {
  stummel::ScaleFunction value;
};

struct stummel_function {
  stummel::TestFunction value;
};

namespace {
  thread_local std::string g_lastError;

  stummel_status statusOf(stummel::ErrorCode c)
  {
    using stummel::ErrorCode;
    switch (c) {
    case ErrorCode::InvalidArgument: return STUMMEL_INVALID_ARGUMENT;
    case ErrorCode::NonPositiveArgument: return STUMMEL_NON_POSITIVE_ARGUMENT;
    case ErrorCode::OutOfTableRange: return STUMMEL_OUT_OF_TABLE_RANGE;
    case ErrorCode::SingularPoint: return STUMMEL_SINGULAR_POINT;
    case ErrorCode::DimensionTooLarge: return STUMMEL_DIMENSION_TOO_LARGE;
    case ErrorCode::NonconvergentQuadrature: return STUMMEL_NONCONVERGENT_QUADRATURE;
    case ErrorCode::UndefinedOnDivergent: return STUMMEL_UNDEFINED_ON_DIVERGENT;
    case ErrorCode::MissingParameter: return STUMMEL_MISSING_PARAMETER;
    case ErrorCode::InapplicableHypotheses: return STUMMEL_INAPPLICABLE_HYPOTHESES;
    case ErrorCode::UnfittableCurve: return STUMMEL_UNFITTABLE_CURVE;
    case ErrorCode::ResidualTooLarge: return STUMMEL_RESIDUAL_TOO_LARGE;
    case ErrorCode::Parse: return STUMMEL_PARSE_ERROR;
    }
    return STUMMEL_INTERNAL_ERROR;
  }

  template <class F>
  stummel_status guarded(F&& body)
  {
    try {
      body();
      g_lastError.clear();
      return STUMMEL_OK;
    } catch (const stummel::Error& e) {
      g_lastError = e.what();
      return statusOf(e.code());
    } catch (const nlohmann::json::exception& e) {
      g_lastError = e.what();
      return STUMMEL_PARSE_ERROR;
    } catch (const std::bad_alloc&) {
      g_lastError = "out of memory";
      return STUMMEL_INTERNAL_ERROR;
    } catch (const std::exception& e) {
      g_lastError = e.what();
      return STUMMEL_INTERNAL_ERROR;
    }
  }

  stummel::Json parse(const char* text)
  {
    if (!text)
      stummel::fail(stummel::ErrorCode::InvalidArgument, "null JSON text");
    try {
      return stummel::Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      stummel::fail(stummel::ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
  }

  char* copyString(const std::string& s)
  {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
      throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  void need(const void* p, const char* what)
  {
    if (!p)
      stummel::fail(stummel::ErrorCode::InvalidArgument, std::string("null ") + what);
  }
}

extern "C" {

const char* stummel_version(void) { return "1.0.0"; }

const char* stummel_last_error(void) { return g_lastError.c_str(); }

const char* stummel_status_name(stummel_status s)
{
  switch (s) {
  case STUMMEL_OK: return "ok";
  case STUMMEL_INTERNAL_ERROR: return "InternalError";
  default: break;
  }
  if (s > STUMMEL_OK && s < STUMMEL_INTERNAL_ERROR)
    return stummel::errorCodeName(static_cast<stummel::ErrorCode>(int(s) - 1));
  return "unknown";
}

void stummel_free_string(char* s) { std::free(s); }

stummel_status stummel_scale_from_json(const char* json, stummel_scale** out)
{
  return guarded([&] {
    need(out, "output handle");
    *out = nullptr;
    auto s = new stummel_scale{ stummel::scaleFromJson(parse(json)) };
    *out = s;
  });
}

stummel_status stummel_scale_to_json(const stummel_scale* s, char** out)
{
  return guarded([&] {
    need(s, "scale");
    need(out, "output");
    *out = copyString(stummel::toJson(s->value).dump());
  });
}

stummel_status stummel_scale_eval(const stummel_scale* s, double t, double* out)
{
  return guarded([&] {
    need(s, "scale");
    need(out, "output");
    *out = s->value(t);
  });
}

void stummel_scale_free(stummel_scale* s) { delete s; }

stummel_status stummel_function_from_json(const char* json, stummel_function** out)
{
  return guarded([&] {
    need(out, "output handle");
    *out = nullptr;
    auto f = new stummel_function{ stummel::functionFromJson(parse(json)) };
    *out = f;
  });
}

stummel_status stummel_function_to_json(const stummel_function* f, char** out)
{
  return guarded([&] {
    need(f, "function");
    need(out, "output");
    *out = copyString(stummel::toJson(f->value).dump());
  });
}

stummel_status stummel_function_eval(const stummel_function* f, const double* y, size_t n, double* out)
{
  return guarded([&] {
    need(f, "function");
    need(y, "point");
    need(out, "output");
    if (n != size_t(f->value.n))
      stummel::fail(stummel::ErrorCode::InvalidArgument, "point dimension does not match the function");
    *out = stummel::evalFunction(f->value, std::span<const double>(y, n));
  });
}

void stummel_function_free(stummel_function* f) { delete f; }

stummel_status stummel_eta(const stummel_function* f, double p, const stummel_scale* s, double r, uint64_t seed,
                           double* value, int* is_infinite)
{
  return guarded([&] {
    need(f, "function");
    need(s, "scale");
    need(value, "output");
    const stummel::Extended e = stummel::eta(f->value, p, s->value, r, stummel::EtaOptions{ seed });
    *value = e.value();
    if (is_infinite)
      *is_infinite = e.isInfinite() ? 1 : 0;
  });
}

stummel_status stummel_norm(const stummel_function* f, const char* space_json, double* value, int* is_infinite)
{
  return guarded([&] {
    need(f, "function");
    need(value, "output");
    const stummel::SpaceSpec spec = stummel::spaceFromJson(parse(space_json));
    const stummel::Extended e = stummel::computeNorm(f->value, spec).value;
    *value = e.value();
    if (is_infinite)
      *is_infinite = e.isInfinite() ? 1 : 0;
  });
}

stummel_status stummel_run(const char* config_json, char** report, int* exit_code)
{
  return guarded([&] {
    need(config_json, "config");
    need(report, "output");
    *report = nullptr;
    const stummel::RunConfig cfg = stummel::parseRunConfig(std::string_view(config_json));
    const stummel::RunResult res = stummel::run(cfg);
    *report = copyString(res.text);
    if (exit_code)
      *exit_code = res.exitCode;
  });
}

}
