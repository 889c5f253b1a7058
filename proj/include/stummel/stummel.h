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

/* C interface to the analyzer. Every call returns a stummel_status; on
 * failure the message is available from stummel_last_error() on the same
 * thread. Strings returned through char** are owned by the caller and must
 * be released with stummel_free_string. */
#ifndef STUMMEL_H
#define STUMMEL_H

#include <stddef.h>
#include <stdint.h>

#if defined(STUMMEL_BUILDING_LIBRARY)
#define STUMMEL_API __attribute__((visibility("default")))
#else
#define STUMMEL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stummel_status {
  STUMMEL_OK = 0,
  STUMMEL_INVALID_ARGUMENT = 1,
  STUMMEL_NON_POSITIVE_ARGUMENT = 2,
  STUMMEL_OUT_OF_TABLE_RANGE = 3,
  STUMMEL_SINGULAR_POINT = 4,
  STUMMEL_DIMENSION_TOO_LARGE = 5,
  STUMMEL_NONCONVERGENT_QUADRATURE = 6,
  STUMMEL_UNDEFINED_ON_DIVERGENT = 7,
  STUMMEL_MISSING_PARAMETER = 8,
  STUMMEL_INAPPLICABLE_HYPOTHESES = 9,
  STUMMEL_UNFITTABLE_CURVE = 10,
  STUMMEL_RESIDUAL_TOO_LARGE = 11,
  STUMMEL_PARSE_ERROR = 12,
  STUMMEL_INTERNAL_ERROR = 13
} stummel_status;

typedef struct stummel_scale stummel_scale;
typedef struct stummel_function stummel_function;

STUMMEL_API const char* stummel_version(void);
STUMMEL_API const char* stummel_last_error(void);
STUMMEL_API const char* stummel_status_name(stummel_status);
STUMMEL_API void stummel_free_string(char*);

/* Scale functions, from a JSON descriptor such as
 * {"kind":"powerlog","a":0.5,"b":0,"t0":0.1353352832366127,"scale_const":1}. */
STUMMEL_API stummel_status stummel_scale_from_json(const char* json, stummel_scale** out);
STUMMEL_API stummel_status stummel_scale_to_json(const stummel_scale*, char** out);
STUMMEL_API stummel_status stummel_scale_eval(const stummel_scale*, double t, double* out);
STUMMEL_API void stummel_scale_free(stummel_scale*);

/* Catalog functions, e.g. {"kind":"radial_powerlog","n":1,"g":0.5,"h":0,"R":"inf","p_root":1}. */
STUMMEL_API stummel_status stummel_function_from_json(const char* json, stummel_function** out);
STUMMEL_API stummel_status stummel_function_to_json(const stummel_function*, char** out);
STUMMEL_API stummel_status stummel_function_eval(const stummel_function*, const double* y, size_t n, double* out);
STUMMEL_API void stummel_function_free(stummel_function*);

/* eta_{p,psi} f(r). *is_infinite is set to 1 for a divergent integral. */
STUMMEL_API stummel_status stummel_eta(const stummel_function*, double p, const stummel_scale*, double r,
                                       uint64_t seed, double* value, int* is_infinite);

/* Norm of f in the space described by a JSON space descriptor, e.g.
 * {"family":"morrey","p":1,"lambda":0.5}. */
STUMMEL_API stummel_status stummel_norm(const stummel_function*, const char* space_json, double* value,
                                        int* is_infinite);

/* Runs a full config (the CLI's --config document) and returns the report
 * text. *exit_code is 0 on success and 1 when verify-paper disagrees. */
STUMMEL_API stummel_status stummel_run(const char* config_json, char** report, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
