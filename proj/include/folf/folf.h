/*
Copyright 2026 The folf Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


/* C interface to folf: first-order loop formulas and stable models.
 *
 * Handles are opaque. Every call returns a folf_status; on failure
 * folf_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with folf_string_free(). Reports are JSON documents. */
#ifndef FOLF_FOLF_H
#define FOLF_FOLF_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FOLF_API __declspec(dllexport)
#else
#define FOLF_API __attribute__((visibility("default")))
#endif

typedef enum folf_status {
  FOLF_OK = 0,
  FOLF_E_SYNTAX,
  FOLF_E_ARITY,
  FOLF_E_KIND,
  FOLF_E_CAPTURE,
  FOLF_E_NOT_SENTENCE,
  FOLF_E_EMPTY_UNIVERSE,
  FOLF_E_NOT_REDUCIBLE,
  FOLF_E_NOT_FIRST_ORDER,
  FOLF_E_CAP_EXCEEDED,
  FOLF_E_IO,
  FOLF_E_INTERNAL,
  FOLF_E_ARGUMENT
} folf_status;

/* A program (rules, optional #query lines) or a single sentence. */
typedef struct folf_theory folf_theory;

FOLF_API const char* folf_version(void);
FOLF_API const char* folf_status_name(folf_status s);
FOLF_API const char* folf_last_error(void);
FOLF_API void folf_string_free(char* s);

FOLF_API folf_status folf_theory_parse_program(const char* text, folf_theory** out);
FOLF_API folf_status folf_theory_parse_formula(const char* text, folf_theory** out);
FOLF_API void folf_theory_free(folf_theory* t);

/* Input syntax of the theory; for programs also its FOL representation. */
FOLF_API folf_status folf_theory_text(const folf_theory* t, char** text);
FOLF_API folf_status folf_theory_sentence(const folf_theory* t, char** text);
/* Queries from #query directives, as a JSON array of strings. */
FOLF_API folf_status folf_theory_queries(const folf_theory* t, char** json);

/* {"status","reason","loops":[{"atoms","formula"}]} */
FOLF_API folf_status folf_loops(const folf_theory* t, int bound, char** json);
/* {"safe","unsafe_variables":[..],"restricted":[{"formula","variables"}]} */
FOLF_API folf_status folf_safety(const folf_theory* t, char** json);
/* {"path","loops":[..],"formula"}; FOLF_E_NOT_REDUCIBLE with both reasons. */
FOLF_API folf_status folf_reduce(const folf_theory* t, int bound, char** json);
/* Ground program or sentence in input syntax. `constants` is a comma
 * separated list extending the Herbrand universe, or NULL. */
FOLF_API folf_status folf_ground(const folf_theory* t, const char* constants, char** text);
/* {"answer_sets":["{p(a), ..}", ..]} */
FOLF_API folf_status folf_answer_sets(const folf_theory* t, const char* constants, char** json);
/* `interpretation` is JSON: either {"atoms":["p(a)", ..]} for an Herbrand
 * interpretation or {"size":n,"constants":{..},"relations":{"p":[[0],..]}}.
 * {"model","stable"} */
FOLF_API folf_status folf_check_stable(const folf_theory* t, const char* interpretation, char** json);
/* Bounded check over universes 1..max_universe.
 * {"entailed","bounded":true,"sizes":[{"size","entailed","stable_models","counter_model"}]} */
FOLF_API folf_status folf_entail(const folf_theory* t, const char* query, int max_universe, char** json);
/* TPTP FOF text of the reduction, with `query` (or NULL) as conjecture. */
FOLF_API folf_status folf_export_tptp(const folf_theory* t, const char* query, int bound, char** text);
/* Runs `prover` ("cmd {file}") on the export. {"status","output"} */
FOLF_API folf_status folf_prove(const folf_theory* t, const char* query, int bound, const char* prover,
                                int timeout_s, char** json);

#ifdef __cplusplus
}
#endif

#endif /* FOLF_FOLF_H */
