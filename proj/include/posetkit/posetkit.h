// Copyright 2026 The posetkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to posetkit. Elements are 0-based. Strings returned through
// char** out-parameters are owned by the caller and released with
// pk_string_free. Functions returning pk_status leave outputs untouched on
// failure; pk_last_error then describes the failure on the calling thread.

#ifndef POSETKIT_POSETKIT_H_
#define POSETKIT_POSETKIT_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(POSETKIT_BUILDING)
#define PK_API __declspec(dllexport)
#else
#define PK_API __declspec(dllimport)
#endif
#else
#define PK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
  PK_OK = 0,
  PK_ERR_PARSE = 1,
  PK_ERR_INVALID_ARGUMENT = 2,
  PK_ERR_INDEX_OUT_OF_RANGE = 3,
  PK_ERR_CYCLE = 4,
  PK_ERR_NOT_TWO_DIMENSIONAL = 5,
  PK_ERR_CAP_EXCEEDED = 6,
  PK_ERR_INTERNAL = 7,
} pk_status;

typedef struct pk_poset pk_poset;
typedef struct pk_diametral pk_diametral;
typedef struct pk_diameter pk_diameter;
typedef struct pk_class_list pk_class_list;

PK_API const char* pk_version(void);
PK_API const char* pk_status_name(pk_status status);
// Message of the last failed call on this thread, or "" if none.
PK_API const char* pk_last_error(void);
PK_API void pk_string_free(char* s);

// Posets.
PK_API pk_status pk_poset_parse(const char* text, pk_poset** out);
// |pairs| holds relation_count (lower, upper) pairs, flattened.
PK_API pk_status pk_poset_from_relations(size_t n, const size_t* pairs,
                                         size_t relation_count, pk_poset** out);
PK_API pk_status pk_poset_antichain(size_t n, pk_poset** out);
PK_API pk_status pk_poset_chain_union(const size_t* lengths, size_t count,
                                      pk_poset** out);
PK_API void pk_poset_free(pk_poset* p);
PK_API size_t pk_poset_size(const pk_poset* p);
PK_API pk_status pk_poset_less(const pk_poset* p, size_t x, size_t y, int* out);
PK_API size_t pk_poset_incomparable_count(const pk_poset* p);
PK_API int pk_poset_is_two_dimensional(const pk_poset* p);
// Element name: its label if set, else its 1-based index.
PK_API pk_status pk_poset_label(const pk_poset* p, size_t x, char** out);
// Inclusion order on the downsets of |p|; each element is labelled with its
// downset written as a 1-based set, e.g. "{1,3}".
PK_API pk_status pk_poset_lattice(const pk_poset* p, size_t cap, pk_poset** out);

// Two linear extensions whose intersection is |p|; both arrays hold
// pk_poset_size(p) entries.
PK_API pk_status pk_realizer(const pk_poset* p, size_t* sigma, size_t* sigma_bar);

// Counts, as decimal strings.
PK_API pk_status pk_led_boolean(unsigned n, char** out);
PK_API pk_status pk_led_chain_union(const size_t* lengths, size_t count,
                                    char** out);
PK_API pk_status pk_count_antichains(const pk_poset* p, char** out);

typedef struct pk_led_breakdown {
  char* alpha;
  char* beta;
  char* gamma;
  char* delta;
  char* led;
} pk_led_breakdown;

PK_API pk_status pk_led_downset(const pk_poset* p, pk_led_breakdown* out);
PK_API void pk_led_breakdown_clear(pk_led_breakdown* b);
PK_API pk_status pk_led_upper_bound(const pk_poset* p, size_t cap, char** out);

// Diametral pair of the downset lattice.
PK_API pk_status pk_diametral_build(const pk_poset* p, size_t cap,
                                    pk_diametral** out);
PK_API void pk_diametral_free(pk_diametral* d);
PK_API size_t pk_diametral_lattice_size(const pk_diametral* d);
// |which| is 0 for the first extension, 1 for the second. |members| must hold
// pk_poset_size(p) entries; *count receives the downset size.
PK_API pk_status pk_diametral_downset(const pk_diametral* d, int which,
                                      size_t position, size_t* members,
                                      size_t* count);
PK_API pk_status pk_diametral_sigma(const pk_diametral* d, size_t* sigma);
PK_API pk_status pk_diametral_distance(const pk_diametral* d, char** out);
PK_API pk_status pk_diametral_svg(const pk_diametral* d, unsigned scale,
                                  char** out);

// Brute-force diameter of the linear extension graph.
PK_API pk_status pk_oracle_diameter(const pk_poset* p, size_t cap,
                                    pk_diameter** out);
PK_API void pk_diameter_free(pk_diameter* d);
PK_API pk_status pk_diameter_value(const pk_diameter* d, char** out);
PK_API size_t pk_diameter_extension_count(const pk_diameter* d);
PK_API size_t pk_diameter_order_size(const pk_diameter* d);
PK_API size_t pk_diameter_pair_count(const pk_diameter* d);
PK_API int pk_diameter_census_complete(const pk_diameter* d);
// Both arrays hold pk_diameter_order_size(d) entries.
PK_API pk_status pk_diameter_pair(const pk_diameter* d, size_t index,
                                  size_t* first, size_t* second);

// Ordered antichain pairs grouped by symmetric difference and intersection.
PK_API pk_status pk_oracle_classes(const pk_poset* p, size_t cap,
                                   pk_class_list** out);
PK_API void pk_class_list_free(pk_class_list* c);
PK_API size_t pk_class_list_size(const pk_class_list* c);
// Any output pointer may be NULL. |d_members| and |i_members| must hold
// pk_poset_size(p) entries when given.
PK_API pk_status pk_class_info(const pk_class_list* c, size_t index,
                               size_t* d_members, size_t* d_size,
                               size_t* i_members, size_t* i_size,
                               size_t* components, size_t* pair_count);

// Critical pairs (x, y), flattened into |pairs| up to |capacity| pairs;
// *count receives the total.
PK_API pk_status pk_oracle_critical_pairs(const pk_poset* p, size_t* pairs,
                                          size_t capacity, size_t* count);
PK_API pk_status pk_oracle_diametrally_reversing(const pk_poset* p, size_t cap,
                                                 int* out);

#ifdef __cplusplus
}
#endif

#endif  // POSETKIT_POSETKIT_H_
