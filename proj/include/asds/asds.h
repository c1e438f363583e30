/*
 * Copyright 2026 The ASDS Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the argumentative summarizer (libasds).
 *
 * Handles are opaque. Every function returning asds_status leaves a message
 * for the calling thread, retrievable with asds_last_error() until the next
 * failing call on that thread. Resource handles may be shared between threads
 * once loading is finished; loading into a handle must not race with any
 * other use of it.
 */

#ifndef ASDS_ASDS_H_
#define ASDS_ASDS_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ASDS_BUILDING_LIBRARY)
#    define ASDS_API __declspec(dllexport)
#  else
#    define ASDS_API __declspec(dllimport)
#  endif
#else
#  define ASDS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asds_status {
  ASDS_OK = 0,
  ASDS_ERR_PARSE = 1,
  ASDS_ERR_DUPLICATE_FORM = 2,
  ASDS_ERR_UNKNOWN_SCALE = 3,
  ASDS_ERR_DUPLICATE_ID = 4,
  ASDS_ERR_TRAILING_CONNECTIVE = 5,
  ASDS_ERR_EMPTY_DOCUMENT = 6,
  ASDS_ERR_IO = 7,
  ASDS_ERR_INVALID_ARGUMENT = 8,
  ASDS_ERR_INTERNAL = 9
} asds_status;

typedef enum asds_resource_kind {
  ASDS_RESOURCE_LEXICON = 0,
  ASDS_RESOURCE_TOPOI = 1,
  ASDS_RESOURCE_STOPWORDS = 2
} asds_resource_kind;

typedef enum asds_format {
  ASDS_FORMAT_TEXT = 0,
  ASDS_FORMAT_JSON = 1
} asds_format;

typedef struct asds_resources asds_resources;
typedef struct asds_summary asds_summary;

/* Library-owned bytes; release with asds_buffer_free. data is
 * NUL-terminated for convenience; size excludes the terminator. */
typedef struct asds_buffer {
  char *data;
  size_t size;
} asds_buffer;

typedef struct asds_summary_config {
  double ratio;       /* in (0, 1], default 0.3 */
  double alpha;       /* keyword threshold in (0, 1], default 0.5 */
  int paper_fidelity; /* nonzero: alpha = 1 and per-kind default weights */
} asds_summary_config;

typedef struct asds_resource_counts {
  size_t connectives;
  size_t scales;
  size_t topoi;
  size_t stopwords;
} asds_resource_counts;

ASDS_API const char *asds_version(void);
ASDS_API const char *asds_status_name(asds_status status);

/* Message of the last failure on this thread, "" if none. Resource errors
 * read "<source>:<line>: <detail>". */
ASDS_API const char *asds_last_error(void);
/* 1-based line of the last resource error on this thread, 0 if none. */
ASDS_API size_t asds_last_error_line(void);

ASDS_API void asds_buffer_free(asds_buffer *buffer);
ASDS_API void asds_summary_config_init(asds_summary_config *config);

/* Creates an empty resource set: no connectives, no topoi, no stopwords. */
ASDS_API asds_status asds_resources_create(asds_resources **out);
ASDS_API void asds_resources_destroy(asds_resources *resources);

/* Replace one resource. On failure the previous resource is kept. */
ASDS_API asds_status asds_resources_load_file(asds_resources *resources,
                                              asds_resource_kind kind,
                                              const char *path);
ASDS_API asds_status asds_resources_load_text(asds_resources *resources,
                                              asds_resource_kind kind,
                                              const char *text, size_t size);

/* Canonical text of the lexicon or topos base; loading it back yields the
 * same resource. Stopwords are not serializable. */
ASDS_API asds_status asds_resources_serialize(const asds_resources *resources,
                                              asds_resource_kind kind,
                                              asds_buffer *out);
ASDS_API asds_status asds_resources_counts(const asds_resources *resources,
                                           asds_resource_counts *out);

/* Newline-separated "<scale>:<lexeme>" entries that can never match because
 * they contain a stopword. */
ASDS_API asds_status asds_resources_unreachable_lexemes(
    const asds_resources *resources, asds_buffer *out);

/* ASDS_ERR_EMPTY_DOCUMENT when the text holds no sentence. */
ASDS_API asds_status asds_summarize(const asds_resources *resources,
                                    const char *text, size_t size,
                                    const asds_summary_config *config,
                                    asds_summary **out);
ASDS_API void asds_summary_destroy(asds_summary *summary);

ASDS_API size_t asds_summary_sentence_count(const asds_summary *summary);
ASDS_API size_t asds_summary_selected_count(const asds_summary *summary);
/* Document index of the i-th selected sentence; (size_t)-1 out of range. */
ASDS_API size_t asds_summary_selected_index(const asds_summary *summary,
                                            size_t i);
ASDS_API size_t asds_summary_conclusion_count(const asds_summary *summary);

ASDS_API asds_status asds_summary_render(const asds_summary *summary,
                                         asds_format format, int explain,
                                         asds_buffer *out);

/* Bag-of-words cosine using the loaded stopwords. *defined is set to 0 (and
 * *value to 0) when either side has no content word. */
ASDS_API asds_status asds_cosine(const asds_resources *resources,
                                 const char *a, size_t a_size, const char *b,
                                 size_t b_size, double *value, int *defined);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* ASDS_ASDS_H_ */
