/*
 * Copyright 2026 The Sentopic Authors
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
 * C interface to the sentopic engine. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every call that
 * can fail returns a sentopic_status; on failure the message is available
 * from sentopic_last_error() on the same thread.
 */

#ifndef SENTOPIC_SENTOPIC_H_
#define SENTOPIC_SENTOPIC_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(SENTOPIC_BUILDING_LIBRARY)
#define SENTOPIC_API __declspec(dllexport)
#else
#define SENTOPIC_API __declspec(dllimport)
#endif
#else
#define SENTOPIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sentopic_status {
  SENTOPIC_OK = 0,
  SENTOPIC_ERR_INTERNAL = 1,
  SENTOPIC_ERR_USAGE = 2,      /* bad argument or configuration */
  SENTOPIC_ERR_DEPENDENCY = 3, /* an upstream pipeline artifact is missing */
  SENTOPIC_ERR_DATA = 4,       /* malformed input data */
  SENTOPIC_ERR_IO = 5          /* file could not be read or written */
} sentopic_status;

typedef enum sentopic_polarity {
  SENTOPIC_NEGATIVE = -1,
  SENTOPIC_NEUTRAL = 0,
  SENTOPIC_POSITIVE = 1
} sentopic_polarity;

typedef struct sentopic_score {
  double pos;
  double neu;
  double neg;
  double compound;
} sentopic_score;

typedef struct sentopic_config sentopic_config;
typedef struct sentopic_analyzer sentopic_analyzer;
typedef struct sentopic_model sentopic_model;

SENTOPIC_API const char* sentopic_version(void);

/* Message of the last failed call on this thread; "" if none. The pointer
 * stays valid until the next failing call on the same thread. */
SENTOPIC_API const char* sentopic_last_error(void);

SENTOPIC_API const char* sentopic_status_name(sentopic_status status);

/* Strings returned through char** out-parameters. */
SENTOPIC_API void sentopic_string_free(char* s);

/* Run configuration. */
SENTOPIC_API sentopic_status sentopic_config_new(sentopic_config** out);
SENTOPIC_API sentopic_status sentopic_config_load(const char* toml_path, sentopic_config** out);
/* key is "section.key", e.g. "lda.seed" or "output.dir". */
SENTOPIC_API sentopic_status sentopic_config_set(sentopic_config* config, const char* key,
                                                 const char* value);
SENTOPIC_API sentopic_status sentopic_config_to_json(const sentopic_config* config, char** out_json);
SENTOPIC_API void sentopic_config_free(sentopic_config* config);

/* Runs one pipeline stage: "ingest", "preprocess", "sentiment", "topics",
 * "sweep-k" or "report". On success *summary_json (if non-NULL) receives a
 * JSON summary to be released with sentopic_string_free. */
SENTOPIC_API sentopic_status sentopic_run(const sentopic_config* config, const char* stage,
                                          char** summary_json);

/* Sentiment scoring. NULL paths select the bundled resources. */
SENTOPIC_API sentopic_status sentopic_analyzer_load(const char* lexicon_tsv, const char* emoji_tsv,
                                                    sentopic_analyzer** out);
SENTOPIC_API sentopic_status sentopic_analyzer_score(const sentopic_analyzer* analyzer,
                                                     const char* text, size_t length,
                                                     sentopic_score* out);
SENTOPIC_API void sentopic_analyzer_free(sentopic_analyzer* analyzer);
SENTOPIC_API sentopic_polarity sentopic_classify(double compound);

/* Fitted topic models as written by the "topics" stage. */
SENTOPIC_API sentopic_status sentopic_model_load(const char* model_json_path, sentopic_model** out);
SENTOPIC_API size_t sentopic_model_num_topics(const sentopic_model* model);
SENTOPIC_API size_t sentopic_model_num_docs(const sentopic_model* model);
SENTOPIC_API size_t sentopic_model_vocab_size(const sentopic_model* model);
/* Writes theta(doc, 0..K-1); out_len must be >= K. */
SENTOPIC_API sentopic_status sentopic_model_theta(const sentopic_model* model, size_t doc,
                                                  double* out, size_t out_len);
/* The rank-th most probable word of a topic. The string is owned by the
 * model and lives as long as it does. */
SENTOPIC_API sentopic_status sentopic_model_top_word(const sentopic_model* model, size_t topic,
                                                     size_t rank, const char** out);
SENTOPIC_API void sentopic_model_free(sentopic_model* model);

#ifdef __cplusplus
}
#endif

#endif /* SENTOPIC_SENTOPIC_H_ */
