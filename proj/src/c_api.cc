// Copyright 2026 The ASDS Authors.
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

// extern "C" surface over the C++ core. Exceptions never cross this
// boundary; they become asds_status codes plus a thread-local message.

#include "asds/asds.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "asds/error.h"
#include "asds/lexicon.h"
#include "asds/similarity.h"
#include "asds/summarizer.h"
#include "asds/text.h"
#include "asds/topos.h"

struct asds_resources {
  asds::Lexicon lexicon;
  asds::ToposBase topoi;
  asds::StopwordSet stopwords;
};

struct asds_summary {
  asds::Summary summary;
  asds::Lexicon lexicon;
  std::size_t sentence_count = 0;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_line = 0;

asds_status ToStatus(asds::ErrorCode code) {
  using asds::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return ASDS_ERR_PARSE;
    case ErrorCode::kDuplicateForm: return ASDS_ERR_DUPLICATE_FORM;
    case ErrorCode::kUnknownScale: return ASDS_ERR_UNKNOWN_SCALE;
    case ErrorCode::kDuplicateId: return ASDS_ERR_DUPLICATE_ID;
    case ErrorCode::kTrailingConnective: return ASDS_ERR_TRAILING_CONNECTIVE;
    case ErrorCode::kEmptyDocument: return ASDS_ERR_EMPTY_DOCUMENT;
    case ErrorCode::kIo: return ASDS_ERR_IO;
    case ErrorCode::kInvalidArgument: return ASDS_ERR_INVALID_ARGUMENT;
  }
  return ASDS_ERR_INTERNAL;
}

asds_status Fail(asds_status status, std::string message,
                 std::size_t line = 0) {
  g_last_error = std::move(message);
  g_last_line = line;
  return status;
}

template <typename F>
asds_status Guard(F &&body) {
  try {
    return body();
  } catch (const asds::Error &e) {
    return Fail(ToStatus(e.code()), e.what(), e.line());
  } catch (const std::bad_alloc &) {
    return Fail(ASDS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return Fail(ASDS_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(ASDS_ERR_INTERNAL, "unknown exception");
  }
}

asds_status Fill(asds_buffer *out, const std::string &bytes) {
  char *data = static_cast<char *>(std::malloc(bytes.size() + 1));
  if (data == nullptr) return Fail(ASDS_ERR_INTERNAL, "out of memory");
  std::memcpy(data, bytes.data(), bytes.size());
  data[bytes.size()] = '\0';
  out->data = data;
  out->size = bytes.size();
  return ASDS_OK;
}

asds_status NullArgument(const char *name) {
  return Fail(ASDS_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
}

}  // namespace

extern "C" {

const char *asds_version(void) { return ASDS_VERSION; }

const char *asds_status_name(asds_status status) {
  switch (status) {
    case ASDS_OK: return "OK";
    case ASDS_ERR_PARSE: return "ParseError";
    case ASDS_ERR_DUPLICATE_FORM: return "DuplicateForm";
    case ASDS_ERR_UNKNOWN_SCALE: return "UnknownScale";
    case ASDS_ERR_DUPLICATE_ID: return "DuplicateId";
    case ASDS_ERR_TRAILING_CONNECTIVE: return "TrailingConnective";
    case ASDS_ERR_EMPTY_DOCUMENT: return "EmptyDocument";
    case ASDS_ERR_IO: return "IoError";
    case ASDS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case ASDS_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char *asds_last_error(void) { return g_last_error.c_str(); }
size_t asds_last_error_line(void) { return g_last_line; }

void asds_buffer_free(asds_buffer *buffer) {
  if (buffer == nullptr) return;
  std::free(buffer->data);
  buffer->data = nullptr;
  buffer->size = 0;
}

void asds_summary_config_init(asds_summary_config *config) {
  if (config == nullptr) return;
  config->ratio = asds::kDefaultRatio;
  config->alpha = asds::kDefaultAlpha;
  config->paper_fidelity = 0;
}

asds_status asds_resources_create(asds_resources **out) {
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    *out = new asds_resources();
    return ASDS_OK;
  });
}

void asds_resources_destroy(asds_resources *resources) { delete resources; }

asds_status asds_resources_load_file(asds_resources *resources,
                                     asds_resource_kind kind,
                                     const char *path) {
  if (resources == nullptr) return NullArgument("resources");
  if (path == nullptr) return NullArgument("path");
  return Guard([&] {
    switch (kind) {
      case ASDS_RESOURCE_LEXICON:
        resources->lexicon = asds::Lexicon::LoadFile(path);
        return ASDS_OK;
      case ASDS_RESOURCE_TOPOI:
        resources->topoi = asds::ToposBase::LoadFile(path);
        return ASDS_OK;
      case ASDS_RESOURCE_STOPWORDS:
        resources->stopwords = asds::StopwordSet::LoadFile(path);
        return ASDS_OK;
    }
    return Fail(ASDS_ERR_INVALID_ARGUMENT, "unknown resource kind");
  });
}

asds_status asds_resources_load_text(asds_resources *resources,
                                     asds_resource_kind kind, const char *text,
                                     size_t size) {
  if (resources == nullptr) return NullArgument("resources");
  if (text == nullptr && size != 0) return NullArgument("text");
  return Guard([&] {
    std::string_view view(text == nullptr ? "" : text, size);
    switch (kind) {
      case ASDS_RESOURCE_LEXICON:
        resources->lexicon = asds::Lexicon::Parse(view);
        return ASDS_OK;
      case ASDS_RESOURCE_TOPOI:
        resources->topoi = asds::ToposBase::Parse(view);
        return ASDS_OK;
      case ASDS_RESOURCE_STOPWORDS:
        resources->stopwords = asds::StopwordSet::Parse(view);
        return ASDS_OK;
    }
    return Fail(ASDS_ERR_INVALID_ARGUMENT, "unknown resource kind");
  });
}

asds_status asds_resources_serialize(const asds_resources *resources,
                                     asds_resource_kind kind,
                                     asds_buffer *out) {
  if (resources == nullptr) return NullArgument("resources");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    switch (kind) {
      case ASDS_RESOURCE_LEXICON:
        return Fill(out, resources->lexicon.Serialize());
      case ASDS_RESOURCE_TOPOI:
        return Fill(out, resources->topoi.Serialize());
      case ASDS_RESOURCE_STOPWORDS:
        break;
    }
    return Fail(ASDS_ERR_INVALID_ARGUMENT,
                "resource kind cannot be serialized");
  });
}

asds_status asds_resources_counts(const asds_resources *resources,
                                  asds_resource_counts *out) {
  if (resources == nullptr) return NullArgument("resources");
  if (out == nullptr) return NullArgument("out");
  out->connectives = resources->lexicon.size();
  out->scales = resources->topoi.scales().size();
  out->topoi = resources->topoi.topoi().size();
  out->stopwords = resources->stopwords.size();
  return ASDS_OK;
}

asds_status asds_resources_unreachable_lexemes(const asds_resources *resources,
                                               asds_buffer *out) {
  if (resources == nullptr) return NullArgument("resources");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    std::string text;
    for (const auto &entry : resources->topoi.StopwordLexemes(resources->stopwords))
      text += entry + '\n';
    return Fill(out, text);
  });
}

asds_status asds_summarize(const asds_resources *resources, const char *text,
                           size_t size, const asds_summary_config *config,
                           asds_summary **out) {
  if (resources == nullptr) return NullArgument("resources");
  if (text == nullptr && size != 0) return NullArgument("text");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    asds::SummaryConfig cfg;
    if (config != nullptr) {
      cfg.ratio = config->ratio;
      cfg.alpha = config->alpha;
      cfg.paper_fidelity = config->paper_fidelity != 0;
    }
    asds::Document doc = asds::SegmentSentences(
        std::string(text == nullptr ? "" : text, size), resources->stopwords);
    auto handle = std::make_unique<asds_summary>();
    handle->summary =
        asds::Summarize(doc, resources->lexicon, resources->topoi, cfg);
    handle->lexicon = resources->lexicon;
    handle->sentence_count = doc.sentences.size();
    *out = handle.release();
    return ASDS_OK;
  });
}

void asds_summary_destroy(asds_summary *summary) { delete summary; }

size_t asds_summary_sentence_count(const asds_summary *summary) {
  return summary == nullptr ? 0 : summary->sentence_count;
}

size_t asds_summary_selected_count(const asds_summary *summary) {
  return summary == nullptr ? 0 : summary->summary.selected.size();
}

size_t asds_summary_selected_index(const asds_summary *summary, size_t i) {
  if (summary == nullptr || i >= summary->summary.selected.size())
    return static_cast<size_t>(-1);
  return summary->summary.selected[i].index;
}

size_t asds_summary_conclusion_count(const asds_summary *summary) {
  return summary == nullptr ? 0 : summary->summary.conclusions.size();
}

asds_status asds_summary_render(const asds_summary *summary,
                                asds_format format, int explain,
                                asds_buffer *out) {
  if (summary == nullptr) return NullArgument("summary");
  if (out == nullptr) return NullArgument("out");
  if (format != ASDS_FORMAT_TEXT && format != ASDS_FORMAT_JSON)
    return Fail(ASDS_ERR_INVALID_ARGUMENT, "unknown output format");
  return Guard([&] {
    return Fill(out, asds::Render(summary->summary, summary->lexicon,
                                  format == ASDS_FORMAT_JSON
                                      ? asds::OutputFormat::kJson
                                      : asds::OutputFormat::kText,
                                  explain != 0));
  });
}

asds_status asds_cosine(const asds_resources *resources, const char *a,
                        size_t a_size, const char *b, size_t b_size,
                        double *value, int *defined) {
  if (resources == nullptr) return NullArgument("resources");
  if ((a == nullptr && a_size) || (b == nullptr && b_size))
    return NullArgument("sentence");
  if (value == nullptr) return NullArgument("value");
  return Guard([&] {
    auto va = asds::MakeBowVector(std::string_view(a ? a : "", a_size),
                                  resources->stopwords);
    auto vb = asds::MakeBowVector(std::string_view(b ? b : "", b_size),
                                  resources->stopwords);
    asds::Cosine c = asds::CosineSimilarity(va, vb);
    *value = c.value;
    if (defined != nullptr) *defined = c.defined ? 1 : 0;
    return ASDS_OK;
  });
}

}  // extern "C"
