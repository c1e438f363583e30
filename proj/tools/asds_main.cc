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

// asds: command-line front end over libasds.
//
//   asds summarize --input FILE [--ratio R] [--alpha A] [--format text|json]
//                  [--explain] [--paper-fidelity] [--output FILE]
//   asds compare "<sentence>" "<sentence>"
//   asds check
//
// Every subcommand accepts --lexicon, --topoi and --stopwords; they default
// to the shipped demo resources ($ASDS_DATA_DIR overrides the directory).
//
// Exit codes: 0 success, 1 empty input, 2 usage or resource errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "asds/asds.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitUsage = 2;

struct ResourcePaths {
  std::string lexicon;
  std::string topoi;
  std::string stopwords;
};

std::string DataDir() {
  if (const char *env = std::getenv("ASDS_DATA_DIR"); env && *env) return env;
  return ASDS_DEFAULT_DATA_DIR;
}

void AddResourceOptions(CLI::App *cmd, ResourcePaths &paths) {
  const std::string dir = DataDir();
  paths = {dir + "/lexicon.txt", dir + "/topoi.txt", dir + "/stopwords.txt"};
  cmd->add_option("--lexicon", paths.lexicon, "Connective lexicon file")
      ->capture_default_str();
  cmd->add_option("--topoi", paths.topoi, "Topos base file")
      ->capture_default_str();
  cmd->add_option("--stopwords", paths.stopwords, "Stopword list file")
      ->capture_default_str();
}

struct ResourcesDeleter {
  void operator()(asds_resources *r) const { asds_resources_destroy(r); }
};
struct SummaryDeleter {
  void operator()(asds_summary *s) const { asds_summary_destroy(s); }
};
using Resources = std::unique_ptr<asds_resources, ResourcesDeleter>;
using SummaryHandle = std::unique_ptr<asds_summary, SummaryDeleter>;

class Buffer {
 public:
  Buffer() = default;
  Buffer(const Buffer &) = delete;
  Buffer &operator=(const Buffer &) = delete;
  ~Buffer() { asds_buffer_free(&buf_); }

  asds_buffer *get() { return &buf_; }
  std::string_view view() const { return {buf_.data, buf_.size}; }

 private:
  asds_buffer buf_{nullptr, 0};
};

int ReportError(asds_status status) {
  std::cerr << "asds: " << asds_status_name(status) << ": " << asds_last_error()
            << "\n";
  return status == ASDS_ERR_EMPTY_DOCUMENT ? kExitEmpty : kExitUsage;
}

// Loads the resources the subcommand needs; nullptr after reporting an error.
Resources Load(const ResourcePaths &paths, bool lexicon, bool topoi,
               bool stopwords, int *exit_code) {
  asds_resources *raw = nullptr;
  if (asds_status s = asds_resources_create(&raw); s != ASDS_OK) {
    *exit_code = ReportError(s);
    return nullptr;
  }
  Resources res(raw);
  const struct {
    bool wanted;
    asds_resource_kind kind;
    const std::string &path;
  } steps[] = {{lexicon, ASDS_RESOURCE_LEXICON, paths.lexicon},
               {topoi, ASDS_RESOURCE_TOPOI, paths.topoi},
               {stopwords, ASDS_RESOURCE_STOPWORDS, paths.stopwords}};
  for (const auto &step : steps) {
    if (!step.wanted) continue;
    asds_status s =
        asds_resources_load_file(res.get(), step.kind, step.path.c_str());
    if (s != ASDS_OK) {
      *exit_code = ReportError(s);
      return nullptr;
    }
  }
  return res;
}

bool ReadInput(const std::string &path, std::string *out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = std::move(ss).str();
  return !in.bad();
}

bool WriteOutput(const std::string &path, std::string_view bytes) {
  if (path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return std::fflush(stdout) == 0;
  }
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  return static_cast<bool>(out);
}

struct SummarizeArgs {
  ResourcePaths paths;
  std::string input;
  std::string output;
  double ratio = 0.3;
  double alpha = 0.5;
  std::string format = "text";
  bool explain = false;
  bool paper_fidelity = false;
};

int RunSummarize(const SummarizeArgs &args) {
  std::string text;
  if (!ReadInput(args.input, &text)) {
    std::cerr << "asds: cannot read input file: " << args.input << "\n";
    return kExitUsage;
  }
  int code = kExitOk;
  Resources res = Load(args.paths, true, true, true, &code);
  if (!res) return code;

  asds_summary_config config;
  asds_summary_config_init(&config);
  config.ratio = args.ratio;
  config.alpha = args.alpha;
  config.paper_fidelity = args.paper_fidelity ? 1 : 0;

  asds_summary *raw = nullptr;
  if (asds_status s =
          asds_summarize(res.get(), text.data(), text.size(), &config, &raw);
      s != ASDS_OK)
    return ReportError(s);
  SummaryHandle summary(raw);

  Buffer rendered;
  const asds_format format =
      args.format == "json" ? ASDS_FORMAT_JSON : ASDS_FORMAT_TEXT;
  if (asds_status s = asds_summary_render(summary.get(), format,
                                          args.explain ? 1 : 0, rendered.get());
      s != ASDS_OK)
    return ReportError(s);
  if (!WriteOutput(args.output, rendered.view())) {
    std::cerr << "asds: cannot write output: "
              << (args.output.empty() ? "<stdout>" : args.output) << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int RunCompare(const ResourcePaths &paths, const std::vector<std::string> &pair) {
  if (pair.size() != 2) {
    std::cerr << "asds: compare takes exactly two sentences\n";
    return kExitUsage;
  }
  int code = kExitOk;
  Resources res = Load(paths, false, false, true, &code);
  if (!res) return code;
  double value = 0.0;
  int defined = 0;
  if (asds_status s = asds_cosine(res.get(), pair[0].data(), pair[0].size(),
                                  pair[1].data(), pair[1].size(), &value,
                                  &defined);
      s != ASDS_OK)
    return ReportError(s);
  if (!defined)
    std::cerr << "asds: a sentence has no content words; cosine undefined\n";
  std::printf("COS %.2f\n", value);
  return kExitOk;
}

int RunCheck(const ResourcePaths &paths) {
  int code = kExitOk;
  Resources res = Load(paths, true, true, true, &code);
  if (!res) return code;
  asds_resource_counts counts;
  asds_resources_counts(res.get(), &counts);
  Buffer unreachable;
  if (asds_resources_unreachable_lexemes(res.get(), unreachable.get()) ==
          ASDS_OK &&
      unreachable.view().size() > 0) {
    std::cerr << "asds: warning: lexemes containing stopwords never match:\n"
              << unreachable.view();
  }
  std::printf("%zu topoi, %zu scales, %zu connectives\n", counts.topoi,
              counts.scales, counts.connectives);
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Argumentative single-document summarizer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(asds_version()));

  SummarizeArgs sargs;
  CLI::App *summarize = app.add_subcommand(
      "summarize", "Extract a summary with argumentative conclusions");
  AddResourceOptions(summarize, sargs.paths);
  summarize->add_option("--input", sargs.input, "Plain-text document")
      ->required();
  summarize->add_option("--ratio", sargs.ratio,
                        "Fraction of sentences kept, in (0, 1]")
      ->capture_default_str();
  summarize->add_option("--alpha", sargs.alpha,
                        "Keyword threshold relative to the top frequency")
      ->capture_default_str();
  summarize->add_option("--format", sargs.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  summarize->add_flag("--explain", sargs.explain,
                      "Include scores and annotations");
  summarize->add_flag("--paper-fidelity", sargs.paper_fidelity,
                      "Keywords at maximum frequency only, default weights");
  summarize->add_option("--output", sargs.output,
                        "Write to FILE instead of stdout");

  ResourcePaths cpaths;
  std::vector<std::string> pair;
  CLI::App *compare = app.add_subcommand(
      "compare", "Bag-of-words cosine between two sentences");
  AddResourceOptions(compare, cpaths);
  compare->add_option("sentences", pair, "Two sentences")->expected(0, 2);

  ResourcePaths kpaths;
  CLI::App *check =
      app.add_subcommand("check", "Validate the resource files");
  AddResourceOptions(check, kpaths);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (summarize->parsed()) return RunSummarize(sargs);
  if (compare->parsed()) return RunCompare(cpaths, pair);
  return RunCheck(kpaths);
}
