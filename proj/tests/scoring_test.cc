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

#include "asds/scoring.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "asds/error.h"
#include "scoring_oracle.h"
#include "test_support.h"

namespace asds {
namespace {

struct Scored {
  Document doc;
  std::vector<SentenceAnnotation> annotations;
  WordSentenceMatrix matrix;
  KeywordWeights keywords;
  std::vector<SentenceScore> scores;
};

Scored ScoreText(const std::string &text, double alpha = 0.5) {
  const auto &demo = testing::Demo();
  Scored s;
  s.doc = SegmentSentences(text, demo.stopwords);
  s.annotations = GenerateConstraints(s.doc, demo.lexicon, demo.base);
  s.matrix = BuildMatrix(s.doc);
  s.keywords = ExtractKeywords(s.matrix, alpha);
  s.scores = ScoreDocument(s.matrix, s.keywords, s.annotations, demo.lexicon);
  return s;
}

WordSentenceMatrix MatrixOf(const std::string &text) {
  return BuildMatrix(SegmentSentences(text, testing::Demo().stopwords));
}

// Matrix whose words have the given total frequencies, one sentence each.
WordSentenceMatrix MatrixWithFreqs(const std::vector<std::pair<std::string, int>> &f) {
  std::string text;
  for (const auto &[w, n] : f) {
    for (int i = 0; i < n; ++i) text += w + " ";
    text += ". ";
  }
  return MatrixOf(text);
}

TEST(BuildMatrix, HandCounted) {
  WordSentenceMatrix m = MatrixOf("work work play. play.");
  ASSERT_EQ(m.words(), (std::vector<std::string>{"work", "play"}));
  ASSERT_EQ(m.cols(), 2u);
  EXPECT_EQ(m.count("work", 0), 2u);
  EXPECT_EQ(m.count("work", 1), 0u);
  EXPECT_EQ(m.count("play", 0), 1u);
  EXPECT_EQ(m.count("play", 1), 1u);
  EXPECT_EQ(m.doc_freq("work"), 2u);
  EXPECT_EQ(m.doc_freq("play"), 2u);
}

TEST(BuildMatrix, Empty) {
  WordSentenceMatrix m = MatrixOf("");
  EXPECT_EQ(m.rows(), 0u);
  EXPECT_EQ(m.cols(), 0u);
  EXPECT_EQ(m.max_doc_freq(), 0u);
}

TEST(BuildMatrix, SingleRow) {
  WordSentenceMatrix m = MatrixOf("nice nice nice");
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.doc_freq("nice"), 3u);
}

TEST(BuildMatrix, StopwordsAreNotRows) {
  WordSentenceMatrix m = MatrixOf("The weather is nice but I have to work.");
  EXPECT_EQ(m.words(), (std::vector<std::string>{"weather", "nice", "work"}));
  EXPECT_EQ(m.row_of("the"), kNoRow);
}

TEST(BuildMatrix, DocFreqIsColumnSum) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    Document doc = SegmentSentences(testing::RandomDocument(rng, 1 + rng() % 40),
                                    testing::Demo().stopwords);
    WordSentenceMatrix m = BuildMatrix(doc);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::size_t total = 0;
      for (std::size_t s = 0; s < m.cols(); ++s) total += m.count(r, s);
      EXPECT_EQ(total, m.doc_freq(r));
      EXPECT_FALSE(testing::Demo().stopwords.Contains(m.words()[r]));
    }
  }
}

TEST(ExtractKeywords, AlphaOneKeepsMaximumOnly) {
  auto m = MatrixWithFreqs({{"apple", 3}, {"pear", 2}, {"plum", 3}});
  auto k = KeywordMap(m, ExtractKeywords(m, 1.0));
  EXPECT_EQ(k.size(), 2u);
  EXPECT_EQ(k.at("apple"), 1.0);
  EXPECT_EQ(k.at("plum"), 1.0);
  EXPECT_FALSE(k.count("pear"));
}

TEST(ExtractKeywords, EqualFrequenciesAllKeywords) {
  auto m = MatrixWithFreqs({{"apple", 2}, {"pear", 2}, {"plum", 2}});
  auto k = KeywordMap(m, ExtractKeywords(m, 1.0));
  ASSERT_EQ(k.size(), 3u);
  for (const auto &[w, weight] : k) EXPECT_EQ(weight, 1.0);
}

TEST(ExtractKeywords, RelativeThreshold) {
  auto m = MatrixWithFreqs({{"a1", 4}, {"b1", 2}, {"c1", 1}});
  auto k = KeywordMap(m, ExtractKeywords(m, 0.5));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k.at("a1"), 4.0 / 4.0);
  EXPECT_EQ(k.at("b1"), 2.0 / 4.0);
}

TEST(ExtractKeywords, EmptyAndInvalidAlpha) {
  EXPECT_EQ(ExtractKeywords(MatrixOf(""), 0.5).size(), 0u);
  auto m = MatrixOf("x y");
  EXPECT_THROW(ExtractKeywords(m, 0.0), Error);
  EXPECT_THROW(ExtractKeywords(m, 1.5), Error);
  EXPECT_NO_THROW(ExtractKeywords(m, 1.0));
}

TEST(ScoreSentence, NoKeywordsScoresZero) {
  // "river" is the only keyword at alpha = 1; sentence 1 has a connective.
  Scored s = ScoreText("river river. But the park is green.", 1.0);
  EXPECT_EQ(s.scores[1].keyword_weight, 0.0);
  EXPECT_EQ(s.scores[1].connective_weight, 2.0);
  EXPECT_EQ(s.scores[1].score, 0.0);
}

TEST(ScoreSentence, NoConnectiveIsNeutral) {
  Scored s = ScoreText("The river is wide. The river is deep.");
  EXPECT_EQ(s.scores[0].connective_weight, 1.0);
  EXPECT_EQ(s.scores[0].score, s.scores[0].keyword_weight);
  EXPECT_GT(s.scores[0].score, 0.0);
}

TEST(ScoreSentence, LargestConnectiveWeightWins) {
  Scored s = ScoreText("Even the river is wide but deep.");
  EXPECT_EQ(s.scores[0].connective_weight, 2.0);
}

TEST(ScoreSentence, FixtureMatchesNaiveOracle) {
  const std::string raw = testing::ReadText(testing::FixturePath("five_sentences.txt"));
  for (double alpha : {0.5, 1.0, 0.25}) {
    Scored s = ScoreText(raw, alpha);
    auto oracle = oracle::ScoreFromRaw(
        raw, testing::ReadText(testing::DataPath("stopwords.txt")),
        testing::ReadText(testing::DataPath("lexicon.txt")), alpha);
    ASSERT_EQ(s.scores.size(), 5u);
    ASSERT_EQ(oracle.scores.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_EQ(oracle.sentences[i], s.doc.Text(s.doc.sentences[i]));
      EXPECT_EQ(s.scores[i].keyword_weight, oracle.scores[i].keyword_weight) << i;
      EXPECT_EQ(s.scores[i].connective_weight, oracle.scores[i].connective_weight) << i;
      EXPECT_EQ(s.scores[i].score, oracle.scores[i].score) << i;
      EXPECT_EQ(s.scores[i].score,
                s.scores[i].connective_weight * s.scores[i].keyword_weight);
    }
    EXPECT_EQ(Rank(s.scores), oracle.ranking);
  }
}

TEST(ScoreSentence, RandomDocumentsMatchNaiveOracle) {
  std::mt19937_64 rng(67);
  const std::string stop = testing::ReadText(testing::DataPath("stopwords.txt"));
  const std::string lex = testing::ReadText(testing::DataPath("lexicon.txt"));
  for (int iter = 0; iter < 150; ++iter) {
    std::string raw = testing::RandomDocument(rng, 1 + rng() % 25);
    Scored s = ScoreText(raw);
    auto oracle = oracle::ScoreFromRaw(raw, stop, lex, 0.5);
    ASSERT_EQ(s.scores.size(), oracle.scores.size()) << raw;
    for (std::size_t i = 0; i < s.scores.size(); ++i)
      ASSERT_EQ(s.scores[i].score, oracle.scores[i].score) << raw;
    EXPECT_EQ(Rank(s.scores), oracle.ranking);
  }
}

TEST(ScoreSentence, MonotoneInKeywordOccurrences) {
  const auto &demo = testing::Demo();
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 200; ++iter) {
    Scored s = ScoreText(testing::RandomDocument(rng, 1 + rng() % 10));
    std::size_t i = rng() % s.doc.sentences.size();
    // One more occurrence of keyword w in sentence i, weights held fixed.
    for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
      if (!s.keywords.is_keyword(r)) continue;
      std::string bumped;
      for (std::size_t k = 0; k < s.doc.sentences.size(); ++k) {
        bumped += std::string(s.doc.Text(s.doc.sentences[k]));
        if (k == i) bumped.insert(bumped.size() - 1, " " + s.matrix.words()[r]);
        bumped += " ";
      }
      Document d2 = SegmentSentences(bumped, demo.stopwords);
      WordSentenceMatrix m2 = BuildMatrix(d2);
      auto anns = GenerateConstraints(d2, demo.lexicon, demo.base);
      // Map the original weights onto the new rows.
      std::vector<double> w2(m2.rows(), 0.0);
      for (std::size_t r2 = 0; r2 < m2.rows(); ++r2) {
        std::size_t r1 = s.matrix.row_of(m2.words()[r2]);
        if (r1 != kNoRow) w2[r2] = s.keywords.weight(r1);
      }
      SentenceScore after = ScoreSentence(i, m2, KeywordWeights(w2), anns[i], demo.lexicon);
      EXPECT_GE(after.score, s.scores[i].score);
      break;
    }
  }
}

TEST(Rank, DirectSort) {
  std::vector<SentenceScore> scores = {{0, 0, 1, 0.5}, {1, 0, 1, 2.0}, {2, 0, 1, 1.0}};
  EXPECT_EQ(Rank(scores), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(Rank, TiesKeepDocumentOrder) {
  std::vector<SentenceScore> scores;
  for (std::size_t i = 0; i < 6; ++i) scores.push_back({i, 1, 1, 1.0});
  EXPECT_EQ(Rank(scores), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(Rank({}).empty());
}

TEST(Rank, IsAPermutation) {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 100; ++iter) {
    Scored s = ScoreText(testing::RandomDocument(rng, 1 + rng() % 50));
    auto order = Rank(s.scores);
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> ident(order.size());
    std::iota(ident.begin(), ident.end(), std::size_t{0});
    EXPECT_EQ(sorted, ident);
    for (std::size_t k = 1; k < order.size(); ++k) {
      const auto &a = s.scores[order[k - 1]], &b = s.scores[order[k]];
      EXPECT_TRUE(a.score > b.score || (a.score == b.score && order[k - 1] < order[k]));
    }
  }
}

}  // namespace
}  // namespace asds
