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

#include "asds/orientation.h"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <thread>
#include <vector>

#include "test_support.h"

namespace asds {
namespace {

constexpr Sign P = Sign::kPlus;
constexpr Sign M = Sign::kMinus;

SentenceAnnotation Annotate(const std::string &text,
                            const Lexicon &lexicon = testing::Demo().lexicon,
                            const ToposBase &base = testing::Demo().base) {
  Document doc = SegmentSentences(text, testing::Demo().stopwords);
  const Sentence &s = doc.sentences.at(0);
  return OrientSentence(s, lexicon.Detect(s), lexicon, base);
}

std::vector<ArgOrientation> OrientWhole(const std::string &text) {
  auto tokens = Tokenize(text, testing::Demo().stopwords);
  return OrientClause(tokens, {0, tokens.size()}, testing::Demo().base,
                      OrientationSource::kWholeSentence);
}

TEST(OrientClause, DemoExamples) {
  auto a = OrientWhole("The weather is beautiful");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], (ArgOrientation{"outing", P, "t1", OrientationSource::kWholeSentence}));

  auto b = OrientWhole("I have to work");
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (ArgOrientation{"outing", M, "t2", OrientationSource::kWholeSentence}));

  EXPECT_TRUE(OrientWhole("Purple monkeys dishwasher").empty());
}

TEST(OrientClause, OrderedByToposDeclaration) {
  // Both premises fire; t1 is declared before t2.
  auto o = OrientWhole("work despite the nice weather");
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0].licensed_by, "t1");
  EXPECT_EQ(o[1].licensed_by, "t2");
}

TEST(OrientSentence, ButTakesTheConclusionOrientation) {
  auto a = Annotate("The weather is beautiful but I have to work");
  ASSERT_TRUE(a.connective.has_value());
  EXPECT_EQ(a.relation, ConnectiveKind::kOpposition);
  ASSERT_TRUE(a.sentence_orientation.has_value());
  EXPECT_EQ(a.sentence_orientation->scale, "outing");
  EXPECT_EQ(a.sentence_orientation->sign, M);
  EXPECT_EQ(a.sentence_orientation->licensed_by, "t2");
  EXPECT_EQ(a.sentence_orientation->source, OrientationSource::kConclusion);
  ASSERT_EQ(a.argument_orientations.size(), 1u);
  EXPECT_EQ(a.argument_orientations[0].sign, P);
  EXPECT_FALSE(a.conflict);
}

TEST(OrientSentence, SwappedClausesGivePlusOuting) {
  auto a = Annotate("I have to work but the weather is beautiful");
  ASSERT_TRUE(a.sentence_orientation.has_value());
  EXPECT_EQ(a.sentence_orientation->scale, "outing");
  EXPECT_EQ(a.sentence_orientation->sign, P);
  EXPECT_EQ(a.sentence_orientation->licensed_by, "t1");
}

TEST(OrientSentence, NothingMatches) {
  auto a = Annotate("Purple monkeys wash dishes.");
  EXPECT_FALSE(a.connective.has_value());
  EXPECT_TRUE(a.matches.empty());
  EXPECT_TRUE(a.whole_orientations.empty());
  EXPECT_TRUE(a.argument_orientations.empty());
  EXPECT_TRUE(a.conclusion_orientations.empty());
  EXPECT_FALSE(a.sentence_orientation.has_value());
}

TEST(OrientSentence, NoConnectiveUsesWholeSentence) {
  auto a = Annotate("The weather is nice today.");
  EXPECT_FALSE(a.connective.has_value());
  ASSERT_TRUE(a.sentence_orientation.has_value());
  EXPECT_EQ(a.sentence_orientation->source, OrientationSource::kWholeSentence);
  EXPECT_EQ(a.sentence_orientation->sign, P);
}

TEST(OrientSentence, ScalarConnectiveDoesNotSplit) {
  auto a = Annotate("Even a little work is tiring.");
  EXPECT_EQ(a.matches.size(), 2u);  // "even", "a little"
  EXPECT_FALSE(a.connective.has_value());
  ASSERT_TRUE(a.sentence_orientation.has_value());
  EXPECT_EQ(a.sentence_orientation->source, OrientationSource::kWholeSentence);
}

TEST(OrientSentence, RightmostSplittingConnectiveGoverns) {
  auto a = Annotate("The weather is nice but I have to work yet the weather is nice");
  ASSERT_EQ(a.matches.size(), 2u);
  ASSERT_TRUE(a.connective.has_value());
  EXPECT_EQ(*a.connective, a.matches[1]);
  ASSERT_TRUE(a.sentence_orientation.has_value());
  EXPECT_EQ(a.sentence_orientation->sign, P);
  // The argument clause spans everything left of "yet", including the earlier
  // "but" and both orientations.
  EXPECT_EQ(a.argument_orientations.size(), 2u);
}

TEST(OrientSentence, TrailingConnectiveCannotGovern) {
  auto a = Annotate("The weather is nice but I have to work but");
  ASSERT_TRUE(a.connective.has_value());
  EXPECT_EQ(*a.connective, a.matches[0]);
  EXPECT_EQ(a.sentence_orientation->sign, M);

  auto b = Annotate("I have to work but");
  EXPECT_FALSE(b.connective.has_value());
  ASSERT_TRUE(b.sentence_orientation.has_value());
  EXPECT_EQ(b.sentence_orientation->source, OrientationSource::kWholeSentence);
}

TEST(OrientSentence, SentenceInitialConnective) {
  auto a = Annotate("But the weather is beautiful.");
  ASSERT_TRUE(a.split.has_value());
  EXPECT_TRUE(a.split->inter_sentential);
  EXPECT_TRUE(a.argument_orientations.empty());
  EXPECT_EQ(a.sentence_orientation->sign, P);
}

TEST(OrientSentence, ConsequenceKeepsConclusionAndSupportingArgument) {
  auto a = Annotate("The weather is beautiful therefore we go out");
  EXPECT_EQ(a.relation, ConnectiveKind::kConsequence);
  ASSERT_EQ(a.argument_orientations.size(), 1u);
  EXPECT_EQ(a.argument_orientations[0].sign, P);
  // "go out" evokes the outing scale, which licenses nothing further.
  EXPECT_TRUE(a.conclusion_orientations.empty());
  EXPECT_FALSE(a.sentence_orientation.has_value());
  EXPECT_FALSE(a.conflict);
}

TEST(OrientSentence, ConflictIsFlaggedNotFatal) {
  auto a = Annotate("The weather is nice but the weather is beautiful");
  EXPECT_TRUE(a.conflict);
  ASSERT_TRUE(a.sentence_orientation.has_value());
  EXPECT_EQ(a.sentence_orientation->sign, P);

  // Same-sign agreement under a consequence connective is not a conflict.
  auto b = Annotate("The weather is nice so the weather is beautiful");
  EXPECT_FALSE(b.conflict);
}

TEST(OrientSentence, ConclusionLicensesNothingLeavesOrientationAbsent) {
  auto a = Annotate("I have to work but purple monkeys dance");
  ASSERT_TRUE(a.connective.has_value());
  EXPECT_FALSE(a.argument_orientations.empty());
  EXPECT_FALSE(a.sentence_orientation.has_value());
}

TEST(GenerateConstraints, ExampleOnePairHasOppositeOrientations) {
  Document doc = SegmentSentences(testing::ReadText(testing::FixturePath("example1.txt")),
                                  testing::Demo().stopwords);
  auto anns = GenerateConstraints(doc, testing::Demo().lexicon, testing::Demo().base);
  ASSERT_EQ(anns.size(), 2u);
  ASSERT_TRUE(anns[0].sentence_orientation && anns[1].sentence_orientation);
  EXPECT_EQ(anns[0].sentence_orientation->scale, "outing");
  EXPECT_EQ(anns[1].sentence_orientation->scale, "outing");
  EXPECT_EQ(anns[0].sentence_orientation->sign,
            Negate(anns[1].sentence_orientation->sign));
}

TEST(GenerateConstraints, EmptyDocument) {
  EXPECT_TRUE(GenerateConstraints(SegmentSentences(""), testing::Demo().lexicon,
                                  testing::Demo().base)
                  .empty());
}

TEST(GenerateConstraints, OnlyThirdSentenceHasBut) {
  const std::string text =
      "The park is green. We like the river. The weather is nice but I have "
      "to work. Friends came over.";
  Document doc = SegmentSentences(text, testing::Demo().stopwords);
  auto anns = GenerateConstraints(doc, testing::Demo().lexicon, testing::Demo().base);
  // Count oracle: sentences containing the word "but".
  std::size_t expected = 0, at = 0;
  for (const Sentence &s : doc.sentences) {
    for (const Token &t : s.tokens) {
      if (t.normalized == "but") {
        ++expected;
        at = s.index;
        break;
      }
    }
  }
  ASSERT_EQ(expected, 1u);
  std::size_t with = 0;
  for (const auto &a : anns) {
    if (a.connective) {
      ++with;
      EXPECT_EQ(a.sentence_index, at);
    }
  }
  EXPECT_EQ(with, expected);
  EXPECT_EQ(at, 2u);
}

TEST(OrientationProperties, RandomDocuments) {
  std::mt19937_64 rng(41);
  const auto &demo = testing::Demo();
  for (int iter = 0; iter < 200; ++iter) {
    Document doc = SegmentSentences(testing::RandomDocument(rng, 1 + rng() % 30),
                                    demo.stopwords);
    auto anns = GenerateConstraints(doc, demo.lexicon, demo.base);
    ASSERT_EQ(anns.size(), doc.sentences.size());
    for (const auto &a : anns) {
      if (a.sentence_orientation) {
        const auto &pool = a.connective ? a.conclusion_orientations : a.whole_orientations;
        EXPECT_NE(std::find(pool.begin(), pool.end(), *a.sentence_orientation),
                  pool.end());
        EXPECT_NE(demo.base.FindTopos(a.sentence_orientation->licensed_by), nullptr);
      }
      if (a.relation == ConnectiveKind::kOpposition) {
        for (const auto &x : a.argument_orientations)
          for (const auto &y : a.conclusion_orientations)
            if (x.scale == y.scale) EXPECT_TRUE(x.sign != y.sign || a.conflict);
      }
    }
  }
}

TEST(OrientationProperties, ConclusionDominance) {
  // "A but B" takes the orientation B has on its own.
  std::mt19937_64 rng(43);
  const auto &demo = testing::Demo();
  for (int iter = 0; iter < 300; ++iter) {
    std::string a = testing::RandomSentence(rng);
    std::string b = testing::RandomSentence(rng);
    a.pop_back();
    Document bd = SegmentSentences(b, demo.stopwords);
    auto b_alone = OrientClause(bd.sentences[0].tokens,
                                {0, bd.sentences[0].tokens.size()}, demo.base,
                                OrientationSource::kWholeSentence);
    // B must not contain splitting connectives of its own.
    bool b_splits = false;
    for (const auto &m : demo.lexicon.Detect(bd.sentences[0]))
      b_splits = b_splits || demo.lexicon.entry(m).splits;
    if (b_alone.empty() || b_splits) continue;
    auto ann = Annotate(a + " but " + b);
    ASSERT_TRUE(ann.sentence_orientation.has_value()) << a << " but " << b;
    EXPECT_EQ(ann.sentence_orientation->scale, b_alone[0].scale);
    EXPECT_EQ(ann.sentence_orientation->sign, b_alone[0].sign);
    EXPECT_EQ(ann.sentence_orientation->licensed_by, b_alone[0].licensed_by);
  }
}

TEST(OrientationProperties, SwappingClausesNegatesOverRandomBases) {
  std::mt19937_64 rng(47);
  Lexicon lexicon = Lexicon::Parse("connective \"but\" kind=opposition weight=2");
  int checked = 0;
  for (int iter = 0; iter < 500; ++iter) {
    ToposBase base = testing::RandomBase(rng, 3 + rng() % 3, 1 + rng() % 5);
    // One lexeme per clause; pick an antecedent scale per side.
    const auto &topoi = base.topoi();
    const Topos &t = topoi[rng() % topoi.size()];
    const Scale *p = base.FindScale(t.antecedent.scale);
    std::string side_a = p->lexemes[0][0];
    std::string side_b = "not " + side_a;
    Document d1 = SegmentSentences(side_a + " but " + side_b + ".", {});
    Document d2 = SegmentSentences(side_b + " but " + side_a + ".", {});
    auto a1 = OrientSentence(d1.sentences[0], lexicon.Detect(d1.sentences[0]),
                             lexicon, base);
    auto a2 = OrientSentence(d2.sentences[0], lexicon.Detect(d2.sentences[0]),
                             lexicon, base);
    ASSERT_TRUE(a1.sentence_orientation && a2.sentence_orientation);
    EXPECT_EQ(a1.sentence_orientation->scale, a2.sentence_orientation->scale);
    EXPECT_EQ(a1.sentence_orientation->sign, Negate(a2.sentence_orientation->sign));
    ++checked;
  }
  EXPECT_EQ(checked, 500);
}

TEST(OrientationProperties, ParallelMatchesSequential) {
  std::mt19937_64 rng(53);
  const auto &demo = testing::Demo();
  Document doc = SegmentSentences(testing::RandomDocument(rng, 400), demo.stopwords);
  auto sequential = GenerateConstraints(doc, demo.lexicon, demo.base);
  std::vector<SentenceAnnotation> parallel(doc.sentences.size());
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < doc.sentences.size(); i += 4) {
        const Sentence &s = doc.sentences[i];
        parallel[i] = OrientSentence(s, demo.lexicon.Detect(s), demo.lexicon, demo.base);
      }
    });
  }
  for (auto &t : workers) t.join();
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    EXPECT_EQ(parallel[i].sentence_orientation, sequential[i].sentence_orientation);
    EXPECT_EQ(parallel[i].matches, sequential[i].matches);
    EXPECT_EQ(parallel[i].conflict, sequential[i].conflict);
  }
}

}  // namespace
}  // namespace asds
