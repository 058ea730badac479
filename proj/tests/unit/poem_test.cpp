#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "escandir/poem.hpp"
#include "generators.hpp"

namespace {

using escandir::PoemMode;
using escandir::PoemOptions;

const escandir::LexiconConfig& lexicon() {
  static const auto l = escandir::LexiconConfig::standard();
  return l;
}

escandir::PoemAnalysis analyze(const std::vector<std::string>& lines, const PoemOptions& options = {}) {
  return escandir::analyze_poem(lines, options, lexicon(), escandir::Catalog::bundled());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int distance(int m, const std::set<int>& targets) {
  int best = 1 << 20;
  for (int t : targets) best = std::min(best, std::abs(t - m));
  return best;
}

TEST(FrequentMeasures, Examples) {
  using V = std::vector<int>;
  EXPECT_EQ(escandir::frequent_measures(V{11, 11, 11, 7}), (std::set<int>{11}));
  EXPECT_EQ(escandir::frequent_measures(V{7, 11, 7, 11, 14}), (std::set<int>{7, 11}));
  EXPECT_EQ(escandir::frequent_measures(V{14, 7, 11}), (std::set<int>{7}));
  EXPECT_EQ(escandir::frequent_measures(V{11, 11, 11, 11, 11, 11, 11, 11, 7, 7}), (std::set<int>{11}));
  EXPECT_EQ(escandir::frequent_measures(V{11, 11, 11, 11, 11, 11, 7, 7}), (std::set<int>{7, 11}));
  EXPECT_TRUE(escandir::frequent_measures(V{}).empty());
}

TEST(Poem, SonnetIsFixedHendecasyllables) {
  const auto a = escandir::analyze_text(read_file(ESCANDIR_TEST_DATA "/sonnet.txt"), {}, lexicon(),
                                        escandir::Catalog::bundled());
  EXPECT_EQ(a.rows.size(), 14u);
  EXPECT_EQ(a.frequent_measures, (std::set<int>{11}));
  EXPECT_TRUE(a.is_fixed);
  for (const auto& r : a.rows) {
    EXPECT_TRUE(r.ok()) << r.scansion.text;
    EXPECT_EQ(r.scansion.measure, 11) << r.scansion.text;
    EXPECT_EQ(r.applicable, (std::set<int>{11}));
  }
}

TEST(Poem, BlankLinesKeepLineNumbers) {
  const auto a = escandir::analyze_text("Amigos, el amor me perjudica\r\n\n  \nCreía que te había dicho adiós\n",
                                        {}, lexicon(), escandir::Catalog::bundled());
  ASSERT_EQ(a.rows.size(), 2u);
  EXPECT_EQ(a.rows[0].line, 1);
  EXPECT_EQ(a.rows[1].line, 4);
}

TEST(Poem, UnscannableLinesBecomeFlaggedRows) {
  const auto a = analyze({"Amigos, el amor me perjudica", "1580", "Creía que te había dicho adiós"});
  ASSERT_EQ(a.rows.size(), 3u);
  EXPECT_FALSE(a.rows[1].ok());
  EXPECT_TRUE(a.rows[1].scansion.has_flag("unscannable"));
  EXPECT_EQ(a.rows[1].scansion.measure, 0);
  EXPECT_EQ(a.frequent_measures, (std::set<int>{11}));
}

TEST(Poem, ForcedMeasuresOverrideInference) {
  PoemOptions options;
  options.forced_measures = {11};
  const auto a = analyze({"Todas las tardes se muere un niño", "si a Silvia la cruel pastora viere"}, options);
  EXPECT_EQ(a.frequent_measures, (std::set<int>{10}));
  EXPECT_EQ(escandir::versal_tendency(a, options), (std::set<int>{11}));
  for (const auto& r : a.rows) {
    EXPECT_TRUE(r.rescanned);
    EXPECT_EQ(r.scansion.measure, 11) << r.scansion.tagged_text;
  }
}

TEST(Poem, FixedModeResolvesTowardsTheTendency) {
  PoemOptions options;
  options.mode = PoemMode::fixed;
  // Seven hendecasyllables outweigh two verses read flat as ten.
  std::vector<std::string> lines;
  for (int i = 0; i < 7; ++i) {
    lines.push_back(i % 2 == 0 ? "Amigos, el amor me perjudica" : "Creía que te había dicho adiós");
  }
  lines.push_back("Todas las tardes se muere un niño");
  lines.push_back("si a Silvia la cruel pastora viere");
  const auto a = analyze(lines, options);
  EXPECT_EQ(a.frequent_measures, (std::set<int>{11}));
  EXPECT_TRUE(a.rows[7].rescanned);
  EXPECT_TRUE(a.rows[8].rescanned);
  EXPECT_EQ(a.rows[7].scansion.pattern.positions, (std::vector<int>{1, 4, 8, 9, 10}));
  EXPECT_EQ(a.rows[8].scansion.pattern.positions, (std::vector<int>{3, 6, 8, 10}));
}

TEST(Poem, MixedModeFirstVerseHasNoWindow) {
  PoemOptions options;
  options.mode = PoemMode::mixed;
  options.window = 2;
  const auto a = analyze({"Todas las tardes se muere un niño", "Amigos, el amor me perjudica"}, options);
  EXPECT_TRUE(a.rows[0].applicable.empty());
  EXPECT_FALSE(a.rows[0].rescanned);
  EXPECT_EQ(a.rows[1].applicable, (std::set<int>{10}));
}

TEST(Poem, RejectsEmptyWindow) {
  PoemOptions options;
  options.window = 0;
  EXPECT_THROW(analyze({"Amigos, el amor me perjudica"}, options), std::invalid_argument);
}

std::vector<std::string> synthetic_lines(unsigned seed, int n) {
  gen::Rng rng(seed);
  std::vector<std::string> lines;
  for (const auto& v : gen::polymetric_corpus(rng, n)) lines.push_back(v.text);
  return lines;
}

TEST(PoemProperties, WindowLocality) {
  PoemOptions options;
  options.mode = PoemMode::mixed;
  options.window = 4;
  auto lines = synthetic_lines(8, 40);
  const auto before = analyze(lines, options);
  lines[0] = "Amigos, el amor me perjudica";
  lines[1] = "Oh, qué frescor, qué música / de chopos de estación";
  const auto after = analyze(lines, options);
  for (std::size_t i = 2 + 4; i < lines.size(); ++i) {
    EXPECT_EQ(before.rows[i].applicable, after.rows[i].applicable) << i;
    EXPECT_EQ(before.rows[i].scansion.pattern, after.rows[i].scansion.pattern) << i;
  }
}

TEST(PoemProperties, SecondPassNeverMovesAwayFromTheApplicableSet) {
  for (auto mode : {PoemMode::automatic, PoemMode::fixed, PoemMode::mixed}) {
    PoemOptions options;
    options.mode = mode;
    const auto lines = synthetic_lines(21, 80);
    const auto a = analyze(lines, options);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      const auto& r = a.rows[i];
      if (r.applicable.empty()) continue;
      const int first = escandir::scan_verse(lines[i], lexicon(), true).measure;
      EXPECT_LE(distance(r.scansion.measure, r.applicable), distance(first, r.applicable)) << lines[i];
      if (!r.rescanned) EXPECT_TRUE(r.applicable.contains(r.scansion.measure)) << lines[i];
    }
  }
}

TEST(PoemProperties, ThreadCountDoesNotChangeResults) {
  const auto lines = synthetic_lines(77, 120);
  PoemOptions one;
  one.threads = 1;
  one.mode = PoemMode::mixed;
  PoemOptions many = one;
  many.threads = 8;
  const auto a = analyze(lines, one);
  const auto b = analyze(lines, many);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].scansion.pattern, b.rows[i].scansion.pattern);
    EXPECT_EQ(a.rows[i].scansion.tagged_text, b.rows[i].scansion.tagged_text);
    EXPECT_EQ(a.rows[i].applicable, b.rows[i].applicable);
  }
}

TEST(PoemMode, Names) {
  for (auto m : {PoemMode::automatic, PoemMode::fixed, PoemMode::mixed}) {
    EXPECT_EQ(escandir::parse_mode(escandir::to_string(m)), m);
  }
  EXPECT_FALSE(escandir::parse_mode("free"));
}

}  // namespace
