#include <gtest/gtest.h>

#include <set>

#include "escandir/verse.hpp"
#include "generators.hpp"
#include "oracle.hpp"

namespace {

using escandir::Catalog;
using escandir::MetricalPattern;
using escandir::ResourceKind;
using escandir::ResourceTag;

const escandir::LexiconConfig& lexicon() {
  static const auto l = escandir::LexiconConfig::standard();
  return l;
}

ResourceTag to_tag(const oracle::Site& s) {
  const auto kind = s.kind == oracle::Site::dialefa    ? ResourceKind::dialefa
                    : s.kind == oracle::Site::dieresis ? ResourceKind::dieresis
                                                       : ResourceKind::syneresis;
  return {kind, s.word, s.nucleus};
}

bool applied(const escandir::VerseScansion& s, ResourceTag tag) {
  return std::find(s.resources.begin(), s.resources.end(), tag) != s.resources.end();
}

TEST(Resolve, WorkedExamples) {
  const auto& catalog = Catalog::bundled();
  auto s = escandir::analyze_verse("Todas las tardes se muere un niño", lexicon(), catalog, {11});
  EXPECT_EQ(s.pattern, (MetricalPattern{{1, 4, 8, 9, 10}, 11}));
  EXPECT_TRUE(applied(s, {ResourceKind::dieresis, 4, 1}));
  EXPECT_EQ(s.match.matched_type->name(), "sáfico puro pleno");

  s = escandir::analyze_verse("si a Silvia la cruel pastora viere", lexicon(), catalog, {11});
  EXPECT_EQ(s.pattern, (MetricalPattern{{3, 6, 8, 10}, 11}));
  EXPECT_TRUE(applied(s, {ResourceKind::dialefa, 0, 1}));

  s = escandir::analyze_verse("dentro de su fluir los manantiales", lexicon(), catalog, {11});
  EXPECT_EQ(s.pattern, (MetricalPattern{{1, 6, 10}, 11}));
  EXPECT_TRUE(applied(s, {ResourceKind::dieresis, 3, 1}));
  EXPECT_EQ(s.match.coincidence_ratio, (escandir::Fraction{1, 1}));
}

TEST(Resolve, PrefersFewerResourcesAndEarlierSites) {
  // Two dialefas reach the same measure; the earlier one wins.
  const auto s = escandir::analyze_verse("la ola alta", lexicon(), Catalog::bundled(), {4});
  ASSERT_EQ(s.measure, 4);
  EXPECT_TRUE(applied(s, {ResourceKind::dialefa, 0, 1}));
  // Without targets the default reading stands when nothing scores higher.
  const auto d = escandir::analyze_verse("Amigos, el amor me perjudica", lexicon(), Catalog::bundled(), {});
  EXPECT_EQ(d.measure, 11);
}

TEST(Candidates, NoSitesMeansOneCandidate) {
  const auto c = escandir::generate_candidates("los campos de Castilla", lexicon());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].applied.empty());
}

TEST(Candidates, SitesMatchOracle) {
  gen::Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const auto words = gen::random_verse(rng, gen::bank(), 8);
    std::set<ResourceTag> want;
    for (const auto& s : oracle::sites(gen::verse_words(words))) want.insert(to_tag(s));
    const auto got = escandir::ambiguity_sites(gen::join(words), lexicon());
    ASSERT_EQ(std::set<ResourceTag>(got.begin(), got.end()), want) << gen::join(words);
  }
}

TEST(Candidates, ConflictMatchesOracle) {
  const std::vector<oracle::Site> sites{{oracle::Site::dialefa, 0, 2},  {oracle::Site::dieresis, 0, 2},
                                        {oracle::Site::syneresis, 0, 1}, {oracle::Site::syneresis, 0, 2},
                                        {oracle::Site::dieresis, 0, 3},  {oracle::Site::dieresis, 1, 2}};
  for (const auto& a : sites) {
    for (const auto& b : sites) {
      EXPECT_EQ(escandir::resources_conflict(to_tag(a), to_tag(b)), oracle::conflict(a, b));
    }
  }
}

TEST(Candidates, SingletonEqualsDirectScan) {
  const std::string verse = "Todas las tardes se muere un niño";
  for (const auto& c : escandir::generate_candidates(verse, lexicon())) {
    if (c.applied.size() != 1) continue;
    const auto direct = escandir::scan_with_resources(verse, lexicon(), c.applied, true);
    EXPECT_EQ(c.scansion.pattern, direct.pattern);
    EXPECT_EQ(c.scansion.tagged_text, direct.tagged_text);
  }
}

// Property: for up to three sites the candidate readings are exactly the
// oracle readings of every compatible subset.
TEST(Candidates, PowersetMatchesOracle) {
  gen::Rng rng(31);
  escandir::VerseOptions flat;
  flat.hemistich_threshold = 1000;
  int checked = 0;
  for (int i = 0; checked < 300 && i < 5000; ++i) {
    const auto words = gen::random_verse(rng, gen::bank(), 7);
    const auto vws = gen::verse_words(words);
    const auto sites = oracle::sites(vws);
    if (sites.empty() || sites.size() > 3) continue;
    std::multiset<std::pair<std::set<ResourceTag>, std::vector<int>>> want;
    for (unsigned mask = 0; mask < (1u << sites.size()); ++mask) {
      std::set<oracle::Site> chosen;
      bool ok = true;
      for (std::size_t k = 0; k < sites.size(); ++k) {
        if (!(mask & (1u << k))) continue;
        for (const auto& c : chosen) ok = ok && !oracle::conflict(c, sites[k]);
        chosen.insert(sites[k]);
      }
      if (!ok) continue;
      std::set<ResourceTag> tags;
      for (const auto& s : chosen) tags.insert(to_tag(s));
      want.insert({tags, oracle::scan(vws, chosen).positions});
    }
    std::multiset<std::pair<std::set<ResourceTag>, std::vector<int>>> got;
    for (const auto& c : escandir::generate_candidates(gen::join(words), lexicon(), flat)) {
      got.insert({std::set<ResourceTag>(c.applied.begin(), c.applied.end()), c.scansion.pattern.positions});
    }
    ASSERT_EQ(got, want) << gen::join(words);
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

TEST(Candidates, OverflowSitesStillTriedAlone) {
  const std::string verse = "poeta y poesía de río a río en el país del oído";
  escandir::VerseOptions options;
  options.max_combined_sites = 2;
  const auto sites = escandir::ambiguity_sites(verse, lexicon(), options);
  ASSERT_GT(sites.size(), 2u);
  const auto c = escandir::generate_candidates(verse, lexicon(), options);
  for (const auto& s : sites) {
    EXPECT_TRUE(std::any_of(c.begin(), c.end(), [&](const escandir::Candidate& x) {
      return std::find(x.applied.begin(), x.applied.end(), s) != x.applied.end();
    })) << to_string(s.kind) << " " << s.word;
  }
  EXPECT_LE(c.size(), 4 + sites.size() - 2);
}

}  // namespace
