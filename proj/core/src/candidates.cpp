#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

#include "escandir/verse.hpp"
#include "verse_internal.hpp"

namespace escandir {

namespace detail {

namespace {

int kind_rank(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::dialefa: return 0;
    case ResourceKind::dieresis: return 1;
    case ResourceKind::syneresis: return 2;
    default: return 3;
  }
}

}  // namespace

std::vector<ResourceTag> sites_of(const PreparedVerse& prep) {
  std::vector<ResourceTag> sites;
  for (std::size_t w = 0; w < prep.scans.size(); ++w) {
    const int word = static_cast<int>(w);
    const auto& scan = prep.scans[w];
    if (w + 1 < prep.scans.size() && prep.synalepha_possible[w]) {
      sites.push_back({ResourceKind::dialefa, word, scan.syllable_count});
    }
    for (int k : scan.diphthong_sites) sites.push_back({ResourceKind::dieresis, word, k});
    for (int k : scan.hiatus_sites) sites.push_back({ResourceKind::syneresis, word, k});
  }
  std::stable_sort(sites.begin(), sites.end(), [&](const ResourceTag& a, const ResourceTag& b) {
    const int pa = site_position(prep, a);
    const int pb = site_position(prep, b);
    if (pa != pb) return pa < pb;
    return kind_rank(a.kind) < kind_rank(b.kind);
  });
  return sites;
}

int site_position(const PreparedVerse& prep, const ResourceTag& site) {
  return prep.default_positions.at(site.word).at(site.nucleus - 1);
}

}  // namespace detail

namespace {

// Metric effect of a site on its own: a dialefa or dieresis adds a position,
// a syneresis removes one.
int delta_of(const ResourceTag& tag) { return tag.kind == ResourceKind::syneresis ? -1 : 1; }

Candidate make_candidate(const detail::PreparedVerse& prep, std::vector<ResourceTag> applied,
                         const VerseOptions& options) {
  Candidate candidate;
  candidate.scansion = detail::scan_prepared(prep, applied, true, options);
  for (const auto& tag : applied) candidate.site_positions.push_back(detail::site_position(prep, tag));
  std::sort(candidate.site_positions.begin(), candidate.site_positions.end());
  candidate.applied = std::move(applied);
  return candidate;
}

bool any_conflict(const std::vector<ResourceTag>& tags) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    for (std::size_t j = i + 1; j < tags.size(); ++j) {
      if (resources_conflict(tags[i], tags[j])) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ResourceTag> ambiguity_sites(std::string_view verse, const LexiconConfig& lexicon,
                                         const VerseOptions& options) {
  return detail::sites_of(detail::prepare(verse, lexicon, options));
}

bool resources_conflict(const ResourceTag& a, const ResourceTag& b) {
  if (a.word != b.word) return false;
  auto span = [](const ResourceTag& t) {
    return std::pair{t.nucleus, t.kind == ResourceKind::syneresis ? t.nucleus + 1 : t.nucleus};
  };
  const auto [a0, a1] = span(a);
  const auto [b0, b1] = span(b);
  return a0 <= b1 && b0 <= a1;
}

std::vector<Candidate> generate_candidates(std::string_view verse, const LexiconConfig& lexicon,
                                           const VerseOptions& options) {
  const auto prep = detail::prepare(verse, lexicon, options);
  auto sites = detail::sites_of(prep);
  const auto cap = static_cast<std::size_t>(std::clamp(options.max_combined_sites, 0, 20));

  std::vector<ResourceTag> singles;
  if (sites.size() > cap) {
    if (!options.target_measures.empty()) {
      const int base = detail::scan_prepared(prep, {}, true, options).measure;
      const int target = *std::min_element(
          options.target_measures.begin(), options.target_measures.end(),
          [&](int a, int b) { return std::abs(a - base) < std::abs(b - base); });
      const int direction = (target > base) - (target < base);
      std::stable_partition(sites.begin(), sites.end(),
                            [&](const ResourceTag& t) { return direction != 0 && delta_of(t) == direction; });
    }
    singles.assign(sites.begin() + static_cast<std::ptrdiff_t>(cap), sites.end());
    sites.resize(cap);
  }

  std::vector<Candidate> candidates;
  const std::uint32_t subsets = 1u << sites.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::vector<ResourceTag> applied;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      if (mask & (1u << i)) applied.push_back(sites[i]);
    }
    if (any_conflict(applied)) continue;
    candidates.push_back(make_candidate(prep, std::move(applied), options));
  }
  for (const auto& tag : singles) candidates.push_back(make_candidate(prep, {tag}, options));
  return candidates;
}

VerseScansion resolve_ambiguity(std::vector<Candidate> candidates, const std::vector<int>& target_measures,
                                const Catalog& catalog, const VerseOptions& options) {
  if (candidates.empty()) throw std::invalid_argument("no candidates to resolve");

  for (auto& c : candidates) {
    auto& s = c.scansion;
    const auto types = catalog.lookup(s.measure);
    s.match = match_pattern(s.pattern, types);
    c.score.measure_conformity = target_measures.empty() ||
                                 std::find(target_measures.begin(), target_measures.end(), s.measure) !=
                                     target_measures.end();
    c.score.coincidence_ratio = s.match.coincidence_ratio;
    c.score.resource_penalty = -static_cast<int>(c.applied.size());
  }

  auto rank_of = [&](ResourceKind kind) {
    const auto& order = options.resource_order;
    return static_cast<int>(std::find(order.begin(), order.end(), kind) - order.begin());
  };
  auto better = [&](const Candidate& a, const Candidate& b) {
    if (a.score.measure_conformity != b.score.measure_conformity) return a.score.measure_conformity;
    if (a.score.coincidence_ratio != b.score.coincidence_ratio) {
      return a.score.coincidence_ratio > b.score.coincidence_ratio;
    }
    if (a.score.resource_penalty != b.score.resource_penalty) return a.score.resource_penalty > b.score.resource_penalty;
    if (a.site_positions != b.site_positions) return a.site_positions < b.site_positions;
    std::vector<int> ra;
    std::vector<int> rb;
    for (const auto& t : a.applied) ra.push_back(rank_of(t.kind));
    for (const auto& t : b.applied) rb.push_back(rank_of(t.kind));
    return ra < rb;
  };

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (better(candidates[i], candidates[best])) best = i;
  }
  VerseScansion result = std::move(candidates[best].scansion);
  if (!result.match.matched_type) result.flags.emplace_back("no_canonical_match");
  return result;
}

VerseScansion analyze_verse(std::string_view verse, const LexiconConfig& lexicon, const Catalog& catalog,
                            const std::vector<int>& target_measures, const VerseOptions& options) {
  VerseOptions targeted = options;
  targeted.target_measures = target_measures;
  return resolve_ambiguity(generate_candidates(verse, lexicon, targeted), target_measures, catalog, targeted);
}

}  // namespace escandir
