#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cozo/actors.hpp"
#include "cozo/anaphora.hpp"
#include "cozo/tagger.hpp"

namespace cozo {

/// A marked character region [begin, end) of the plain (stripped,
/// normalized) text belonging to one actor.
struct GoldRegion {
  int actor = 0;
  size_t begin = 0;
  size_t end = 0;
};

struct GoldAnaphor {
  int sentence_index = 0;
  std::string surface;
  PronounCategory category = PronounCategory::SUBJECT_SINGULAR;
  std::string actor;
};

/// Parsed gold annotation: per-actor sentence index sets over the stripped
/// text, the marked regions, and (when a sidecar was supplied) the gold
/// anaphor list.
struct GoldAnnotation {
  std::vector<std::string> actor_names;           // first-seen spelling, in order
  std::vector<std::set<int>> sentences_per_actor; // aligned with actor_names
  std::vector<GoldRegion> regions;                // document order of opens
  std::vector<GoldAnaphor> anaphors;
  std::string plain_text;                         // normalized, markers removed
  int total_sentences = 0;

  int find_actor(std::string_view name) const;    // case-insensitive, -1
};

enum class GoldParseMode { LENIENT, STRICT };

/// Parses inline [Name] / [/Name] markers. Lenient mode (the default) also
/// accepts a repeated [Name] while Name's zone is open as its close, and
/// closes any zone still open at end of text. Strict mode requires exactly
/// balanced pairs and throws UNBALANCED_MARKERS otherwise. A sentence
/// belongs to an actor when its span overlaps a marked region. With an
/// allow-list, unknown marker names throw UNKNOWN_ACTOR.
GoldAnnotation parse_gold(std::string_view annotated,
                          GoldParseMode mode = GoldParseMode::LENIENT,
                          const std::vector<std::string>* allowed_actors = nullptr);

/// Anaphor sidecar: JSON array of {"sentence", "surface", "category", "actor"}.
std::vector<GoldAnaphor> gold_anaphors_from_json(std::string_view json_text);

/// Completeness: |auto n gold| / |gold|. Throws GOLD_EMPTY on an empty gold
/// set (undefined denominator).
double matching(const std::set<int>& auto_indices, const std::set<int>& gold_indices);

/// Correctness: |auto \ gold| / (total - |gold|). Throws DENOMINATOR_ZERO
/// when gold covers the whole text.
double error_rate(const std::set<int>& auto_indices, const std::set<int>& gold_indices,
                  int total_sentences);

/// A predicted resolution in evaluation form (actor names, not ids).
struct ResolvedAnaphor {
  int sentence_index = 0;
  int position = -1;
  std::string surface;
  PronounCategory category = PronounCategory::SUBJECT_SINGULAR;
  bool resolved = false;
  std::vector<std::string> actors;
};

std::vector<ResolvedAnaphor> to_resolved_anaphors(const std::vector<Resolution>& resolutions,
                                                  const ActorTable& actors);
std::vector<ResolvedAnaphor> resolved_anaphors_from_json(std::string_view json_text);
nlohmann::json resolved_anaphors_to_json(const std::vector<ResolvedAnaphor>& resolutions);

/// Correctly solved anaphors for (actor, category) over the gold count for
/// that pair. Gold entries and resolutions are matched by (sentence,
/// surface, category), duplicates pairing up in order. Throws
/// NO_GOLD_ANAPHORS when the gold list has no entry for the pair.
double anaphor_success_rate(const std::vector<ResolvedAnaphor>& resolutions,
                            const std::vector<GoldAnaphor>& gold_anaphors,
                            std::string_view actor, PronounCategory category);

struct ActorQuality {
  std::string actor;
  long long counted_sentences = 0;   // total sentences of the text
  long long gold_sentences = 0;      // manually zoned
  long long zoned_sentences = 0;     // zoned by the engine
  long long overlap_sentences = 0;   // |auto n gold|
  long long erroneous_sentences = 0; // |auto \ gold|
  std::optional<double> matching;
  std::optional<double> error_rate;
  std::map<PronounCategory, double> success_rates;
  std::map<PronounCategory, long long> gold_anaphor_counts;
  std::vector<std::string> notes;    // e.g. "GOLD_EMPTY"
};

struct QualityReport {
  int total_sentences = 0;
  std::vector<ActorQuality> per_actor;
  std::optional<double> avg_matching;    // macro average over scored actors
  std::optional<double> avg_error_rate;

  nlohmann::json to_json() const;
  std::string to_table(bool locale_comma = false) const;
};

/// Assembles per-actor matching/error-rate plus per-category success rates.
/// Component errors (empty gold, full-coverage gold, missing gold anaphors)
/// are recorded as notes on the affected actor without aborting the others.
QualityReport quality_report(const std::map<std::string, std::set<int>>& auto_zones,
                             const GoldAnnotation& gold, int total_sentences,
                             const std::vector<ResolvedAnaphor>& resolutions);

/// Rounds to two decimals and strips trailing zeros, the rendering used by
/// quality tables: 7.0/9.0 -> "0.78", 0.0 -> "0", 1.0 -> "1". With
/// locale_comma the decimal point renders as a comma ("0,78").
std::string format_ratio(double value, bool locale_comma = false);

}  // namespace cozo
