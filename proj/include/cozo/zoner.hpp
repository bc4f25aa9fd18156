#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cozo/actors.hpp"
#include "cozo/anaphora.hpp"
#include "cozo/parser.hpp"
#include "cozo/stream.hpp"
#include "cozo/tagger.hpp"

namespace cozo {

/// Maximal contiguous run of zoned sentence indices, inclusive ends.
struct ZoneSpan {
  int begin = 0;
  int end = 0;
};

struct ActorZone {
  std::vector<int> sentences;   // ascending, unique
  std::vector<ZoneSpan> spans;  // maximal contiguous runs over sentences
  bool open = false;
};

/// Per-actor zoned sentence sets. Indices only ever grow; spans are kept
/// consistent incrementally.
class ZoneSet {
 public:
  ZoneSet() = default;
  explicit ZoneSet(int actor_count) : zones_(actor_count) {}

  int actor_count() const { return static_cast<int>(zones_.size()); }
  const ActorZone& zone(int actor) const { return zones_[actor]; }

  /// Adds a sentence to an actor's zone (no-op if already present) and
  /// marks the zone open.
  void add(int actor, int sentence_index);

  void open_zone(int actor) { zones_[actor].open = true; }
  void close_zone(int actor) { zones_[actor].open = false; }
  void close_all();

 private:
  std::vector<ActorZone> zones_;
};

struct ModalValue {
  std::string value;
  long long count = 0;
};

struct ActorVariables {
  long long sentence_count = 0;
  long long token_count = 0;
  std::optional<ModalValue> most_occurring_word;
  std::optional<ModalValue> most_occurring_pattern;
  double extracted_quantity = 0.0;
};

struct ZoneVariables {
  std::vector<ActorVariables> per_actor;
};

/// Streaming accumulator behind the zone variables: word and pattern
/// frequencies per actor, fed one zoned sentence at a time so no sentence
/// data has to be retained.
class ZoneStatsAccumulator {
 public:
  ZoneStatsAccumulator() = default;
  explicit ZoneStatsAccumulator(int actor_count) : per_actor_(actor_count) {}

  void add_sentence(int actor, const Sentence& sentence,
                    const std::vector<SvoRelation>& relations,
                    const Lexicon& lexicon);

  /// Current cumulative variables; extracted_quantity uses the given total.
  ZoneVariables snapshot(long long total_sentences) const;

 private:
  struct Counts {
    long long sentence_count = 0;
    long long token_count = 0;
    std::map<std::string, long long> words;     // case-folded, non-stopword
    std::map<std::string, long long> patterns;  // relation pattern strings
  };
  std::vector<Counts> per_actor_;
};

/// Zones every sentence of a window. A sentence is zoned to actor A when
/// (a) A is mentioned, (b) a pronoun resolves to A, or (c) A's zone is open
/// and the sentence neither mentions another actor nor resolves a pronoun
/// to one. Zones open on (a)/(b) and close when a different actor takes a
/// sentence that A does not also qualify for. Returns the (actor, sentence
/// index) additions in processing order.
std::vector<std::pair<int, int>> zone_window(
    const TextWindow& window,
    const std::vector<std::vector<ActorTable::Mention>>& mentions_per_sentence,
    const std::vector<std::vector<Resolution>>& resolutions_per_sentence,
    ZoneSet& state);

/// Batch recomputation of zone variables from full document data.
/// The pipeline uses the accumulator instead; the two agree.
ZoneVariables compute_zone_variables(
    const ZoneSet& zones, const std::vector<Sentence>& sentences,
    const std::vector<std::vector<SvoRelation>>& relations,
    const Lexicon& lexicon, long long total_sentences);

/// Incremental, adaptive tree summarizing zones: root is the stream id,
/// one child per actor, one leaf per statistic (plus gender). Nodes are
/// only ever added; leaf values are overwritten with cumulative results.
class MindMap {
 public:
  struct Node {
    std::string name;
    std::optional<std::string> value;
    std::vector<Node> children;
  };

  MindMap() : root_{"stream", std::nullopt, {}} {}
  explicit MindMap(std::string stream_id) : root_{std::move(stream_id), std::nullopt, {}} {}

  void update(const ZoneVariables& variables, const ActorTable& actors);

  const Node& root() const { return root_; }
  size_t node_count() const;

  std::string to_dot() const;
  nlohmann::json to_json() const;

 private:
  Node root_;
};

/// Zone output document: {actor: {sentences, spans, variables}}.
nlohmann::json zones_to_json(const ZoneSet& zones, const ZoneVariables& variables,
                             const ActorTable& actors);

}  // namespace cozo
