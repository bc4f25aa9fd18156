#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cozo/actors.hpp"
#include "cozo/anaphora.hpp"
#include "cozo/eval.hpp"
#include "cozo/stream.hpp"
#include "cozo/tagger.hpp"
#include "cozo/zoner.hpp"

namespace cozo {

struct RunConfig {
  std::vector<Actor> actors;
  StreamConfig stream;
  int plural_lookback = 2;
  std::optional<std::string> lexicon_path;  // unset: built-in lexicon
};

struct PipelineResult {
  ZoneSet zones;
  ZoneVariables variables;
  MindMap mindmap;
  std::vector<Resolution> resolutions;
  int total_sentences = 0;
  int window_count = 0;
  size_t peak_window_sentences = 0;
};

/// A configured pipeline: actor table, lexicon and stream settings.
/// Immutable after construction; run() keeps all mutable state local, so
/// one engine can process documents from several threads at once.
class Engine {
 public:
  explicit Engine(RunConfig config);
  Engine(RunConfig config, Lexicon lexicon);

  /// Full pass: normalize, segment, tokenize, tag, window, parse, resolve,
  /// zone, statistics, mind-map. Windows are processed strictly in order
  /// and their sentence data is discarded afterwards; only results persist.
  PipelineResult run(const RawDocument& doc) const;

  const ActorTable& actors() const { return actors_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const RunConfig& config() const { return config_; }

 private:
  RunConfig config_;
  ActorTable actors_;
  Lexicon lexicon_;
};

/// One-shot convenience wrapper around Engine.
PipelineResult run(const RawDocument& doc, const RunConfig& config);

}  // namespace cozo
