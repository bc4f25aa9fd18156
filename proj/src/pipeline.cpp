#include "cozo/pipeline.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "cozo/error.hpp"
#include "cozo/parser.hpp"
#include "cozo/preprocess.hpp"

namespace cozo {

namespace {

Lexicon load_lexicon(const RunConfig& config) {
  return config.lexicon_path ? Lexicon::from_file(*config.lexicon_path)
                             : Lexicon::builtin();
}

void validate(const RunConfig& config) {
  if (config.actors.empty()) {
    throw Error(ErrorCode::CONFIG_INVALID, "at least one actor is required");
  }
  if (config.stream.window_size < 1) {
    throw Error(ErrorCode::WINDOW_SIZE_INVALID,
                "window size must be >= 1, got " +
                    std::to_string(config.stream.window_size));
  }
  if (config.plural_lookback < 0) {
    throw Error(ErrorCode::CONFIG_INVALID, "plural lookback must be >= 0");
  }
}

}  // namespace

Engine::Engine(RunConfig config)
    : config_(std::move(config)),
      actors_((validate(config_), config_.actors)),
      lexicon_(load_lexicon(config_)) {}

Engine::Engine(RunConfig config, Lexicon lexicon)
    : config_(std::move(config)),
      actors_((validate(config_), config_.actors)),
      lexicon_(std::move(lexicon)) {}

PipelineResult Engine::run(const RawDocument& doc) const {
  PipelineResult result;
  result.mindmap = MindMap(doc.source_id.empty() ? "stream" : doc.source_id);

  // The segmenter owns the normalized text; sentence objects only exist
  // while their window is being processed.
  auto segmenter = std::make_shared<SentenceSegmenter>(normalize(doc.content));
  SentenceStream stream(
      [this, segmenter]() -> std::optional<Sentence> {
        auto sentence = segmenter->next();
        if (!sentence) return std::nullopt;
        return tag_sentence(tokenize(std::move(*sentence)), lexicon_);
      },
      config_.stream);

  CandidateList candidates;
  ZoneSet zones(actors_.size());
  ZoneStatsAccumulator stats(actors_.size());
  int total_sentences = 0;

  while (auto window = stream.next_window()) {
    result.window_count += 1;
    result.peak_window_sentences =
        std::max(result.peak_window_sentences, window->sentences.size());
    if (window->ordinal > 0) {
      candidates.reset(config_.stream);
      if (!config_.stream.carry_candidates) zones.close_all();
    }

    std::vector<std::vector<SvoRelation>> relations;
    std::vector<std::vector<ActorTable::Mention>> mentions;
    std::vector<std::vector<Resolution>> resolutions;
    relations.reserve(window->sentences.size());
    mentions.reserve(window->sentences.size());
    resolutions.reserve(window->sentences.size());

    for (const Sentence& sentence : window->sentences) {
      relations.push_back(extract_svo(sentence));
      mentions.push_back(actors_.find_mentions(sentence));
      candidates.update(sentence, relations.back(), mentions.back());
      std::vector<Resolution> sentence_resolutions;
      for (const Token& token : sentence.tokens) {
        auto category = pronoun_of_interest(token);
        if (!category) continue;
        TokenRef ref{sentence.index, token.position, token.surface};
        sentence_resolutions.push_back(resolve(ref, *category, candidates, actors_,
                                               config_.plural_lookback));
      }
      resolutions.push_back(std::move(sentence_resolutions));
      total_sentences = std::max(total_sentences, sentence.index + 1);
    }

    int base = window->sentences.front().index;
    auto additions = zone_window(*window, mentions, resolutions, zones);
    for (const auto& [actor, index] : additions) {
      stats.add_sentence(actor, window->sentences[index - base], relations[index - base],
                         lexicon_);
    }
    for (auto& sentence_resolutions : resolutions) {
      for (Resolution& resolution : sentence_resolutions) {
        result.resolutions.push_back(std::move(resolution));
      }
    }
    result.mindmap.update(stats.snapshot(total_sentences), actors_);
  }

  result.total_sentences = total_sentences;
  result.variables = stats.snapshot(total_sentences);
  if (result.window_count == 0) result.mindmap.update(result.variables, actors_);
  result.zones = std::move(zones);
  return result;
}

PipelineResult run(const RawDocument& doc, const RunConfig& config) {
  return Engine(config).run(doc);
}

}  // namespace cozo
