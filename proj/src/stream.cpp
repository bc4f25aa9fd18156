#include "cozo/stream.hpp"

#include <memory>
#include <string>
#include <utility>

#include "cozo/error.hpp"

namespace cozo {

SentenceStream::SentenceStream(Source source, StreamConfig config)
    : source_(std::move(source)), config_(config) {
  if (config_.window_size < 1) {
    throw Error(ErrorCode::WINDOW_SIZE_INVALID,
                "window size must be >= 1, got " + std::to_string(config_.window_size));
  }
}

std::optional<TextWindow> SentenceStream::next_window() {
  if (exhausted_) return std::nullopt;
  TextWindow window;
  window.ordinal = next_ordinal_;
  window.sentences.reserve(static_cast<size_t>(config_.window_size));
  while (static_cast<int>(window.sentences.size()) < config_.window_size) {
    auto sentence = source_();
    if (!sentence) {
      exhausted_ = true;
      break;
    }
    window.sentences.push_back(std::move(*sentence));
  }
  if (window.sentences.empty()) return std::nullopt;
  ++next_ordinal_;
  return window;
}

SentenceStream::Source make_vector_source(std::vector<Sentence> sentences) {
  struct State {
    std::vector<Sentence> sentences;
    size_t next = 0;
  };
  auto state = std::make_shared<State>(State{std::move(sentences), 0});
  return [state]() -> std::optional<Sentence> {
    if (state->next >= state->sentences.size()) return std::nullopt;
    return std::move(state->sentences[state->next++]);
  };
}

}  // namespace cozo
