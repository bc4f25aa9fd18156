#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cozo/text.hpp"

namespace cozo {

struct StreamConfig {
  int window_size = 10;          // sentences per window, >= 1
  bool carry_candidates = false; // keep resolver candidates across windows
};

/// A bounded batch of consecutive sentences; the unit of stream processing.
/// Every window except possibly the last holds exactly window_size
/// sentences.
struct TextWindow {
  int ordinal = 0;
  std::vector<Sentence> sentences;
};

/// Pull-based sentence stream cut into text windows. Single consumer; a
/// window's sentences are handed over by value and are not retrievable from
/// the stream again.
class SentenceStream {
 public:
  using Source = std::function<std::optional<Sentence>()>;

  SentenceStream(Source source, StreamConfig config);

  /// Next window of up to window_size sentences, or nullopt when the source
  /// is exhausted.
  std::optional<TextWindow> next_window();

  const StreamConfig& config() const { return config_; }

 private:
  Source source_;
  StreamConfig config_;
  int next_ordinal_ = 0;
  bool exhausted_ = false;
};

/// Source over an in-memory sentence list (testing convenience).
SentenceStream::Source make_vector_source(std::vector<Sentence> sentences);

}  // namespace cozo
