#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cozo/text.hpp"

namespace cozo {

/// Collapses every whitespace run (spaces, tabs, line and paragraph breaks)
/// to a single space and trims leading/trailing whitespace. All other
/// characters pass through unchanged. Idempotent.
std::string normalize(std::string_view text);

/// Incremental sentence segmenter over normalized text. Yields one sentence
/// at a time so a caller never has to hold the whole document as sentence
/// objects. Sentences end at . ! ? followed by whitespace and an uppercase
/// letter, or at end of text; a fixed abbreviation list (Mr., Mrs., Dr.,
/// Prof., St., e.g., i.e., etc.) never terminates a sentence.
class SentenceSegmenter {
 public:
  explicit SentenceSegmenter(std::string normalized);

  /// Next sentence (tokens not yet populated), or nullopt when exhausted.
  std::optional<Sentence> next();

 private:
  std::string text_;
  size_t offset_ = 0;
  int next_index_ = 0;
};

/// Batch segmentation; equivalent to draining a SentenceSegmenter.
std::vector<Sentence> segment_sentences(std::string_view normalized);

/// Splits sentence text on whitespace, then peels leading/trailing
/// punctuation (, . ! ? ; : " ' ( )) into separate tokens. A trailing
/// apostrophe directly after a letter or digit stays attached, so
/// possessives such as "Benz'" remain one token. Internal apostrophes and
/// hyphens are preserved.
Sentence tokenize(Sentence sentence);

}  // namespace cozo
