#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cozo {

// Part-of-speech tags assigned by the tagger. UNTAGGED marks tokens that
// have not been through tag_sentence() yet.
enum class PosTag {
  UNTAGGED,
  PROPER_NOUN,
  NOUN,
  VERB,
  PRONOUN,
  POSSESSIVE_PRONOUN,
  DETERMINER,
  ADJECTIVE,
  ADVERB,
  PREPOSITION,
  CONJUNCTION,
  NUMBER,
  PUNCT,
  OTHER,
};

const char* pos_tag_name(PosTag tag);
std::optional<PosTag> pos_tag_from_name(std::string_view name);

struct Token {
  std::string surface;
  int position = 0;
  PosTag tag = PosTag::UNTAGGED;
};

/// One segmented sentence. Instances are counted (see diag below) so the
/// streaming memory contract can be checked against real object lifetimes.
struct Sentence {
  Sentence();
  Sentence(int index, std::string text, std::vector<Token> tokens = {});
  Sentence(const Sentence& other);
  Sentence(Sentence&& other) noexcept;
  Sentence& operator=(const Sentence& other);
  Sentence& operator=(Sentence&& other) noexcept;
  ~Sentence();

  int index = 0;
  std::string text;
  std::vector<Token> tokens;
};

struct RawDocument {
  std::string content;
  std::string source_id;
};

namespace diag {
// Live count of Sentence objects and the high-water mark since the last
// reset_peak(). Used by tests to verify that window processing retains
// O(window_size) sentence data.
long long live_sentences();
long long peak_live_sentences();
void reset_peak();
}  // namespace diag

}  // namespace cozo
