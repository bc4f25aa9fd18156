#include "cozo/text.hpp"

#include <atomic>
#include <utility>

namespace cozo {

namespace {

std::atomic<long long> g_live_sentences{0};
std::atomic<long long> g_peak_live_sentences{0};

void count_up() {
  long long live = g_live_sentences.fetch_add(1, std::memory_order_relaxed) + 1;
  long long peak = g_peak_live_sentences.load(std::memory_order_relaxed);
  while (live > peak &&
         !g_peak_live_sentences.compare_exchange_weak(peak, live, std::memory_order_relaxed)) {
  }
}

void count_down() { g_live_sentences.fetch_sub(1, std::memory_order_relaxed); }

}  // namespace

Sentence::Sentence() { count_up(); }

Sentence::Sentence(int index_, std::string text_, std::vector<Token> tokens_)
    : index(index_), text(std::move(text_)), tokens(std::move(tokens_)) {
  count_up();
}

Sentence::Sentence(const Sentence& other)
    : index(other.index), text(other.text), tokens(other.tokens) {
  count_up();
}

Sentence::Sentence(Sentence&& other) noexcept
    : index(other.index), text(std::move(other.text)), tokens(std::move(other.tokens)) {
  count_up();
}

Sentence& Sentence::operator=(const Sentence& other) = default;
Sentence& Sentence::operator=(Sentence&& other) noexcept = default;

Sentence::~Sentence() { count_down(); }

namespace diag {

long long live_sentences() { return g_live_sentences.load(std::memory_order_relaxed); }

long long peak_live_sentences() {
  return g_peak_live_sentences.load(std::memory_order_relaxed);
}

void reset_peak() {
  g_peak_live_sentences.store(g_live_sentences.load(std::memory_order_relaxed),
                              std::memory_order_relaxed);
}

}  // namespace diag

const char* pos_tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::UNTAGGED: return "UNTAGGED";
    case PosTag::PROPER_NOUN: return "PROPER_NOUN";
    case PosTag::NOUN: return "NOUN";
    case PosTag::VERB: return "VERB";
    case PosTag::PRONOUN: return "PRONOUN";
    case PosTag::POSSESSIVE_PRONOUN: return "POSSESSIVE_PRONOUN";
    case PosTag::DETERMINER: return "DETERMINER";
    case PosTag::ADJECTIVE: return "ADJECTIVE";
    case PosTag::ADVERB: return "ADVERB";
    case PosTag::PREPOSITION: return "PREPOSITION";
    case PosTag::CONJUNCTION: return "CONJUNCTION";
    case PosTag::NUMBER: return "NUMBER";
    case PosTag::PUNCT: return "PUNCT";
    case PosTag::OTHER: return "OTHER";
  }
  return "UNTAGGED";
}

std::optional<PosTag> pos_tag_from_name(std::string_view name) {
  static const std::pair<std::string_view, PosTag> kNames[] = {
      {"PROPER_NOUN", PosTag::PROPER_NOUN},
      {"NOUN", PosTag::NOUN},
      {"VERB", PosTag::VERB},
      {"PRONOUN", PosTag::PRONOUN},
      {"POSSESSIVE_PRONOUN", PosTag::POSSESSIVE_PRONOUN},
      {"DETERMINER", PosTag::DETERMINER},
      {"ADJECTIVE", PosTag::ADJECTIVE},
      {"ADVERB", PosTag::ADVERB},
      {"PREPOSITION", PosTag::PREPOSITION},
      {"CONJUNCTION", PosTag::CONJUNCTION},
      {"NUMBER", PosTag::NUMBER},
      {"PUNCT", PosTag::PUNCT},
      {"OTHER", PosTag::OTHER},
  };
  for (const auto& [n, tag] : kNames) {
    if (n == name) return tag;
  }
  return std::nullopt;
}

}  // namespace cozo
