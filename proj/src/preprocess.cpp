#include "cozo/preprocess.hpp"

#include <array>
#include <utility>

#include "internal.hpp"

namespace cozo {

using internal::is_alnum;
using internal::is_space;
using internal::is_upper;

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

namespace {

constexpr std::string_view kAbbreviations[] = {
    "mr.", "mrs.", "dr.", "prof.", "st.", "e.g.", "i.e.", "etc.",
};

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Characters that may trail the terminator and still belong to the sentence.
bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

// The word ending at and including text[dot] matches the abbreviation list.
bool ends_with_abbreviation(std::string_view text, size_t dot) {
  size_t start = dot;
  while (start > 0 && !is_space(text[start - 1])) --start;
  std::string word = internal::to_lower(text.substr(start, dot - start + 1));
  for (std::string_view abbr : kAbbreviations) {
    if (word == abbr) return true;
  }
  return false;
}

// End offset (one past the terminator run) of the sentence starting at
// `begin`, scanning normalized text.
size_t find_sentence_end(std::string_view text, size_t begin) {
  for (size_t i = begin; i < text.size(); ++i) {
    if (!is_terminator(text[i])) continue;
    if (text[i] == '.' && ends_with_abbreviation(text, i)) continue;
    size_t end = i + 1;
    while (end < text.size() && is_closer(text[end])) ++end;
    if (end >= text.size()) return end;
    if (text[end] != ' ') continue;  // mid-token punctuation
    size_t next = end + 1;
    if (next >= text.size() || is_upper(text[next])) return end;
  }
  return text.size();
}

}  // namespace

SentenceSegmenter::SentenceSegmenter(std::string normalized)
    : text_(std::move(normalized)) {}

std::optional<Sentence> SentenceSegmenter::next() {
  if (offset_ >= text_.size()) return std::nullopt;
  size_t end = find_sentence_end(text_, offset_);
  Sentence sentence(next_index_++, text_.substr(offset_, end - offset_));
  offset_ = end;
  if (offset_ < text_.size() && text_[offset_] == ' ') ++offset_;
  return sentence;
}

std::vector<Sentence> segment_sentences(std::string_view normalized) {
  SentenceSegmenter segmenter{std::string(normalized)};
  std::vector<Sentence> sentences;
  while (auto s = segmenter.next()) sentences.push_back(std::move(*s));
  return sentences;
}

namespace {

bool is_split_punct(char c) {
  switch (c) {
    case ',': case '.': case '!': case '?': case ';': case ':':
    case '"': case '\'': case '(': case ')':
      return true;
    default:
      return false;
  }
}

// Emits the tokens of one whitespace-delimited word: leading punctuation,
// the core, then trailing punctuation. A trailing apostrophe kept after a
// letter or digit stays part of the core ("Benz'").
void split_word(std::string_view word, std::vector<Token>& out) {
  size_t begin = 0;
  size_t end = word.size();

  std::vector<std::string> leading;
  while (begin < end && is_split_punct(word[begin])) {
    leading.emplace_back(1, word[begin]);
    ++begin;
  }

  std::vector<std::string> trailing;  // collected right-to-left
  while (end > begin) {
    char c = word[end - 1];
    if (!is_split_punct(c)) break;
    if (c == '\'' && end - 1 > begin && is_alnum(word[end - 2])) break;
    trailing.emplace_back(1, c);
    --end;
  }

  for (auto& p : leading) out.push_back(Token{std::move(p), 0, PosTag::UNTAGGED});
  if (end > begin) {
    out.push_back(Token{std::string(word.substr(begin, end - begin)), 0, PosTag::UNTAGGED});
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
    out.push_back(Token{std::move(*it), 0, PosTag::UNTAGGED});
  }
}

}  // namespace

Sentence tokenize(Sentence sentence) {
  sentence.tokens.clear();
  std::string_view text = sentence.text;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) split_word(text.substr(start, i - start), sentence.tokens);
  }
  for (size_t p = 0; p < sentence.tokens.size(); ++p) {
    sentence.tokens[p].position = static_cast<int>(p);
  }
  return sentence;
}

}  // namespace cozo
