#include "cozo/tagger.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "cozo/error.hpp"
#include "internal.hpp"

namespace cozo {

using internal::is_digit;
using internal::is_upper;
using internal::to_lower;
using internal::trim;

const char* pronoun_category_name(PronounCategory category) {
  switch (category) {
    case PronounCategory::SUBJECT_SINGULAR: return "subject_singular";
    case PronounCategory::OBJECT_POSSESSIVE: return "object_possessive";
    case PronounCategory::PLURAL: return "plural";
  }
  return "unknown";
}

const char* pronoun_category_display(PronounCategory category) {
  switch (category) {
    case PronounCategory::SUBJECT_SINGULAR: return "he/she";
    case PronounCategory::OBJECT_POSSESSIVE: return "his/him/her";
    case PronounCategory::PLURAL: return "they/their";
  }
  return "unknown";
}

std::optional<PronounCategory> pronoun_category_from_name(std::string_view name) {
  for (PronounCategory c : kAllPronounCategories) {
    if (name == pronoun_category_name(c)) return c;
  }
  return std::nullopt;
}

Lexicon Lexicon::from_string(std::string_view data, const std::string& origin) {
  Lexicon lexicon;
  std::istringstream in{std::string(data)};
  std::string line;
  int line_no = 0;
  bool suffix_section = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view entry = trim(line);
    if (entry.empty()) continue;
    if (entry[0] == '#') {
      if (entry == "#SUFFIX") suffix_section = true;
      continue;
    }
    size_t tab = entry.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::PARSE_ERROR,
                  origin + ":" + std::to_string(line_no) + ": expected surface<TAB>TAG");
    }
    std::string_view surface = trim(entry.substr(0, tab));
    std::string_view tag_name = trim(entry.substr(tab + 1));
    auto tag = pos_tag_from_name(tag_name);
    if (surface.empty() || !tag) {
      throw Error(ErrorCode::PARSE_ERROR,
                  origin + ":" + std::to_string(line_no) + ": bad lexicon entry '" +
                      std::string(entry) + "'");
    }
    if (suffix_section) {
      if (surface[0] != '-' || surface.size() < 2) {
        throw Error(ErrorCode::PARSE_ERROR,
                    origin + ":" + std::to_string(line_no) +
                        ": suffix rules start with '-', got '" + std::string(surface) + "'");
      }
      lexicon.suffix_rules_.emplace_back(to_lower(surface.substr(1)), *tag);
    } else {
      lexicon.entries_[to_lower(surface)] = *tag;
    }
  }
  return lexicon;
}

Lexicon Lexicon::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IO_ERROR, "cannot read lexicon file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_string(buffer.str(), path);
}

Lexicon Lexicon::builtin() {
  return from_string(builtin_lexicon_text(), "<builtin>");
}

std::optional<PosTag> Lexicon::lookup(std::string_view surface) const {
  auto it = entries_.find(to_lower(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_stopword(std::string_view surface) const {
  auto tag = lookup(surface);
  return tag && *tag != PosTag::NOUN && *tag != PosTag::ADJECTIVE;
}

namespace {

bool all_punctuation(std::string_view surface) {
  if (surface.empty()) return false;
  for (char c : surface) {
    unsigned char u = static_cast<unsigned char>(c);
    bool punct = (u >= '!' && u <= '/') || (u >= ':' && u <= '@') ||
                 (u >= '[' && u <= '`') || (u >= '{' && u <= '~');
    if (!punct) return false;
  }
  return true;
}

bool purely_numeric(std::string_view surface) {
  bool digit_seen = false;
  for (char c : surface) {
    if (is_digit(c)) {
      digit_seen = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit_seen;
}

// Shortest stem a suffix rule may leave behind; keeps words such as "bed"
// or "wing" from matching -ed / -ing.
constexpr size_t kMinStem = 2;

PosTag classify(const Token& token, const Lexicon& lexicon) {
  const std::string& surface = token.surface;
  if (all_punctuation(surface)) return PosTag::PUNCT;
  if (auto tag = lexicon.lookup(surface)) return *tag;
  if (is_upper(surface[0])) return PosTag::PROPER_NOUN;
  std::string lower = to_lower(surface);
  for (const auto& [suffix, tag] : lexicon.suffix_rules()) {
    if (lower.size() >= suffix.size() + kMinStem &&
        lower.compare(lower.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return tag;
    }
  }
  if (purely_numeric(surface)) return PosTag::NUMBER;
  return PosTag::NOUN;
}

}  // namespace

Sentence tag_sentence(Sentence sentence, const Lexicon& lexicon) {
  for (Token& token : sentence.tokens) token.tag = classify(token, lexicon);
  return sentence;
}

std::optional<PronounCategory> pronoun_of_interest(std::string_view surface) {
  std::string lower = to_lower(surface);
  if (lower == "he" || lower == "she") return PronounCategory::SUBJECT_SINGULAR;
  if (lower == "his" || lower == "him" || lower == "her")
    return PronounCategory::OBJECT_POSSESSIVE;
  if (lower == "they" || lower == "their") return PronounCategory::PLURAL;
  return std::nullopt;
}

std::optional<PronounCategory> pronoun_of_interest(const Token& token) {
  return pronoun_of_interest(token.surface);
}

}  // namespace cozo
