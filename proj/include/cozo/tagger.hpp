#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cozo/text.hpp"

namespace cozo {

/// Pronoun categories tracked by the resolver, keyed to the seven surface
/// forms he/she (SUBJECT_SINGULAR), his/him/her (OBJECT_POSSESSIVE) and
/// they/their (PLURAL).
enum class PronounCategory {
  SUBJECT_SINGULAR,
  OBJECT_POSSESSIVE,
  PLURAL,
};

const char* pronoun_category_name(PronounCategory category);
const char* pronoun_category_display(PronounCategory category);  // "he/she" etc.
std::optional<PronounCategory> pronoun_category_from_name(std::string_view name);

constexpr PronounCategory kAllPronounCategories[] = {
    PronounCategory::SUBJECT_SINGULAR,
    PronounCategory::OBJECT_POSSESSIVE,
    PronounCategory::PLURAL,
};

/// Closed-class word list plus ordered suffix rules, loaded from a
/// tab-separated data file (or the built-in copy). Lookup is
/// case-insensitive; the word list also doubles as the stopword list for
/// zone statistics.
class Lexicon {
 public:
  static Lexicon builtin();
  static Lexicon from_file(const std::string& path);
  static Lexicon from_string(std::string_view data,
                             const std::string& origin = "<string>");

  std::optional<PosTag> lookup(std::string_view surface) const;

  /// True for lexicon entries tagged with a closed class (everything except
  /// NOUN and ADJECTIVE entries). Case-insensitive.
  bool is_stopword(std::string_view surface) const;

  const std::vector<std::pair<std::string, PosTag>>& suffix_rules() const {
    return suffix_rules_;
  }
  size_t entry_count() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, PosTag> entries_;
  std::vector<std::pair<std::string, PosTag>> suffix_rules_;
};

/// Text of the built-in lexicon (same content as data/lexicon.tsv).
std::string_view builtin_lexicon_text();

/// Assigns a tag to every token. Priority: punctuation, lexicon match,
/// capitalization, suffix rules, numerals, NOUN fallback.
Sentence tag_sentence(Sentence sentence, const Lexicon& lexicon);

/// Category for exactly the seven pronouns of interest, by surface form
/// (case-insensitive); nullopt for everything else, including "it".
std::optional<PronounCategory> pronoun_of_interest(const Token& token);
std::optional<PronounCategory> pronoun_of_interest(std::string_view surface);

}  // namespace cozo
