#include "cozo/parser.hpp"

#include <utility>

#include "internal.hpp"

namespace cozo {

namespace {

bool noun_like(PosTag tag) {
  return tag == PosTag::PROPER_NOUN || tag == PosTag::NOUN || tag == PosTag::PRONOUN;
}

// Tokens an object scan steps over without giving up.
bool object_skippable(PosTag tag) {
  switch (tag) {
    case PosTag::DETERMINER:
    case PosTag::ADJECTIVE:
    case PosTag::ADVERB:
    case PosTag::PREPOSITION:
    case PosTag::POSSESSIVE_PRONOUN:
    case PosTag::NUMBER:
    case PosTag::OTHER:
      return true;
    default:
      return false;
  }
}

bool coordinating(const Token& token) {
  if (token.tag != PosTag::CONJUNCTION) return false;
  std::string lower = internal::to_lower(token.surface);
  return lower == "and" || lower == "or" || lower == "but";
}

bool verb_after(const std::vector<Token>& tokens, size_t from) {
  for (size_t i = from + 1; i < tokens.size(); ++i) {
    if (tokens[i].tag == PosTag::VERB) return true;
  }
  return false;
}

// Head (last token) of the first consecutive noun-like run in [begin, end).
std::optional<int> first_noun_group_head(const std::vector<Token>& tokens,
                                         size_t begin, size_t end) {
  for (size_t i = begin; i < end; ++i) {
    if (!noun_like(tokens[i].tag)) continue;
    size_t head = i;
    while (head + 1 < end && noun_like(tokens[head + 1].tag)) ++head;
    return tokens[head].position;
  }
  return std::nullopt;
}

SvoRelation extract_clause(const Sentence& sentence, size_t begin, size_t end) {
  const auto& tokens = sentence.tokens;
  SvoRelation relation;
  relation.sentence_index = sentence.index;

  size_t first_verb = end;
  for (size_t i = begin; i < end; ++i) {
    if (tokens[i].tag == PosTag::VERB) {
      first_verb = i;
      break;
    }
  }

  relation.subject = first_noun_group_head(tokens, begin, first_verb);
  if (first_verb < end) {
    relation.verb = tokens[first_verb].position;
    for (size_t i = first_verb + 1; i < end; ++i) {
      if (noun_like(tokens[i].tag)) {
        size_t head = i;
        while (head + 1 < end && noun_like(tokens[head + 1].tag)) ++head;
        relation.object = tokens[head].position;
        break;
      }
      if (!object_skippable(tokens[i].tag)) break;
    }
  }

  std::string pattern;
  if (relation.subject) pattern += "S";
  if (relation.verb) pattern += pattern.empty() ? "V" : "-V";
  if (relation.object) pattern += pattern.empty() ? "O" : "-O";
  relation.pattern = pattern.empty() ? "NONE" : pattern;
  return relation;
}

}  // namespace

std::vector<SvoRelation> extract_svo(const Sentence& sentence) {
  const auto& tokens = sentence.tokens;
  std::vector<SvoRelation> relations;
  size_t begin = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    bool boundary = (tokens[i].surface == "," && tokens[i].tag == PosTag::PUNCT) ||
                    coordinating(tokens[i]);
    if (boundary && verb_after(tokens, i)) {
      relations.push_back(extract_clause(sentence, begin, i));
      begin = i + 1;
    }
  }
  relations.push_back(extract_clause(sentence, begin, tokens.size()));
  return relations;
}

}  // namespace cozo
