#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cozo/text.hpp"

namespace cozo {

/// Shallow subject-verb-object relation for one clause. Fields hold token
/// positions within the sentence; the pattern string reflects which parts
/// are present ("S-V-O", "S-V", "V-O", "V", "S", "NONE").
struct SvoRelation {
  int sentence_index = 0;
  std::optional<int> subject;
  std::optional<int> verb;
  std::optional<int> object;
  std::string pattern = "NONE";
};

/// Splits a tagged sentence into clauses (sentence start, and/or/but
/// followed later by a verb, commas followed by a verb-containing segment)
/// and extracts one relation per clause. Always returns at least one
/// relation.
std::vector<SvoRelation> extract_svo(const Sentence& sentence);

}  // namespace cozo
