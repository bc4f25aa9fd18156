#include "cozo/anaphora.hpp"

#include <algorithm>
#include <set>

#include "internal.hpp"

namespace cozo {

void CandidateList::update(const Sentence& sentence,
                           const std::vector<SvoRelation>& relations,
                           const ActorTable& actors) {
  update(sentence, relations, actors.find_mentions(sentence));
}

void CandidateList::update(const Sentence& sentence,
                           const std::vector<SvoRelation>& relations,
                           const std::vector<ActorTable::Mention>& mentions) {
  for (const auto& mention : mentions) {
    bool was_subject = false;
    for (const auto& relation : relations) {
      if (relation.subject && *relation.subject >= mention.begin &&
          *relation.subject < mention.begin + mention.length) {
        was_subject = true;
        break;
      }
    }
    entries_.push_front(CandidateEntry{mention.actor, sentence.index,
                                       mention.begin, was_subject});
  }
}

void CandidateList::reset(const StreamConfig& config) {
  if (!config.carry_candidates) entries_.clear();
}

namespace {

enum class GenderNeed { MALE, FEMALE, ANY };

GenderNeed gender_need(std::string_view surface) {
  std::string lower = internal::to_lower(surface);
  if (lower == "he" || lower == "his" || lower == "him") return GenderNeed::MALE;
  if (lower == "she" || lower == "her") return GenderNeed::FEMALE;
  return GenderNeed::ANY;
}

bool agrees(GenderNeed need, Gender gender) {
  if (gender == Gender::UNSPECIFIED) return true;
  switch (need) {
    case GenderNeed::MALE: return gender == Gender::MALE;
    case GenderNeed::FEMALE: return gender == Gender::FEMALE;
    case GenderNeed::ANY: return true;
  }
  return true;
}

bool at_or_before(const CandidateEntry& entry, const TokenRef& pronoun) {
  if (entry.sentence_index != pronoun.sentence_index) {
    return entry.sentence_index < pronoun.sentence_index;
  }
  return entry.token_position <= pronoun.position;
}

// Most recent first; equally recent entries prefer subject mentions, then
// earlier actor declaration order.
bool more_recent(const CandidateEntry& a, const CandidateEntry& b) {
  if (a.sentence_index != b.sentence_index) return a.sentence_index > b.sentence_index;
  if (a.token_position != b.token_position) return a.token_position > b.token_position;
  if (a.was_subject != b.was_subject) return a.was_subject;
  return a.actor < b.actor;
}

}  // namespace

Resolution resolve(const TokenRef& pronoun, PronounCategory category,
                   const CandidateList& list, const ActorTable& actors,
                   int plural_lookback) {
  Resolution resolution;
  resolution.pronoun = pronoun;
  resolution.category = category;

  if (category == PronounCategory::PLURAL) {
    std::set<int> group;
    for (const auto& entry : list.entries()) {
      if (!at_or_before(entry, pronoun)) continue;
      if (entry.sentence_index < pronoun.sentence_index - plural_lookback) continue;
      group.insert(entry.actor);
    }
    if (!group.empty()) {
      resolution.resolved_to.assign(group.begin(), group.end());
      resolution.resolved = true;
    }
    return resolution;
  }

  GenderNeed need = gender_need(pronoun.surface);
  std::vector<CandidateEntry> eligible;
  for (const auto& entry : list.entries()) {
    if (at_or_before(entry, pronoun)) eligible.push_back(entry);
  }
  std::stable_sort(eligible.begin(), eligible.end(), more_recent);
  for (const auto& entry : eligible) {
    if (agrees(need, actors.actor(entry.actor).gender)) {
      resolution.resolved_to.push_back(entry.actor);
      resolution.resolved = true;
      break;
    }
  }
  return resolution;
}

}  // namespace cozo
