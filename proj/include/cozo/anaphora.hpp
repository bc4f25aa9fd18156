#pragma once

#include <deque>
#include <string>
#include <vector>

#include "cozo/actors.hpp"
#include "cozo/parser.hpp"
#include "cozo/stream.hpp"
#include "cozo/tagger.hpp"
#include "cozo/text.hpp"

namespace cozo {

/// One recorded actor mention, usable as a pronoun antecedent.
struct CandidateEntry {
  int actor = 0;
  int sentence_index = 0;
  int token_position = 0;  // first token of the mention
  bool was_subject = false;
};

/// Antecedent candidates scoped to the current text window (or carried
/// across windows when StreamConfig.carry_candidates is set). Entries are
/// kept most recent first. Pronouns themselves never enter the list.
class CandidateList {
 public:
  /// Appends one entry per actor mention in the sentence, recording whether
  /// the mention fills a subject slot of any of the sentence's relations.
  void update(const Sentence& sentence, const std::vector<SvoRelation>& relations,
              const ActorTable& actors);

  /// Same, with mentions already computed for the sentence.
  void update(const Sentence& sentence, const std::vector<SvoRelation>& relations,
              const std::vector<ActorTable::Mention>& mentions);

  /// Window-boundary reset: clears unless carry_candidates is set.
  void reset(const StreamConfig& config);

  const std::deque<CandidateEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::deque<CandidateEntry> entries_;
};

struct TokenRef {
  int sentence_index = 0;
  int position = 0;
  std::string surface;
};

struct Resolution {
  TokenRef pronoun;
  PronounCategory category = PronounCategory::SUBJECT_SINGULAR;
  std::vector<int> resolved_to;  // actor ids; singleton for singular categories
  bool resolved = false;         // UNRESOLVED is a value, not an error
};

/// Resolves one pronoun against the candidate list.
///
/// Singular categories scan most-recent-first among entries at or before
/// the pronoun and return the first gender-compatible actor (he/his/him
/// need MALE, she/her need FEMALE, UNSPECIFIED matches both); ties at equal
/// recency prefer subject mentions, then earlier actor declaration order.
/// PLURAL collects all distinct actors mentioned in the current and the
/// previous `plural_lookback` sentences. No compatible candidate leaves the
/// pronoun UNRESOLVED.
Resolution resolve(const TokenRef& pronoun, PronounCategory category,
                   const CandidateList& list, const ActorTable& actors,
                   int plural_lookback = 2);

}  // namespace cozo
