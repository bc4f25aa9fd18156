#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cozo/text.hpp"

namespace cozo {

enum class Gender { MALE, FEMALE, UNSPECIFIED };

const char* gender_name(Gender gender);

/// A zoning target: canonical name, gender used for pronoun resolution, and
/// alternative surface forms.
struct Actor {
  std::string name;
  Gender gender = Gender::UNSPECIFIED;
  std::vector<std::string> aliases;
};

/// Validated, immutable actor set with token-level mention scanning.
/// Names and aliases are matched case-insensitively; multiword names match
/// as consecutive token sequences; possessive forms ("Benz'", "Benz's")
/// match the base name.
class ActorTable {
 public:
  explicit ActorTable(std::vector<Actor> actors);

  /// Parses the actor configuration format: a JSON array of
  /// {"name": str, "gender": "male"|"female"|"unspecified", "aliases": [str]}.
  static ActorTable from_json(std::string_view json_text);

  const std::vector<Actor>& actors() const { return actors_; }
  int size() const { return static_cast<int>(actors_.size()); }
  const Actor& actor(int id) const { return actors_[id]; }

  /// Actor id for a name or alias (case-insensitive), or -1.
  int find(std::string_view name) const;

  struct Mention {
    int actor = 0;   // actor id (declaration order index)
    int begin = 0;   // first token position of the mention
    int length = 1;  // tokens covered
  };

  /// All actor mentions in a tokenized sentence, ordered by begin position.
  /// Overlapping matches for distinct actors are all reported; for one
  /// actor, a mention suppresses further matches inside its own span.
  std::vector<Mention> find_mentions(const Sentence& sentence) const;

 private:
  std::vector<Actor> actors_;
  struct Pattern {
    std::vector<std::string> tokens;  // lowercased alias token sequence
    int actor = 0;
  };
  std::vector<Pattern> patterns_;  // longest first
};

}  // namespace cozo
