#include "cozo/actors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "json.hpp"

#include "cozo/error.hpp"
#include "internal.hpp"

namespace cozo {

using internal::to_lower;

const char* gender_name(Gender gender) {
  switch (gender) {
    case Gender::MALE: return "male";
    case Gender::FEMALE: return "female";
    case Gender::UNSPECIFIED: return "unspecified";
  }
  return "unspecified";
}

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) words.push_back(to_lower(word));
  return words;
}

// A sentence token matches a pattern token exactly, or as its possessive
// form ("benz'" / "benz's" match "benz") when the pattern token is last.
bool token_matches(const std::string& pattern, const std::string& token, bool last) {
  if (token == pattern) return true;
  if (!last) return false;
  return token == pattern + "'" || token == pattern + "'s";
}

}  // namespace

ActorTable::ActorTable(std::vector<Actor> actors) : actors_(std::move(actors)) {
  std::unordered_map<std::string, int> seen;  // lowercased surface -> actor id
  for (int id = 0; id < static_cast<int>(actors_.size()); ++id) {
    const Actor& actor = actors_[id];
    if (actor.name.empty()) {
      throw Error(ErrorCode::CONFIG_INVALID,
                  "actor " + std::to_string(id) + " has an empty name");
    }
    std::vector<std::string> surfaces{actor.name};
    surfaces.insert(surfaces.end(), actor.aliases.begin(), actor.aliases.end());
    for (const std::string& surface : surfaces) {
      std::vector<std::string> words = split_words(surface);
      if (words.empty()) {
        throw Error(ErrorCode::CONFIG_INVALID,
                    "actor '" + actor.name + "' has a blank alias");
      }
      std::string key = to_lower(surface);
      auto [it, inserted] = seen.emplace(key, id);
      if (!inserted && it->second != id) {
        throw Error(ErrorCode::CONFIG_INVALID,
                    "name or alias '" + surface + "' is claimed by two actors");
      }
      if (inserted) patterns_.push_back(Pattern{std::move(words), id});
    }
  }
  std::stable_sort(patterns_.begin(), patterns_.end(),
                   [](const Pattern& a, const Pattern& b) {
                     return a.tokens.size() > b.tokens.size();
                   });
}

ActorTable ActorTable::from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::PARSE_ERROR, std::string("bad actor JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorCode::PARSE_ERROR, "actor configuration must be a JSON array");
  }
  std::vector<Actor> actors;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string()) {
      throw Error(ErrorCode::PARSE_ERROR,
                  "each actor needs at least a \"name\" string");
    }
    Actor actor;
    actor.name = item["name"].get<std::string>();
    if (item.contains("gender")) {
      if (!item["gender"].is_string()) {
        throw Error(ErrorCode::PARSE_ERROR, "actor \"gender\" must be a string");
      }
      std::string g = to_lower(item["gender"].get<std::string>());
      if (g == "male") {
        actor.gender = Gender::MALE;
      } else if (g == "female") {
        actor.gender = Gender::FEMALE;
      } else if (g == "unspecified" || g.empty()) {
        actor.gender = Gender::UNSPECIFIED;
      } else {
        throw Error(ErrorCode::CONFIG_INVALID,
                    "actor '" + actor.name + "': unknown gender '" + g + "'");
      }
    }
    if (item.contains("aliases")) {
      if (!item["aliases"].is_array()) {
        throw Error(ErrorCode::PARSE_ERROR, "actor \"aliases\" must be an array");
      }
      for (const auto& alias : item["aliases"]) {
        if (!alias.is_string()) {
          throw Error(ErrorCode::PARSE_ERROR, "actor aliases must be strings");
        }
        actor.aliases.push_back(alias.get<std::string>());
      }
    }
    actors.push_back(std::move(actor));
  }
  return ActorTable(std::move(actors));
}

int ActorTable::find(std::string_view name) const {
  std::string key = to_lower(name);
  for (int id = 0; id < static_cast<int>(actors_.size()); ++id) {
    if (to_lower(actors_[id].name) == key) return id;
    for (const std::string& alias : actors_[id].aliases) {
      if (to_lower(alias) == key) return id;
    }
  }
  return -1;
}

std::vector<ActorTable::Mention> ActorTable::find_mentions(const Sentence& sentence) const {
  std::vector<Mention> mentions;
  const auto& tokens = sentence.tokens;
  std::vector<std::string> lowered(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) lowered[i] = to_lower(tokens[i].surface);

  std::vector<size_t> next_allowed(actors_.size(), 0);  // per-actor scan floor
  for (size_t pos = 0; pos < tokens.size(); ++pos) {
    for (const Pattern& pattern : patterns_) {
      if (pos < next_allowed[pattern.actor]) continue;
      size_t len = pattern.tokens.size();
      if (pos + len > tokens.size()) continue;
      bool match = true;
      for (size_t k = 0; k < len; ++k) {
        if (!token_matches(pattern.tokens[k], lowered[pos + k], k + 1 == len)) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      mentions.push_back(Mention{pattern.actor, static_cast<int>(pos),
                                 static_cast<int>(len)});
      next_allowed[pattern.actor] = pos + len;
    }
  }
  return mentions;
}

}  // namespace cozo
