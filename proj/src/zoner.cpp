#include "cozo/zoner.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>

#include "internal.hpp"

namespace cozo {

using internal::to_lower;

void ZoneSet::add(int actor, int sentence_index) {
  ActorZone& zone = zones_[actor];
  auto it = std::lower_bound(zone.sentences.begin(), zone.sentences.end(),
                             sentence_index);
  if (it == zone.sentences.end() || *it != sentence_index) {
    zone.sentences.insert(it, sentence_index);
    zone.spans.clear();
    for (int index : zone.sentences) {
      if (!zone.spans.empty() && zone.spans.back().end + 1 == index) {
        zone.spans.back().end = index;
      } else {
        zone.spans.push_back(ZoneSpan{index, index});
      }
    }
  }
  zone.open = true;
}

void ZoneSet::close_all() {
  for (ActorZone& zone : zones_) zone.open = false;
}

std::vector<std::pair<int, int>> zone_window(
    const TextWindow& window,
    const std::vector<std::vector<ActorTable::Mention>>& mentions_per_sentence,
    const std::vector<std::vector<Resolution>>& resolutions_per_sentence,
    ZoneSet& state) {
  std::vector<std::pair<int, int>> additions;
  int actor_count = state.actor_count();
  for (size_t si = 0; si < window.sentences.size(); ++si) {
    int index = window.sentences[si].index;
    std::vector<char> direct(actor_count, 0);  // rule (a) or (b)
    for (const auto& mention : mentions_per_sentence[si]) direct[mention.actor] = 1;
    for (const auto& resolution : resolutions_per_sentence[si]) {
      if (!resolution.resolved) continue;
      for (int actor : resolution.resolved_to) direct[actor] = 1;
    }
    bool anyone_direct = false;
    for (int actor = 0; actor < actor_count; ++actor) {
      if (!direct[actor]) continue;
      anyone_direct = true;
      state.add(actor, index);
      additions.emplace_back(actor, index);
    }
    // Rule (c): an open zone absorbs the sentence only when no other actor
    // claimed it; otherwise the claim closes the zone.
    for (int actor = 0; actor < actor_count; ++actor) {
      if (direct[actor] || !state.zone(actor).open) continue;
      if (anyone_direct) {
        state.close_zone(actor);
      } else {
        state.add(actor, index);
        additions.emplace_back(actor, index);
      }
    }
  }
  return additions;
}

void ZoneStatsAccumulator::add_sentence(int actor, const Sentence& sentence,
                                        const std::vector<SvoRelation>& relations,
                                        const Lexicon& lexicon) {
  Counts& counts = per_actor_[actor];
  counts.sentence_count += 1;
  counts.token_count += static_cast<long long>(sentence.tokens.size());
  for (const Token& token : sentence.tokens) {
    if (token.tag == PosTag::PUNCT) continue;
    std::string folded = to_lower(token.surface);
    if (lexicon.is_stopword(folded)) continue;
    counts.words[folded] += 1;
  }
  for (const SvoRelation& relation : relations) counts.patterns[relation.pattern] += 1;
}

namespace {

// Highest count; ties go to the lexicographically smallest key, which is
// the first one met when walking the ordered map.
std::optional<ModalValue> modal(const std::map<std::string, long long>& counts) {
  std::optional<ModalValue> best;
  for (const auto& [value, count] : counts) {
    if (!best || count > best->count) best = ModalValue{value, count};
  }
  return best;
}

}  // namespace

ZoneVariables ZoneStatsAccumulator::snapshot(long long total_sentences) const {
  ZoneVariables variables;
  variables.per_actor.resize(per_actor_.size());
  for (size_t i = 0; i < per_actor_.size(); ++i) {
    const Counts& counts = per_actor_[i];
    ActorVariables& out = variables.per_actor[i];
    out.sentence_count = counts.sentence_count;
    out.token_count = counts.token_count;
    out.most_occurring_word = modal(counts.words);
    out.most_occurring_pattern = modal(counts.patterns);
    out.extracted_quantity =
        total_sentences > 0
            ? static_cast<double>(counts.sentence_count) / static_cast<double>(total_sentences)
            : 0.0;
  }
  return variables;
}

ZoneVariables compute_zone_variables(
    const ZoneSet& zones, const std::vector<Sentence>& sentences,
    const std::vector<std::vector<SvoRelation>>& relations,
    const Lexicon& lexicon, long long total_sentences) {
  ZoneStatsAccumulator accumulator(zones.actor_count());
  for (int actor = 0; actor < zones.actor_count(); ++actor) {
    for (int index : zones.zone(actor).sentences) {
      for (size_t i = 0; i < sentences.size(); ++i) {
        if (sentences[i].index != index) continue;
        accumulator.add_sentence(actor, sentences[i], relations[i], lexicon);
        break;
      }
    }
  }
  return accumulator.snapshot(total_sentences);
}

namespace {

std::string format_quantity(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

std::string modal_text(const std::optional<ModalValue>& value) {
  if (!value) return "-";
  return value->value + " (" + std::to_string(value->count) + ")";
}

MindMap::Node* find_child(MindMap::Node& parent, const std::string& name) {
  for (auto& child : parent.children) {
    if (child.name == name) return &child;
  }
  return nullptr;
}

void set_leaf(MindMap::Node& parent, const std::string& name, std::string value) {
  if (MindMap::Node* leaf = find_child(parent, name)) {
    leaf->value = std::move(value);
    return;
  }
  parent.children.push_back(MindMap::Node{name, std::move(value), {}});
}

std::string escape_label(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

size_t count_nodes(const MindMap::Node& node) {
  size_t total = 1;
  for (const auto& child : node.children) total += count_nodes(child);
  return total;
}

void write_dot(const MindMap::Node& node, int parent_id, int& next_id,
               std::ostringstream& out) {
  int id = next_id++;
  std::string label = node.name;
  if (node.value) label += "\n" + *node.value;
  out << "  n" << id << " [label=\"" << escape_label(label) << "\"];\n";
  if (parent_id >= 0) out << "  n" << parent_id << " -> n" << id << ";\n";
  for (const auto& child : node.children) write_dot(child, id, next_id, out);
}

nlohmann::json node_to_json(const MindMap::Node& node) {
  nlohmann::json out;
  out["name"] = node.name;
  out["value"] = node.value ? nlohmann::json(*node.value) : nlohmann::json(nullptr);
  out["children"] = nlohmann::json::array();
  for (const auto& child : node.children) out["children"].push_back(node_to_json(child));
  return out;
}

}  // namespace

void MindMap::update(const ZoneVariables& variables, const ActorTable& actors) {
  for (int id = 0; id < actors.size(); ++id) {
    const Actor& actor = actors.actor(id);
    Node* actor_node = find_child(root_, actor.name);
    if (!actor_node) {
      root_.children.push_back(Node{actor.name, std::nullopt, {}});
      actor_node = &root_.children.back();
    }
    const ActorVariables& vars = variables.per_actor[id];
    set_leaf(*actor_node, "gender", gender_name(actor.gender));
    set_leaf(*actor_node, "sentence_count", std::to_string(vars.sentence_count));
    set_leaf(*actor_node, "token_count", std::to_string(vars.token_count));
    set_leaf(*actor_node, "most_occurring_word", modal_text(vars.most_occurring_word));
    set_leaf(*actor_node, "most_occurring_pattern",
             modal_text(vars.most_occurring_pattern));
    set_leaf(*actor_node, "extracted_quantity",
             format_quantity(vars.extracted_quantity));
  }
}

size_t MindMap::node_count() const { return count_nodes(root_); }

std::string MindMap::to_dot() const {
  std::ostringstream out;
  out << "digraph mindmap {\n  node [shape=box];\n";
  int next_id = 0;
  write_dot(root_, -1, next_id, out);
  out << "}\n";
  return out.str();
}

nlohmann::json MindMap::to_json() const { return node_to_json(root_); }

nlohmann::json zones_to_json(const ZoneSet& zones, const ZoneVariables& variables,
                             const ActorTable& actors) {
  nlohmann::json out = nlohmann::json::object();
  for (int id = 0; id < actors.size(); ++id) {
    const ActorZone& zone = zones.zone(id);
    nlohmann::json entry;
    entry["sentences"] = zone.sentences;
    nlohmann::json spans = nlohmann::json::array();
    for (const ZoneSpan& span : zone.spans) {
      spans.push_back(nlohmann::json::array({span.begin, span.end}));
    }
    entry["spans"] = spans;
    const ActorVariables& vars = variables.per_actor[id];
    nlohmann::json stats;
    stats["sentence_count"] = vars.sentence_count;
    stats["token_count"] = vars.token_count;
    if (vars.most_occurring_word) {
      stats["most_occurring_word"] = {{"surface", vars.most_occurring_word->value},
                                      {"count", vars.most_occurring_word->count}};
    } else {
      stats["most_occurring_word"] = nullptr;
    }
    if (vars.most_occurring_pattern) {
      stats["most_occurring_pattern"] = {
          {"pattern", vars.most_occurring_pattern->value},
          {"count", vars.most_occurring_pattern->count}};
    } else {
      stats["most_occurring_pattern"] = nullptr;
    }
    stats["extracted_quantity"] = vars.extracted_quantity;
    entry["variables"] = stats;
    out[actors.actor(id).name] = entry;
  }
  return out;
}

}  // namespace cozo
