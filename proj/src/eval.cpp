#include "cozo/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "cozo/error.hpp"
#include "cozo/preprocess.hpp"
#include "internal.hpp"

namespace cozo {

using internal::is_space;
using internal::to_lower;
using internal::trim;

int GoldAnnotation::find_actor(std::string_view name) const {
  std::string key = to_lower(name);
  for (size_t i = 0; i < actor_names.size(); ++i) {
    if (to_lower(actor_names[i]) == key) return static_cast<int>(i);
  }
  return -1;
}

namespace {

struct MarkerScan {
  bool is_marker = false;
  bool closing = false;
  std::string name;
  size_t next = 0;  // resume offset in the raw input
};

// Reads a [Name] / [/Name] marker starting at the '[' in raw[at]. Brackets
// that do not form a marker (no ']' before the next '[' or end, or a blank
// name) stay literal text.
MarkerScan scan_marker(std::string_view raw, size_t at) {
  MarkerScan scan;
  size_t end = at + 1;
  while (end < raw.size() && raw[end] != ']' && raw[end] != '[') ++end;
  if (end >= raw.size() || raw[end] != ']') return scan;
  std::string_view inner = trim(raw.substr(at + 1, end - at - 1));
  if (!inner.empty() && inner[0] == '/') {
    scan.closing = true;
    inner = trim(inner.substr(1));
  }
  if (inner.empty()) return scan;
  scan.is_marker = true;
  scan.name = normalize(inner);
  scan.next = end + 1;
  return scan;
}

}  // namespace

GoldAnnotation parse_gold(std::string_view annotated, GoldParseMode mode,
                          const std::vector<std::string>* allowed_actors) {
  GoldAnnotation gold;
  std::unordered_map<std::string, int> ids;  // lowercased name -> actor index

  auto actor_id = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(to_lower(name),
                                      static_cast<int>(gold.actor_names.size()));
    if (inserted) {
      if (allowed_actors) {
        bool known = false;
        for (const std::string& allowed : *allowed_actors) {
          if (to_lower(allowed) == it->first) known = true;
        }
        if (!known) {
          throw Error(ErrorCode::UNKNOWN_ACTOR,
                      "marker [" + name + "] names an unknown actor");
        }
      }
      gold.actor_names.push_back(name);
      gold.sentences_per_actor.emplace_back();
    }
    return it->second;
  };

  std::string& plain = gold.plain_text;
  bool pending_space = false;
  std::vector<size_t> deferred;    // region indices awaiting begin
  std::vector<int> open_region;    // per actor: open region index or -1

  auto open_for = [&](int actor) -> int& {
    if (static_cast<int>(open_region.size()) <= actor) open_region.resize(actor + 1, -1);
    return open_region[actor];
  };
  auto close_region = [&](int actor) {
    int region = open_for(actor);
    gold.regions[region].end = plain.size();
    open_for(actor) = -1;
  };

  size_t i = 0;
  while (i < annotated.size()) {
    char c = annotated[i];
    if (c == '[') {
      MarkerScan scan = scan_marker(annotated, i);
      if (scan.is_marker) {
        int actor = actor_id(scan.name);
        bool is_open = open_for(actor) >= 0;
        if (scan.closing) {
          if (!is_open) {
            if (mode == GoldParseMode::STRICT) {
              throw Error(ErrorCode::UNBALANCED_MARKERS,
                          "[/" + scan.name + "] closes a zone that is not open");
            }
          } else {
            close_region(actor);
          }
        } else if (is_open) {
          // A repeated open while the zone is open: lenient mode reads it
          // as the close; strict mode rejects it.
          if (mode == GoldParseMode::STRICT) {
            throw Error(ErrorCode::UNBALANCED_MARKERS,
                        "[" + scan.name + "] opens a zone that is already open");
          }
          close_region(actor);
        } else {
          gold.regions.push_back(GoldRegion{actor, plain.size(), plain.size()});
          deferred.push_back(gold.regions.size() - 1);
          open_for(actor) = static_cast<int>(gold.regions.size() - 1);
        }
        i = scan.next;
        continue;
      }
    }
    if (is_space(c)) {
      pending_space = true;
      ++i;
      continue;
    }
    if (pending_space && !plain.empty()) plain.push_back(' ');
    pending_space = false;
    for (size_t index : deferred) gold.regions[index].begin = plain.size();
    deferred.clear();
    plain.push_back(c);
    ++i;
  }

  for (size_t index : deferred) gold.regions[index].begin = plain.size();
  for (int actor = 0; actor < static_cast<int>(open_region.size()); ++actor) {
    if (open_region[actor] < 0) continue;
    if (mode == GoldParseMode::STRICT) {
      throw Error(ErrorCode::UNBALANCED_MARKERS,
                  "[" + gold.actor_names[actor] + "] is never closed");
    }
    close_region(actor);
  }

  std::vector<Sentence> sentences = segment_sentences(plain);
  gold.total_sentences = static_cast<int>(sentences.size());
  size_t offset = 0;
  for (const Sentence& sentence : sentences) {
    size_t begin = offset;
    size_t end = offset + sentence.text.size();
    offset = end + 1;  // normalized text separates sentences by one space
    for (const GoldRegion& region : gold.regions) {
      if (region.begin < end && region.end > begin) {
        gold.sentences_per_actor[region.actor].insert(sentence.index);
      }
    }
  }
  return gold;
}

std::vector<GoldAnaphor> gold_anaphors_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::PARSE_ERROR, std::string("bad anaphor JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorCode::PARSE_ERROR, "gold anaphors must be a JSON array");
  }
  std::vector<GoldAnaphor> anaphors;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("sentence") || !item.contains("surface") ||
        !item.contains("category") || !item.contains("actor")) {
      throw Error(ErrorCode::PARSE_ERROR,
                  "each gold anaphor needs sentence, surface, category, actor");
    }
    GoldAnaphor anaphor;
    anaphor.sentence_index = item["sentence"].get<int>();
    anaphor.surface = item["surface"].get<std::string>();
    anaphor.actor = item["actor"].get<std::string>();
    auto category = pronoun_category_from_name(item["category"].get<std::string>());
    if (!category) {
      throw Error(ErrorCode::PARSE_ERROR,
                  "unknown pronoun category '" +
                      item["category"].get<std::string>() + "'");
    }
    anaphor.category = *category;
    anaphors.push_back(std::move(anaphor));
  }
  return anaphors;
}

double matching(const std::set<int>& auto_indices, const std::set<int>& gold_indices) {
  if (gold_indices.empty()) {
    throw Error(ErrorCode::GOLD_EMPTY, "matching is undefined for an empty gold set");
  }
  size_t overlap = 0;
  for (int index : auto_indices) overlap += gold_indices.count(index);
  return static_cast<double>(overlap) / static_cast<double>(gold_indices.size());
}

double error_rate(const std::set<int>& auto_indices, const std::set<int>& gold_indices,
                  int total_sentences) {
  long long denominator =
      static_cast<long long>(total_sentences) - static_cast<long long>(gold_indices.size());
  if (denominator <= 0) {
    throw Error(ErrorCode::DENOMINATOR_ZERO,
                "error rate is undefined when the gold zone covers the whole text");
  }
  size_t wrong = 0;
  for (int index : auto_indices) wrong += gold_indices.count(index) == 0 ? 1 : 0;
  return static_cast<double>(wrong) / static_cast<double>(denominator);
}

std::vector<ResolvedAnaphor> to_resolved_anaphors(const std::vector<Resolution>& resolutions,
                                                  const ActorTable& actors) {
  std::vector<ResolvedAnaphor> out;
  out.reserve(resolutions.size());
  for (const Resolution& resolution : resolutions) {
    ResolvedAnaphor entry;
    entry.sentence_index = resolution.pronoun.sentence_index;
    entry.position = resolution.pronoun.position;
    entry.surface = resolution.pronoun.surface;
    entry.category = resolution.category;
    entry.resolved = resolution.resolved;
    for (int actor : resolution.resolved_to) entry.actors.push_back(actors.actor(actor).name);
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<ResolvedAnaphor> resolved_anaphors_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::PARSE_ERROR,
                std::string("bad resolutions JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorCode::PARSE_ERROR, "resolutions must be a JSON array");
  }
  std::vector<ResolvedAnaphor> out;
  for (const auto& item : doc) {
    ResolvedAnaphor entry;
    entry.sentence_index = item.at("sentence").get<int>();
    if (item.contains("position")) entry.position = item["position"].get<int>();
    entry.surface = item.at("surface").get<std::string>();
    auto category = pronoun_category_from_name(item.at("category").get<std::string>());
    if (!category) {
      throw Error(ErrorCode::PARSE_ERROR, "unknown pronoun category in resolutions");
    }
    entry.category = *category;
    entry.resolved = item.at("resolved").get<bool>();
    if (item.contains("actors")) {
      for (const auto& name : item["actors"]) entry.actors.push_back(name.get<std::string>());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

nlohmann::json resolved_anaphors_to_json(const std::vector<ResolvedAnaphor>& resolutions) {
  nlohmann::json out = nlohmann::json::array();
  for (const ResolvedAnaphor& entry : resolutions) {
    nlohmann::json item;
    item["sentence"] = entry.sentence_index;
    item["position"] = entry.position;
    item["surface"] = entry.surface;
    item["category"] = pronoun_category_name(entry.category);
    item["resolved"] = entry.resolved;
    item["actors"] = entry.actors;
    out.push_back(std::move(item));
  }
  return out;
}

double anaphor_success_rate(const std::vector<ResolvedAnaphor>& resolutions,
                            const std::vector<GoldAnaphor>& gold_anaphors,
                            std::string_view actor, PronounCategory category) {
  std::string actor_key = to_lower(actor);
  std::vector<const GoldAnaphor*> gold;
  for (const GoldAnaphor& entry : gold_anaphors) {
    if (entry.category == category && to_lower(entry.actor) == actor_key) {
      gold.push_back(&entry);
    }
  }
  if (gold.empty()) {
    throw Error(ErrorCode::NO_GOLD_ANAPHORS,
                "no gold anaphors for actor '" + std::string(actor) + "', category " +
                    pronoun_category_name(category));
  }

  // Pair gold entries with predictions by (sentence, surface, category);
  // duplicates consume predictions in order.
  std::map<std::tuple<int, std::string, PronounCategory>,
           std::deque<const ResolvedAnaphor*>> by_key;
  for (const ResolvedAnaphor& entry : resolutions) {
    by_key[{entry.sentence_index, to_lower(entry.surface), entry.category}]
        .push_back(&entry);
  }
  long long correct = 0;
  for (const GoldAnaphor* entry : gold) {
    auto it = by_key.find({entry->sentence_index, to_lower(entry->surface), category});
    if (it == by_key.end() || it->second.empty()) continue;
    const ResolvedAnaphor* predicted = it->second.front();
    it->second.pop_front();
    if (!predicted->resolved) continue;
    for (const std::string& name : predicted->actors) {
      if (to_lower(name) == actor_key) {
        ++correct;
        break;
      }
    }
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

std::string format_ratio(double value, bool locale_comma) {
  double rounded = std::round(value * 100.0) / 100.0;
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", rounded);
  std::string text = buffer;
  if (text.find('.') != std::string::npos) {
    while (!text.empty() && text.back() == '0') text.pop_back();
    if (!text.empty() && text.back() == '.') text.pop_back();
  }
  if (locale_comma) {
    for (char& c : text) {
      if (c == '.') c = ',';
    }
  }
  return text;
}

QualityReport quality_report(const std::map<std::string, std::set<int>>& auto_zones,
                             const GoldAnnotation& gold, int total_sentences,
                             const std::vector<ResolvedAnaphor>& resolutions) {
  QualityReport report;
  report.total_sentences = total_sentences;

  std::vector<std::string> actor_order = gold.actor_names;
  for (const auto& [name, indices] : auto_zones) {
    if (gold.find_actor(name) < 0) actor_order.push_back(name);
  }

  auto auto_set_for = [&](const std::string& name) -> std::set<int> {
    auto it = auto_zones.find(name);
    if (it != auto_zones.end()) return it->second;
    std::string key = to_lower(name);
    for (const auto& [candidate, indices] : auto_zones) {
      if (to_lower(candidate) == key) return indices;
    }
    return {};
  };

  for (const std::string& name : actor_order) {
    ActorQuality quality;
    quality.actor = name;
    quality.counted_sentences = total_sentences;
    int gold_id = gold.find_actor(name);
    std::set<int> gold_set =
        gold_id >= 0 ? gold.sentences_per_actor[gold_id] : std::set<int>{};
    std::set<int> auto_set = auto_set_for(name);
    quality.gold_sentences = static_cast<long long>(gold_set.size());
    quality.zoned_sentences = static_cast<long long>(auto_set.size());
    for (int index : auto_set) {
      if (gold_set.count(index)) {
        quality.overlap_sentences += 1;
      } else {
        quality.erroneous_sentences += 1;
      }
    }
    try {
      quality.matching = matching(auto_set, gold_set);
    } catch (const Error& e) {
      quality.notes.push_back(error_code_name(e.code()));
    }
    try {
      quality.error_rate = error_rate(auto_set, gold_set, total_sentences);
    } catch (const Error& e) {
      quality.notes.push_back(error_code_name(e.code()));
    }
    for (PronounCategory category : kAllPronounCategories) {
      long long gold_count = 0;
      for (const GoldAnaphor& entry : gold.anaphors) {
        if (entry.category == category && to_lower(entry.actor) == to_lower(name)) {
          ++gold_count;
        }
      }
      if (gold_count == 0) continue;
      quality.gold_anaphor_counts[category] = gold_count;
      quality.success_rates[category] =
          anaphor_success_rate(resolutions, gold.anaphors, name, category);
    }
    report.per_actor.push_back(std::move(quality));
  }

  double matching_sum = 0.0, error_sum = 0.0;
  int matching_n = 0, error_n = 0;
  for (const ActorQuality& quality : report.per_actor) {
    if (quality.matching) {
      matching_sum += *quality.matching;
      ++matching_n;
    }
    if (quality.error_rate) {
      error_sum += *quality.error_rate;
      ++error_n;
    }
  }
  if (matching_n > 0) report.avg_matching = matching_sum / matching_n;
  if (error_n > 0) report.avg_error_rate = error_sum / error_n;
  return report;
}

nlohmann::json QualityReport::to_json() const {
  nlohmann::json out;
  out["total_sentences"] = total_sentences;
  nlohmann::json actors = nlohmann::json::array();
  for (const ActorQuality& quality : per_actor) {
    nlohmann::json entry;
    entry["actor"] = quality.actor;
    entry["counted_sentences"] = quality.counted_sentences;
    entry["gold_sentences"] = quality.gold_sentences;
    entry["zoned_sentences"] = quality.zoned_sentences;
    entry["overlap_sentences"] = quality.overlap_sentences;
    entry["erroneous_sentences"] = quality.erroneous_sentences;
    entry["matching"] =
        quality.matching ? nlohmann::json(*quality.matching) : nlohmann::json(nullptr);
    entry["error_rate"] =
        quality.error_rate ? nlohmann::json(*quality.error_rate) : nlohmann::json(nullptr);
    nlohmann::json rates = nlohmann::json::object();
    for (const auto& [category, rate] : quality.success_rates) {
      rates[pronoun_category_name(category)] = rate;
    }
    entry["success_rates"] = rates;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [category, count] : quality.gold_anaphor_counts) {
      counts[pronoun_category_name(category)] = count;
    }
    entry["gold_anaphor_counts"] = counts;
    entry["notes"] = quality.notes;
    actors.push_back(std::move(entry));
  }
  out["actors"] = actors;
  out["avg_matching"] =
      avg_matching ? nlohmann::json(*avg_matching) : nlohmann::json(nullptr);
  out["avg_error_rate"] =
      avg_error_rate ? nlohmann::json(*avg_error_rate) : nlohmann::json(nullptr);
  if (avg_matching && avg_error_rate) {
    out["quality"] = "{" + format_ratio(*avg_matching) + " ; " +
                     format_ratio(*avg_error_rate) + "}";
  } else {
    out["quality"] = nullptr;
  }
  return out;
}

namespace {

std::string ratio_or_dash(const std::optional<double>& value, bool locale_comma) {
  return value ? format_ratio(*value, locale_comma) : "-";
}

}  // namespace

std::string QualityReport::to_table(bool locale_comma) const {
  std::ostringstream out;
  auto row = [&](const std::string& label, const std::string& value) {
    out << label;
    size_t width = label.size() < 34 ? 34 : label.size() + 2;
    for (size_t i = label.size(); i < width; ++i) out << ' ';
    out << value << "\n";
  };
  for (const ActorQuality& quality : per_actor) {
    row("Actor", quality.actor);
    row("Counted sentences", std::to_string(quality.counted_sentences));
    row("Zoned sentences (manual)", std::to_string(quality.gold_sentences));
    row("Zoned sentences (engine)", std::to_string(quality.zoned_sentences));
    row("Erroneous zoned sentences", std::to_string(quality.erroneous_sentences));
    row("Quality = {Matching ; Error-rate}",
        "{" + ratio_or_dash(quality.matching, locale_comma) + " ; " +
            ratio_or_dash(quality.error_rate, locale_comma) + "}");
    for (const auto& [category, rate] : quality.success_rates) {
      std::string label = std::string("Success rate ") + pronoun_category_display(category);
      long long count = quality.gold_anaphor_counts.at(category);
      row(label, format_ratio(rate, locale_comma) + " (" + std::to_string(count) +
                     " gold)");
    }
    for (const std::string& note : quality.notes) row("Note", note);
    out << "\n";
  }
  row("Average quality = {Matching ; Error-rate}",
      "{" + ratio_or_dash(avg_matching, locale_comma) + " ; " +
          ratio_or_dash(avg_error_rate, locale_comma) + "}");
  return out.str();
}

}  // namespace cozo
