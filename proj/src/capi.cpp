#include "cozo.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "cozo/error.hpp"
#include "cozo/eval.hpp"
#include "cozo/parser.hpp"
#include "cozo/pipeline.hpp"
#include "cozo/preprocess.hpp"

struct cozo_engine {
  cozo::Engine impl;
};

struct cozo_result {
  std::string zones_json;
  std::string mindmap_dot;
  std::string mindmap_json;
  std::string resolutions_json;
  int total_sentences = 0;
  int window_count = 0;
};

struct cozo_report {
  std::string json;
  std::string table_point;
  std::string table_comma;
};

namespace {

thread_local std::string g_last_error;

cozo_status status_from(cozo::ErrorCode code) {
  using cozo::ErrorCode;
  switch (code) {
    case ErrorCode::CONFIG_INVALID: return COZO_ERR_CONFIG_INVALID;
    case ErrorCode::WINDOW_SIZE_INVALID: return COZO_ERR_WINDOW_SIZE_INVALID;
    case ErrorCode::IO_ERROR: return COZO_ERR_IO;
    case ErrorCode::PARSE_ERROR: return COZO_ERR_PARSE;
    case ErrorCode::UNBALANCED_MARKERS: return COZO_ERR_UNBALANCED_MARKERS;
    case ErrorCode::UNKNOWN_ACTOR: return COZO_ERR_UNKNOWN_ACTOR;
    case ErrorCode::GOLD_EMPTY: return COZO_ERR_GOLD_EMPTY;
    case ErrorCode::DENOMINATOR_ZERO: return COZO_ERR_DENOMINATOR_ZERO;
    case ErrorCode::NO_GOLD_ANAPHORS: return COZO_ERR_NO_GOLD_ANAPHORS;
    case ErrorCode::INVALID_ARGUMENT: return COZO_ERR_INVALID_ARGUMENT;
  }
  return COZO_ERR_INTERNAL;
}

template <typename Fn>
cozo_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return COZO_OK;
  } catch (const cozo::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return COZO_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return COZO_ERR_INTERNAL;
  }
}

cozo_status fail_invalid(const char* message) {
  g_last_error = message;
  return COZO_ERR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

cozo::Lexicon lexicon_or_builtin(const char* lexicon_data) {
  return lexicon_data ? cozo::Lexicon::from_string(lexicon_data, "<caller>")
                      : cozo::Lexicon::builtin();
}

std::vector<cozo::Sentence> prepare(const char* text, const cozo::Lexicon& lexicon) {
  std::vector<cozo::Sentence> sentences = cozo::segment_sentences(cozo::normalize(text));
  for (auto& sentence : sentences) {
    sentence = cozo::tag_sentence(cozo::tokenize(std::move(sentence)), lexicon);
  }
  return sentences;
}

}  // namespace

extern "C" {

const char* cozo_version(void) { return COZO_VERSION_STRING; }

const char* cozo_last_error(void) { return g_last_error.c_str(); }

void cozo_string_free(char* s) { std::free(s); }

cozo_status cozo_engine_new(const char* actors_json, const char* lexicon_data,
                            int window_size, int carry_candidates,
                            int plural_lookback, cozo_engine** out_engine) {
  if (!out_engine) return fail_invalid("out_engine is null");
  *out_engine = nullptr;
  if (!actors_json) return fail_invalid("actors_json is null");
  return guarded([&] {
    cozo::RunConfig config;
    config.actors = cozo::ActorTable::from_json(actors_json).actors();
    config.stream.window_size = window_size;
    config.stream.carry_candidates = carry_candidates != 0;
    config.plural_lookback = plural_lookback;
    *out_engine = new cozo_engine{
        cozo::Engine(std::move(config), lexicon_or_builtin(lexicon_data))};
  });
}

void cozo_engine_free(cozo_engine* engine) { delete engine; }

cozo_status cozo_engine_zone(const cozo_engine* engine, const char* text,
                             const char* source_id, cozo_result** out_result) {
  if (!out_result) return fail_invalid("out_result is null");
  *out_result = nullptr;
  if (!engine) return fail_invalid("engine is null");
  if (!text) return fail_invalid("text is null");
  return guarded([&] {
    cozo::RawDocument doc{text, source_id ? source_id : "stream"};
    cozo::PipelineResult result = engine->impl.run(doc);
    auto resolved =
        cozo::to_resolved_anaphors(result.resolutions, engine->impl.actors());
    auto report = new cozo_result;
    report->zones_json =
        cozo::zones_to_json(result.zones, result.variables, engine->impl.actors())
            .dump(2) + "\n";
    report->mindmap_dot = result.mindmap.to_dot();
    report->mindmap_json = result.mindmap.to_json().dump(2) + "\n";
    report->resolutions_json = cozo::resolved_anaphors_to_json(resolved).dump(2) + "\n";
    report->total_sentences = result.total_sentences;
    report->window_count = result.window_count;
    *out_result = report;
  });
}

void cozo_result_free(cozo_result* result) { delete result; }

const char* cozo_result_zones_json(const cozo_result* result) {
  return result ? result->zones_json.c_str() : "";
}
const char* cozo_result_mindmap_dot(const cozo_result* result) {
  return result ? result->mindmap_dot.c_str() : "";
}
const char* cozo_result_mindmap_json(const cozo_result* result) {
  return result ? result->mindmap_json.c_str() : "";
}
const char* cozo_result_resolutions_json(const cozo_result* result) {
  return result ? result->resolutions_json.c_str() : "";
}
int cozo_result_total_sentences(const cozo_result* result) {
  return result ? result->total_sentences : 0;
}
int cozo_result_window_count(const cozo_result* result) {
  return result ? result->window_count : 0;
}

cozo_status cozo_tag_text(const char* text, const char* lexicon_data, char** out_tsv) {
  if (!out_tsv) return fail_invalid("out_tsv is null");
  *out_tsv = nullptr;
  if (!text) return fail_invalid("text is null");
  return guarded([&] {
    cozo::Lexicon lexicon = lexicon_or_builtin(lexicon_data);
    std::ostringstream out;
    for (const auto& sentence : prepare(text, lexicon)) {
      for (const auto& token : sentence.tokens) {
        out << sentence.index << '\t' << token.position << '\t' << token.surface
            << '\t' << cozo::pos_tag_name(token.tag) << '\n';
      }
    }
    *out_tsv = copy_out(out.str());
  });
}

cozo_status cozo_parse_text(const char* text, const char* lexicon_data, char** out_tsv) {
  if (!out_tsv) return fail_invalid("out_tsv is null");
  *out_tsv = nullptr;
  if (!text) return fail_invalid("text is null");
  return guarded([&] {
    cozo::Lexicon lexicon = lexicon_or_builtin(lexicon_data);
    std::ostringstream out;
    for (const auto& sentence : prepare(text, lexicon)) {
      for (const auto& relation : cozo::extract_svo(sentence)) {
        auto surface = [&](const std::optional<int>& position) -> std::string {
          if (!position) return "-";
          return sentence.tokens[static_cast<size_t>(*position)].surface;
        };
        out << relation.sentence_index << '\t' << relation.pattern << '\t'
            << surface(relation.subject) << '\t' << surface(relation.verb) << '\t'
            << surface(relation.object) << '\n';
      }
    }
    *out_tsv = copy_out(out.str());
  });
}

cozo_status cozo_engine_resolve_tsv(const cozo_engine* engine, const char* text,
                                    char** out_tsv) {
  if (!out_tsv) return fail_invalid("out_tsv is null");
  *out_tsv = nullptr;
  if (!engine) return fail_invalid("engine is null");
  if (!text) return fail_invalid("text is null");
  return guarded([&] {
    cozo::PipelineResult result = engine->impl.run({text, "stream"});
    std::ostringstream out;
    for (const auto& resolution : result.resolutions) {
      out << resolution.pronoun.sentence_index << '\t' << resolution.pronoun.position
          << '\t' << resolution.pronoun.surface << '\t'
          << cozo::pronoun_category_name(resolution.category) << '\t'
          << (resolution.resolved ? "RESOLVED" : "UNRESOLVED") << '\t';
      if (resolution.resolved_to.empty()) {
        out << '-';
      } else {
        for (size_t i = 0; i < resolution.resolved_to.size(); ++i) {
          if (i > 0) out << ',';
          out << engine->impl.actors().actor(resolution.resolved_to[i]).name;
        }
      }
      out << '\n';
    }
    *out_tsv = copy_out(out.str());
  });
}

cozo_status cozo_eval(const char* gold_text, const char* pred_zones_json,
                      const char* gold_anaphors_json, const char* resolutions_json,
                      const char* total_from_text, int strict,
                      cozo_report** out_report) {
  if (!out_report) return fail_invalid("out_report is null");
  *out_report = nullptr;
  if (!gold_text) return fail_invalid("gold_text is null");
  if (!pred_zones_json) return fail_invalid("pred_zones_json is null");
  return guarded([&] {
    cozo::GoldAnnotation gold = cozo::parse_gold(
        gold_text, strict ? cozo::GoldParseMode::STRICT : cozo::GoldParseMode::LENIENT);
    if (gold_anaphors_json) gold.anaphors = cozo::gold_anaphors_from_json(gold_anaphors_json);

    std::map<std::string, std::set<int>> auto_zones;
    nlohmann::json zones_doc;
    try {
      zones_doc = nlohmann::json::parse(pred_zones_json);
    } catch (const nlohmann::json::exception& e) {
      throw cozo::Error(cozo::ErrorCode::PARSE_ERROR,
                        std::string("bad zones JSON: ") + e.what());
    }
    if (!zones_doc.is_object()) {
      throw cozo::Error(cozo::ErrorCode::PARSE_ERROR,
                        "zones document must be a JSON object");
    }
    for (const auto& [name, entry] : zones_doc.items()) {
      std::set<int> indices;
      if (!entry.is_object() || !entry.contains("sentences") ||
          !entry["sentences"].is_array()) {
        throw cozo::Error(cozo::ErrorCode::PARSE_ERROR,
                          "zone for '" + name + "' needs a \"sentences\" array");
      }
      for (const auto& index : entry["sentences"]) indices.insert(index.get<int>());
      auto_zones[name] = std::move(indices);
    }

    std::vector<cozo::ResolvedAnaphor> resolutions;
    if (resolutions_json) resolutions = cozo::resolved_anaphors_from_json(resolutions_json);

    int total = gold.total_sentences;
    if (total_from_text) {
      total = static_cast<int>(
          cozo::segment_sentences(cozo::normalize(total_from_text)).size());
    }

    cozo::QualityReport report = cozo::quality_report(auto_zones, gold, total, resolutions);
    auto out = new cozo_report;
    out->json = report.to_json().dump(2) + "\n";
    out->table_point = report.to_table(false);
    out->table_comma = report.to_table(true);
    *out_report = out;
  });
}

void cozo_report_free(cozo_report* report) { delete report; }

const char* cozo_report_json(const cozo_report* report) {
  return report ? report->json.c_str() : "";
}

const char* cozo_report_table(const cozo_report* report, int locale_comma) {
  if (!report) return "";
  return locale_comma ? report->table_comma.c_str() : report->table_point.c_str();
}

cozo_status cozo_gold_check(const char* gold_text, const char* actors_json, int strict,
                            char** out_summary_json) {
  if (!out_summary_json) return fail_invalid("out_summary_json is null");
  *out_summary_json = nullptr;
  if (!gold_text) return fail_invalid("gold_text is null");
  return guarded([&] {
    std::vector<std::string> allowed;
    if (actors_json) {
      const cozo::ActorTable table = cozo::ActorTable::from_json(actors_json);
      for (const auto& actor : table.actors()) {
        allowed.push_back(actor.name);
        for (const auto& alias : actor.aliases) allowed.push_back(alias);
      }
    }
    cozo::GoldAnnotation gold = cozo::parse_gold(
        gold_text, strict ? cozo::GoldParseMode::STRICT : cozo::GoldParseMode::LENIENT,
        actors_json ? &allowed : nullptr);
    nlohmann::json summary;
    summary["total_sentences"] = gold.total_sentences;
    summary["region_count"] = gold.regions.size();
    nlohmann::json actors = nlohmann::json::array();
    for (size_t i = 0; i < gold.actor_names.size(); ++i) {
      nlohmann::json entry;
      entry["name"] = gold.actor_names[i];
      entry["sentences"] = gold.sentences_per_actor[i].size();
      actors.push_back(std::move(entry));
    }
    summary["actors"] = actors;
    *out_summary_json = copy_out(summary.dump(2) + "\n");
  });
}

}  // extern "C"
