#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cozo.h"

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

int input_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

int api_error() {
  std::cerr << "error: " << cozo_last_error() << "\n";
  return 2;
}

// Flag beats COZO_LEXICON, which beats the built-in lexicon. Returns false
// on an unreadable file (diagnostic already printed).
bool load_lexicon(const std::string& flag_path, std::optional<std::string>& data) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv("COZO_LEXICON")) path = env;
  }
  if (path.empty()) return true;
  auto content = read_file(path);
  if (!content) {
    input_error("cannot read lexicon file: " + path);
    return false;
  }
  data = std::move(*content);
  return true;
}

struct EngineSettings {
  std::string actors_path;
  std::string lexicon_path;
  int window = 10;
  bool carry = false;
  int lookback = 2;
};

// Builds an engine from CLI settings; on failure prints a diagnostic and
// stores the exit code in status_out.
cozo_engine* make_engine(const EngineSettings& settings, int& status_out) {
  status_out = 0;
  auto actors = read_file(settings.actors_path);
  if (!actors) {
    status_out = input_error("cannot read actors file: " + settings.actors_path);
    return nullptr;
  }
  std::optional<std::string> lexicon;
  if (!load_lexicon(settings.lexicon_path, lexicon)) {
    status_out = 2;
    return nullptr;
  }
  cozo_engine* engine = nullptr;
  if (cozo_engine_new(actors->c_str(), lexicon ? lexicon->c_str() : nullptr,
                      settings.window, settings.carry ? 1 : 0, settings.lookback,
                      &engine) != COZO_OK) {
    status_out = api_error();
    return nullptr;
  }
  return engine;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming content zoning: segments documents into actor zones"};
  app.set_version_flag("--version", COZO_VERSION_STRING);
  app.require_subcommand(1);

  EngineSettings settings;
  std::string input_path, output_path, mindmap_path, mindmap_json_path;
  std::string resolutions_out_path, source_id;
  std::string gold_path, pred_path, anaphors_path, resolutions_in_path, total_from_path;
  std::string format = "table";
  bool strict = false;
  bool locale_comma = false;

  auto add_engine_options = [&](CLI::App* cmd) {
    cmd->add_option("--actors", settings.actors_path,
                    "Actor configuration file (JSON array)")->required();
    cmd->add_option("--window", settings.window, "Sentences per text window");
    cmd->add_flag("--carry-candidates", settings.carry,
                  "Keep resolver candidates across window boundaries");
    cmd->add_option("--plural-lookback", settings.lookback,
                    "Sentences they/their looks back for antecedents");
    cmd->add_option("--lexicon", settings.lexicon_path,
                    "Tagging lexicon file (default: COZO_LEXICON or built-in)");
  };

  CLI::App* zone = app.add_subcommand("zone", "Run the zoning pipeline over a document");
  zone->add_option("--input", input_path, "Plain-text document")->required();
  add_engine_options(zone);
  zone->add_option("--output", output_path, "Zones JSON path (default: stdout)");
  zone->add_option("--mindmap", mindmap_path, "Mind-map DOT path");
  zone->add_option("--mindmap-json", mindmap_json_path, "Mind-map JSON path");
  zone->add_option("--resolutions", resolutions_out_path,
                   "Pronoun resolutions JSON path (evaluation input)");
  zone->add_option("--source-id", source_id, "Stream label (default: input path)");

  CLI::App* eval = app.add_subcommand("eval", "Score zones against a gold annotation");
  eval->add_option("--gold", gold_path, "Gold text with [Name]/[/Name] markers")->required();
  eval->add_option("--pred", pred_path, "Zones JSON produced by zone")->required();
  eval->add_option("--anaphors", anaphors_path, "Gold anaphor sidecar (JSON)");
  eval->add_option("--resolutions", resolutions_in_path,
                   "Predicted resolutions JSON (from zone --resolutions)");
  eval->add_option("--total-from", total_from_path,
                   "Plain text whose sentence count overrides the gold total");
  eval->add_flag("--strict", strict, "Require exactly balanced markers");
  eval->add_option("--format", format, "Report rendering")
      ->check(CLI::IsMember({"json", "table"}));
  eval->add_flag("--locale-comma", locale_comma, "Render decimals with a comma");

  CLI::App* tag = app.add_subcommand("tag", "Debug: print token tags");
  tag->add_option("--input", input_path, "Plain-text document")->required();
  tag->add_option("--lexicon", settings.lexicon_path,
                  "Tagging lexicon file (default: COZO_LEXICON or built-in)");

  CLI::App* parse = app.add_subcommand("parse", "Debug: print subject-verb-object relations");
  parse->add_option("--input", input_path, "Plain-text document")->required();
  parse->add_option("--lexicon", settings.lexicon_path,
                    "Tagging lexicon file (default: COZO_LEXICON or built-in)");

  CLI::App* resolve = app.add_subcommand("resolve", "Debug: print pronoun resolutions");
  resolve->add_option("--input", input_path, "Plain-text document")->required();
  add_engine_options(resolve);

  CLI::App* gold_check = app.add_subcommand("gold-check", "Validate a gold annotation file");
  gold_check->add_option("--gold", gold_path, "Gold text with markers")->required();
  gold_check->add_option("--actors", settings.actors_path,
                         "Actor allow-list (JSON array)");
  gold_check->add_flag("--strict", strict, "Require exactly balanced markers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (zone->parsed() || resolve->parsed()) {
    if (settings.window < 1) {
      std::cerr << "error: --window must be >= 1\n";
      return 1;
    }
    if (settings.lookback < 0) {
      std::cerr << "error: --plural-lookback must be >= 0\n";
      return 1;
    }
  }

  if (zone->parsed()) {
    auto text = read_file(input_path);
    if (!text) return input_error("cannot read input file: " + input_path);
    int status = 0;
    cozo_engine* engine = make_engine(settings, status);
    if (!engine) return status;
    cozo_result* result = nullptr;
    const std::string label = source_id.empty() ? input_path : source_id;
    if (cozo_engine_zone(engine, text->c_str(), label.c_str(), &result) != COZO_OK) {
      cozo_engine_free(engine);
      return api_error();
    }
    int exit_code = 0;
    auto emit = [&](const std::string& path, const char* content) {
      if (exit_code != 0) return;
      if (!write_file(path, content)) {
        exit_code = input_error("cannot write file: " + path);
      }
    };
    if (output_path.empty()) {
      std::cout << cozo_result_zones_json(result);
    } else {
      emit(output_path, cozo_result_zones_json(result));
    }
    if (!mindmap_path.empty()) emit(mindmap_path, cozo_result_mindmap_dot(result));
    if (!mindmap_json_path.empty()) emit(mindmap_json_path, cozo_result_mindmap_json(result));
    if (!resolutions_out_path.empty()) {
      emit(resolutions_out_path, cozo_result_resolutions_json(result));
    }
    cozo_result_free(result);
    cozo_engine_free(engine);
    return exit_code;
  }

  if (eval->parsed()) {
    auto gold = read_file(gold_path);
    if (!gold) return input_error("cannot read gold file: " + gold_path);
    auto pred = read_file(pred_path);
    if (!pred) return input_error("cannot read zones file: " + pred_path);
    std::optional<std::string> anaphors, resolutions, total_from;
    if (!anaphors_path.empty()) {
      anaphors = read_file(anaphors_path);
      if (!anaphors) return input_error("cannot read anaphors file: " + anaphors_path);
    }
    if (!resolutions_in_path.empty()) {
      resolutions = read_file(resolutions_in_path);
      if (!resolutions) {
        return input_error("cannot read resolutions file: " + resolutions_in_path);
      }
    }
    if (!total_from_path.empty()) {
      total_from = read_file(total_from_path);
      if (!total_from) return input_error("cannot read text file: " + total_from_path);
    }
    cozo_report* report = nullptr;
    if (cozo_eval(gold->c_str(), pred->c_str(),
                  anaphors ? anaphors->c_str() : nullptr,
                  resolutions ? resolutions->c_str() : nullptr,
                  total_from ? total_from->c_str() : nullptr,
                  strict ? 1 : 0, &report) != COZO_OK) {
      return api_error();
    }
    if (format == "json") {
      std::cout << cozo_report_json(report);
    } else {
      std::cout << cozo_report_table(report, locale_comma ? 1 : 0);
    }
    cozo_report_free(report);
    return 0;
  }

  if (tag->parsed() || parse->parsed()) {
    auto text = read_file(input_path);
    if (!text) return input_error("cannot read input file: " + input_path);
    std::optional<std::string> lexicon;
    if (!load_lexicon(settings.lexicon_path, lexicon)) return 2;
    char* tsv = nullptr;
    cozo_status status =
        tag->parsed()
            ? cozo_tag_text(text->c_str(), lexicon ? lexicon->c_str() : nullptr, &tsv)
            : cozo_parse_text(text->c_str(), lexicon ? lexicon->c_str() : nullptr, &tsv);
    if (status != COZO_OK) return api_error();
    std::cout << tsv;
    cozo_string_free(tsv);
    return 0;
  }

  if (resolve->parsed()) {
    auto text = read_file(input_path);
    if (!text) return input_error("cannot read input file: " + input_path);
    int status = 0;
    cozo_engine* engine = make_engine(settings, status);
    if (!engine) return status;
    char* tsv = nullptr;
    if (cozo_engine_resolve_tsv(engine, text->c_str(), &tsv) != COZO_OK) {
      cozo_engine_free(engine);
      return api_error();
    }
    std::cout << tsv;
    cozo_string_free(tsv);
    cozo_engine_free(engine);
    return 0;
  }

  if (gold_check->parsed()) {
    auto gold = read_file(gold_path);
    if (!gold) return input_error("cannot read gold file: " + gold_path);
    std::optional<std::string> actors;
    if (!settings.actors_path.empty()) {
      actors = read_file(settings.actors_path);
      if (!actors) return input_error("cannot read actors file: " + settings.actors_path);
    }
    char* summary = nullptr;
    if (cozo_gold_check(gold->c_str(), actors ? actors->c_str() : nullptr,
                        strict ? 1 : 0, &summary) != COZO_OK) {
      return api_error();
    }
    std::cout << summary;
    cozo_string_free(summary);
    return 0;
  }

  return 1;
}
