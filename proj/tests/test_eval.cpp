#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cozo/error.hpp"
#include "cozo/eval.hpp"
#include "cozo/preprocess.hpp"
#include "support/test_util.hpp"

using namespace cozo;

namespace {

ErrorCode code_of(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& error) {
    return error.code();
  }
  FAIL("expected an Error");
  return ErrorCode::CONFIG_INVALID;
}

std::set<int> indices(std::initializer_list<int> values) { return values; }

ResolvedAnaphor make_resolved(int sentence, std::string surface,
                              PronounCategory category,
                              std::vector<std::string> actors) {
  ResolvedAnaphor anaphor;
  anaphor.sentence_index = sentence;
  anaphor.surface = std::move(surface);
  anaphor.category = category;
  anaphor.resolved = !actors.empty();
  anaphor.actors = std::move(actors);
  return anaphor;
}

GoldAnaphor make_gold(int sentence, std::string surface, PronounCategory category,
                      std::string actor) {
  return GoldAnaphor{sentence, std::move(surface), category, std::move(actor)};
}

}  // namespace

TEST_CASE("gold markers carve per-actor sentence sets") {
  const std::string gold_text =
      testutil::read_file(testutil::fixture_path("harry_hedwig_gold.txt"));
  GoldAnnotation gold = parse_gold(gold_text);

  REQUIRE(gold.actor_names.size() == 2);
  CHECK(gold.actor_names[0] == "Harry");
  CHECK(gold.actor_names[1] == "Hedwig");
  CHECK(gold.total_sentences == 5);
  CHECK(gold.sentences_per_actor[0] == indices({0, 1}));
  CHECK(gold.sentences_per_actor[1] == indices({2, 3, 4}));
  REQUIRE(gold.regions.size() == 2);
  CHECK(gold.regions[0].actor == 0);
  CHECK(gold.regions[1].actor == 1);

  const std::string plain =
      normalize(testutil::read_file(testutil::fixture_path("harry_hedwig.txt")));
  CHECK(gold.plain_text == plain);
}

TEST_CASE("strict mode rejects a repeated open marker") {
  const std::string gold_text =
      testutil::read_file(testutil::fixture_path("harry_hedwig_gold.txt"));
  try {
    parse_gold(gold_text, GoldParseMode::STRICT);
    FAIL("expected UNBALANCED_MARKERS");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::UNBALANCED_MARKERS);
  }
}

TEST_CASE("unmarked text yields no actors and unchanged content") {
  GoldAnnotation gold = parse_gold("Just two sentences. Nothing is marked.");
  CHECK(gold.actor_names.empty());
  CHECK(gold.regions.empty());
  CHECK(gold.total_sentences == 2);
  CHECK(gold.plain_text == "Just two sentences. Nothing is marked.");
}

TEST_CASE("marker names are matched case-insensitively, first spelling kept") {
  GoldAnnotation gold = parse_gold("[Anna] Anna waved. [/ANNA] [anna] Anna left. [/Anna]");
  REQUIRE(gold.actor_names.size() == 1);
  CHECK(gold.actor_names[0] == "Anna");
  CHECK(gold.sentences_per_actor[0] == indices({0, 1}));
  CHECK(gold.regions.size() == 2);
}

TEST_CASE("membership needs only span overlap, not containment") {
  // The second sentence starts inside the region and ends outside it.
  GoldAnnotation gold =
      parse_gold("[A] Bea slept. Bea [/A] woke at dawn. Carl entered.");
  REQUIRE(gold.actor_names.size() == 1);
  CHECK(gold.sentences_per_actor[0] == indices({0, 1}));
  CHECK(gold.total_sentences == 3);
}

TEST_CASE("nested regions of different actors overlap correctly") {
  GoldAnnotation gold = parse_gold(
      "[A] Ada spoke. [B] Ben nodded. [/B] Ada rose. [/A] Carl left.");
  REQUIRE(gold.actor_names.size() == 2);
  CHECK(gold.sentences_per_actor[0] == indices({0, 1, 2}));
  CHECK(gold.sentences_per_actor[1] == indices({1}));
  CHECK(gold.total_sentences == 4);
}

TEST_CASE("lenient mode closes regions left open at end of text") {
  GoldAnnotation gold = parse_gold("[A] Ada spoke. Ada rose.");
  CHECK(gold.sentences_per_actor[0] == indices({0, 1}));
  REQUIRE(gold.regions.size() == 1);
  CHECK(gold.regions[0].end == gold.plain_text.size());

  CHECK(code_of([] { parse_gold("[A] Ada spoke.", GoldParseMode::STRICT); }) ==
        ErrorCode::UNBALANCED_MARKERS);
}

TEST_CASE("lenient mode ignores a close without an open") {
  GoldAnnotation gold = parse_gold("Ada spoke. [/Ghost] Ada rose.");
  // The name is registered but owns no sentences.
  REQUIRE(gold.actor_names.size() == 1);
  CHECK(gold.actor_names[0] == "Ghost");
  CHECK(gold.sentences_per_actor[0].empty());
  CHECK(gold.plain_text == "Ada spoke. Ada rose.");

  CHECK(code_of([] {
          parse_gold("Ada spoke. [/Ghost] Ada rose.", GoldParseMode::STRICT);
        }) == ErrorCode::UNBALANCED_MARKERS);
}

TEST_CASE("lenient mode treats a repeated open as the close") {
  GoldAnnotation gold = parse_gold("[A] Ada spoke. [A] Ben left. Carl left.");
  CHECK(gold.sentences_per_actor[0] == indices({0}));
  CHECK(gold.total_sentences == 3);
}

TEST_CASE("an allow-list rejects unknown marker names") {
  const std::vector<std::string> allowed = {"Harry", "Hedwig"};
  CHECK(code_of([&] {
          parse_gold("[Ron] Ron waved. [/Ron]", GoldParseMode::LENIENT, &allowed);
        }) == ErrorCode::UNKNOWN_ACTOR);
  GoldAnnotation ok =
      parse_gold("[harry] Harry waved. [/harry]", GoldParseMode::LENIENT, &allowed);
  CHECK(ok.actor_names.size() == 1);
}

TEST_CASE("unterminated or blank brackets are plain text") {
  GoldAnnotation gold = parse_gold("The list [1 shows data.");
  CHECK(gold.actor_names.empty());
  CHECK(gold.plain_text == "The list [1 shows data.");
  GoldAnnotation blank = parse_gold("Odd [] brackets stay.");
  CHECK(blank.actor_names.empty());
  CHECK(blank.plain_text == "Odd [] brackets stay.");
}

TEST_CASE("marker whitespace normalizes away") {
  GoldAnnotation gold = parse_gold("[A]  Ada   spoke. \n [/A]  Ben   left.");
  CHECK(gold.plain_text == "Ada spoke. Ben left.");
  CHECK(gold.sentences_per_actor[0] == indices({0}));
}

TEST_CASE("find_actor is case-insensitive") {
  GoldAnnotation gold = parse_gold("[Anna] Anna waved. [/Anna]");
  CHECK(gold.find_actor("anna") == 0);
  CHECK(gold.find_actor("ANNA") == 0);
  CHECK(gold.find_actor("Ben") == -1);
}

TEST_CASE("reinserting markers at recorded regions round-trips") {
  std::mt19937 rng(13);
  const std::vector<std::string> bodies = {
      "Ada spoke softly.", "Ben left early.", "The rain kept falling.",
      "Nobody answered the bell.", "Cara hummed a tune."};
  const std::vector<std::string> names = {"Ada", "Ben", "Cara"};
  std::uniform_int_distribution<size_t> body_dist(0, bodies.size() - 1);
  std::uniform_int_distribution<size_t> name_dist(0, names.size() - 1);
  std::uniform_int_distribution<int> length(1, 8);
  std::uniform_int_distribution<int> marked_dist(0, 1);
  for (int round = 0; round < 60; ++round) {
    // Build a balanced annotation at sentence granularity.
    std::string annotated;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) {
      if (!annotated.empty()) annotated += " ";
      if (marked_dist(rng) == 1) {
        const std::string& name = names[name_dist(rng)];
        annotated += "[" + name + "] " + bodies[body_dist(rng)] + " [/" + name + "]";
      } else {
        annotated += bodies[body_dist(rng)];
      }
    }
    GoldAnnotation gold = parse_gold(annotated, GoldParseMode::STRICT);

    // Rebuild the annotated text from plain_text plus the recorded regions.
    std::vector<std::pair<size_t, std::string>> inserts;
    for (const GoldRegion& region : gold.regions) {
      inserts.emplace_back(region.begin,
                           "[" + gold.actor_names[region.actor] + "] ");
      inserts.emplace_back(region.end,
                           " [/" + gold.actor_names[region.actor] + "]");
    }
    std::stable_sort(inserts.begin(), inserts.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string rebuilt;
    size_t cursor = 0;
    for (const auto& [offset, text] : inserts) {
      rebuilt += gold.plain_text.substr(cursor, offset - cursor);
      rebuilt += text;
      cursor = offset;
    }
    rebuilt += gold.plain_text.substr(cursor);

    CHECK(normalize(rebuilt) == normalize(annotated));
    GoldAnnotation reparsed = parse_gold(rebuilt, GoldParseMode::STRICT);
    REQUIRE(reparsed.regions.size() == gold.regions.size());
    for (size_t i = 0; i < gold.regions.size(); ++i) {
      CHECK(reparsed.regions[i].actor == gold.regions[i].actor);
      CHECK(reparsed.regions[i].begin == gold.regions[i].begin);
      CHECK(reparsed.regions[i].end == gold.regions[i].end);
    }
    CHECK(reparsed.plain_text == gold.plain_text);
  }
}

TEST_CASE("matching is the gold overlap share") {
  CHECK(matching(indices({0, 1, 2, 3, 4, 5, 6}), indices({0, 1, 2, 3, 4, 5, 6, 7, 8})) ==
        doctest::Approx(7.0 / 9.0));
  CHECK(matching(indices({1, 2}), indices({1, 2})) == doctest::Approx(1.0));
  CHECK(matching(indices({}), indices({1, 2})) == doctest::Approx(0.0));
  CHECK(matching(indices({5, 6}), indices({1, 2})) == doctest::Approx(0.0));
  CHECK(code_of([] { matching(indices({1}), indices({})); }) == ErrorCode::GOLD_EMPTY);
}

TEST_CASE("error rate is the wrong share of non-gold sentences") {
  CHECK(error_rate(indices({0, 1, 9}), indices({0, 1, 2}), 10) ==
        doctest::Approx(1.0 / 7.0));
  CHECK(error_rate(indices({0, 1}), indices({0, 1, 2}), 10) == doctest::Approx(0.0));
  CHECK(code_of([] { error_rate(indices({0}), indices({0, 1}), 2); }) ==
        ErrorCode::DENOMINATOR_ZERO);
}

TEST_CASE("metrics match a brute-force oracle on random sets") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> total_dist(1, 40);
  std::uniform_int_distribution<int> coin(0, 1);
  int scored = 0;
  for (int round = 0; round < 1200; ++round) {
    const int total = total_dist(rng);
    std::set<int> gold;
    std::set<int> solved;
    for (int i = 0; i < total; ++i) {
      if (coin(rng)) gold.insert(i);
      if (coin(rng)) solved.insert(i);
    }
    long long overlap = 0;
    long long wrong = 0;
    for (int index : solved) {
      if (gold.count(index)) {
        ++overlap;
      } else {
        ++wrong;
      }
    }
    if (!gold.empty()) {
      const double expected = static_cast<double>(overlap) / gold.size();
      const double got = matching(solved, gold);
      CHECK(got == doctest::Approx(expected));
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
      ++scored;
    }
    if (static_cast<int>(gold.size()) < total) {
      const double expected =
          static_cast<double>(wrong) / (total - static_cast<int>(gold.size()));
      const double got = error_rate(solved, gold, total);
      CHECK(got == doctest::Approx(expected));
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
    }
    if (!gold.empty()) {
      CHECK(matching(gold, gold) == doctest::Approx(1.0));
      if (static_cast<int>(gold.size()) < total) {
        CHECK(error_rate(gold, gold, total) == doctest::Approx(0.0));
      }
    }
  }
  CHECK(scored > 1000);
}

TEST_CASE("adding a correct sentence never lowers matching") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int round = 0; round < 100; ++round) {
    const int total = 20;
    std::set<int> gold;
    std::set<int> solved;
    for (int i = 0; i < total; ++i) {
      if (coin(rng)) gold.insert(i);
      if (coin(rng)) solved.insert(i);
    }
    if (gold.empty()) continue;
    const double before = matching(solved, gold);
    for (int index : gold) {
      if (!solved.count(index)) {
        std::set<int> grown = solved;
        grown.insert(index);
        CHECK(matching(grown, gold) >= before);
        break;
      }
    }
  }
}

TEST_CASE("ratios render with two decimals and stripped zeros") {
  CHECK(format_ratio(7.0 / 9.0) == "0.78");
  CHECK(format_ratio(0.75) == "0.75");
  CHECK(format_ratio(0.0) == "0");
  CHECK(format_ratio(1.0) == "1");
  CHECK(format_ratio(0.7) == "0.7");
  CHECK(format_ratio(0.5) == "0.5");
  CHECK(format_ratio(2.0 / 3.0) == "0.67");
  CHECK(format_ratio(0.999) == "1");
  CHECK(format_ratio(0.004) == "0");
}

TEST_CASE("locale_comma renders a decimal comma") {
  CHECK(format_ratio(7.0 / 9.0, true) == "0,78");
  CHECK(format_ratio(0.0, true) == "0");
  CHECK(format_ratio(1.0, true) == "1");
  CHECK(format_ratio(0.5, true) == "0,5");
}

TEST_CASE("anaphor success rates pair gold and predictions by key") {
  const std::vector<GoldAnaphor> gold = {
      make_gold(0, "his", PronounCategory::OBJECT_POSSESSIVE, "Harry"),
      make_gold(2, "she", PronounCategory::SUBJECT_SINGULAR, "Hedwig"),
      make_gold(3, "She", PronounCategory::SUBJECT_SINGULAR, "Hedwig"),
  };
  const std::vector<ResolvedAnaphor> resolutions = {
      make_resolved(0, "his", PronounCategory::OBJECT_POSSESSIVE, {"Harry"}),
      make_resolved(2, "she", PronounCategory::SUBJECT_SINGULAR, {"Hedwig"}),
      make_resolved(3, "She", PronounCategory::SUBJECT_SINGULAR, {"Harry"}),
  };
  CHECK(anaphor_success_rate(resolutions, gold, "Harry",
                             PronounCategory::OBJECT_POSSESSIVE) ==
        doctest::Approx(1.0));
  CHECK(anaphor_success_rate(resolutions, gold, "Hedwig",
                             PronounCategory::SUBJECT_SINGULAR) ==
        doctest::Approx(0.5));
  CHECK(code_of([&] {
          anaphor_success_rate(resolutions, gold, "Harry",
                               PronounCategory::PLURAL);
        }) == ErrorCode::NO_GOLD_ANAPHORS);
}

TEST_CASE("success rate matching is case-insensitive on actor names") {
  const std::vector<GoldAnaphor> gold = {
      make_gold(0, "she", PronounCategory::SUBJECT_SINGULAR, "Hedwig")};
  const std::vector<ResolvedAnaphor> resolutions = {
      make_resolved(0, "she", PronounCategory::SUBJECT_SINGULAR, {"hedwig"})};
  CHECK(anaphor_success_rate(resolutions, gold, "HEDWIG",
                             PronounCategory::SUBJECT_SINGULAR) ==
        doctest::Approx(1.0));
}

TEST_CASE("unresolved or missing predictions count as failures") {
  const std::vector<GoldAnaphor> gold = {
      make_gold(0, "she", PronounCategory::SUBJECT_SINGULAR, "Hedwig"),
      make_gold(1, "she", PronounCategory::SUBJECT_SINGULAR, "Hedwig"),
  };
  const std::vector<ResolvedAnaphor> resolutions = {
      make_resolved(0, "she", PronounCategory::SUBJECT_SINGULAR, {}),
  };
  CHECK(anaphor_success_rate(resolutions, gold, "Hedwig",
                             PronounCategory::SUBJECT_SINGULAR) ==
        doctest::Approx(0.0));
}

TEST_CASE("duplicate keys pair up in order") {
  const std::vector<GoldAnaphor> gold = {
      make_gold(4, "she", PronounCategory::SUBJECT_SINGULAR, "Hedwig"),
      make_gold(4, "she", PronounCategory::SUBJECT_SINGULAR, "Anna"),
  };
  const std::vector<ResolvedAnaphor> resolutions = {
      make_resolved(4, "she", PronounCategory::SUBJECT_SINGULAR, {"Hedwig"}),
      make_resolved(4, "she", PronounCategory::SUBJECT_SINGULAR, {"Hedwig"}),
  };
  // First gold entry pairs with the first prediction (correct), the second
  // with the second (wrong actor).
  CHECK(anaphor_success_rate(resolutions, gold, "Hedwig",
                             PronounCategory::SUBJECT_SINGULAR) ==
        doctest::Approx(1.0));
  CHECK(anaphor_success_rate(resolutions, gold, "Anna",
                             PronounCategory::SUBJECT_SINGULAR) ==
        doctest::Approx(0.0));
}

TEST_CASE("plural predictions succeed when the gold actor is included") {
  const std::vector<GoldAnaphor> gold = {
      make_gold(1, "they", PronounCategory::PLURAL, "Harry"),
      make_gold(1, "they", PronounCategory::PLURAL, "Hedwig"),
  };
  const std::vector<ResolvedAnaphor> resolutions = {
      make_resolved(1, "they", PronounCategory::PLURAL, {"Harry", "Hedwig"}),
      make_resolved(1, "they", PronounCategory::PLURAL, {"Harry", "Hedwig"}),
  };
  CHECK(anaphor_success_rate(resolutions, gold, "Harry", PronounCategory::PLURAL) ==
        doctest::Approx(1.0));
  CHECK(anaphor_success_rate(resolutions, gold, "Hedwig", PronounCategory::PLURAL) ==
        doctest::Approx(1.0));
}

TEST_CASE("resolved anaphors survive a JSON round-trip") {
  std::vector<ResolvedAnaphor> resolutions = {
      make_resolved(2, "she", PronounCategory::SUBJECT_SINGULAR, {"Hedwig"}),
      make_resolved(5, "they", PronounCategory::PLURAL, {"A", "B"}),
      make_resolved(6, "he", PronounCategory::SUBJECT_SINGULAR, {}),
  };
  resolutions[0].position = 5;
  auto parsed = resolved_anaphors_from_json(
      resolved_anaphors_to_json(resolutions).dump());
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0].sentence_index == 2);
  CHECK(parsed[0].position == 5);
  CHECK(parsed[0].surface == "she");
  CHECK(parsed[0].category == PronounCategory::SUBJECT_SINGULAR);
  CHECK(parsed[0].resolved);
  CHECK(parsed[0].actors == std::vector<std::string>{"Hedwig"});
  CHECK(parsed[1].actors == std::vector<std::string>{"A", "B"});
  CHECK_FALSE(parsed[2].resolved);
}

TEST_CASE("gold anaphor sidecars parse from JSON") {
  auto anaphors = gold_anaphors_from_json(R"([
    {"sentence": 0, "surface": "his", "category": "object_possessive", "actor": "Harry"},
    {"sentence": 2, "surface": "she", "category": "subject_singular", "actor": "Hedwig"}
  ])");
  REQUIRE(anaphors.size() == 2);
  CHECK(anaphors[0].sentence_index == 0);
  CHECK(anaphors[0].category == PronounCategory::OBJECT_POSSESSIVE);
  CHECK(anaphors[1].actor == "Hedwig");
  CHECK(code_of([] {
          gold_anaphors_from_json(R"([{"sentence": 0, "surface": "x",
                                       "category": "bogus", "actor": "A"}])");
        }) == ErrorCode::PARSE_ERROR);
}

TEST_CASE("the quality report reproduces the worked comparison table") {
  // One actor; 15 sentences; 9 manually zoned; 7 of them found; none wrong.
  GoldAnnotation gold;
  gold.actor_names = {"Potter"};
  gold.sentences_per_actor = {indices({0, 1, 2, 3, 4, 5, 6, 7, 8})};
  gold.total_sentences = 15;

  std::map<std::string, std::set<int>> zones = {
      {"Potter", indices({0, 1, 2, 3, 4, 5, 6})}};
  QualityReport report = quality_report(zones, gold, 15, {});

  REQUIRE(report.per_actor.size() == 1);
  const ActorQuality& quality = report.per_actor[0];
  CHECK(quality.counted_sentences == 15);
  CHECK(quality.gold_sentences == 9);
  CHECK(quality.zoned_sentences == 7);
  CHECK(quality.overlap_sentences == 7);
  CHECK(quality.erroneous_sentences == 0);
  REQUIRE(quality.matching.has_value());
  CHECK(*quality.matching == doctest::Approx(7.0 / 9.0));
  REQUIRE(quality.error_rate.has_value());
  CHECK(*quality.error_rate == doctest::Approx(0.0));

  const std::string comma_table = report.to_table(true);
  CHECK(comma_table.find("{0,78 ; 0}") != std::string::npos);
  const std::string point_table = report.to_table(false);
  CHECK(point_table.find("{0.78 ; 0}") != std::string::npos);
  CHECK(point_table.find("Potter") != std::string::npos);
}

TEST_CASE("a fully correct subset zoning scores 0.75 with no errors") {
  GoldAnnotation gold;
  gold.actor_names = {"Albert"};
  std::set<int> gold_set;
  for (int i = 0; i < 20; ++i) gold_set.insert(i);
  gold.sentences_per_actor = {gold_set};
  gold.total_sentences = 30;

  std::set<int> found;
  for (int i = 0; i < 15; ++i) found.insert(i);
  QualityReport report = quality_report({{"Albert", found}}, gold, 30, {});
  REQUIRE(report.per_actor.size() == 1);
  CHECK(*report.per_actor[0].matching == doctest::Approx(0.75));
  CHECK(*report.per_actor[0].error_rate == doctest::Approx(0.0));
  CHECK(report.to_table(false).find("{0.75 ; 0}") != std::string::npos);
}

TEST_CASE("report errors become notes instead of aborting other actors") {
  GoldAnnotation gold;
  gold.actor_names = {"Empty", "Full", "Fine"};
  std::set<int> everything;
  for (int i = 0; i < 4; ++i) everything.insert(i);
  gold.sentences_per_actor = {indices({}), everything, indices({0, 1})};
  gold.total_sentences = 4;

  QualityReport report = quality_report(
      {{"Empty", indices({2})}, {"Full", everything}, {"Fine", indices({0, 1})}},
      gold, 4, {});
  REQUIRE(report.per_actor.size() == 3);
  CHECK_FALSE(report.per_actor[0].matching.has_value());
  REQUIRE(report.per_actor[0].notes.size() >= 1);
  CHECK(report.per_actor[0].notes[0].find("GOLD_EMPTY") != std::string::npos);
  CHECK(report.per_actor[1].matching.has_value());
  CHECK_FALSE(report.per_actor[1].error_rate.has_value());
  REQUIRE(report.per_actor[1].notes.size() >= 1);
  CHECK(report.per_actor[1].notes[0].find("DENOMINATOR_ZERO") != std::string::npos);
  CHECK(report.per_actor[2].matching.has_value());
  CHECK(report.per_actor[2].error_rate.has_value());

  // Macro averages only cover actors with a defined value. Matching is
  // defined for Full and Fine; the error rate for Empty (1 wrong of 4
  // non-gold sentences is 0.25) and Fine (0).
  REQUIRE(report.avg_matching.has_value());
  CHECK(*report.avg_matching == doctest::Approx(1.0));
  REQUIRE(report.avg_error_rate.has_value());
  CHECK(*report.avg_error_rate == doctest::Approx(0.125));
}

TEST_CASE("actors zoned by the engine but absent from gold are reported") {
  GoldAnnotation gold = parse_gold("[Anna] Anna waved. [/Anna] Ben left.");
  QualityReport report =
      quality_report({{"Anna", indices({0})}, {"Ben", indices({1})}}, gold, 2, {});
  REQUIRE(report.per_actor.size() == 2);
  CHECK(report.per_actor[0].actor == "Anna");
  CHECK(report.per_actor[1].actor == "Ben");
  CHECK(report.per_actor[1].gold_sentences == 0);
  CHECK_FALSE(report.per_actor[1].matching.has_value());
}

TEST_CASE("success rates appear in the report only with gold anaphors") {
  GoldAnnotation gold = parse_gold("[Hedwig] Hedwig flew. She slept. [/Hedwig]");
  gold.anaphors = {make_gold(1, "She", PronounCategory::SUBJECT_SINGULAR, "Hedwig")};
  const std::vector<ResolvedAnaphor> resolutions = {
      make_resolved(1, "She", PronounCategory::SUBJECT_SINGULAR, {"Hedwig"})};
  QualityReport report =
      quality_report({{"Hedwig", indices({0, 1})}}, gold, 2, resolutions);
  REQUIRE(report.per_actor.size() == 1);
  const ActorQuality& quality = report.per_actor[0];
  REQUIRE(quality.success_rates.count(PronounCategory::SUBJECT_SINGULAR) == 1);
  CHECK(quality.success_rates.at(PronounCategory::SUBJECT_SINGULAR) ==
        doctest::Approx(1.0));
  CHECK(quality.success_rates.count(PronounCategory::PLURAL) == 0);
  CHECK(quality.gold_anaphor_counts.at(PronounCategory::SUBJECT_SINGULAR) == 1);

  const std::string table = report.to_table(false);
  CHECK(table.find("he/she") != std::string::npos);
  CHECK(table.find("1 gold") != std::string::npos);
}

TEST_CASE("report JSON carries totals, per-actor details and quality") {
  GoldAnnotation gold = parse_gold("[Anna] Anna waved. Anna left. [/Anna] Ben sat.");
  QualityReport report = quality_report({{"Anna", indices({0, 1})}}, gold, 3, {});
  auto json = report.to_json();
  CHECK(json["total_sentences"] == 3);
  REQUIRE(json["actors"].size() == 1);
  CHECK(json["actors"][0]["actor"] == "Anna");
  CHECK(json["actors"][0]["gold_sentences"] == 2);
  CHECK(json["actors"][0]["matching"] == doctest::Approx(1.0));
  CHECK(json["avg_matching"] == doctest::Approx(1.0));
  CHECK(json["quality"] == "{1 ; 0}");
  const std::string table = report.to_table(false);
  CHECK(table.find("Average quality = {Matching ; Error-rate}") != std::string::npos);
  CHECK(table.find("{1 ; 0}") != std::string::npos);
}
