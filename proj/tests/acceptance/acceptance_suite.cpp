// Offline acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Every budget below is wall-clock.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "inquire/demo_fixtures.hpp"
#include "inquire/feedback_service.hpp"
#include "inquire/session_export.hpp"
#include "test_support.hpp"

namespace {

using namespace inquire;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;
using testing::Gen;
using testing::naive_count;

constexpr double kGatingBudgetS = 5.0;
constexpr double kNoGenerationBudgetS = 5.0;
constexpr double kExtractionBudgetS = 2.0;
constexpr double kOrderingBudgetS = 2.0;
constexpr double kOfflineLoopBudgetS = 2.0;

constexpr int kGatingCases = 200;
constexpr int kNoGenerationCases = 100;
constexpr int kOrderingCases = 100;
constexpr int kExportFuzzCases = 100;

// Collects the first few failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

ServiceConfig base_config() {
  ServiceConfig config;
  config.guide_path = testing::guide_path();
  config.env_key = "env-key";
  return config;
}

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(testing::data_dir()) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Independent of the library's splitter: terminator followed by whitespace
// or end of text, or any line break.
std::vector<std::string> oracle_sentences(const std::string& text) {
  static const std::regex splitter(R"([.?!](?=\s|$)|\n)");
  std::vector<std::string> out;
  std::sregex_token_iterator it(text.begin(), text.end(), splitter, -1), end;
  for (; it != end; ++it) {
    std::string s = *it;
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    out.push_back(s.substr(first, s.find_last_not_of(" \t\r") - first + 1));
  }
  return out;
}

void collect_strings(const json& j, std::vector<std::string>& out) {
  if (j.is_string()) out.push_back(j.get<std::string>());
  if (j.is_structured()) {
    for (const auto& item : j) collect_strings(item, out);
  }
}

bool has_key_anywhere(const json& j, const std::string& key) {
  if (j.is_object() && j.contains(key)) return true;
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (has_key_anywhere(item, key)) return true;
    }
  }
  return false;
}

std::string oracle_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '"') out += "&quot;";
    else if (c == '\'') out += "&#39;";
    else out += c;
  }
  return out;
}

// ---------------------------------------------------------------------------

Check gating() {
  Check c;
  auto mock = std::make_shared<MockProvider>();
  const FeedbackService service(base_config(), mock);
  Gen gen(1);
  const auto& essay = get_demo_bundle().essay;
  for (int i = 0; i < kGatingCases; ++i) {
    const std::string defense = gen.blank();
    json body = {{"essay", essay},
                 {"label", "CLAIM"},
                 {"question", "What evidence shows this holds in every condition?"}};
    if (gen.coin(0.5)) body["user_defense"] = defense;
    else body["userDefense"] = defense;
    if (gen.coin(0.3)) body["api_key"] = "user-key";
    const auto reply = service.post("/unlock", body.dump(-1, ' ', false, json::error_handler_t::replace));
    const auto parsed = json::parse(reply.body, nullptr, false);
    c.expect(reply.status == 400 && !parsed.is_discarded() && parsed.value("error_code", "") == "EmptyDefense",
             "case " + std::to_string(i) + " -> " + std::to_string(reply.status) + " " + reply.body);
    ++c.cases;
  }
  c.expect(mock->call_count() == 0, "provider called " + std::to_string(mock->call_count()) + " times");
  return c;
}

// Builds a provider reply for `persona`: questions of one to three random
// sentences, excerpts cut from the essay, and in some scripts extra
// generation-shaped fields the service must not pass through.
std::string scripted_challenge(Gen& gen, const PersonaConfig& persona, const std::string& essay,
                               std::size_t& longest_question) {
  json obj = json::object();
  longest_question = 0;
  for (const auto& field : persona.question_fields) {
    std::string q;
    const std::size_t n = 1 + gen.below(3);
    for (std::size_t s = 0; s < n; ++s) {
      if (s) q += ' ';
      q += gen.sentence(6, 16);
    }
    q.back() = '?';
    longest_question = std::max(longest_question, q.size());
    obj[field] = q;
    if (gen.coin(0.7)) {
      const auto sentences = oracle_sentences(essay);
      const auto& source = gen.pick(sentences);
      // Up to four whole words, so the cut never splits a character.
      std::size_t end = 0;
      for (int w = 0; w < 4 && end != std::string::npos; ++w) end = source.find(' ', end + 1);
      obj[excerpt_field_for(field)] = source.substr(0, end);
    }
  }
  if (gen.coin(0.5)) {
    std::string rewrite;
    for (int s = 0; s < 8; ++s) rewrite += gen.sentence(20, 30) + " ";
    obj["suggestion"] = rewrite;
    obj["tip"] = "Always add more evidence to every paragraph you write for your readers.";
    obj["revised_essay"] = rewrite + rewrite;
  }
  std::string raw = obj.dump(gen.coin() ? 2 : -1);
  if (gen.coin(0.7)) raw = "```json\n" + raw + "\n```";
  if (gen.coin(0.5)) raw = "Here are my questions.\n" + raw;
  return raw;
}

Check no_generation() {
  Check c;
  auto mock = std::make_shared<MockProvider>();
  const FeedbackService service(base_config(), mock);
  Gen gen(2);
  for (int i = 0; i < kNoGenerationCases; ++i) {
    const auto& persona = get_persona(gen.coin() ? PersonaId::reviewer2 : PersonaId::confused_reader);
    const std::string essay = gen.essay();
    std::size_t longest = 0;
    mock->push_response(scripted_challenge(gen, persona, essay, longest));

    const json request = {{"essay", essay}, {"persona", to_string(persona.id)}};
    const auto reply = service.post("/challenge", request.dump());
    const auto body = json::parse(reply.body, nullptr, false);
    const std::string tag = "case " + std::to_string(i) + ": ";
    ++c.cases;
    if (reply.status != 200 || body.is_discarded()) {
      c.expect(false, tag + "status " + std::to_string(reply.status) + " " + reply.body);
      continue;
    }
    c.expect(!has_key_anywhere(body, "suggestion"), tag + "suggestion key present");
    c.expect(!has_key_anywhere(body, "tip"), tag + "tip key present");

    std::size_t longest_returned_question = 0;
    for (const auto& card : body["cards"]) {
      longest_returned_question =
          std::max(longest_returned_question, card["question"].get<std::string>().size());
    }
    c.expect(longest_returned_question == longest, tag + "question length changed");
    std::vector<std::string> strings;
    collect_strings(body, strings);
    for (const auto& s : strings) {
      for (const auto& sentence : oracle_sentences(s)) {
        c.expect(sentence.size() <= longest,
                 tag + "sentence of " + std::to_string(sentence.size()) + " bytes exceeds " +
                     std::to_string(longest));
      }
    }
  }
  return c;
}

Check extraction_corpus() {
  Check c;
  const auto corpus = json::parse(read_data("extraction_corpus.json"));
  std::size_t fenced = 0, raw = 0, malformed = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& item = corpus[i];
    const auto kind = item["kind"].get<std::string>();
    const auto text = item["raw"].get<std::string>();
    const std::string tag = "case " + std::to_string(i) + " (" + kind + "): ";
    ++c.cases;
    (kind == "fenced" ? fenced : kind == "raw" ? raw : malformed)++;
    try {
      const auto obj = extract_object(text);
      if (kind == "malformed") {
        c.expect(false, tag + "parsed but should fail");
        continue;
      }
      std::map<std::string, std::string> expected;
      for (const auto& [k, v] : item["expect"].items()) expected[k] = v.get<std::string>();
      c.expect(obj.fields == expected, tag + "fields differ from the embedded object");
    } catch (const Error& e) {
      c.expect(kind == "malformed" && e.code() == ErrorCode::ExtractionFailed,
               tag + std::string(to_string(e.code())));
    } catch (const std::exception& e) {
      c.expect(false, tag + "escaped exception: " + e.what());
    }
  }
  c.expect(fenced == 30 && raw == 15 && malformed == 5, "corpus is not 30/15/5");
  return c;
}

Check prompt_ordering() {
  Check c;
  const auto guide = load_pedagogy_guide(testing::guide_path());
  Gen gen(4);
  for (int i = 0; i < kOrderingCases; ++i) {
    const auto& persona = get_persona(gen.coin() ? PersonaId::reviewer2 : PersonaId::confused_reader);
    const std::string essay = gen.essay();
    const auto prompt = assemble_challenge_prompt(essay, persona, guide).content;
    const std::string tag = "case " + std::to_string(i) + ": ";
    ++c.cases;

    const std::size_t essay_at = prompt.size() - essay.size();
    const std::size_t offsets[] = {
        prompt.find(persona.system_prompt),
        prompt.find(prompts::kGlobalConstraints),
        prompt.find(prompts::kInternalGuideNotice),
        prompt.find(prompts::kReasoningProtocol),
        prompt.find(persona.schema_block),
        essay_at,
    };
    for (std::size_t k = 0; k < 6; ++k) {
      c.expect(offsets[k] != std::string::npos, tag + "segment " + std::to_string(k) + " missing");
      if (k) c.expect(offsets[k - 1] < offsets[k], tag + "segments out of order at " + std::to_string(k));
    }
    c.expect(prompt.compare(essay_at, essay.size(), essay) == 0, tag + "essay not verbatim at the end");
    c.expect(naive_count(prompt, guide.content()) == 1, tag + "guide count != 1");
    const std::string notice_then_guide =
        std::string(prompts::kInternalGuideNotice) + "\n" + guide.content();
    c.expect(naive_count(prompt, notice_then_guide) == 1, tag + "guide lacks internal-only preface");
  }
  return c;
}

Check cardinality() {
  Check c;
  auto mock = std::make_shared<MockProvider>();
  const FeedbackService service(base_config(), mock);
  const auto& demo = get_demo_bundle();

  const std::vector<std::string> r2_labels = {"CLAIM", "REASONING", "COUNTERARGUMENT", "SCOPE"};
  const std::vector<std::string> cr_labels = {"CLARIFICATION", "CO_CONSTRUCTION"};
  for (const auto& [persona, labels] :
       {std::pair{PersonaId::reviewer2, r2_labels}, std::pair{PersonaId::confused_reader, cr_labels}}) {
    // Keys serialize alphabetically, which differs from persona order.
    const auto source = testing::schema_object_for(demo.feedback.at(persona));
    mock->push_response(testing::fenced(source));
    const auto reply = service.post("/challenge",
                                    json({{"essay", demo.essay}, {"persona", to_string(persona)}}).dump());
    ++c.cases;
    const auto body = json::parse(reply.body, nullptr, false);
    if (reply.status != 200 || body.is_discarded()) {
      c.expect(false, std::string(to_string(persona)) + ": status " + std::to_string(reply.status));
      continue;
    }
    std::vector<std::string> got;
    for (const auto& card : body["cards"]) got.push_back(card["label"]);
    c.expect(got == labels, std::string(to_string(persona)) + ": wrong cards or order");

    const auto& fields = get_persona(persona).question_fields;
    for (std::size_t k = 0; k < fields.size() && k < body["cards"].size(); ++k) {
      c.expect(body["cards"][k]["question"] == source[fields[k]], fields[k] + " text changed");
    }
    if (persona == PersonaId::confused_reader) {
      c.expect(body.value("claim_question", "") == source["clarification_question"],
               "claim_question compat field differs from clarification_question");
      c.expect(body.value("reasoning_question", "") == source["co_construction_question"],
               "reasoning_question compat field differs from co_construction_question");
    } else {
      c.expect(!body.contains("claim_question"), "reviewer2 reply carries compat fields");
    }
  }
  return c;
}

Check key_priority() {
  Check c;
  const auto& demo = get_demo_bundle();
  const auto reply_text = testing::fenced(testing::schema_object_for(demo.feedback.at(PersonaId::reviewer2)));
  auto mock = std::make_shared<MockProvider>();

  struct Row {
    std::optional<std::string> user, env;
  };
  const Row rows[] = {{"user", "env"}, {"user", std::nullopt}, {std::nullopt, "env"}, {std::nullopt, std::nullopt}};
  std::vector<int> statuses;
  for (const auto& row : rows) {
    auto config = base_config();
    config.env_key = row.env;
    const FeedbackService service(config, mock);
    json body = {{"essay", demo.essay}};
    if (row.user) body["api_key"] = *row.user;
    mock->push_response(reply_text);
    statuses.push_back(service.post("/challenge", body.dump()).status);
    ++c.cases;
  }
  const auto log = mock->call_log();
  std::vector<std::string> keys;
  for (const auto& call : log) keys.push_back(call.key);
  c.expect(keys == std::vector<std::string>{"user", "user", "env"}, "logged keys differ");
  c.expect(statuses == std::vector<int>{200, 200, 200, 401}, "statuses differ");
  return c;
}

Check offline_loop() {
  Check c;
  const auto& demo = get_demo_bundle();
  auto mock = std::make_shared<MockProvider>();
  const FeedbackService service(base_config(), mock);

  SessionLog log;
  log.persona = PersonaId::reviewer2;
  log.essay_excerpt = make_essay_excerpt(demo.essay);

  for (const auto persona : {PersonaId::reviewer2, PersonaId::confused_reader}) {
    mock->push_response(testing::fenced(testing::schema_object_for(demo.feedback.at(persona))));
    const auto challenge = json::parse(
        service.post("/challenge", json({{"essay", demo.essay}, {"persona", to_string(persona)}}).dump()).body);
    ++c.cases;
    if (!challenge.contains("cards")) {
      c.expect(false, std::string(to_string(persona)) + ": challenge failed " + challenge.dump());
      continue;
    }
    log.total_challenges += challenge["cards"].size();
    for (const auto& card : challenge["cards"]) {
      const auto label = card["label"].get<std::string>();
      const auto parsed_label = parse_card_label(label);
      if (!parsed_label) {
        c.expect(false, "unknown label " + label);
        continue;
      }
      const auto& unlock = demo.unlocks.at(*parsed_label);
      const std::string defense = "My defense for " + label + ": I meant this in a narrower sense.";
      json request = {{"essay", demo.essay},
                      {"label", label},
                      {"question", card["question"]},
                      {"user_defense", defense}};
      if (card.contains("excerpt")) request["excerpt"] = card["excerpt"];
      mock->push_response(testing::fenced(to_json(unlock)));
      const auto reply = service.post("/unlock", request.dump());
      ++c.cases;
      c.expect(reply.status == 200, label + ": unlock status " + std::to_string(reply.status));
      const auto result = json::parse(reply.body, nullptr, false);
      if (result.is_discarded() || !result.contains("tip")) continue;
      SessionEntry entry{label, card["question"], std::nullopt, defense, result["suggestion"],
                         result["tip"], "2026-01-01T00:00:00Z"};
      if (card.contains("excerpt")) entry.excerpt = card["excerpt"].get<std::string>();
      log.entries.push_back(std::move(entry));
      ++log.unlocked_count;
    }
  }
  c.expect(log.entries.size() == 6, "expected six unlocked entries, got " + std::to_string(log.entries.size()));

  const auto doc = service.post("/export", serialize_session_log(log));
  c.expect(doc.status == 200, "export status " + std::to_string(doc.status));
  for (const auto& e : log.entries) {
    for (const auto* text : {&e.question, &e.defense, &e.suggestion, &e.tip}) {
      c.expect(naive_count(doc.body, oracle_escape(*text)) >= 1, e.label + ": missing " + *text);
    }
  }
  for (const auto& [persona, fb] : demo.feedback) {
    for (const auto& card : fb.cards) {
      c.expect(card.excerpt && naive_count(demo.essay, *card.excerpt) >= 1,
               std::string(to_string(card.label)) + ": excerpt not in essay");
    }
  }
  c.expect(mock->remaining() == 0, "unused scripted replies");
  return c;
}

Check export_fuzz() {
  Check c;
  Gen gen(8);
  static const std::vector<std::string> payloads = {
      "<script>alert(1)</script>", "<SCRIPT SRC=//x.test/a.js></SCRIPT>", "<img src=x onerror=alert(1)>",
      "<svg/onload=alert(1)>", "\"><script>x()</script>", "' onmouseover='y()", "<a href=\"javascript:z()\">k</a>",
      "<iframe src=data:text/html,x>", "</style><script>q</script>", "<!--", "<scr<script>ipt>", "&#60;script&#62;"};
  static const std::regex script_tag(R"(<\s*script)", std::regex::icase);
  static const std::regex handler(R"(<[^>]*\son[a-z]+\s*=)", std::regex::icase);
  static const std::regex js_url(R"(<[^>]*javascript:)", std::regex::icase);

  auto text = [&] {
    std::string s = gen.sentence(2, 8);
    const std::size_t n = 1 + gen.below(2);
    for (std::size_t i = 0; i < n; ++i) s += " " + gen.pick(payloads) + " " + gen.sentence(1, 4);
    return s;
  };
  for (int i = 0; i < kExportFuzzCases; ++i) {
    SessionLog log;
    log.persona = gen.coin() ? PersonaId::reviewer2 : PersonaId::confused_reader;
    log.essay_excerpt = text();
    const std::size_t n = gen.below(7);
    for (std::size_t k = 0; k < n; ++k) {
      SessionEntry e{gen.pick(payloads), text(), std::nullopt, text(), text(), text(), ""};
      if (gen.coin()) e.excerpt = text();
      log.entries.push_back(std::move(e));
    }
    log.unlocked_count = n;
    log.total_challenges = n + gen.below(3);
    const std::string tag = "log " + std::to_string(i) + ": ";
    ++c.cases;

    const auto html = render_session_html(parse_session_log(serialize_session_log(log)));
    c.expect(!std::regex_search(html, script_tag), tag + "script element");
    c.expect(!std::regex_search(html, handler), tag + "event handler attribute");
    c.expect(!std::regex_search(html, js_url), tag + "javascript: URL in markup");
    c.expect(naive_count(html, oracle_escape(log.essay_excerpt)) >= 1, tag + "essay excerpt missing");
    std::size_t cursor = 0;
    for (const auto& e : log.entries) {
      for (const auto* field : {&e.question, &e.defense, &e.suggestion, &e.tip}) {
        const auto at = html.find(oracle_escape(*field), cursor);
        c.expect(at != std::string::npos, tag + "entry text missing or out of order");
        if (at != std::string::npos) cursor = at;
      }
    }
  }
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no runtime budget
  std::function<Check()> run;
};

}  // namespace

int main() {
  // Raw provider text is logged on failures; keep the report readable.
  spdlog::set_level(spdlog::level::off);

  const Criterion criteria[] = {
      {1, "gating: blank defenses rejected, zero provider calls", kGatingBudgetS, gating},
      {2, "no-generation: challenge replies carry questions only", kNoGenerationBudgetS, no_generation},
      {3, "extraction corpus: 45 parse, 5 ExtractionFailed", kExtractionBudgetS, extraction_corpus},
      {4, "prompt ordering: six segments, guide once, essay last", kOrderingBudgetS, prompt_ordering},
      {5, "persona cardinality and compat fields", 0, cardinality},
      {6, "key priority: user, user, env, 401", 0, key_priority},
      {7, "offline demo loop with export", kOfflineLoopBudgetS, offline_loop},
      {8, "export safety fuzz", 0, export_fuzz},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    const auto started = Clock::now();
    Check result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.failures.push_back(std::string("uncaught exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - started).count();
    const bool in_budget = criterion.budget_s == 0 || elapsed < criterion.budget_s;
    const bool pass = result.ok() && in_budget;
    failed += pass ? 0 : 1;

    std::printf("%s criterion %d: %s [%zu cases, %.3f s", pass ? "PASS" : "FAIL", criterion.id,
                criterion.name, result.cases, elapsed);
    if (criterion.budget_s > 0) std::printf(" / budget %.1f s", criterion.budget_s);
    std::printf("]\n");
    for (const auto& f : result.failures) std::printf("    %s\n", f.c_str());
    if (!in_budget) std::printf("    over runtime budget\n");
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
