#include <benchmark/benchmark.h>

#include <string>

#include "inquire/demo_fixtures.hpp"
#include "inquire/persona_engine.hpp"
#include "inquire/session_export.hpp"
#include "inquire/structured_output.hpp"

namespace {

std::string fenced_reviewer_reply() {
  const auto& bundle = inquire::get_demo_bundle();
  nlohmann::json obj;
  const auto& persona = inquire::get_persona(inquire::PersonaId::reviewer2);
  const auto& cards = bundle.feedback.at(inquire::PersonaId::reviewer2).cards;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    obj[persona.question_fields[i]] = cards[i].question;
    if (cards[i].excerpt) obj[inquire::excerpt_field_for(persona.question_fields[i])] = *cards[i].excerpt;
  }
  return "Here are my questions.\n```json\n" + obj.dump(2) + "\n```\n";
}

void BM_ExtractFenced(benchmark::State& state) {
  const std::string raw = fenced_reviewer_reply();
  for (auto _ : state) {
    benchmark::DoNotOptimize(inquire::extract_object(raw));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * raw.size()));
}
BENCHMARK(BM_ExtractFenced);

void BM_ExtractRawFallback(benchmark::State& state) {
  std::string raw = fenced_reviewer_reply();
  raw.replace(raw.find("```json"), 7, "");
  for (auto _ : state) {
    benchmark::DoNotOptimize(inquire::extract_object(raw));
  }
}
BENCHMARK(BM_ExtractRawFallback);

void BM_ValidateChallenge(benchmark::State& state) {
  const auto obj = inquire::extract_object(fenced_reviewer_reply());
  const auto& persona = inquire::get_persona(inquire::PersonaId::reviewer2);
  const auto& essay = inquire::get_demo_bundle().essay;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inquire::validate_challenge(obj, persona, essay));
  }
}
BENCHMARK(BM_ValidateChallenge);

void BM_AssembleChallengePrompt(benchmark::State& state) {
  const auto guide = inquire::load_pedagogy_guide(INQUIRE_GUIDE_PATH);
  const auto& persona = inquire::get_persona(inquire::PersonaId::reviewer2);
  std::string essay;
  while (essay.size() < static_cast<std::size_t>(state.range(0))) essay += inquire::get_demo_bundle().essay;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inquire::assemble_challenge_prompt(essay, persona, guide));
  }
}
BENCHMARK(BM_AssembleChallengePrompt)->Range(1 << 10, 1 << 16);

void BM_RenderSession(benchmark::State& state) {
  const auto& bundle = inquire::get_demo_bundle();
  inquire::SessionLog log;
  log.essay_excerpt = inquire::make_essay_excerpt(bundle.essay);
  for (const auto& card : bundle.feedback.at(inquire::PersonaId::reviewer2).cards) {
    const auto& unlock = bundle.unlocks.at(card.label);
    log.entries.push_back({std::string(inquire::to_string(card.label)), card.question, card.excerpt,
                           "Because <b>I</b> think so & more.", unlock.suggestion, unlock.tip,
                           "2026-03-14T12:00:00Z"});
  }
  log.total_challenges = log.unlocked_count = log.entries.size();
  for (auto _ : state) {
    benchmark::DoNotOptimize(inquire::render_session_html(log));
  }
}
BENCHMARK(BM_RenderSession);

void BM_NormalizeForMatch(benchmark::State& state) {
  const auto& essay = inquire::get_demo_bundle().essay;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inquire::normalize_for_match(essay));
  }
}
BENCHMARK(BM_NormalizeForMatch);

}  // namespace
BENCHMARK_MAIN();
