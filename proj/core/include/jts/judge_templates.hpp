// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jts::judge {

enum class JudgeKind {
  TrainWellDefined,    // 3-way: 0 abstain / 1 correct / 2 incorrect
  TrainUnderSpecified, // 2-way: 0 abstain / 1 substantive answer
  EvalDetection,       // JSON {"detected": "Yes/No", "reason": ...}
  EvalAbstention,      // single word Yes/No
  EvalCorrectness,     // single word correct/incorrect
  TrajectoryQuality,   // JSON {hesitation_count, completeness, executability}
};

std::string to_string(JudgeKind kind);
std::optional<JudgeKind> judge_kind_from_string(const std::string& s);

struct PromptSlots {
  std::optional<std::string> question;
  std::optional<std::string> model_answer;
  std::optional<std::string> ref_answer;
  std::optional<std::string> abstention_label;
};

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The fixed instruction text of a template, without any slot values.
std::string_view template_body(JudgeKind kind);

/// System message accompanying the prompt; empty for kinds without one.
std::string_view system_instruction(JudgeKind kind);

/// Deterministic, byte-exact render. Throws RenderError naming the first
/// missing slot the kind requires.
std::string render_prompt(JudgeKind kind, const PromptSlots& slots);

}  // namespace jts::judge
