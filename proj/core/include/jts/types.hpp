// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jts {

// ---------------------------------------------------------------------------
// Question labels
// ---------------------------------------------------------------------------

/// Whether the question's context pins down a unique valid answer.
enum class Answerability {
  WellDefined,
  UnderSpecified,
};

/// Canonical label string: "well_defined" or "insufficient".
std::string to_label(Answerability a);

/// Parses a label. Accepts the canonical strings plus the aliases
/// "under_specified" and "unanswerable" for the insufficient case.
/// Throws std::invalid_argument on anything else.
Answerability answerability_from_label(const std::string& label);

struct Question {
  std::string id;
  std::string subset;
  std::string prompt;
  Answerability answerability = Answerability::WellDefined;
  std::optional<std::string> reference_answer;  // present iff well-defined
  std::optional<std::string> hidden_premise;    // synthetic env only
};

// ---------------------------------------------------------------------------
// Judgment and verdict
// ---------------------------------------------------------------------------

/// The model's own answerability commitment (z).
enum class Judgment {
  Answerable,
  Unanswerable,
};

/// Serialized form: exactly "ANSWERABLE" / "UNANSWERABLE".
std::string to_string(Judgment j);
std::optional<Judgment> judgment_from_string(const std::string& s);

/// External evaluator result (e-hat): 0 abstention, 1 correct (or, on
/// under-specified questions, any substantive) answer, 2 incorrect answer.
enum class Verdict : int {
  Abstain = 0,
  CorrectAnswer = 1,
  IncorrectAnswer = 2,
};

std::optional<Verdict> verdict_from_code(int code);

// ---------------------------------------------------------------------------
// Trace-contract parse result
// ---------------------------------------------------------------------------

enum class ViolationCode {
  MissingThink,
  MultipleThinkClose,
  MissingJudgeBlock,
  MultipleJudgeClose,
  ConclusionNotLast,
  BadConclusionLine,
  UnanswerableNotTerminated,
  AnswerableNoReasoning,
  FinalAnswerTooShort,
  JudgeOutsideThink,
};

std::string to_string(ViolationCode code);
std::optional<ViolationCode> violation_from_string(const std::string& s);

/// Structural audit of one response. `valid` holds iff `violations` is empty.
struct ParseResult {
  bool valid = false;
  std::optional<Judgment> judgment;
  std::optional<std::string> final_answer;
  /// Content between the judge-close and think-close tags.
  std::optional<std::string> reasoning_segment;
  std::vector<ViolationCode> violations;
};

// ---------------------------------------------------------------------------
// Traces and rollout groups
// ---------------------------------------------------------------------------

struct Trace {
  std::string question_id;
  std::string text;
  std::int64_t token_count = 0;  // L_i
  std::optional<ParseResult> parse;
  std::optional<Judgment> judgment;
  std::optional<std::string> final_answer;
  std::optional<Verdict> verdict;
  std::optional<bool> detected;
  std::optional<bool> abstained;
};

/// Per-trace reward terms. `total` must equal the sum of the parts.
struct RewardBreakdown {
  double format = 0.0;       // {0,1}
  double consistency = 0.0;  // {0,1}
  double task = 0.0;         // {-1,0,1}
  double length = 0.0;       // [-0.1, 0.1]
  double total = 0.0;

  double total_from_parts() const { return format + consistency + task + length; }
};

struct RolloutGroup {
  std::string question_id;
  std::vector<Trace> traces;
  std::vector<double> rewards;
  std::vector<double> advantages;

  /// Throws std::logic_error when the size/normalization invariants fail.
  void validate() const;
};

}  // namespace jts
