// SPDX-License-Identifier: Apache-2.0
#include "jts/types.hpp"

#include <cmath>

namespace jts {

std::string to_label(Answerability a) {
  return a == Answerability::WellDefined ? "well_defined" : "insufficient";
}

Answerability answerability_from_label(const std::string& label) {
  if (label == "well_defined") return Answerability::WellDefined;
  if (label == "insufficient" || label == "under_specified" || label == "unanswerable") {
    return Answerability::UnderSpecified;
  }
  throw std::invalid_argument("unknown answerability label: '" + label + "'");
}

std::string to_string(Judgment j) {
  return j == Judgment::Answerable ? "ANSWERABLE" : "UNANSWERABLE";
}

std::optional<Judgment> judgment_from_string(const std::string& s) {
  if (s == "ANSWERABLE") return Judgment::Answerable;
  if (s == "UNANSWERABLE") return Judgment::Unanswerable;
  return std::nullopt;
}

std::optional<Verdict> verdict_from_code(int code) {
  switch (code) {
    case 0: return Verdict::Abstain;
    case 1: return Verdict::CorrectAnswer;
    case 2: return Verdict::IncorrectAnswer;
    default: return std::nullopt;
  }
}

std::string to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::MissingThink: return "MissingThink";
    case ViolationCode::MultipleThinkClose: return "MultipleThinkClose";
    case ViolationCode::MissingJudgeBlock: return "MissingJudgeBlock";
    case ViolationCode::MultipleJudgeClose: return "MultipleJudgeClose";
    case ViolationCode::ConclusionNotLast: return "ConclusionNotLast";
    case ViolationCode::BadConclusionLine: return "BadConclusionLine";
    case ViolationCode::UnanswerableNotTerminated: return "UnanswerableNotTerminated";
    case ViolationCode::AnswerableNoReasoning: return "AnswerableNoReasoning";
    case ViolationCode::FinalAnswerTooShort: return "FinalAnswerTooShort";
    case ViolationCode::JudgeOutsideThink: return "JudgeOutsideThink";
  }
  return "Unknown";
}

std::optional<ViolationCode> violation_from_string(const std::string& s) {
  static const std::vector<ViolationCode> all = {
      ViolationCode::MissingThink,       ViolationCode::MultipleThinkClose,
      ViolationCode::MissingJudgeBlock,  ViolationCode::MultipleJudgeClose,
      ViolationCode::ConclusionNotLast,  ViolationCode::BadConclusionLine,
      ViolationCode::UnanswerableNotTerminated, ViolationCode::AnswerableNoReasoning,
      ViolationCode::FinalAnswerTooShort, ViolationCode::JudgeOutsideThink,
  };
  for (ViolationCode c : all) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

void RolloutGroup::validate() const {
  const std::size_t g = traces.size();
  if (g < 1) throw std::logic_error("rollout group must contain at least one trace");
  if (rewards.size() != g || advantages.size() != g) {
    throw std::logic_error("rollout group rewards/advantages must match trace count");
  }
  bool all_equal = true;
  for (std::size_t i = 1; i < g; ++i) {
    if (rewards[i] != rewards[0]) { all_equal = false; break; }
  }
  if (all_equal) {
    for (double a : advantages) {
      if (a != 0.0) throw std::logic_error("equal-reward group must have all-zero advantages");
    }
    return;
  }
  double mean = 0.0;
  for (double a : advantages) mean += a;
  mean /= static_cast<double>(g);
  if (g > 1 && std::abs(mean) > 1e-9) {
    throw std::logic_error("advantages of a normalized group must have zero mean");
  }
}

}  // namespace jts
