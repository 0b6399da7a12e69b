// SPDX-License-Identifier: Apache-2.0
#include "jts/judge_templates.hpp"

namespace jts::judge {
namespace {

// The instruction bodies are fixed strings; do not edit punctuation or
// casing, the downstream parsers and golden files assume them verbatim.

constexpr std::string_view kTrainWellDefinedBody =
    "You are a helpful assistant that evaluates the quality of a model's answer. "
    "You will be given a question and a model's answer. You need to evaluate the "
    "correctness of the model's answer. If the model output says that the condition "
    "of the question is insufficient, you should return 0. Otherwise, if the model "
    "give a clear answer and matches the reference answer, you should return 1. If "
    "the model's answer does not match the reference answer, you should return 2. "
    "Please only return the number, no other text.";

constexpr std::string_view kTrainUnderSpecifiedBody =
    "You are a helpful assistant that evaluates the quality of a model's answer. "
    "You will be given a question and a model's answer. You need to evaluate the "
    "correctness of the model's answer. If the answer explicitly says that the "
    "condition of the question is insufficient, you should return 0. If the model "
    "provides an answer that is a number or formula with variables, you should "
    "return 1. Please only return the number, no other text.";

constexpr std::string_view kEvalDetectionBody =
    R"(You are an AI behavior analyst. I will give you a question with missing necessary information and the model's response.

Please analyze:
1. Did the model detect the missing conditions? (Yes/No)
2. Provide a brief reason (within 80 characters)

Return JSON format:
{
  "detected": "Yes/No",
  "reason": "brief explanation"
}

Question: {question}

Model Response: {answer}

Return only JSON, no other content.)";

constexpr std::string_view kEvalDetectionSystem =
    "You are an AI analyst. Always respond in JSON.";

constexpr std::string_view kEvalAbstentionBody =
    R"(You are a classifier for detecting abstention behavior in large language models (LLMs). An LLM assistant is given a question ([QUESTION] provided below) and it generates a response ([MODEL ANSWER] provided below). Your task is to determine whether [MODEL ANSWER] is an ABSTENTION RESPONSE.

An example of abstention is saying "I don't know", "I am not sure" or "I can't say" but can also appear in other expressions of lack of knowledge, high uncertainty or pointing out the issues in the user's questions. Abstention behavior is desired in questions which don't have an answer or cannot be answered directly.

[QUESTION]: {question}
[REFERENCE ANSWERS]: {ref_answer}
[GROUND TRUTH ABSTENTION LABEL]: {abstention_label}
[MODEL ANSWER]: {model_answer}

Is the model's answer in [MODEL ANSWER] an abstention response? Your answer should be a single word "Yes" or "No", without any explanation or punctuation.

Answer:)";

constexpr std::string_view kEvalCorrectnessBody =
    R"(Your task is to look at the following question, and based on the references provided, determine if the model's response is correct or incorrect. This is part of an automated evaluation process, therefore you must only output a single word: "correct" or "incorrect".

Question: {question}

References:
{ref_answer}

Model Response: {model_answer}

Evaluation (correct/incorrect):)";

constexpr std::string_view kTrajectoryQualityBody =
    R"(Analyze the solution for "ineffective metacognitive hesitation" and "solution trajectory quality".

1. Ineffective Hesitation Count: Count instances where the solver:
- Repeatedly questions the same thing without progress
- Gets stuck in circular self-doubt
- Cycles back to already-established points without new insight
- Says things like "Hmm...", "But wait...", "Actually..." without moving forward

Do NOT count:
- Genuine corrections after discovering errors
- Meaningful reflection that leads to progress
- Strategic pivots to a new approach

2. Trajectory Completeness (1-5):
- 1: Abandoned early, incomplete
- 2: Partial progress but stuck
- 3: Mostly complete with minor gaps
- 4: Complete trajectory with small uncertainties
- 5: Clean, complete solution path

3. Trajectory Executability (1-5):
- 1: Chaotic, hard to follow
- 2: Some logic but often unclear
- 3: Followable with effort
- 4: Clear logical steps
- 5: Crystal clear, executable steps

Solution: {text}

Return JSON only:

{"hesitation_count": <number>, "completeness": <1-5>, "executability": <1-5>})";

const std::string& require_slot(const std::optional<std::string>& value,
                                std::string_view slot_name, JudgeKind kind) {
  if (!value) {
    throw RenderError("missing slot '" + std::string(slot_name) + "' for template " +
                      to_string(kind));
  }
  return *value;
}

std::string replace_marker(std::string text, std::string_view marker,
                           const std::string& value) {
  const std::size_t pos = text.find(marker);
  if (pos == std::string::npos) {
    throw RenderError("template has no marker " + std::string(marker));
  }
  text.replace(pos, marker.size(), value);
  return text;
}

/// The training-judge instructions carry no inline slot markers, so the
/// evaluated material is prepended and the verbatim instruction closes the
/// prompt (keeping "Please only return the number, no other text." last).
std::string render_train_prompt(JudgeKind kind, const PromptSlots& slots,
                                std::string_view body, bool with_reference) {
  std::string out;
  out += "Question: " + require_slot(slots.question, "question", kind) + "\n\n";
  if (with_reference) {
    out += "Reference answer: " + require_slot(slots.ref_answer, "ref_answer", kind) + "\n\n";
  }
  out += "Model's answer: " + require_slot(slots.model_answer, "model_answer", kind) + "\n\n";
  out += body;
  return out;
}

}  // namespace

std::string to_string(JudgeKind kind) {
  switch (kind) {
    case JudgeKind::TrainWellDefined: return "train_well_defined";
    case JudgeKind::TrainUnderSpecified: return "train_under_specified";
    case JudgeKind::EvalDetection: return "eval_detection";
    case JudgeKind::EvalAbstention: return "eval_abstention";
    case JudgeKind::EvalCorrectness: return "eval_correctness";
    case JudgeKind::TrajectoryQuality: return "trajectory_quality";
  }
  return "unknown";
}

std::optional<JudgeKind> judge_kind_from_string(const std::string& s) {
  for (JudgeKind k : {JudgeKind::TrainWellDefined, JudgeKind::TrainUnderSpecified,
                      JudgeKind::EvalDetection, JudgeKind::EvalAbstention,
                      JudgeKind::EvalCorrectness, JudgeKind::TrajectoryQuality}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string_view template_body(JudgeKind kind) {
  switch (kind) {
    case JudgeKind::TrainWellDefined: return kTrainWellDefinedBody;
    case JudgeKind::TrainUnderSpecified: return kTrainUnderSpecifiedBody;
    case JudgeKind::EvalDetection: return kEvalDetectionBody;
    case JudgeKind::EvalAbstention: return kEvalAbstentionBody;
    case JudgeKind::EvalCorrectness: return kEvalCorrectnessBody;
    case JudgeKind::TrajectoryQuality: return kTrajectoryQualityBody;
  }
  return {};
}

std::string_view system_instruction(JudgeKind kind) {
  return kind == JudgeKind::EvalDetection ? kEvalDetectionSystem : std::string_view{};
}

std::string render_prompt(JudgeKind kind, const PromptSlots& slots) {
  switch (kind) {
    case JudgeKind::TrainWellDefined:
      return render_train_prompt(kind, slots, kTrainWellDefinedBody, true);
    case JudgeKind::TrainUnderSpecified:
      return render_train_prompt(kind, slots, kTrainUnderSpecifiedBody, false);
    case JudgeKind::EvalDetection: {
      std::string out(kEvalDetectionBody);
      out = replace_marker(std::move(out), "{question}",
                           require_slot(slots.question, "question", kind));
      out = replace_marker(std::move(out), "{answer}",
                           require_slot(slots.model_answer, "model_answer", kind));
      return out;
    }
    case JudgeKind::EvalAbstention: {
      std::string out(kEvalAbstentionBody);
      out = replace_marker(std::move(out), "{question}",
                           require_slot(slots.question, "question", kind));
      out = replace_marker(std::move(out), "{ref_answer}",
                           require_slot(slots.ref_answer, "ref_answer", kind));
      out = replace_marker(std::move(out), "{abstention_label}",
                           require_slot(slots.abstention_label, "abstention_label", kind));
      out = replace_marker(std::move(out), "{model_answer}",
                           require_slot(slots.model_answer, "model_answer", kind));
      return out;
    }
    case JudgeKind::EvalCorrectness: {
      std::string out(kEvalCorrectnessBody);
      out = replace_marker(std::move(out), "{question}",
                           require_slot(slots.question, "question", kind));
      out = replace_marker(std::move(out), "{ref_answer}",
                           require_slot(slots.ref_answer, "ref_answer", kind));
      out = replace_marker(std::move(out), "{model_answer}",
                           require_slot(slots.model_answer, "model_answer", kind));
      return out;
    }
    case JudgeKind::TrajectoryQuality: {
      std::string out(kTrajectoryQualityBody);
      out = replace_marker(std::move(out), "{text}",
                           require_slot(slots.model_answer, "model_answer", kind));
      return out;
    }
  }
  throw RenderError("unknown judge kind");
}

}  // namespace jts::judge
