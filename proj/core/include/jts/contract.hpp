// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jts/tokenizer.hpp"
#include "jts/types.hpp"

namespace jts::contract {

// Literal tags of the output contract. Matching is exact-string and
// case-sensitive: the contract is emitted by a template under our control,
// and lenient matching would open the format reward to near-tag gaming.
inline constexpr std::string_view kThinkOpen = "<think>";
inline constexpr std::string_view kThinkClose = "</think>";
inline constexpr std::string_view kJudgeOpen = "<answerability_judge>";
inline constexpr std::string_view kJudgeClose = "</answerability_judge>";
inline constexpr std::string_view kConcludeAnswerable = "Conclusion: ANSWERABLE";
inline constexpr std::string_view kConcludeUnanswerable = "Conclusion: UNANSWERABLE";

/// Structural validation of one response against the output contract:
///   1. exactly one </think> tag;
///   2. exactly one </answerability_judge> tag;
///   3. the judge block opens as the first non-whitespace content inside the
///      think block (an opening <think> tag itself is optional: some chat
///      stacks pre-inject it, and only close tags are counted);
///   4. the last line inside the judge block is exactly one of the two
///      conclusion lines;
///   5. UNANSWERABLE terminates reasoning: nothing but whitespace between
///      judge-close and think-close;
///   6. ANSWERABLE requires at least `min_reasoning_tokens` tokens of
///      reasoning between judge-close and think-close;
///   7. the final answer after think-close has at least
///      `min_final_answer_tokens` tokens.
/// All detectable violations are collected rather than stopping at the first;
/// checks whose anchors are missing (e.g. a conclusion line when there is no
/// judge block) are skipped instead of double-reported.
ParseResult validate_contract(std::string_view text, int min_final_answer_tokens,
                              const Tokenizer& tokenizer = default_tokenizer(),
                              int min_reasoning_tokens = 1);

/// Judgment from the conclusion line, iff a well-formed conclusion line is
/// the last line of the judge block. Tolerates surrounding whitespace only.
std::optional<Judgment> extract_conclusion(std::string_view text);

/// Exact substring after the unique </think> tag, trimmed of leading
/// whitespace. Empty result is distinct from nullopt (tag count != 1).
std::optional<std::string> extract_final_answer(std::string_view text);

/// Last two paragraphs of `answer_text` (blank-line boundaries), joined by a
/// blank line; the whole text when there are fewer than two paragraphs.
/// Trailing blank lines are ignored before splitting.
std::string tail_two_paragraphs(std::string_view answer_text);

}  // namespace jts::contract
