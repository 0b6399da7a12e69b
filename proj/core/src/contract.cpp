// SPDX-License-Identifier: Apache-2.0
#include "jts/contract.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace jts::contract {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool all_whitespace(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_space);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view ltrim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  return s;
}

struct TagScan {
  std::size_t count = 0;
  std::size_t first = std::string_view::npos;
};

TagScan scan_tag(std::string_view text, std::string_view tag) {
  TagScan result;
  std::size_t pos = text.find(tag);
  while (pos != std::string_view::npos) {
    if (result.count == 0) result.first = pos;
    ++result.count;
    pos = text.find(tag, pos + tag.size());
  }
  return result;
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(s.substr(start));
      break;
    }
    lines.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::optional<Judgment> parse_conclusion_line(std::string_view line) {
  const std::string_view t = trim(line);
  if (t == kConcludeAnswerable) return Judgment::Answerable;
  if (t == kConcludeUnanswerable) return Judgment::Unanswerable;
  return std::nullopt;
}

/// Judgment from a judge-block body: well-formed conclusion on the last
/// non-blank line, or the reason it is missing.
struct ConclusionScan {
  std::optional<Judgment> judgment;
  bool conclusion_elsewhere = false;
};

ConclusionScan scan_conclusion(std::string_view block_content) {
  ConclusionScan out;
  const auto lines = split_lines(block_content);
  std::string_view last_line;
  bool have_last = false;
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    if (!all_whitespace(*it)) {
      last_line = *it;
      have_last = true;
      break;
    }
  }
  if (!have_last) return out;
  out.judgment = parse_conclusion_line(last_line);
  if (!out.judgment) {
    for (std::string_view line : lines) {
      if (parse_conclusion_line(line)) {
        out.conclusion_elsewhere = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

ParseResult validate_contract(std::string_view text, int min_final_answer_tokens,
                              const Tokenizer& tokenizer, int min_reasoning_tokens) {
  ParseResult result;
  auto violate = [&result](ViolationCode c) { result.violations.push_back(c); };

  const TagScan think_close = scan_tag(text, kThinkClose);
  const TagScan judge_close = scan_tag(text, kJudgeClose);

  if (think_close.count == 0) violate(ViolationCode::MissingThink);
  if (think_close.count > 1) violate(ViolationCode::MultipleThinkClose);

  // Think region: after the opening tag when present, else from the start of
  // the response; bounded by the first close tag when present.
  const std::size_t region_end =
      think_close.count >= 1 ? think_close.first : text.size();
  std::size_t region_start = 0;
  const std::size_t think_open_pos = text.find(kThinkOpen);
  if (think_open_pos != std::string_view::npos && think_open_pos < region_end) {
    region_start = think_open_pos + kThinkOpen.size();
  }

  // Locate the judge block.
  const std::size_t judge_open_pos = text.find(kJudgeOpen);
  bool have_block = false;
  if (judge_close.count == 0) {
    violate(ViolationCode::MissingJudgeBlock);
  } else {
    if (judge_close.count > 1) violate(ViolationCode::MultipleJudgeClose);
    if (judge_open_pos == std::string_view::npos || judge_open_pos > judge_close.first) {
      violate(ViolationCode::MissingJudgeBlock);
    } else {
      have_block = true;
    }
  }

  if (have_block) {
    // The judge block must be the very first non-whitespace content of the
    // think region and must close before the think block does.
    bool outside = judge_open_pos < region_start;
    if (!outside &&
        !all_whitespace(text.substr(region_start, judge_open_pos - region_start))) {
      outside = true;
    }
    if (judge_close.first + kJudgeClose.size() > region_end) outside = true;
    if (outside) violate(ViolationCode::JudgeOutsideThink);

    const std::size_t content_begin = judge_open_pos + kJudgeOpen.size();
    const ConclusionScan conclusion =
        scan_conclusion(text.substr(content_begin, judge_close.first - content_begin));
    if (conclusion.judgment) {
      result.judgment = conclusion.judgment;
    } else {
      violate(conclusion.conclusion_elsewhere ? ViolationCode::ConclusionNotLast
                                              : ViolationCode::BadConclusionLine);
    }
  }

  // Reasoning segment: between judge-close and think-close.
  const std::size_t judge_close_end =
      have_block ? judge_close.first + kJudgeClose.size() : 0;
  if (have_block && think_close.count == 1 && judge_close_end <= think_close.first) {
    result.reasoning_segment =
        std::string(text.substr(judge_close_end, think_close.first - judge_close_end));
    if (result.judgment == Judgment::Unanswerable &&
        !all_whitespace(*result.reasoning_segment)) {
      violate(ViolationCode::UnanswerableNotTerminated);
    }
    if (result.judgment == Judgment::Answerable &&
        tokenizer.count_tokens(*result.reasoning_segment) <
            static_cast<std::size_t>(std::max(min_reasoning_tokens, 0))) {
      violate(ViolationCode::AnswerableNoReasoning);
    }
  }

  // Final answer after the unique think-close tag.
  if (think_close.count == 1) {
    const std::string_view after =
        ltrim(text.substr(think_close.first + kThinkClose.size()));
    result.final_answer = std::string(after);
    if (tokenizer.count_tokens(after) <
        static_cast<std::size_t>(std::max(min_final_answer_tokens, 0))) {
      violate(ViolationCode::FinalAnswerTooShort);
    }
  }

  result.valid = result.violations.empty();
  return result;
}

std::optional<Judgment> extract_conclusion(std::string_view text) {
  const std::size_t open_pos = text.find(kJudgeOpen);
  if (open_pos == std::string_view::npos) return std::nullopt;
  const std::size_t content_begin = open_pos + kJudgeOpen.size();
  const std::size_t close_pos = text.find(kJudgeClose, content_begin);
  if (close_pos == std::string_view::npos) return std::nullopt;
  return scan_conclusion(text.substr(content_begin, close_pos - content_begin)).judgment;
}

std::optional<std::string> extract_final_answer(std::string_view text) {
  const TagScan think_close = scan_tag(text, kThinkClose);
  if (think_close.count != 1) return std::nullopt;
  return std::string(ltrim(text.substr(think_close.first + kThinkClose.size())));
}

std::string tail_two_paragraphs(std::string_view answer_text) {
  while (!answer_text.empty() && is_space(answer_text.back())) {
    answer_text.remove_suffix(1);
  }
  if (answer_text.empty()) return std::string{};

  struct Paragraph {
    std::size_t begin = 0;
    std::size_t end = 0;
  };
  std::vector<Paragraph> paragraphs;
  bool in_paragraph = false;
  const auto lines = split_lines(answer_text);
  std::size_t offset = 0;
  for (std::string_view line : lines) {
    const bool blank = all_whitespace(line);
    if (!blank && !in_paragraph) {
      paragraphs.push_back({offset, offset + line.size()});
    } else if (!blank) {
      paragraphs.back().end = offset + line.size();
    }
    in_paragraph = !blank;
    offset += line.size() + 1;  // '\n'
  }

  if (paragraphs.size() <= 1) return std::string(answer_text);
  const Paragraph& a = paragraphs[paragraphs.size() - 2];
  const Paragraph& b = paragraphs.back();
  return std::string(answer_text.substr(a.begin, a.end - a.begin)) + "\n\n" +
         std::string(answer_text.substr(b.begin, b.end - b.begin));
}

}  // namespace jts::contract
