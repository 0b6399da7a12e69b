// SPDX-License-Identifier: Apache-2.0
#include "jts/reward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jts::reward {
namespace {

bool abstained(const BehaviorContext& ctx) {
  return ctx.verdict && *ctx.verdict == Verdict::Abstain;
}

bool correct(const BehaviorContext& ctx) {
  return ctx.verdict && *ctx.verdict == Verdict::CorrectAnswer;
}

void require_verdicts(const std::vector<BehaviorContext>& group) {
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!group[i].verdict) {
      throw ScoringError("trace " + std::to_string(i) +
                         " in rollout group has no judge verdict");
    }
  }
}

}  // namespace

double format_reward(const ParseResult& parse) { return parse.valid ? 1.0 : 0.0; }

double consistency_reward(std::optional<Judgment> z, Verdict e) {
  if (!z) return 0.0;
  if (*z == Judgment::Unanswerable && e == Verdict::Abstain) return 1.0;
  if (*z == Judgment::Answerable && e != Verdict::Abstain) return 1.0;
  return 0.0;
}

double raw_task_reward(Answerability label, Verdict e) {
  if (label == Answerability::UnderSpecified) {
    return e == Verdict::Abstain ? 1.0 : 0.0;
  }
  switch (e) {
    case Verdict::CorrectAnswer: return 1.0;
    case Verdict::Abstain: return -1.0;
    case Verdict::IncorrectAnswer: return 0.0;
  }
  return 0.0;
}

double task_reward(const BehaviorContext& ctx) {
  if (!ctx.verdict) throw ScoringError("task reward requires a judge verdict");
  if (!ctx.format_valid) return 0.0;
  if (consistency_reward(ctx.judgment, *ctx.verdict) != 1.0) return 0.0;
  return raw_task_reward(ctx.answerability, *ctx.verdict);
}

std::vector<double> length_shaping(const std::vector<BehaviorContext>& group,
                                   LengthShapingOptions options) {
  std::vector<double> shaped(group.size(), 0.0);

  enum class Membership { None, Short, Long };
  auto membership = [&options](const BehaviorContext& ctx) {
    if (options.require_format_valid && !ctx.format_valid) return Membership::None;
    if (ctx.answerability == Answerability::UnderSpecified && !abstained(ctx)) {
      return Membership::Short;
    }
    if (ctx.answerability == Answerability::WellDefined && !correct(ctx)) {
      return Membership::Long;
    }
    return Membership::None;
  };

  for (Membership which : {Membership::Short, Membership::Long}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (membership(group[i]) == which) members.push_back(i);
    }
    if (members.size() <= 1) continue;
    std::int64_t lo = group[members.front()].token_count;
    std::int64_t hi = lo;
    for (std::size_t i : members) {
      lo = std::min(lo, group[i].token_count);
      hi = std::max(hi, group[i].token_count);
    }
    if (lo == hi) continue;  // all equal: the whole group gets zero
    for (std::size_t i : members) {
      const double norm = static_cast<double>(group[i].token_count - lo) /
                          static_cast<double>(hi - lo);
      shaped[i] = which == Membership::Short ? 0.2 * (0.5 - norm) : 0.2 * (norm - 0.5);
    }
  }
  return shaped;
}

std::vector<RewardBreakdown> jts_total_reward(const std::vector<BehaviorContext>& group,
                                              LengthShapingOptions options) {
  require_verdicts(group);
  const std::vector<double> lengths = length_shaping(group, options);
  std::vector<RewardBreakdown> out(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    RewardBreakdown& b = out[i];
    b.format = group[i].format_valid ? 1.0 : 0.0;
    b.consistency = consistency_reward(group[i].judgment, *group[i].verdict);
    b.task = task_reward(group[i]);
    b.length = lengths[i];
    b.total = b.total_from_parts();
  }
  return out;
}

std::vector<double> plain_rl_reward(const std::vector<BehaviorContext>& group,
                                    LengthShapingOptions options) {
  require_verdicts(group);
  const std::vector<double> lengths = length_shaping(group, options);
  std::vector<double> out(group.size(), 0.0);
  for (std::size_t i = 0; i < group.size(); ++i) {
    out[i] = raw_task_reward(group[i].answerability, *group[i].verdict) + lengths[i];
  }
  return out;
}

}  // namespace jts::reward
