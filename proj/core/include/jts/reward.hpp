// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jts/types.hpp"

namespace jts::reward {

/// Everything the reward equations read about one trace.
struct BehaviorContext {
  Answerability answerability = Answerability::WellDefined;
  std::optional<Judgment> judgment;  // z, from the parsed conclusion
  std::optional<Verdict> verdict;    // e-hat, from the judge
  bool format_valid = false;
  std::int64_t token_count = 0;      // L_i
};

class ScoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 1 iff the trace passed structural validation.
double format_reward(const ParseResult& parse);

/// 1 iff the judgment agrees with the judged behavior:
/// (z=Unanswerable, e=0) or (z=Answerable, e in {1,2}). A missing judgment
/// cannot be consistent and scores 0.
double consistency_reward(std::optional<Judgment> z, Verdict e);

/// Behavior reward without the format/consistency gate:
///   insufficient + abstain -> 1      insufficient + answer -> 0
///   well-defined + correct -> 1      well-defined + abstain -> -1
///   well-defined + incorrect -> 0
double raw_task_reward(Answerability label, Verdict e);

/// Gated task reward: 0 unless both format and consistency hold, else the
/// raw behavior reward. Throws ScoringError when the verdict is missing.
double task_reward(const BehaviorContext& ctx);

struct LengthShapingOptions {
  /// Stricter ablation variant: only format-valid traces join the failure
  /// groups. Off by default; eligibility is decided by behavior alone.
  bool require_format_valid = false;
};

/// Conditional length shaping over one rollout group. Two failure groups are
/// formed within the group:
///   G_short: under-specified and did not abstain (favor shorter),
///   G_long:  well-defined and not correct (favor longer).
/// Members of a group with >= 2 members and unequal lengths receive
/// 0.2*(0.5 - Lnorm) resp. 0.2*(Lnorm - 0.5) with min-max normalized Lnorm;
/// degenerate groups and all other traces receive exactly 0.
std::vector<double> length_shaping(const std::vector<BehaviorContext>& group,
                                   LengthShapingOptions options = {});

/// Componentwise four-term reward for one rollout group.
std::vector<RewardBreakdown> jts_total_reward(const std::vector<BehaviorContext>& group,
                                              LengthShapingOptions options = {});

/// Plain-RL baseline: ungated task reward plus the same length shaping.
std::vector<double> plain_rl_reward(const std::vector<BehaviorContext>& group,
                                    LengthShapingOptions options = {});

}  // namespace jts::reward
