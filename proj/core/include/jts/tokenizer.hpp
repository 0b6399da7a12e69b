// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace jts {

/// Pluggable token counter. Lengths are only ever compared within one
/// tokenizer, so the choice of tokenizer is a run-level configuration.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual std::string name() const = 0;
  virtual std::size_t count_tokens(std::string_view text) const = 0;
};

/// Default tokenizer: maximal runs of non-whitespace characters.
class WhitespaceTokenizer final : public Tokenizer {
 public:
  std::string name() const override { return "whitespace"; }
  std::size_t count_tokens(std::string_view text) const override;
};

/// Shared default instance.
const Tokenizer& default_tokenizer();

}  // namespace jts
