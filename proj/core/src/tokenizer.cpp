// SPDX-License-Identifier: Apache-2.0
#include "jts/tokenizer.hpp"

#include <cctype>

namespace jts {

std::size_t WhitespaceTokenizer::count_tokens(std::string_view text) const {
  std::size_t count = 0;
  bool in_token = false;
  for (unsigned char c : text) {
    const bool ws = std::isspace(c) != 0;
    if (!ws && !in_token) ++count;
    in_token = !ws;
  }
  return count;
}

const Tokenizer& default_tokenizer() {
  static const WhitespaceTokenizer instance;
  return instance;
}

}  // namespace jts
