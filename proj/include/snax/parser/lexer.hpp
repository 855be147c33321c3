#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "snax/core/process.hpp"

namespace snax {

struct Token {
  enum class Kind { Ident, Keyword, Number, Punct, Pragma, End };
  Kind kind = Kind::End;
  std::string text;
  SourceLoc loc;
};

std::string describe(const Token& t);

/// Splits source text into tokens; '%' starts a line comment. Unknown
/// characters come back as single-character Punct tokens and are rejected
/// by the parser.
std::vector<Token> tokenize(std::string_view text);

bool isKeyword(std::string_view word);

}  // namespace snax
