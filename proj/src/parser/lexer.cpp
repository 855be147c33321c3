#include "snax/parser/lexer.hpp"

#include <array>
#include <cctype>

namespace snax {

namespace {

constexpr std::array<std::string_view, 9> kKeywords = {"type", "proc", "copy", "write", "read",
                                                       "call", "ptr",  "cont", "dn"};
constexpr std::array<std::string_view, 4> kTwoCharPunct = {"->", "<-", "<~", "=>"};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

bool isKeyword(std::string_view word) {
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::End) return "end of input";
  return "\"" + t.text + "\"";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.loc = {line, col};
    if (identStart(c)) {
      std::size_t j = i;
      while (j < text.size() && identChar(text[j])) ++j;
      tok.text = std::string(text.substr(i, j - i));
      tok.kind = isKeyword(tok.text) ? Token::Kind::Keyword : Token::Kind::Ident;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Token::Kind::Number;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && identChar(text[j])) ++j;
      tok.kind = Token::Kind::Pragma;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else {
      tok.kind = Token::Kind::Punct;
      tok.text = std::string(1, c);
      for (auto p : kTwoCharPunct) {
        if (text.substr(i, 2) == p) {
          tok.text = std::string(p);
          break;
        }
      }
      advance(tok.text.size());
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.loc = {line, col};
  out.push_back(end);
  return out;
}

}  // namespace snax
