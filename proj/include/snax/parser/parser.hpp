#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snax/core/signature.hpp"

namespace snax {

struct SourceFile {
  std::string path;
  std::string text;
  Dialect dialect = Dialect::Snax;  // a #dialect pragma overrides this
};

struct ParseError {
  enum class Kind { Syntax, DialectMismatch, Duplicate };
  Kind kind = Kind::Syntax;
  std::string path;
  SourceLoc loc;
  std::vector<std::string> expected;
  std::string found;
  std::string message;
};

std::string kindName(ParseError::Kind k);
/// "path:line:col: message"
std::string formatParseError(const ParseError& e);

class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(ParseError e) : std::runtime_error(e.message), error(std::move(e)) {}
  ParseError error;
};

struct ParseResult {
  std::optional<Signature> signature;
  std::optional<ParseError> error;
  bool ok() const { return signature.has_value(); }
};

/// Parses and alpha-renames: every binder inside process bodies gets a name
/// unique across the signature (clashes become name_N).
ParseResult parseSignature(const SourceFile& src);
/// Several files into one signature; all must agree on the dialect.
ParseResult parseSignature(const std::vector<SourceFile>& files);

/// Throw ParseFailure on error.
TypePtr parseType(const std::string& text);
ProcPtr parseProcess(const std::string& text, Dialect dialect);

}  // namespace snax
