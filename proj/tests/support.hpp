#pragma once

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "snax/typecheck/checker.hpp"

namespace testsupport {

using namespace snax;

inline std::string corpusPath(const std::string& name) { return std::string(CORPUS_DIR) + "/" + name; }

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Signature parseText(const std::string& text, Dialect d = Dialect::Snax) {
  ParseResult r = parseSignature(SourceFile{"<test>", text, d});
  if (!r.ok()) FAIL("parse failed: " << formatParseError(*r.error));
  return *r.signature;
}

inline Signature loadCorpus(const std::string& name) {
  ParseResult r = parseSignature(SourceFile{corpusPath(name), readFile(corpusPath(name))});
  if (!r.ok()) FAIL("parse failed: " << formatParseError(*r.error));
  return *r.signature;
}

}  // namespace testsupport
