#include "snax/parser/parser.hpp"

#include <set>
#include <utility>

#include "snax/parser/lexer.hpp"

namespace snax {

std::string kindName(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::Syntax: return "ParseError";
    case ParseError::Kind::DialectMismatch: return "DialectMismatch";
    case ParseError::Kind::Duplicate: return "DuplicateDefinition";
  }
  return {};
}

std::string formatParseError(const ParseError& e) {
  std::string out = e.path.empty() ? std::string("<input>") : e.path;
  out += ":" + std::to_string(e.loc.line) + ":" + std::to_string(e.loc.column) + ": " + kindName(e.kind) + ": " +
         e.message;
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string path, Dialect dialect, std::set<std::string>& claimed)
      : toks_(std::move(tokens)), path_(std::move(path)), dialect_(dialect), claimed_(claimed) {
    for (const auto& t : toks_)
      if (t.kind == Token::Kind::Ident) idents_.insert(t.text);
  }

  Dialect pragmas() {
    while (peek().kind == Token::Kind::Pragma) {
      const Token& t = next();
      if (t.text != "#dialect") fail(t, {"#dialect"});
      const Token& d = next();
      if (d.text == "sax") dialect_ = Dialect::Sax;
      else if (d.text == "snax") dialect_ = Dialect::Snax;
      else fail(d, {"sax", "snax"});
    }
    return dialect_;
  }

  void definitions(Signature& sig) {
    while (peek().kind != Token::Kind::End) {
      const Token& t = peek();
      if (isKw("type")) {
        auto def = typeDef();
        if (!sig.addType(def)) duplicate(t, "type " + def.name);
      } else if (isKw("proc")) {
        auto def = procDef();
        if (!sig.addProc(def)) duplicate(t, "proc " + def.name);
      } else {
        fail(t, {"type", "proc"});
      }
    }
  }

  TypePtr wholeType() {
    auto t = type();
    expectEnd();
    return t;
  }

  ProcPtr wholeProcess() {
    auto p = proc();
    expectEnd();
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string path_;
  Dialect dialect_;
  std::set<std::string>& claimed_;
  std::set<std::string> idents_;
  std::set<std::string> params_;
  std::vector<std::pair<std::string, std::string>> scope_;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool isPunct(std::string_view p, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::Punct && t.text == p;
  }
  bool isKw(std::string_view k, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::Keyword && t.text == k;
  }
  bool isIdent(std::size_t ahead = 0) const { return peek(ahead).kind == Token::Kind::Ident; }

  [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
    ParseError e;
    e.path = path_;
    e.loc = t.loc;
    e.found = describe(t);
    e.expected = std::move(expected);
    std::string list;
    for (const auto& x : e.expected) list += (list.empty() ? "" : ", ") + x;
    e.message = "expected " + list + " but found " + e.found;
    throw ParseFailure(std::move(e));
  }
  [[noreturn]] void mismatch(const Token& t, const std::string& what) {
    ParseError e;
    e.kind = ParseError::Kind::DialectMismatch;
    e.path = path_;
    e.loc = t.loc;
    e.found = describe(t);
    e.message = what + " is not a " + dialectName(dialect_) + " form";
    throw ParseFailure(std::move(e));
  }
  [[noreturn]] void duplicate(const Token& t, const std::string& what) {
    ParseError e;
    e.kind = ParseError::Kind::Duplicate;
    e.path = path_;
    e.loc = t.loc;
    e.found = describe(t);
    e.message = "duplicate definition of " + what;
    throw ParseFailure(std::move(e));
  }

  void expectPunct(std::string_view p) {
    if (!isPunct(p)) fail(peek(), {"'" + std::string(p) + "'"});
    next();
  }
  void expectKw(std::string_view k) {
    if (!isKw(k)) fail(peek(), {"'" + std::string(k) + "'"});
    next();
  }
  std::string name() {
    if (!isIdent()) fail(peek(), {"identifier"});
    return next().text;
  }
  std::string label() {
    expectPunct("'");
    if (!isIdent() && peek().kind != Token::Kind::Keyword) fail(peek(), {"label"});
    return next().text;
  }
  void expectEnd() {
    if (peek().kind != Token::Kind::End) fail(peek(), {"end of input"});
  }

  std::string bind(const std::string& x) {
    std::string fresh = x;
    if (claimed_.count(x) || params_.count(x)) {
      for (int n = 1;; ++n) {
        fresh = x + "_" + std::to_string(n);
        if (!claimed_.count(fresh) && !params_.count(fresh) && !idents_.count(fresh)) break;
      }
    }
    claimed_.insert(fresh);
    scope_.emplace_back(x, fresh);
    return fresh;
  }
  void unbind(std::size_t n) { scope_.resize(scope_.size() - n); }
  std::string resolve(const std::string& x) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == x) return it->second;
    return x;
  }

  TypeDef typeDef() {
    SourceLoc loc = peek().loc;
    expectKw("type");
    std::string n = name();
    expectPunct("=");
    return {n, type(), loc};
  }

  ProcDef procDef() {
    SourceLoc loc = peek().loc;
    expectKw("proc");
    ProcDef def;
    def.loc = loc;
    def.name = name();
    params_.clear();
    auto binding = [&]() {
      expectPunct("(");
      std::string v = name();
      expectPunct(":");
      auto t = type();
      expectPunct(")");
      params_.insert(v);
      return Param{v, t};
    };
    auto dest = binding();
    def.destVar = dest.var;
    def.destType = dest.type;
    while (isPunct("(")) def.params.push_back(binding());
    expectPunct("=");
    def.body = proc();
    return def;
  }

  TypePtr type() {
    auto left = type2();
    if (isPunct("->")) {
      next();
      return arrowType(left, type());
    }
    return left;
  }

  TypePtr type2() {
    auto left = type3();
    if (isPunct("*")) {
      next();
      return tensorType(left, type2());
    }
    return left;
  }

  TypePtr type3() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number && t.text == "1") {
      next();
      return unitType();
    }
    if (isKw("dn")) {
      next();
      return downType(type3());
    }
    if (isPunct("+")) {
      next();
      expectPunct("{");
      std::vector<std::pair<Label, TypePtr>> branches;
      std::set<Label> seen;
      if (!isPunct("}")) {
        for (;;) {
          const Token& at = peek(1);
          Label l = label();
          if (!seen.insert(l).second) duplicate(at, "label '" + l);
          expectPunct(":");
          branches.emplace_back(l, type());
          if (!isPunct(",")) break;
          next();
        }
      }
      expectPunct("}");
      return sumType(std::move(branches));
    }
    if (isIdent()) return nameType(next().text);
    if (isPunct("(")) {
      next();
      auto inner = type();
      expectPunct(")");
      return inner;
    }
    fail(t, {"'1'", "'dn'", "'+'", "type name", "'('"});
  }

  Address addr() {
    if (!isIdent()) fail(peek(), {"address"});
    Address a = Address::var(resolve(next().text));
    while (isPunct(".")) {
      next();
      const Token& t = peek();
      if (t.kind == Token::Kind::Number && t.text == "1") {
        next();
        a.path.push_back(Projection::pi1());
      } else if (t.kind == Token::Kind::Number && t.text == "2") {
        next();
        a.path.push_back(Projection::pi2());
      } else if (isPunct("'")) {
        a.path.push_back(Projection::tag(label()));
      } else {
        fail(t, {"'1'", "'2'", "label"});
      }
    }
    return a;
  }

  ProcPtr parenProc() {
    expectPunct("(");
    auto p = proc();
    expectPunct(")");
    return p;
  }

  ProcPtr proc() {
    const Token& t = peek();
    SourceLoc loc = t.loc;
    if (isKw("copy")) {
      next();
      Address d = addr();
      return makeCopy(d, addr(), loc);
    }
    if (isKw("write")) {
      next();
      Address d = addr();
      return makeWrite(d, storable(), loc);
    }
    if (isKw("read")) {
      next();
      Address s = addr();
      return makeRead(s, costorable(), loc);
    }
    if (isKw("call")) {
      next();
      std::string p = name();
      Address d = addr();
      std::vector<Address> args;
      while (isIdent()) args.push_back(addr());
      return makeCall(p, d, std::move(args), loc);
    }
    if (isIdent() && isPunct(":", 1)) {
      std::string x = next().text;
      next();
      auto ty = type();
      expectPunct("<-");
      std::string fresh = bind(x);
      auto writer = parenProc();
      expectPunct(";");
      auto reader = proc();
      unbind(1);
      return makeCut(fresh, ty, writer, reader, loc);
    }
    if (isIdent()) {
      Address target = addr();
      if (!isPunct("<~")) fail(peek(), {"'<~'", "':'"});
      if (dialect_ == Dialect::Sax) mismatch(peek(), "snip");
      next();
      auto writer = parenProc();
      expectPunct(";");
      return makeSnip(target, writer, proc(), loc);
    }
    fail(t, {"'copy'", "'write'", "'read'", "'call'", "cut", "snip"});
  }

  Storable storable() {
    const Token& t = peek();
    if (isPunct("(")) {
      if (isPunct(",", 1)) {
        if (dialect_ == Dialect::Sax) mismatch(t, "pair mark (,)");
        next();
        next();
        expectPunct(")");
        return {Storable::Pair{}};
      }
      if (isPunct(")", 1)) {
        next();
        next();
        return {Storable::Unit{}};
      }
      if (isIdent(1)) {
        if (dialect_ == Dialect::Snax) mismatch(t, "pair with components");
        next();
        Address a = addr();
        expectPunct(",");
        Address b = addr();
        expectPunct(")");
        return {Storable::Pair{std::make_pair(a, b)}};
      }
      next();
      fail(peek(), {"','", "')'", "address"});
    }
    if (isPunct("'")) {
      Label l = label();
      if (isIdent()) {
        if (dialect_ == Dialect::Snax) mismatch(peek(), "tag with payload address");
        return {Storable::Tag{l, addr()}};
      }
      if (dialect_ == Dialect::Sax) mismatch(t, "tag without payload address");
      return {Storable::Tag{l, std::nullopt}};
    }
    if (isKw("ptr")) {
      next();
      return {Storable::Ptr{addr()}};
    }
    if (isKw("cont")) {
      next();
      expectPunct("(");
      std::string x = name();
      expectPunct(",");
      std::string z = name();
      expectPunct(")");
      expectPunct("=>");
      std::string fx = bind(x);
      std::string fz = bind(z);
      auto body = parenProc();
      unbind(2);
      return {Storable::Cont{fx, fz, body}};
    }
    fail(t, {"'('", "label", "'ptr'", "'cont'"});
  }

  Costorable costorable() {
    const Token& open = peek();
    expectPunct("(");
    if (isPunct("(")) {
      const Token& inner = peek();
      next();
      if (isPunct(",")) {
        if (dialect_ == Dialect::Sax) mismatch(inner, "pair pattern (,)");
        next();
        expectPunct(")");
        expectPunct("=>");
        auto body = proc();
        expectPunct(")");
        return {Costorable::Pair{std::nullopt, body}};
      }
      if (isPunct(")")) {
        next();
        expectPunct("=>");
        auto body = proc();
        expectPunct(")");
        return {Costorable::Unit{body}};
      }
      if (isIdent()) {
        if (dialect_ == Dialect::Snax) mismatch(inner, "pair pattern with binders");
        std::string x = name();
        expectPunct(",");
        std::string y = name();
        expectPunct(")");
        expectPunct("=>");
        std::string fx = bind(x);
        std::string fy = bind(y);
        auto body = proc();
        unbind(2);
        expectPunct(")");
        return {Costorable::Pair{std::make_pair(fx, fy), body}};
      }
      fail(peek(), {"','", "')'", "variable"});
    }
    if (isPunct("'")) {
      Costorable::Sum sum;
      std::set<Label> seen;
      for (;;) {
        const Token& at = peek(1);
        Label l = label();
        if (!seen.insert(l).second) duplicate(at, "branch '" + l);
        std::optional<std::string> binder;
        if (isIdent()) {
          if (dialect_ == Dialect::Snax) mismatch(peek(), "branch binder");
          binder = bind(next().text);
        } else if (dialect_ == Dialect::Sax) {
          mismatch(peek(), "branch without binder");
        }
        expectPunct("=>");
        auto body = proc();
        if (binder) unbind(1);
        sum.branches.push_back({l, binder, body});
        if (!isPunct("|")) break;
        next();
      }
      expectPunct(")");
      return {std::move(sum)};
    }
    if (isKw("ptr")) {
      next();
      std::string x = name();
      expectPunct("=>");
      std::string fx = bind(x);
      auto body = proc();
      unbind(1);
      expectPunct(")");
      return {Costorable::Ptr{fx, body}};
    }
    if (isIdent()) {
      Address a = addr();
      expectPunct(";");
      Address d = addr();
      expectPunct(")");
      return {Costorable::Apply{a, d}};
    }
    (void)open;
    fail(peek(), {"'('", "label", "'ptr'", "address"});
  }
};

ParseResult parseInto(const std::vector<SourceFile>& files) {
  ParseResult result;
  Signature sig;
  std::set<std::string> claimed;
  std::optional<Dialect> dialect;
  try {
    for (const auto& f : files) {
      Parser first(tokenize(f.text), f.path, f.dialect, claimed);
      Dialect d = first.pragmas();
      if (dialect && *dialect != d) {
        ParseError e;
        e.kind = ParseError::Kind::DialectMismatch;
        e.path = f.path;
        e.loc = {1, 1};
        e.message = "file is " + dialectName(d) + " but earlier files are " + dialectName(*dialect);
        throw ParseFailure(e);
      }
      dialect = d;
      sig.dialect = d;
      first.definitions(sig);
    }
  } catch (const ParseFailure& failure) {
    result.error = failure.error;
    return result;
  }
  result.signature = std::move(sig);
  return result;
}

}  // namespace

ParseResult parseSignature(const SourceFile& src) { return parseInto({src}); }

ParseResult parseSignature(const std::vector<SourceFile>& files) { return parseInto(files); }

TypePtr parseType(const std::string& text) {
  std::set<std::string> claimed;
  Parser p(tokenize(text), "", Dialect::Snax, claimed);
  return p.wholeType();
}

ProcPtr parseProcess(const std::string& text, Dialect dialect) {
  std::set<std::string> claimed;
  Parser p(tokenize(text), "", dialect, claimed);
  return p.wholeProcess();
}

}  // namespace snax
