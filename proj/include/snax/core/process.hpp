#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "snax/core/address.hpp"
#include "snax/core/type.hpp"

namespace snax {

enum class Dialect { Sax, Snax };

std::string dialectName(Dialect d);

struct SourceLoc {
  int line = 0;
  int column = 0;
};

struct Process;
using ProcPtr = std::shared_ptr<const Process>;

// Optional address and binder slots below are present exactly in SAX programs.

struct Storable {
  struct Pair {
    std::optional<std::pair<Address, Address>> components;
  };
  struct Unit {};
  struct Tag {
    Label label;
    std::optional<Address> payload;
  };
  struct Ptr {
    Address target;
  };
  /// cont (x, z) => (P): argument x, result destination z.
  struct Cont {
    std::string arg;
    std::string dest;
    ProcPtr body;
  };

  std::variant<Pair, Unit, Tag, Ptr, Cont> node;

  template <class T> const T* as() const { return std::get_if<T>(&node); }
};

struct Costorable {
  struct Pair {
    std::optional<std::pair<std::string, std::string>> binders;
    ProcPtr body;
  };
  struct Unit {
    ProcPtr body;
  };
  struct Branch {
    Label label;
    std::optional<std::string> binder;
    ProcPtr body;
  };
  struct Sum {
    std::vector<Branch> branches;
  };
  struct Ptr {
    std::string binder;
    ProcPtr body;
  };
  /// Function application (arg ; dest).
  struct Apply {
    Address arg;
    Address dest;
  };

  std::variant<Pair, Unit, Sum, Ptr, Apply> node;

  template <class T> const T* as() const { return std::get_if<T>(&node); }
};

struct Process {
  /// `x : A <- (writer); reader`: allocates a fresh block for x.
  struct Cut {
    std::string var;
    TypePtr type;
    ProcPtr writer;
    ProcPtr reader;
  };
  /// `target <~ (writer); reader`: composes within an existing block.
  struct Snip {
    Address target;
    ProcPtr writer;
    ProcPtr reader;
  };
  struct Copy {
    Address dest;
    Address src;
  };
  struct Write {
    Address dest;
    Storable value;
  };
  struct Read {
    Address src;
    Costorable handler;
  };
  struct Call {
    std::string proc;
    Address dest;
    std::vector<Address> args;
  };

  std::variant<Cut, Snip, Copy, Write, Read, Call> node;
  SourceLoc loc;

  template <class T> const T* as() const { return std::get_if<T>(&node); }
  template <class T> bool is() const { return std::holds_alternative<T>(node); }
};

ProcPtr makeCut(std::string var, TypePtr type, ProcPtr writer, ProcPtr reader, SourceLoc loc = {});
ProcPtr makeSnip(Address target, ProcPtr writer, ProcPtr reader, SourceLoc loc = {});
ProcPtr makeCopy(Address dest, Address src, SourceLoc loc = {});
ProcPtr makeWrite(Address dest, Storable value, SourceLoc loc = {});
ProcPtr makeRead(Address src, Costorable handler, SourceLoc loc = {});
ProcPtr makeCall(std::string proc, Address dest, std::vector<Address> args, SourceLoc loc = {});

/// Every address mentioned anywhere in `p`, including inside continuation bodies.
std::vector<Address> mentionedAddresses(const ProcPtr& p);
std::vector<Address> mentionedAddresses(const Storable& s);

/// First node whose storable/co-storable slots (or a snip, for SAX) do not
/// match `dialect`; nullptr when every form matches.
const Process* dialectMismatch(const ProcPtr& p, Dialect dialect);

}  // namespace snax
