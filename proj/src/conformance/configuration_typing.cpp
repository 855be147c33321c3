#include "snax/conformance/configuration_typing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "snax/core/wellformed.hpp"
#include "snax/parser/render.hpp"
#include "snax/typecheck/checker.hpp"

namespace snax {

Context reconstructContext(const ConfigContext& cctx, const Address& dest, Dialect dialect) {
  Context ctx;
  if (dialect == Dialect::Snax) {
    for (const auto& e : cctx) {
      if (!extends(e.addr, dest)) continue;
      bool minimal = std::none_of(cctx.begin(), cctx.end(), [&](const ConfigEntry& o) {
        return extends(o.addr, dest) && extends(e.addr, o.addr);
      });
      if (minimal) ctx.addEligible(e.addr, e.type);
    }
  }
  for (const auto& e : cctx)
    if (!wextends(dest, e.addr)) ctx.addOrdinary(e.addr, e.type);
  return ctx;
}

namespace {

struct Item {
  bool thread = false;
  Address addr;
  ProcPtr proc;  // the thread's process, or the write that fills the cell
  TypePtr type;
  std::vector<Address> mentions;
  std::string label;
};

ConfigTyping failed(std::string rule, std::string item, std::string detail) {
  ConfigTyping out;
  out.failure = ConfigFailure{std::move(rule), std::move(item), std::move(detail)};
  return out;
}

}  // namespace

ConfigTyping checkConfiguration(const ConfigContext& cctxIn, const Configuration& c, const Signature& sig,
                                Dialect dialect) {
  std::map<BlockId, std::size_t> allocIndex;
  for (std::size_t i = 0; i < c.blocks.size(); ++i) allocIndex[c.blocks[i]] = i;

  std::vector<Item> items;
  std::map<Address, std::size_t> writerOf;
  for (const auto& t : c.threads) {
    std::string label = "thread " + renderAddress(t.dest) + " (" + renderProcess(t.proc) + ")";
    auto cell = c.cells.find(t.dest);
    if (cell == c.cells.end()) return failed("THREAD", label, "no empty cell at " + renderAddress(t.dest));
    if (cell->second) return failed("THREAD", label, "cell " + renderAddress(t.dest) + " is already filled");
    if (!writerOf.emplace(t.dest, items.size()).second)
      return failed("THREAD", label, "two threads write " + renderAddress(t.dest));
    items.push_back({true, t.dest, t.proc, nullptr, mentionedAddresses(t.proc), label});
  }
  for (const auto& [addr, payload] : c.cells) {
    if (!payload) {
      if (!writerOf.count(addr)) return failed("THREAD", "cell " + renderAddress(addr) + " <>", "empty cell has no writer");
      continue;
    }
    items.push_back({false, addr, makeWrite(addr, *payload), nullptr, mentionedAddresses(*payload),
                     "cell " + renderAddress(addr) + " <" + renderStorable(*payload) + ">"});
  }

  for (auto& it : items) {
    const BlockId* id = it.addr.blockId();
    auto root = id ? c.blockTypes.find(*id) : c.blockTypes.end();
    if (root == c.blockTypes.end())
      return failed(it.thread ? "THREAD" : "CELL", it.label, "address has no allocated block");
    it.type = typeAtPath(root->second, it.addr.path, sig);
    if (!it.type) return failed(it.thread ? "THREAD" : "CELL", it.label, "path is invalid for the block type");
  }

  // Creation order: block allocation, then path, cells before threads.
  std::vector<std::size_t> byCreation(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) byCreation[i] = i;
  auto key = [&](std::size_t i) {
    const Item& it = items[i];
    return std::make_tuple(allocIndex[*it.addr.blockId()], it.addr.path.size(), it.addr.path, it.thread);
  };
  std::sort(byCreation.begin(), byCreation.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::size_t> rank(items.size());
  for (std::size_t r = 0; r < byCreation.size(); ++r) rank[byCreation[r]] = r;

  std::map<Address, std::size_t> at;
  for (std::size_t i = 0; i < items.size(); ++i) at[items[i].addr] = i;
  std::vector<std::set<std::size_t>> deps(items.size());
  std::vector<std::vector<std::size_t>> users(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (const auto& m : items[i].mentions)
      if (auto f = at.find(m); f != at.end() && f->second != i) deps[i].insert(f->second);
    for (std::size_t j = 0; j < items.size(); ++j)
      if (j != i && extends(items[j].addr, items[i].addr)) deps[i].insert(j);
    for (auto d : deps[i]) users[d].push_back(i);
  }

  std::vector<std::size_t> order;
  std::vector<std::size_t> pending(items.size());
  std::set<std::pair<std::size_t, std::size_t>> ready;  // (rank, item)
  for (std::size_t i = 0; i < items.size(); ++i) {
    pending[i] = deps[i].size();
    if (!pending[i]) ready.insert({rank[i], i});
  }
  std::vector<bool> placed(items.size(), false);
  while (order.size() < items.size()) {
    if (ready.empty()) {
      // A dependency cycle: fall back to creation order for what is left.
      for (auto i : byCreation)
        if (!placed[i]) {
          ready.insert({rank[i], i});
          break;
        }
    }
    auto [r, i] = *ready.begin();
    ready.erase(ready.begin());
    if (placed[i]) continue;
    placed[i] = true;
    order.push_back(i);
    for (auto u : users[i])
      if (!placed[u] && --pending[u] == 0) ready.insert({rank[u], u});
  }

  ConfigContext cctx = cctxIn;
  for (auto i : order) {
    const Item& it = items[i];
    const char* rule = it.thread ? "THREAD" : "CELL";
    if (findEntry(cctx, it.addr)) return failed(rule, it.label, renderAddress(it.addr) + " is already typed");
    Context ctx = reconstructContext(cctx, it.addr, dialect);
    if (!modelsC(cctx, ctx, it.addr, &sig)) return failed(rule, it.label, "reconstructed context does not satisfy ⊨_c");
    if (auto err = checkProcess(dialect, sig, ctx, it.proc, it.addr, it.type))
      return failed(rule, it.label, kindName(err->kind) + ": " + err->detail + " under " + renderContext(ctx));
    cctx.push_back({it.addr, it.type});
  }
  ConfigTyping out;
  out.output = std::move(cctx);
  return out;
}

}  // namespace snax
