#include "snax/conformance/explore.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "snax/parser/render.hpp"

namespace snax {

namespace {

const std::string kAlpha = "\xCE\xB1";

struct RawBlock {
  std::string text;  // with original block ids
  std::vector<std::uint64_t> refs;
};

std::vector<std::uint64_t> scanBlockRefs(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = s.find(kAlpha); i != std::string::npos; i = s.find(kAlpha, i)) {
    i += kAlpha.size();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(std::stoull(s.substr(i, j - i)));
    i = j;
  }
  return out;
}

// Rewrites every α<n> token through `name`; ids without a name become α?.
std::string rename(const std::string& s, const std::map<std::uint64_t, std::uint64_t>& name) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  for (std::size_t at = s.find(kAlpha); at != std::string::npos; at = s.find(kAlpha, i)) {
    out.append(s, i, at - i);
    std::size_t j = at + kAlpha.size();
    std::size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    out += kAlpha;
    if (k > j) {
      auto it = name.find(std::stoull(s.substr(j, k - j)));
      out += it == name.end() ? "?" : std::to_string(it->second);
    }
    i = k;
  }
  out.append(s, i, std::string::npos);
  return out;
}

std::pair<std::uint64_t, std::uint64_t> fingerprint(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return {h, std::hash<std::string>{}(s)};
}

}  // namespace

std::string canonicalForm(const Configuration& c) {
  std::map<std::uint64_t, RawBlock> raw;
  for (auto b : c.blocks) {
    auto t = c.blockTypes.find(b);
    raw[b.value].text = "type " + (t == c.blockTypes.end() ? std::string("?") : renderType(t->second)) + ";";
  }
  for (const auto& [addr, payload] : c.cells) {
    const BlockId* id = addr.blockId();
    if (!id) continue;
    raw[id->value].text += " cell " + renderPath(addr.path) + (payload ? " <" + renderStorable(*payload) + ">" : " <>");
  }
  std::vector<const Thread*> threads;
  for (const auto& t : c.threads) threads.push_back(&t);
  std::stable_sort(threads.begin(), threads.end(),
                   [](const Thread* a, const Thread* b) { return a->dest.path < b->dest.path; });
  for (const auto* t : threads) {
    const BlockId* id = t->dest.blockId();
    if (!id) continue;
    raw[id->value].text += " thread " + renderPath(t->dest.path) + " (" + renderProcess(t->proc) + ")";
  }
  for (auto& [id, blk] : raw) blk.refs = scanBlockRefs(blk.text);

  std::map<std::uint64_t, std::uint64_t> name;
  std::vector<std::uint64_t> order;
  auto discover = [&](std::uint64_t start) {
    std::vector<std::uint64_t> queue{start};
    name.emplace(start, order.size());
    order.push_back(start);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto it = raw.find(queue[q]);
      if (it == raw.end()) continue;
      for (auto r : it->second.refs) {
        if (name.count(r) || !raw.count(r)) continue;
        name.emplace(r, order.size());
        order.push_back(r);
        queue.push_back(r);
      }
    }
  };
  if (!c.blocks.empty()) discover(c.blocks.front().value);
  while (order.size() < raw.size()) {
    std::optional<std::pair<std::string, std::uint64_t>> best;
    for (const auto& [id, blk] : raw) {
      if (name.count(id)) continue;
      std::string key = rename(blk.text, name);
      if (!best || key < best->first) best = {key, id};
    }
    discover(best->second);
  }

  std::string out;
  for (auto id : order) out += kAlpha + std::to_string(name[id]) + ": " + rename(raw[id].text, name) + "\n";
  return out;
}

Exploration exploreInterleavings(const Engine& engine, const std::string& entry, std::size_t bound) {
  Exploration ex;
  std::set<std::pair<std::uint64_t, std::uint64_t>> visited;
  std::vector<Configuration> stack;
  Configuration init = engine.initial(entry);
  visited.insert(fingerprint(canonicalForm(init)));
  stack.push_back(std::move(init));
  while (!stack.empty()) {
    Configuration c = std::move(stack.back());
    stack.pop_back();
    ++ex.states;
    if (c.final()) {
      ex.finals.insert(canonicalForm(c));
      continue;
    }
    std::vector<Step> steps;
    try {
      steps = engine.enabledSteps(c);
    } catch (const EngineError& e) {
      ex.errors.push_back(kindName(e.kind) + ": " + e.what());
      continue;
    }
    if (steps.empty()) {
      ex.stuck.push_back(canonicalForm(c));
      continue;
    }
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      Configuration next;
      try {
        next = engine.applyStep(c, *it);
      } catch (const EngineError& e) {
        ex.errors.push_back(kindName(e.kind) + ": " + e.what());
        continue;
      }
      ++ex.transitions;
      if (!visited.insert(fingerprint(canonicalForm(next))).second) continue;
      if (visited.size() > bound) {
        ex.boundExceeded = true;
        return ex;
      }
      stack.push_back(std::move(next));
    }
  }
  return ex;
}

}  // namespace snax
