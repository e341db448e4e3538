#include "numdec/lexicon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "numdec/text.hpp"

namespace numdec {

std::string RootKey::rendered() const {
  const auto escaped = [](const std::string& segment) {
    std::string out;
    out.reserve(segment.size());
    for (char c : segment) {
      if (c == '_') out += '\\';
      out += c;
    }
    return out;
  };
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += '_';
    out += escaped(segments[i]);
  }
  return out;
}

RootKey root_of(const Decomposition& d) {
  const std::u32string word = decode_utf8(d.word);
  RootKey root;
  root.segments.reserve(d.args.size() + 1);
  std::size_t pos = 0;
  for (const DecompositionArg& arg : d.args) {
    if (arg.span.start < pos || arg.span.end > word.size()) {
      throw std::logic_error("root_of: argument spans must be sorted and in bounds");
    }
    root.segments.push_back(
        encode_utf8(std::u32string_view(word).substr(pos, arg.span.start - pos)));
    pos = arg.span.end;
  }
  root.segments.push_back(encode_utf8(std::u32string_view(word).substr(pos)));
  return root;
}

std::vector<LexiconEntry> build_lexicon(std::span<const Decomposition> decompositions) {
  struct Group {
    std::set<Sample> samples;
    std::set<std::string> sources;
  };
  std::map<RootKey, Group> groups;
  std::optional<EngineVersion> engine;
  for (const Decomposition& d : decompositions) {
    if (engine && *engine != d.engine) {
      throw std::invalid_argument("build_lexicon: decompositions mix engine versions");
    }
    engine = d.engine;
    Sample sample;
    sample.args.reserve(d.args.size());
    for (const DecompositionArg& arg : d.args) sample.args.push_back(arg.value);
    sample.value = d.value;
    Group& g = groups[d.root];
    g.samples.insert(std::move(sample));
    g.sources.insert(d.word);
  }

  std::vector<LexiconEntry> entries;
  entries.reserve(groups.size());
  for (auto& [root, group] : groups) {
    LexiconEntry entry;
    entry.root = root;
    entry.samples.assign(group.samples.begin(), group.samples.end());
    entry.source_words.assign(group.sources.begin(), group.sources.end());
    for (std::size_t i = 1; i < entry.samples.size(); ++i) {
      const Sample& prev = entry.samples[i - 1];
      const Sample& cur = entry.samples[i];
      if (prev.args == cur.args && prev.value != cur.value) {
        if (entry.conflicts.empty() || entry.conflicts.back() != cur.args) {
          entry.conflicts.push_back(cur.args);
        }
      }
    }
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(), [](const LexiconEntry& a, const LexiconEntry& b) {
    if (a.arity() != b.arity()) return a.arity() < b.arity();
    return a.root.rendered() < b.root.rendered();
  });
  return entries;
}

}  // namespace numdec
