#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "numdec/decompose.hpp"
#include "numdec/root.hpp"

namespace numdec {

/// One observed application of a root function: argument values -> word value.
struct Sample {
  std::vector<std::int64_t> args;
  std::int64_t value = 0;

  friend bool operator==(const Sample&, const Sample&) = default;
  friend auto operator<=>(const Sample& a, const Sample& b) {
    if (auto c = a.args <=> b.args; c != 0) return c;
    return a.value <=> b.value;
  }
};

/// A root function with its accumulated sample set. When the same argument
/// tuple is observed with two different word values the tuple is recorded in
/// `conflicts` (and the samples kept), so downstream fitting can flag it.
struct LexiconEntry {
  RootKey root;
  std::vector<Sample> samples;                        // sorted, unique
  std::vector<std::string> source_words;              // sorted, unique
  std::vector<std::vector<std::int64_t>> conflicts;   // offending argument tuples

  std::size_t arity() const { return root.arity(); }
  bool has_conflict() const { return !conflicts.empty(); }
};

/// Extracts the root template of a decomposition: the maximal literal
/// stretches around and between the argument spans, empty segments included.
RootKey root_of(const Decomposition& d);

/// Groups decompositions of one language and one engine by root. Entries are
/// sorted by (arity, rendered root); grouping is order-independent. Mixing
/// engines in one lexicon is refused.
std::vector<LexiconEntry> build_lexicon(std::span<const Decomposition> decompositions);

}  // namespace numdec
