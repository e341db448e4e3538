#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numdec/dictionary.hpp"
#include "numdec/root.hpp"

namespace numdec {

/// Half-open codepoint interval [start, end) inside one word.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool contains(const Span& other) const {
    return other.start >= start && other.end <= end;
  }
  bool disjoint(const Span& other) const {
    return other.end <= start || other.start >= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct UnpackedSpan {
  Span span;
  std::int64_t value = 0;

  friend bool operator==(const UnpackedSpan&, const UnpackedSpan&) = default;
};

enum class EngineVersion { V1, V2, V6 };

std::string_view engine_name(EngineVersion v);
std::optional<EngineVersion> engine_from_name(std::string_view name);

// ---------------------------------------------------------------------------
// Unpack criteria. `sub_value` is the candidate sub-numeral's value, and
// `word_value` the value of the word being decomposed. All arithmetic is
// overflow-safe for any positive 64-bit inputs.

/// Necessary condition for a factor/summand constituent: 2*s < x.
bool criterion_necessary(std::int64_t sub_value, std::int64_t word_value);

/// Sufficient condition: s^2 <= x (never wraps).
bool criterion_sufficient(std::int64_t sub_value, std::int64_t word_value);

/// Leaky fallback for candidates between sqrt(x) and x/2: s does not divide
/// the enclosing failed sub-numeral's value and s < x. Marks the candidate as
/// provisionally unpackable; a sufficient-criterion hit supersedes it.
bool criterion_leaky(std::int64_t sub_value, std::int64_t enclosing_value,
                     std::int64_t word_value);

// ---------------------------------------------------------------------------

/// Evolving scan state: the word, the claimed word value, the currently
/// unpacked spans (pairwise disjoint, sorted by start, each resolving to a
/// dictionary numeral valued below word_value) and the checkpoint behind
/// which the scan never looks again.
struct UnpackState {
  std::u32string word;
  std::int64_t word_value = 0;
  std::vector<UnpackedSpan> unpacked;
  std::size_t checkpoint = 0;
};

/// Inserts `span` into the unpacked set, evicting every previously unpacked
/// span it fully contains (re-inserting an identical span is a no-op).
/// A partial overlap with a surviving span signals an engine bug and throws
/// std::logic_error.
void unpack(UnpackState& state, Span span, std::int64_t value);

/// Role assignment the multiplier post-pass reasons over: the value-largest
/// unpacked span (leftmost on a tie) is proposed as the multiplier; the rest
/// keep their span order as factor/summand candidates.
struct RoleHypothesis {
  UnpackedSpan proposed_mu;
  std::vector<UnpackedSpan> others;
};

/// Requires at least one unpacked span.
RoleHypothesis propose_roles(const UnpackState& state);

/// Multiplier detection run after the scan: propose the value-largest
/// unpacked span (leftmost on tie) as the multiplier and un-unpack it when
/// the remaining spans complete a factor*multiplier+summand accounting of the
/// word value. Returns the removed span, if any. Applying it twice never
/// removes more than applying it once to the same scan result.
std::optional<UnpackedSpan> mu_postpass(UnpackState& state);

// ---------------------------------------------------------------------------

/// One trace row per tested substring (plus one per provisional-unpack commit
/// and one for the multiplier post-pass when it had anything to examine).
/// `criterion` is one of "necessary", "sufficient", "leaky", "potunpack",
/// "mu-postpass"; a "leaky" row implies the sufficient criterion failed first.
struct TraceRow {
  Span span;
  std::string text;
  std::string criterion;
  bool verdict = false;
  std::size_t cp_before = 0;
  std::size_t cp_after = 0;
  std::vector<std::int64_t> unpacked;  // values after this step, in span order

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct DecompositionArg {
  Span span;
  std::int64_t value = 0;
  std::string text;  // UTF-8 substring

  friend bool operator==(const DecompositionArg&, const DecompositionArg&) = default;
};

struct Decomposition {
  std::string word;
  std::int64_t value = 0;
  EngineVersion engine = EngineVersion::V6;
  std::vector<DecompositionArg> args;  // span order
  RootKey root;
  std::vector<TraceRow> trace;  // populated only when tracing was requested
};

enum class TraceMode { Off, On };

/// Decomposes a dictionary word. Throws UnknownNumeralError when `word` is
/// not in the dictionary.
Decomposition decompose(const NumeralDictionary& dict, std::string_view word,
                        EngineVersion engine, TraceMode trace = TraceMode::Off);

/// Same scan, but with the word value claimed by a specific dataset row.
/// Evaluation uses this so that rows sharing one numeral string keep their
/// own values; sub-numeral lookups still resolve through the dictionary.
Decomposition decompose_with_value(const NumeralDictionary& dict, std::string_view word,
                                   std::int64_t word_value, EngineVersion engine,
                                   TraceMode trace = TraceMode::Off);

inline Decomposition decompose_v2(const NumeralDictionary& dict, std::string_view word,
                                  TraceMode trace = TraceMode::Off) {
  return decompose(dict, word, EngineVersion::V2, trace);
}

inline Decomposition decompose_v6(const NumeralDictionary& dict, std::string_view word,
                                  TraceMode trace = TraceMode::Off) {
  return decompose(dict, word, EngineVersion::V6, trace);
}

/// Reference scanner without the checkpoint; kept for regression tests only
/// and not exposed through the CLI.
inline Decomposition decompose_v1(const NumeralDictionary& dict, std::string_view word,
                                  TraceMode trace = TraceMode::Off) {
  return decompose(dict, word, EngineVersion::V1, trace);
}

}  // namespace numdec
