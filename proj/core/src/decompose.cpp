#include "numdec/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "numdec/errors.hpp"
#include "numdec/lexicon.hpp"
#include "numdec/text.hpp"

namespace numdec {

std::string_view engine_name(EngineVersion v) {
  switch (v) {
    case EngineVersion::V1: return "v1";
    case EngineVersion::V2: return "v2";
    case EngineVersion::V6: return "v6";
  }
  return "v6";
}

std::optional<EngineVersion> engine_from_name(std::string_view name) {
  if (name == "v1") return EngineVersion::V1;
  if (name == "v2") return EngineVersion::V2;
  if (name == "v6") return EngineVersion::V6;
  return std::nullopt;
}

bool criterion_necessary(std::int64_t sub_value, std::int64_t word_value) {
  // 2*s < x without wrapping: s < x - s.
  return sub_value < word_value - sub_value;
}

bool criterion_sufficient(std::int64_t sub_value, std::int64_t word_value) {
  // s*s <= x without wrapping: s <= x/s for positive integers.
  if (sub_value < 1 || word_value < 1) return false;
  return sub_value <= word_value / sub_value;
}

bool criterion_leaky(std::int64_t sub_value, std::int64_t enclosing_value,
                     std::int64_t word_value) {
  return enclosing_value % sub_value != 0 && sub_value < word_value;
}

void unpack(UnpackState& state, Span span, std::int64_t value) {
  if (span.start >= span.end || span.end > state.word.size()) {
    throw std::logic_error("unpack: span out of bounds");
  }
  if (value >= state.word_value) {
    throw std::logic_error("unpack: sub-numeral value must stay below the word value");
  }
  std::vector<UnpackedSpan> kept;
  kept.reserve(state.unpacked.size() + 1);
  for (const UnpackedSpan& u : state.unpacked) {
    if (span.contains(u.span)) continue;  // subsumed (or identical): evict
    if (!span.disjoint(u.span)) {
      throw std::logic_error("unpack: span overlaps a surviving unpacked span");
    }
    kept.push_back(u);
  }
  kept.push_back(UnpackedSpan{span, value});
  std::sort(kept.begin(), kept.end(),
            [](const UnpackedSpan& a, const UnpackedSpan& b) { return a.span.start < b.span.start; });
  state.unpacked = std::move(kept);
}

RoleHypothesis propose_roles(const UnpackState& state) {
  if (state.unpacked.empty()) {
    throw std::logic_error("propose_roles: no unpacked spans");
  }
  std::size_t mu_idx = 0;
  for (std::size_t i = 1; i < state.unpacked.size(); ++i) {
    if (state.unpacked[i].value > state.unpacked[mu_idx].value) mu_idx = i;  // leftmost on tie
  }
  RoleHypothesis roles;
  roles.proposed_mu = state.unpacked[mu_idx];
  for (std::size_t i = 0; i < state.unpacked.size(); ++i) {
    if (i != mu_idx) roles.others.push_back(state.unpacked[i]);
  }
  return roles;
}

std::optional<UnpackedSpan> mu_postpass(UnpackState& state) {
  if (state.unpacked.size() < 2) return std::nullopt;
  const RoleHypothesis roles = propose_roles(state);
  const std::int64_t mu = roles.proposed_mu.value;
  const std::int64_t x = state.word_value;
  std::vector<std::int64_t> others;
  others.reserve(roles.others.size());
  for (const UnpackedSpan& u : roles.others) others.push_back(u.value);
  const auto fits = [&](std::int64_t factor, std::int64_t summand) {
    return static_cast<__int128>(factor) * mu + summand == x;
  };
  bool drop = false;
  if (others.size() == 1) {
    drop = (static_cast<__int128>(mu) + others[0] == x) || fits(others[0], 0);
  } else if (others.size() == 2) {
    drop = fits(others[0], others[1]) || fits(others[1], others[0]);
  } else {
    __int128 sum = 0;
    for (std::int64_t v : others) sum += v;
    for (std::int64_t factor : others) {
      if (static_cast<__int128>(factor) * mu + (sum - factor) == x) {
        drop = true;
        break;
      }
    }
  }
  if (!drop) return std::nullopt;
  const UnpackedSpan removed = roles.proposed_mu;
  state.unpacked.erase(
      std::find_if(state.unpacked.begin(), state.unpacked.end(),
                   [&](const UnpackedSpan& u) { return u.span == removed.span; }));
  return removed;
}

namespace {

std::vector<std::int64_t> unpacked_values(const UnpackState& state) {
  std::vector<std::int64_t> values;
  values.reserve(state.unpacked.size());
  for (const UnpackedSpan& u : state.unpacked) values.push_back(u.value);
  return values;
}

class Scan {
 public:
  Scan(const NumeralDictionary& dict, std::u32string word, std::int64_t word_value, bool tracing)
      : dict_(dict), tracing_(tracing) {
    state_.word = std::move(word);
    state_.word_value = word_value;
  }

  std::optional<std::int64_t> value_at(std::size_t start, std::size_t end) const {
    return dict_.value_of(std::u32string_view(state_.word).substr(start, end - start));
  }

  void row(Span span, std::string_view criterion, bool verdict, std::size_t cp_before) {
    if (!tracing_) return;
    trace_.push_back(TraceRow{span, encode_utf8(std::u32string_view(state_.word)
                                                    .substr(span.start, span.length())),
                              std::string(criterion), verdict, cp_before, state_.checkpoint,
                              unpacked_values(state_)});
  }

  // Reference scanner: no checkpoint; at each end position every dictionary
  // hit is tested until one passes the doubling criterion and gets unpacked.
  void run_v1() {
    const std::size_t n = state_.word.size();
    for (std::size_t end = 1; end <= n; ++end) {
      for (std::size_t start = 0; start < end; ++start) {
        const auto value = value_at(start, end);
        if (!value) continue;
        const Span span{start, end};
        const bool ok = criterion_necessary(*value, state_.word_value);
        if (ok) unpack(state_, span, *value);
        row(span, "necessary", ok, state_.checkpoint);
        if (ok) break;  // keep scanning this end only past failed candidates
      }
    }
  }

  // Checkpointed scanner: exactly one dictionary hit is processed per end
  // position, the leftmost one starting at or after the checkpoint. A failed
  // doubling test moves the checkpoint to `end`; with `rescue` enabled the
  // suffixes of the failed candidate are then searched for a sub-numeral
  // passing the sufficient criterion (checkpoint moves back to its start)
  // or, failing that, a provisional candidate via the leaky criterion,
  // committed only if no later suffix supersedes it.
  void run_checkpointed(bool rescue) {
    const std::size_t n = state_.word.size();
    for (std::size_t end = 1; end <= n; ++end) {
      for (std::size_t start = state_.checkpoint; start < end; ++start) {
        const auto value = value_at(start, end);
        if (!value) continue;
        const Span span{start, end};
        if (criterion_necessary(*value, state_.word_value)) {
          unpack(state_, span, *value);
          row(span, "necessary", true, state_.checkpoint);
        } else {
          const std::size_t cp_before = state_.checkpoint;
          state_.checkpoint = end;
          row(span, "necessary", false, cp_before);
          if (rescue) rescue_suffixes(span, *value);
        }
        break;  // first hit per end position
      }
    }
  }

  void rescue_suffixes(Span failed, std::int64_t failed_value) {
    const std::size_t end = failed.end;
    std::optional<UnpackedSpan> provisional;
    std::size_t provisional_cp = 0;
    for (std::size_t newstart = failed.start + 1; newstart < end; ++newstart) {
      const auto value = value_at(newstart, end);
      if (!value) continue;
      const Span span{newstart, end};
      if (criterion_sufficient(*value, state_.word_value) && *value < state_.word_value) {
        unpack(state_, span, *value);
        const std::size_t cp_before = state_.checkpoint;
        state_.checkpoint = newstart;
        provisional.reset();
        row(span, "sufficient", true, cp_before);
        break;
      }
      if (criterion_leaky(*value, failed_value, state_.word_value)) {
        provisional = UnpackedSpan{span, *value};
        provisional_cp = newstart;
        row(span, "leaky", true, state_.checkpoint);
      } else {
        provisional.reset();
        row(span, "leaky", false, state_.checkpoint);
      }
    }
    if (provisional) {
      unpack(state_, provisional->span, provisional->value);
      const std::size_t cp_before = state_.checkpoint;
      state_.checkpoint = provisional_cp;
      row(provisional->span, "potunpack", true, cp_before);
    }
  }

  void run_postpass() {
    if (state_.unpacked.size() < 2) return;
    const Span mu_span = propose_roles(state_).proposed_mu.span;
    const auto removed = mu_postpass(state_);
    row(mu_span, "mu-postpass", removed.has_value(), state_.checkpoint);
  }

  UnpackState& state() { return state_; }
  std::vector<TraceRow>& trace() { return trace_; }

 private:
  const NumeralDictionary& dict_;
  bool tracing_;
  UnpackState state_;
  std::vector<TraceRow> trace_;
};

}  // namespace

Decomposition decompose_with_value(const NumeralDictionary& dict, std::string_view word,
                                   std::int64_t word_value, EngineVersion engine,
                                   TraceMode trace) {
  Scan scan(dict, decode_utf8(word), word_value, trace == TraceMode::On);
  switch (engine) {
    case EngineVersion::V1: scan.run_v1(); break;
    case EngineVersion::V2: scan.run_checkpointed(/*rescue=*/false); break;
    case EngineVersion::V6:
      scan.run_checkpointed(/*rescue=*/true);
      scan.run_postpass();
      break;
  }
  const UnpackState& state = scan.state();
  Decomposition d;
  d.word = std::string(word);
  d.value = word_value;
  d.engine = engine;
  d.args.reserve(state.unpacked.size());
  for (const UnpackedSpan& u : state.unpacked) {
    d.args.push_back(DecompositionArg{
        u.span, u.value,
        encode_utf8(std::u32string_view(state.word).substr(u.span.start, u.span.length()))});
  }
  d.root = root_of(d);
  d.trace = std::move(scan.trace());
  return d;
}

Decomposition decompose(const NumeralDictionary& dict, std::string_view word,
                        EngineVersion engine, TraceMode trace) {
  const auto value = dict.value_of(word);
  if (!value) {
    throw UnknownNumeralError("'" + std::string(word) + "' is not a numeral of " +
                              dict.language_id());
  }
  return decompose_with_value(dict, word, *value, engine, trace);
}

}  // namespace numdec
