#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace numdec {

/// The residual template of a decomposition: the literal stretches left over
/// once every argument span is replaced by a slot. `segments` always has
/// arity + 1 elements; segments may be empty (a slot at the very start or two
/// adjacent slots leave empty literals behind).
///
/// Identity is the segment list. The rendered form joins segments with '_'
/// ("_ty-_", "veinti_", "miloko mi_"); a literal '_' inside a segment is
/// escaped as "\_" so rendered forms stay unambiguous for display.
struct RootKey {
  std::vector<std::string> segments;

  std::size_t arity() const { return segments.empty() ? 0 : segments.size() - 1; }
  std::string rendered() const;

  friend bool operator==(const RootKey&, const RootKey&) = default;
  friend auto operator<=>(const RootKey& a, const RootKey& b) {
    return a.segments <=> b.segments;
  }
};

}  // namespace numdec
