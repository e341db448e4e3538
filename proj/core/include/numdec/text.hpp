#pragma once

#include <string>
#include <string_view>

namespace numdec {

// Strings are handled as sequences of Unicode codepoints throughout: spans,
// checkpoints and substring tests all index codepoints, never bytes.

/// Decodes strict UTF-8; throws numdec::ParseError on malformed input.
std::u32string decode_utf8(std::string_view utf8);

std::string encode_utf8(std::u32string_view codepoints);
std::string encode_utf8(char32_t codepoint);

/// Canonical composition (NFC). Datasets are taken verbatim unless this is
/// requested explicitly at load time.
std::string normalize_nfc(std::string_view utf8);

}  // namespace numdec
