#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace erm {

// Lowercased alphanumeric runs; everything else is a separator.
std::vector<std::string> tokenize(std::string_view text);

// Lowercase with runs of whitespace collapsed to single spaces and
// leading/trailing whitespace dropped.
std::string canonicalize(std::string_view text);

std::uint64_t fnv1a64(std::string_view bytes);

std::string hex64(std::uint64_t value);

// Stable id for a piece of text: hex64(fnv1a64(canonicalize(text))).
std::string text_hash(std::string_view text);

// Token-overlap F1 between two texts (bag-of-tokens with multiplicity).
double token_f1(std::string_view candidate, std::string_view reference);

}  // namespace erm
