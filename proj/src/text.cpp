#include "erm/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace erm {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string canonicalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (const char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) {
        out.push_back(' ');
        pending_space = false;
      }
      out.push_back(static_cast<char>(std::tolower(uc)));
    }
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string text_hash(std::string_view text) {
  return hex64(fnv1a64(canonicalize(text)));
}

double token_f1(std::string_view candidate, std::string_view reference) {
  const auto cand = tokenize(candidate);
  const auto ref = tokenize(reference);
  if (cand.empty() || ref.empty()) return 0.0;
  std::map<std::string, int> ref_counts;
  for (const auto& t : ref) ++ref_counts[t];
  int overlap = 0;
  for (const auto& t : cand) {
    auto it = ref_counts.find(t);
    if (it != ref_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / static_cast<double>(cand.size());
  const double recall = static_cast<double>(overlap) / static_cast<double>(ref.size());
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace erm
