#include "erm/core.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "erm/rng.hpp"
#include "erm/text.hpp"

namespace erm {

Similarity parse_similarity(std::string_view name) {
  if (name == "ip" || name == "inner_product") return Similarity::kInnerProduct;
  if (name == "cosine") return Similarity::kCosine;
  throw std::invalid_argument("unknown similarity kind: " + std::string(name));
}

std::string to_string(Similarity kind) {
  return kind == Similarity::kInnerProduct ? "ip" : "cosine";
}

NormBound::NormBound(double bound) : m(bound) {
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    throw std::invalid_argument("NormBound: bound must be a positive finite real");
  }
}

namespace {

void require_same_dim(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b,
                      const char* where) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                ")");
  }
}

}  // namespace

double similarity(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b,
                  Similarity kind) {
  require_same_dim(a, b, "similarity");
  const double dot = a.dot(b);
  if (kind == Similarity::kInnerProduct) return dot;
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("similarity: cosine requires nonzero-norm operands");
  }
  return dot / (na * nb);
}

Vector augment_key(const Eigen::Ref<const Vector>& key, const Eigen::Ref<const Vector>& unit) {
  require_same_dim(key, unit, "augment_key");
  return key + unit;
}

Vector clip_to_norm(const Eigen::Ref<const Vector>& v, const NormBound& bound) {
  const double norm = v.norm();
  if (norm <= bound.m) return v;
  return v * (bound.m / norm);
}

Vector mock_embed(std::string_view text, Eigen::Index dim, std::uint64_t seed) {
  if (text.empty()) throw std::invalid_argument("mock_embed: empty text");
  if (dim < 2) throw std::invalid_argument("mock_embed: dim must be >= 2");

  std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) tokens.emplace_back(text);  // punctuation-only input

  std::uint64_t seed_state = seed;
  const std::uint64_t seed_word = splitmix64(seed_state);

  Vector v = Vector::Zero(dim);
  const auto scatter = [&](std::string_view gram) {
    std::uint64_t state = fnv1a64(gram) ^ seed_word;
    for (int k = 0; k < 4; ++k) {
      const auto idx =
          static_cast<Eigen::Index>(splitmix64(state) % static_cast<std::uint64_t>(dim));
      const double val =
          static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-52 - 1.0;  // [-1, 1)
      v[idx] += val;
    }
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    scatter(tokens[i]);
    if (i + 1 < tokens.size()) scatter(tokens[i] + " " + tokens[i + 1]);
  }

  const double norm = v.norm();
  if (norm == 0.0) {
    v[0] = 1.0;  // unreachable in practice; keeps the unit-norm contract total
    return v;
  }
  return v / norm;
}

}  // namespace erm
