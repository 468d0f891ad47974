#pragma once

// Representation space and similarity kernel: the embedding vector type, the
// similarity functions queries are scored with, the additive key-augmentation
// operator, norm bounding for admitted expansion embeddings, and a
// deterministic mock embedder for offline runs.

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>

namespace erm {

using Vector = Eigen::VectorXd;

enum class Similarity {
  kInnerProduct,  // canonical for evolution math
  kCosine,        // offered, approximate for evolution when key norms drift
};

Similarity parse_similarity(std::string_view name);  // "ip" | "cosine"
std::string to_string(Similarity kind);

// Upper bound M on the Euclidean norm of expansion embeddings admitted to
// evolution. Enforced at admission time, before a unit enters any memory.
struct NormBound {
  double m = 1.0;

  NormBound() = default;
  explicit NormBound(double bound);
};

// Inner product or cosine of two same-dimension vectors. Cosine requires both
// operands to have positive norm.
double similarity(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b,
                  Similarity kind);

// Additive key augmentation: key + unit. Commutative and associative over
// unit sets.
Vector augment_key(const Eigen::Ref<const Vector>& key, const Eigen::Ref<const Vector>& unit);

// Radially scales v onto the ball of radius bound.m when it lies outside;
// idempotent.
Vector clip_to_norm(const Eigen::Ref<const Vector>& v, const NormBound& bound);

// Deterministic stand-in embedder: seeded hash of token n-grams scattered
// into dim coordinates, unit-normalized. Same (text, dim, seed) gives a
// bitwise-identical vector.
Vector mock_embed(std::string_view text, Eigen::Index dim, std::uint64_t seed);

}  // namespace erm
