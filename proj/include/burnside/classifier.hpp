#ifndef BURNSIDE_CLASSIFIER_HPP
#define BURNSIDE_CLASSIFIER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "burnside/fp_core.hpp"
#include "burnside/group_engine.hpp"
#include "burnside/perm.hpp"

namespace burnside {

enum class Verdict { kDoublyTransitive, kSolvableAffine, kNotTransitive };

std::string_view to_string(Verdict v) noexcept;
// Inverse of to_string; throws InvalidInput.
Verdict verdict_from_string(std::string_view s);

// Solvability certificate. All coordinates after the relabeling: generator g
// becomes lambda g lambda^-1 = (i -> a*i + b) with (a, b) = embedding[k].
struct AffineWitness {
  Perm relabeling;
  DiffSet U;
  std::vector<AffineCoeffs> embedding;
  std::size_t group_order = 0;
};

struct Classification {
  Verdict verdict = Verdict::kNotTransitive;
  std::optional<AffineWitness> witness;  // set iff kSolvableAffine
};

// Decides doubly transitive vs. affine. In the non-doubly-transitive branch
// the group is enumerated with cap p(p-1); exceeding it, or a conjugated
// generator failing affine recognition, raises InternalInvariantViolation.
Classification classify(const GroupSpec& G);

// U = {i - j : (i, j) in the orbit of (1, 0)}. Expects translation by 1 in
// the group and no double transitivity; a full difference set raises
// InternalInvariantViolation.
DiffSet extract_difference_set(const GroupSpec& relabeled);

// Independent re-check of a classification against G. Never throws for
// mismatching certificates; returns false instead.
bool verify_certificate(const GroupSpec& G, const Classification& c);

}  // namespace burnside

#endif  // BURNSIDE_CLASSIFIER_HPP
