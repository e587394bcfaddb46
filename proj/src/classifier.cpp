#include "burnside/classifier.hpp"

#include <string>

#include "burnside/errors.hpp"
#include "burnside/proposition_oracle.hpp"

namespace burnside {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kDoublyTransitive:
      return "DOUBLY_TRANSITIVE";
    case Verdict::kSolvableAffine:
      return "SOLVABLE_AFFINE";
    case Verdict::kNotTransitive:
      return "NOT_TRANSITIVE";
  }
  return "UNKNOWN";
}

Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::kDoublyTransitive, Verdict::kSolvableAffine, Verdict::kNotTransitive}) {
    if (to_string(v) == s) return v;
  }
  throw InvalidInput("unknown verdict '" + std::string(s) + "'");
}

namespace {

std::string group_payload(const GroupSpec& G) {
  std::string out = "{\"p\":" + std::to_string(G.p()) + ",\"generators\":[";
  for (std::size_t k = 0; k < G.generators().size(); ++k) {
    if (k) out += ',';
    out += "\"" + G.generators()[k].to_string() + "\"";
  }
  return out + "]}";
}

GroupSpec conjugate_all(const GroupSpec& G, const Perm& lambda) {
  std::vector<Perm> gens;
  gens.reserve(G.generators().size());
  for (const Perm& g : G.generators()) gens.push_back(conjugate(g, lambda));
  return GroupSpec(G.field(), std::move(gens));
}

}  // namespace

DiffSet extract_difference_set(const GroupSpec& relabeled) {
  const PrimeField& F = relabeled.field();
  std::vector<bool> diff(F.p(), false);
  for (const auto& [i, j] : orbit_of_pair(relabeled, {1, 0})) diff[F.sub(i, j)] = true;
  std::vector<Residue> U;
  for (Residue d = 1; d < F.p(); ++d) {
    if (diff[d]) U.push_back(d);
  }
  if (U.size() + 1 >= F.p()) {
    throw InternalInvariantViolation(
        "orbit of (1,0) realizes every difference; the group is doubly transitive",
        group_payload(relabeled));
  }
  return DiffSet(F, std::move(U));
}

Classification classify(const GroupSpec& G) {
  const TransitivityResult t = transitivity_tests(G);
  if (!t.is_transitive) return {Verdict::kNotTransitive, std::nullopt};
  if (t.is_doubly_transitive) return {Verdict::kDoublyTransitive, std::nullopt};

  const std::size_t p = G.p();
  EnumeratedGroup group;
  try {
    group = enumerate_group(G, p * (p - 1));
  } catch (const CapExceeded& e) {
    throw InternalInvariantViolation(
        "transitive, not doubly transitive group of order > p(p-1) (" +
            std::to_string(e.partial_count()) + " elements found)",
        group_payload(G));
  }

  const Perm* tau = nullptr;
  for (const Perm& g : group.elements) {
    if (g.order() == p) {
      tau = &g;
      break;
    }
  }
  if (tau == nullptr) {
    throw InternalInvariantViolation("transitive group of prime degree without an element of order p",
                                     group_payload(G));
  }

  const Perm lambda = relabel_to_translation(*tau);
  const GroupSpec relabeled = conjugate_all(G, lambda);
  DiffSet U = extract_difference_set(relabeled);

  std::vector<AffineCoeffs> embedding;
  for (const Perm& g : relabeled.generators()) {
    const auto coeffs = recognize_affine(g);
    if (!coeffs) {
      throw InternalInvariantViolation("relabeled generator is not affine",
                                       "{\"relabeling\":\"" + lambda.to_string() +
                                           "\",\"generator\":\"" + g.to_string() + "\"}");
    }
    embedding.push_back(*coeffs);
  }
  return {Verdict::kSolvableAffine,
          AffineWitness{lambda, std::move(U), std::move(embedding), group.order()}};
}

bool verify_certificate(const GroupSpec& G, const Classification& c) {
  try {
    const TransitivityResult t = transitivity_tests(G);
    switch (c.verdict) {
      case Verdict::kNotTransitive:
        return !t.is_transitive && !c.witness;
      case Verdict::kDoublyTransitive:
        return t.is_transitive && t.is_doubly_transitive && !c.witness;
      case Verdict::kSolvableAffine:
        break;
    }
    if (!c.witness || !t.is_transitive) return false;
    const AffineWitness& w = *c.witness;
    const PrimeField& F = G.field();
    if (w.relabeling.field() != F || w.U.field() != F) return false;
    if (w.embedding.size() != G.generators().size()) return false;

    // (a) conjugated generators are the claimed affine maps
    std::vector<Perm> conjugated;
    for (std::size_t k = 0; k < G.generators().size(); ++k) {
      Perm g = conjugate(G.generators()[k], w.relabeling);
      const AffineCoeffs& ab = w.embedding[k];
      if (ab.a == 0 || ab.a >= F.p() || ab.b >= F.p()) return false;
      if (g != make_affine(ab, F)) return false;
      conjugated.push_back(std::move(g));
    }
    // (b) each conjugated generator preserves U-differences
    for (const Perm& g : conjugated) {
      if (!check_preserves(g, w.U)) return false;
    }
    // (c) the group is solvable and has the claimed order
    const std::size_t p = F.p();
    const EnumeratedGroup group = enumerate_group(G, p * (p - 1));
    if (group.order() != w.group_order) return false;
    return is_solvable(group);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace burnside
