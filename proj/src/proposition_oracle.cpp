#include "burnside/proposition_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "burnside/errors.hpp"

namespace burnside {

bool check_preserves(const Perm& pi, const DiffSet& U) {
  require_same_field(pi.field(), U.field(), "check_preserves");
  const PrimeField& F = U.field();
  for (Residue i = 0; i < F.p(); ++i) {
    for (Residue u : U.elements()) {
      const Residue j = F.sub(i, u);
      if (!U.contains(F.sub(pi(i), pi(j)))) return false;
    }
  }
  return true;
}

bool check_preserves_both_ways(const Perm& pi, const DiffSet& U) {
  require_same_field(pi.field(), U.field(), "check_preserves_both_ways");
  const PrimeField& F = U.field();
  for (Residue i = 0; i < F.p(); ++i) {
    for (Residue j = 0; j < F.p(); ++j) {
      if (i == j) continue;
      if (U.contains(F.sub(i, j)) != U.contains(F.sub(pi(i), pi(j)))) return false;
    }
  }
  return true;
}

std::vector<Residue> mult_stabilizer(const DiffSet& U) {
  const PrimeField& F = U.field();
  std::vector<Residue> out;
  for (Residue a = 1; a < F.p(); ++a) {
    bool stable = true;
    for (Residue u : U.elements()) {
      if (!U.contains(F.mul(a, u))) {
        stable = false;
        break;
      }
    }
    if (stable) out.push_back(a);
  }
  return out;
}

namespace {

AutResult finish(const DiffSet& U, std::vector<Perm> autos) {
  std::sort(autos.begin(), autos.end());
  AutResult result{U, std::move(autos), mult_stabilizer(U), true};
  for (const Perm& pi : result.automorphisms) {
    if (!recognize_affine(pi)) {
      result.all_affine = false;
      break;
    }
  }
  return result;
}

class Backtracker {
 public:
  explicit Backtracker(const DiffSet& U)
      : U_(U), F_(U.field()), p_(U.p()), image_(p_, 0), used_(p_, false) {}

  std::vector<Perm> run() {
    extend(0);
    return std::move(solutions_);
  }

 private:
  bool consistent(Residue k, Residue v) const {
    for (Residue j = 0; j < k; ++j) {
      if (U_.contains(F_.sub(k, j)) != U_.contains(F_.sub(v, image_[j]))) return false;
      if (U_.contains(F_.sub(j, k)) != U_.contains(F_.sub(image_[j], v))) return false;
    }
    return true;
  }

  void extend(Residue k) {
    if (k == p_) {
      solutions_.emplace_back(F_, image_);
      return;
    }
    for (Residue v = 0; v < p_; ++v) {
      if (used_[v] || !consistent(k, v)) continue;
      image_[k] = v;
      used_[v] = true;
      extend(k + 1);
      used_[v] = false;
    }
  }

  const DiffSet& U_;
  const PrimeField& F_;
  std::uint32_t p_;
  std::vector<Residue> image_;
  std::vector<bool> used_;
  std::vector<Perm> solutions_;
};

}  // namespace

AutResult enumerate_diff_preserving(const DiffSet& U) {
  return finish(U, Backtracker(U).run());
}

AutResult naive_enumerate(const DiffSet& U) {
  const PrimeField& F = U.field();
  if (F.p() > kNaiveEnumerateMaxPrime) {
    throw InvalidInput("naive_enumerate is limited to p <= " +
                       std::to_string(kNaiveEnumerateMaxPrime));
  }
  std::vector<Residue> img(F.p());
  std::iota(img.begin(), img.end(), Residue{0});
  std::vector<Perm> autos;
  do {
    Perm pi(F, img);
    if (check_preserves(pi, U)) autos.push_back(std::move(pi));
  } while (std::next_permutation(img.begin(), img.end()));
  return finish(U, std::move(autos));
}

namespace {

ScanRow scan_one(const PrimeField& field, std::uint64_t mask) {
  DiffSet U = DiffSet::from_mask(field, mask);
  AutResult aut = enumerate_diff_preserving(U);
  const std::size_t expected = std::size_t{field.p()} * aut.mult_stabilizer.size();
  if (!aut.all_affine) {
    std::string payload = "{\"p\":" + std::to_string(field.p()) + ",\"U\":\"" + U.to_string() +
                          "\",\"non_affine\":[";
    bool first = true;
    for (const Perm& pi : aut.automorphisms) {
      if (recognize_affine(pi)) continue;
      payload += (first ? "\"" : ",\"") + pi.to_string() + "\"";
      first = false;
    }
    payload += "]}";
    throw PropositionViolated("non-affine U-difference-preserving permutation for U = " +
                                  U.to_string(),
                              payload);
  }
  if (aut.automorphisms.size() != expected) {
    throw PropositionViolated(
        "automorphism count " + std::to_string(aut.automorphisms.size()) + " != p*|M(U)| = " +
            std::to_string(expected) + " for U = " + U.to_string(),
        "{\"p\":" + std::to_string(field.p()) + ",\"U\":\"" + U.to_string() + "\"}");
  }
  return ScanRow{U, aut.mult_stabilizer.size(), aut.automorphisms.size(),
                 min_nonzero_power_sum(U), aut.all_affine};
}

}  // namespace

ScanSummary scan_all_subsets(const PrimeField& field, unsigned jobs, std::uint32_t prime_cap) {
  const std::uint32_t p = field.p();
  if (p > prime_cap) {
    throw InvalidInput("scan is limited to p <= " + std::to_string(prime_cap) +
                       " (2^(p-1) subsets); raise the cap explicitly");
  }
  if (p > 64) throw InvalidInput("scan supports p <= 64 only");
  if (p < 3) return ScanSummary{p, {}, 0};

  const std::uint64_t full = (std::uint64_t{1} << (p - 1)) - 1;
  const std::size_t count = static_cast<std::size_t>(full - 1);  // masks 1 .. full-1
  std::vector<std::optional<ScanRow>> slots(count);

  jobs = std::max(1U, jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failure_index = count;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= count) return;
      try {
        slots[idx] = scan_one(field, idx + 1);
      } catch (...) {
        // Keep the failure at the lowest index so the reported
        // counterexample does not depend on scheduling.
        std::lock_guard lock(failure_mutex);
        if (idx < failure_index) {
          failure_index = idx;
          failure = std::current_exception();
        }
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ScanSummary summary{p, {}, 0};
  summary.rows.reserve(count);
  for (auto& slot : slots) {
    summary.total_automorphisms += slot->automorphism_count;
    summary.rows.push_back(std::move(*slot));
  }
  return summary;
}

}  // namespace burnside
