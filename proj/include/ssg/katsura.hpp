#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ssg/triple.hpp"
#include "ssg/verdict.hpp"

namespace ssg {

// Vertices "1".."N"; edges "e:i:j:n" with range i, domain j, 0 <= n < A_ij.
// The generator sends e:i:j:n to e:i:j:((B_ij + n) mod A_ij) with restriction floor((B_ij + n) / A_ij).
Triple build_katsura(const KatsuraData& k);
void validate_katsura(const KatsuraData& k);

struct FixTrace {
  bool fixed = false;
  std::vector<Rational> K;  // K_j = l B_{alpha|j} / A_{alpha|j}, j = 1..|alpha|
};

// Also asserts agreement with the action of l on alpha.
FixTrace fixed_by_int(const Triple& t, const BigInt& l, const Path& alpha);

// Verdicts computed from the matrices alone.
class KatsuraAnalysis {
 public:
  explicit KatsuraAnalysis(KatsuraData k);

  const KatsuraData& data() const { return k_; }

  bool pseudo_free() const;
  bool minimal() const;
  bool condition_l() const;
  Truth hausdorff() const;
  // every nonzero l fixing Z(i) is slack at i
  bool slack_condition() const;
  Truth essentially_principal() const;
  // YES when the limit criterion certifies essential principality, UNKNOWN otherwise
  Truth sufficient_ep() const;
  Truth simple() const;

 private:
  struct Cycle {
    std::vector<std::size_t> vertices;  // i_1 -> i_2 -> ... -> i_1 along pairs with A > 0
    Rational ratio;                     // prod B / prod A
  };
  bool live(std::size_t i, std::size_t j) const { return k_.A[i][j] > 0 && k_.B[i][j] != 0; }
  bool edge(std::size_t i, std::size_t j) const { return k_.A[i][j] > 0; }
  std::vector<bool> live_reach(std::size_t i) const;
  std::vector<Cycle> live_cycles() const;

  KatsuraData k_;
  std::size_t n_;
};

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct SmithForm {
  IntMatrix U, S, V;  // U M V = S
};

SmithForm smith_normal_form(const IntMatrix& M);
AbelianGroup cokernel(const IntMatrix& M);
std::size_t kernel_rank(const IntMatrix& M);
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

struct KGroups {
  AbelianGroup K0, K1;
};
KGroups k_theory(const KatsuraData& k);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
BigInt determinant(const IntMatrix& m);

}  // namespace ssg
