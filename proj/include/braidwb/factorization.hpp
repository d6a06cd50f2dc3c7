#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidwb/braid.hpp"

namespace braidwb {

/// Q^-1 X_1^rho Q. rho = 1 is a branch point, 2 a node, 3 a cusp.
class CuspidalFactor {
public:
  CuspidalFactor(BraidWord conjugator, int rho);

  const BraidWord &conjugator() const noexcept { return conjugator_; }
  int rho() const noexcept { return rho_; }
  int strands() const noexcept { return conjugator_.strands(); }

  friend bool operator==(const CuspidalFactor &, const CuspidalFactor &) = default;

private:
  BraidWord conjugator_;
  int rho_;
};

/// An ordered product of cuspidal factors in B_n, n = 2d. Not necessarily a
/// factorization of the full twist; see verify_full_twist.
class CuspidalFactorization {
public:
  /// Throws EmptyFactorization for an empty factor list and StrandMismatch if
  /// any conjugator lives in a different braid group.
  CuspidalFactorization(int strands, std::vector<CuspidalFactor> factors);

  int strands() const noexcept { return strands_; }
  const std::vector<CuspidalFactor> &factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const CuspidalFactor &operator[](std::size_t i) const { return factors_[i]; }

  friend bool operator==(const CuspidalFactorization &,
                         const CuspidalFactorization &) = default;

private:
  int strands_;
  std::vector<CuspidalFactor> factors_;
};

struct SingularityCounts {
  int branch = 0; // rho = 1
  int nodes = 0;  // rho = 2
  int cusps = 0;  // rho = 3

  friend bool operator==(const SingularityCounts &, const SingularityCounts &) = default;
};

struct CurveInvariants {
  int degree = 0;
  int genus = 0;
  int cusps = 0;
  int nodes = 0;

  friend bool operator==(const CurveInvariants &, const CurveInvariants &) = default;
};

BraidWord factor_braid(const CuspidalFactor &f);
/// Left-to-right product of the factor braids.
BraidWord product(const CuspidalFactorization &F);
bool verify_full_twist(const CuspidalFactorization &F);

SingularityCounts singularity_counts(const CuspidalFactorization &F);
/// Throws UnverifiedFactorization or NegativeGenus.
CurveInvariants curve_invariants(const CuspidalFactorization &F);
/// Arithmetic genus minus singularities; may be negative.
int genus_from_counts(int degree, int cusps, int nodes);

/// Same factorization with every conjugator freely reduced.
CuspidalFactorization normalize(const CuspidalFactorization &F);

/// Tries to write g as Q^-1 X_1^rho Q with Q of length <= max_length.
/// rho is read off the exponent sum; returns nullopt when no such Q is found.
std::optional<CuspidalFactor> recognize_factor(const BraidWord &g, int max_length = 4);

/// Line-oriented format:
///   strands <n>
///   factor rho=<1|2|3> Q=<signed ints>
/// '#' starts a comment. Errors are ParseError with line/column.
CuspidalFactorization parse_factorization(std::string_view text);
/// Canonical text: header, then factors in order with freely reduced Q.
std::string serialize(const CuspidalFactorization &F);

CuspidalFactorization load_factorization(const std::string &path);

} // namespace braidwb
