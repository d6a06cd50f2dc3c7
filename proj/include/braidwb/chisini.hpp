#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "braidwb/braid.hpp"
#include "braidwb/factorization.hpp"

namespace braidwb {

using Rational = boost::rational<long long>;

/// Images of the geometric generators x_1..x_2d in S_N.
struct MonodromyRep {
  int degree = 0; // N
  std::vector<Permutation> images;

  friend bool operator==(const MonodromyRep &, const MonodromyRep &) = default;
  friend auto operator<=>(const MonodromyRep &, const MonodromyRep &) = default;
};

enum class FactorVerdict {
  BranchOK,
  CuspOK,
  NodeOK,
  BranchViolation, // phi(a) != phi(b)
  CuspViolation,   // phi(a), phi(b) do not generate S_3
  NodeViolation,   // phi(a), phi(b) not distinct commuting transpositions
};

const char *to_string(FactorVerdict v);

struct FactorCheck {
  std::size_t index = 0; // 1-based factor position
  int rho = 1;
  FactorVerdict verdict = FactorVerdict::BranchOK;
};

struct ConditionReport {
  std::vector<FactorCheck> factors;
  bool transpositions = false; // every generator maps to a transposition
  bool relators_hold = false;  // local and projective relators map to 1
  bool generation = false;     // the images generate S_N
  bool transitive = false;

  bool passed() const;
  /// 1-based indices of factors whose verdict is a violation.
  std::vector<std::size_t> violations() const;
};

/// Throws InvalidArgument if rep.images.size() != F.strands() or the images
/// have mixed degrees.
ConditionReport check_rep(const CuspidalFactorization &F, const MonodromyRep &rep);

/// Lexicographically least relabeling of rep under simultaneous conjugation
/// in S_N. rep must consist of transpositions.
MonodromyRep canonical_representative(const MonodromyRep &rep);

struct EnumerationOptions {
  int max_degree = 12;
  int max_strands = 12;
  /// Lift the two bounds above.
  bool allow_large = false;
};

/// Classes of epimorphisms onto S_N satisfying the local conditions, one
/// canonical representative each, sorted. Returns an empty list for N = 1.
/// Throws UnverifiedFactorization, DegenerateDegree (N < 1), BoundExceeded.
std::vector<MonodromyRep> enumerate_reps(const CuspidalFactorization &F, int N,
                                         const EnumerationOptions &options = {});

struct ChisiniCertificate {
  Rational d;
  long long g = 0;
  long long c = 0;
  /// 4(3d+g-1) / (2(3d+g-1) - c); absent when the denominator is <= 0.
  std::optional<Rational> threshold;
  bool applicable = false;
  std::optional<long long> N;
  /// Set when N is given: applicable and N > threshold.
  std::optional<bool> guaranteed;
};

/// d must be a positive multiple of 1/2; g, c >= 0.
ChisiniCertificate chisini_bound(Rational d, long long g, long long c,
                                 std::optional<long long> N = std::nullopt);
/// Throws NotApplicable when the bound gives no information.
bool chisini_guaranteed(Rational d, long long g, long long c, long long N);

/// Euler characteristic of an N-sheeted generic cover of the plane branched
/// along a curve of genus g with c cusps and n nodes:
///   N (3 - e_B) + (N - 1)(e_B - c - n) + (N - 2)(c + n),  e_B = 2 - 2g - n.
/// A one-sheeted cover is unbranched and returns 3.
long long euler_characteristic(long long N, long long g, long long c, long long n);

struct MorphismReport {
  int degree = 0; // N
  CurveInvariants curve;
  std::vector<MonodromyRep> reps;
  std::vector<ConditionReport> checks;
  ChisiniCertificate certificate;
  long long euler = 0;
  std::vector<std::string> warnings;
};

MorphismReport morphism_report(const CuspidalFactorization &F, int N,
                               const EnumerationOptions &options = {});

/// Stable field names: classes, threshold, applicable, guaranteed, euler,
/// warnings, plus the curve data and representatives.
nlohmann::json to_json(const MorphismReport &report);
nlohmann::json to_json(const ChisiniCertificate &cert);
std::string to_string(const Rational &r);

} // namespace braidwb
