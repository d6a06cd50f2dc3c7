#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "braidwb/braid.hpp"
#include "braidwb/factorization.hpp"

namespace braidwb {

enum class MoveDirection { Left, Right };

/// A Hurwitz move at positions (index, index + 1), index 1-based.
///   Left:  g_i g_{i+1} -> (g_i g_{i+1} g_i^-1) g_i
///   Right: g_i g_{i+1} -> g_{i+1} (g_{i+1}^-1 g_i g_{i+1})
struct MoveSpec {
  std::size_t index = 1;
  MoveDirection direction = MoveDirection::Left;

  MoveSpec inverse() const {
    return {index, direction == MoveDirection::Left ? MoveDirection::Right
                                                    : MoveDirection::Left};
  }
  friend bool operator==(const MoveSpec &, const MoveSpec &) = default;
};

/// Throws IndexOutOfRange unless 1 <= index < F.size(). Conjugators of the two
/// touched factors are freely reduced.
CuspidalFactorization apply_move(const CuspidalFactorization &F, MoveSpec move);
CuspidalFactorization apply_moves(const CuspidalFactorization &F,
                                  const std::vector<MoveSpec> &moves);

/// Every factor (Q, rho) becomes (Q z, rho), i.e. g -> z^-1 g z.
CuspidalFactorization conjugate_all(const CuspidalFactorization &F, const BraidWord &z);

/// Key identifying the tuple of factor braids: rho and Garside normal form of
/// each factor, in order. Two factorizations have equal keys iff their
/// factors are equal as braids.
std::string canonical_key(const CuspidalFactorization &F);

// ---------------------------------------------------------------------------
// Strand-permutation shadow

using PermTuple = std::vector<Permutation>;

PermTuple quotient_tuple(const CuspidalFactorization &F);

struct OrbitOptions {
  int max_degree = 8;
  std::size_t max_states = 2'000'000;
};

/// Full Hurwitz orbit (both directions) of a permutation tuple. Throws
/// BoundExceeded if the degree or state count exceeds the options.
std::set<PermTuple> orbit_quotient(const PermTuple &t, const OrbitOptions &options = {});

/// Orbit size plus a representative that is canonical for the orbit up to
/// simultaneous conjugation in S_n.
struct QuotientOrbitClass {
  std::size_t size = 0;
  std::vector<int> canonical;

  friend bool operator==(const QuotientOrbitClass &, const QuotientOrbitClass &) = default;
};

// ---------------------------------------------------------------------------
// Fingerprints

/// Necessary invariants of braid factorization type.
struct Fingerprint {
  std::size_t factor_count = 0;
  SingularityCounts counts;
  std::string product_form;        // encode(normal_form(product))
  std::vector<int> exponent_sums;  // sorted multiset
  /// Absent when the orbit is too large to compute within the work cap.
  std::optional<QuotientOrbitClass> quotient_orbit;

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

Fingerprint fingerprint(const CuspidalFactorization &F);

/// Name of the first field on which a and b differ: "factor-count",
/// "rho-counts", "product", "exponent-sums", "quotient-orbit".
std::optional<std::string> first_difference(const Fingerprint &a, const Fingerprint &b);

// ---------------------------------------------------------------------------
// Witnesses

/// Moves applied in order, then simultaneous conjugation by `conjugator`.
struct Witness {
  std::vector<MoveSpec> moves;
  BraidWord conjugator;
};

CuspidalFactorization replay(const CuspidalFactorization &F, const Witness &w);
/// True iff replaying w on from yields exactly the factors of to.
bool replay_matches(const CuspidalFactorization &from, const CuspidalFactorization &to,
                    const Witness &w);

/// "move <i> <L|R>" lines followed by one "conj <word>" line.
std::string serialize_witness(const Witness &w);
Witness parse_witness(std::string_view text, int strands);

// ---------------------------------------------------------------------------
// Equivalence

struct EquivalenceOptions {
  std::size_t budget = 1'000'000;
  /// Radius of the generator ball searched for conjugators after both sides
  /// are normalized so their first factor is X_1^rho.
  int conjugator_radius = 3;
};

struct BudgetReport {
  std::size_t states_explored = 0;
  std::size_t budget = 0;
  int conjugator_radius = 0;
  std::size_t conjugator_candidates = 0;
  /// Both Hurwitz orbits were exhausted without a match.
  bool orbits_exhausted = false;
};

struct EquivalenceVerdict {
  enum class Kind { Equivalent, Distinguished, Unknown };

  Kind kind = Kind::Unknown;
  Witness witness;        // Equivalent
  std::string invariant;  // Distinguished
  BudgetReport report;
};

const char *to_string(EquivalenceVerdict::Kind kind);

/// Budgeted semi-decision of Hurwitz-and-conjugation equivalence. Equivalent
/// verdicts carry a witness that has been replayed against F2. Throws
/// StrandMismatch and ZeroBudget.
EquivalenceVerdict equivalent(const CuspidalFactorization &F1,
                              const CuspidalFactorization &F2,
                              const EquivalenceOptions &options = {});

} // namespace braidwb
