#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidwb/braid.hpp"
#include "braidwb/factorization.hpp"

namespace braidwb {

/// Generators x_1..x_generators with freely reduced relators.
struct GroupPresentation {
  int generators = 0;
  std::vector<FreeWord> relators;

  friend bool operator==(const GroupPresentation &, const GroupPresentation &) = default;
};

/// Z^free_rank + Z/t_1 + ... + Z/t_k with 1 < t_1 | t_2 | ... | t_k.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<boost::multiprecision::cpp_int> torsion;

  bool is_cyclic_of_order(long long order) const;
  /// "Z/2", "Z^2", "Z + Z/3", "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants &, const AbelianInvariants &) = default;
};

enum class RelatorMode {
  /// One relator per factor by rho type.
  Economical,
  /// beta(x_j) x_j^-1 for every factor braid beta and every generator x_j.
  Full,
};

/// Images of x_1 and x_2 under the Artin action of the factor's conjugator.
std::pair<FreeWord, FreeWord> local_pair(const CuspidalFactor &f);

/// Presentation of the complement's fundamental group: per factor
///   rho=1: a b^-1,  rho=2: a b a^-1 b^-1,  rho=3: a b a b^-1 a^-1 b^-1,
/// with (a, b) = local_pair, then the projective relator x_1 x_2 ... x_2d.
/// Throws UnverifiedFactorization.
GroupPresentation presentation(const CuspidalFactorization &F,
                               RelatorMode mode = RelatorMode::Economical);

/// Smith normal form of the relator exponent matrix.
AbelianInvariants abelianization(const GroupPresentation &P);

/// Tietze simplification using only: free and cyclic reduction, dropping
/// trivial and duplicate relators, eliminating a generator via a relator
/// x_i x_j^-1 (x_j := x_i) or x_i^{+-1} (x_i := 1). Runs to a fixed point.
GroupPresentation simplify(const GroupPresentation &P);

/// The graph on strands with an edge for each transposition of a rho = 1 or
/// rho = 3 factor is connected.
bool irreducibility_check(const CuspidalFactorization &F);

/// "gens <k>" then one relator per line as signed generator indices.
std::string serialize(const GroupPresentation &P);

} // namespace braidwb
