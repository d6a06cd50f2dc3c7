#include <doctest.h>

#include <random>

#include "braidwb/error.hpp"
#include "braidwb/vankampen.hpp"
#include "test_support.hpp"

using namespace braidwb;
using braidwb::testing::corpus_path;
using braidwb::testing::invariant_factors;
using braidwb::testing::substitute_action;

namespace {

std::vector<std::vector<long long>> exponent_matrix(const GroupPresentation &P) {
  std::vector<std::vector<long long>> m;
  for (const auto &r : P.relators) {
    std::vector<long long> row(P.generators, 0);
    for (int x : r.letters())
      row[std::abs(x) - 1] += x > 0 ? 1 : -1;
    m.push_back(row);
  }
  return m;
}

// Torsion and free rank read off the determinantal-divisor oracle.
AbelianInvariants oracle_invariants(const GroupPresentation &P) {
  AbelianInvariants inv;
  for (long long f : invariant_factors(exponent_matrix(P), P.generators)) {
    if (f == 0)
      ++inv.free_rank;
    else if (f != 1)
      inv.torsion.push_back(f < 0 ? -f : f);
  }
  return inv;
}

const char *const kIrreducible[] = {"conic.bfac", "cuspidal_cubic.bfac", "smooth_cubic.bfac",
                                    "smooth_quartic.bfac", "cuspidal_cubic_scrambled.bfac",
                                    "smooth_cubic_scrambled.bfac"};

} // namespace

TEST_CASE("local pairs follow the conjugator") {
  const auto plain = local_pair(CuspidalFactor(BraidWord::identity(3), 1));
  CHECK(plain.first == FreeWord::generator(3, 1));
  CHECK(plain.second == FreeWord::generator(3, 2));
  const BraidWord q(4, {2, -1, 3});
  const auto pair = local_pair(CuspidalFactor(q, 3));
  CHECK(pair.first == substitute_action(q, FreeWord::generator(4, 1)));
  CHECK(pair.second == substitute_action(q, FreeWord::generator(4, 2)));
}

TEST_CASE("conic presentation") {
  const auto P = presentation(load_factorization(corpus_path("conic.bfac")));
  CHECK(P.generators == 2);
  REQUIRE(P.relators.size() == 3);
  CHECK(P.relators[0] == FreeWord(2, {1, -2}));
  CHECK(P.relators[2] == FreeWord(2, {1, 2}));
  CHECK(serialize(P) == "gens 2\n1 -2\n1 -2\n1 2\n");
  // The distinct rows are [[1,-1],[1,1]], Smith form diag(1, 2).
  CHECK(invariant_factors({{1, -1}, {1, 1}}, 2) == std::vector<long long>{1, 2});
  const auto ab = abelianization(P);
  CHECK(ab.is_cyclic_of_order(2));
  CHECK(ab.to_string() == "Z/2");
  CHECK(ab == oracle_invariants(P));

  const auto S = simplify(P);
  CHECK(S.generators == 1);
  REQUIRE(S.relators.size() == 1);
  CHECK(S.relators[0] == FreeWord(1, {1, 1}));
}

TEST_CASE("cuspidal cubic presentation") {
  const auto P = presentation(load_factorization(corpus_path("cuspidal_cubic.bfac")));
  CHECK(P.generators == 3);
  CHECK(P.relators.size() == 5);
  const auto m = exponent_matrix(P);
  CHECK(invariant_factors(m, 3) == std::vector<long long>{1, 1, 3});
  CHECK(abelianization(P).is_cyclic_of_order(3));
  CHECK(abelianization(P).to_string() == "Z/3");
  CHECK(abelianization(simplify(P)) == abelianization(P));
}

TEST_CASE("irreducible corpus curves have cyclic abelianization of order 2d") {
  for (const char *name : kIrreducible) {
    CAPTURE(name);
    const auto F = load_factorization(corpus_path(name));
    REQUIRE(irreducibility_check(F));
    for (auto mode : {RelatorMode::Economical, RelatorMode::Full}) {
      const auto P = presentation(F, mode);
      const auto ab = abelianization(P);
      CHECK(ab.is_cyclic_of_order(F.strands()));
      CHECK(ab == oracle_invariants(P));
      const auto S = simplify(P);
      CHECK(S.generators <= P.generators);
      CHECK(abelianization(S) == ab);
    }
  }
  const auto nodes = load_factorization(corpus_path("node_pair.bfac"));
  CHECK_FALSE(irreducibility_check(nodes));
  // Two lines: H_1 of the complement is Z.
  CHECK(abelianization(presentation(nodes)).to_string() == "Z");
  CHECK(abelianization(presentation(nodes, RelatorMode::Full)).to_string() == "Z");
}

TEST_CASE("unverified input is rejected") {
  CHECK_THROWS_AS(presentation(load_factorization(corpus_path("unverified.bfac"))), Error);
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    GroupPresentation P;
    P.generators = dim(rng);
    const int rows = dim(rng);
    std::uniform_int_distribution<int> gen(1, P.generators);
    for (int r = 0; r < rows; ++r) {
      std::vector<int> w(len(rng));
      for (int &x : w)
        x = (rng() & 1) ? gen(rng) : -gen(rng);
      P.relators.emplace_back(P.generators, w);
    }
    CAPTURE(serialize(P));
    CHECK(abelianization(P) == oracle_invariants(P));
    CHECK(abelianization(simplify(P)) == abelianization(P));
  }
  CHECK(abelianization(GroupPresentation{2, {}}).to_string() == "Z^2");
  CHECK(abelianization(GroupPresentation{0, {}}).to_string() == "1");
  CHECK(abelianization(GroupPresentation{2, {FreeWord(2, {1, 1, 1}), FreeWord(2, {2, 2})}})
            .to_string() == "Z/6");
  CHECK(abelianization(GroupPresentation{2, {FreeWord(2, {1, 1, 1})}}).to_string() ==
        "Z + Z/3");
}

TEST_CASE("simplify uses only the listed Tietze moves") {
  // Free and cyclic reduction, then duplicates.
  const GroupPresentation P{3,
                            {FreeWord(3, {2, 1, 3, -3, -2}), FreeWord(3, {1}),
                             FreeWord(3, {2, 3, 2, -3, -2, -3}), FreeWord(3, {2, 3, 2, -3, -2, -3})}};
  const auto S = simplify(P);
  CHECK(S.generators == 2);
  REQUIRE(S.relators.size() == 1);
  CHECK(abelianization(S) == abelianization(P));
  // Nothing to do on an already minimal presentation.
  const GroupPresentation T{2, {FreeWord(2, {1, 2, 1, -2, -1, -2})}};
  CHECK(simplify(T) == T);
}
