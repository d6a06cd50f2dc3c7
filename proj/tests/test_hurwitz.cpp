#include <doctest.h>

#include <array>
#include <chrono>
#include <random>
#include <set>

#include "braidwb/error.hpp"
#include "braidwb/hurwitz.hpp"
#include "test_support.hpp"

using namespace braidwb;
using braidwb::testing::corpus_path;
using braidwb::testing::random_word;

namespace {

CuspidalFactorization random_factorization(std::mt19937 &rng, int n, std::size_t count) {
  std::uniform_int_distribution<int> rho(1, 3);
  std::vector<CuspidalFactor> fs;
  for (std::size_t i = 0; i < count; ++i)
    fs.emplace_back(free_reduce(random_word(rng, n, 4)), rho(rng));
  return CuspidalFactorization(n, std::move(fs));
}

MoveSpec random_move(std::mt19937 &rng, std::size_t size) {
  std::uniform_int_distribution<std::size_t> at(1, size - 1);
  return {at(rng), (rng() & 1) ? MoveDirection::Left : MoveDirection::Right};
}

// Raw S_3 arithmetic on image arrays, p[x] = image of x (0-based); products
// read left to right.
using P3 = std::array<int, 3>;

P3 mul(const P3 &a, const P3 &b) { return {b[a[0]], b[a[1]], b[a[2]]}; }
P3 inv(const P3 &a) {
  P3 r{};
  for (int i = 0; i < 3; ++i)
    r[a[i]] = i;
  return r;
}

std::set<std::pair<P3, P3>> brute_orbit(P3 a, P3 b) {
  std::set<std::pair<P3, P3>> seen{{a, b}};
  std::vector<std::pair<P3, P3>> stack{{a, b}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    for (const auto &next : {std::pair<P3, P3>{mul(mul(x, y), inv(x)), x},
                             std::pair<P3, P3>{y, mul(mul(inv(y), x), y)}})
      if (seen.insert(next).second)
        stack.push_back(next);
  }
  return seen;
}

} // namespace

TEST_CASE("moves preserve product, counts and fingerprint") {
  std::mt19937 rng(424242);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3;
    const auto F = random_factorization(rng, n, 2 + trial % 4);
    const MoveSpec m = random_move(rng, F.size());
    const BraidWord z = random_word(rng, n, 3);
    const auto G = conjugate_all(apply_move(F, m), z);
    CHECK(equals(product(G), conjugate(product(F), z)));
    CHECK(equals(product(apply_move(F, m)), product(F)));
    CHECK(singularity_counts(G) == singularity_counts(F));
    CHECK(fingerprint(apply_move(F, m)) == fingerprint(F));
    if (equals(z, BraidWord::identity(n)) || !equals(conjugate(product(F), z), product(F)))
      continue;
    CHECK(fingerprint(G) == fingerprint(F));
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(60));
}

TEST_CASE("fingerprints of verified factorizations survive conjugation") {
  std::mt19937 rng(8);
  for (const char *name : {"conic.bfac", "cuspidal_cubic.bfac", "smooth_cubic.bfac"}) {
    const auto F = load_factorization(corpus_path(name));
    for (int trial = 0; trial < 20; ++trial) {
      const auto G =
          conjugate_all(apply_move(F, random_move(rng, F.size())), random_word(rng, F.strands(), 4));
      CHECK(fingerprint(G) == fingerprint(F));
    }
  }
}

TEST_CASE("move algebra") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const auto F = random_factorization(rng, n, 2 + trial % 4);
    const MoveSpec m = random_move(rng, F.size());
    CHECK(apply_move(apply_move(F, m), m.inverse()) == normalize(F));
    CHECK(apply_moves(F, {m, m.inverse()}) == normalize(F));
  }
  // Braid relation among moves at adjacent positions.
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const auto F = random_factorization(rng, n, 3 + trial % 3);
    std::uniform_int_distribution<std::size_t> at(1, F.size() - 2);
    const std::size_t i = at(rng);
    const auto dir = (trial & 1) ? MoveDirection::Left : MoveDirection::Right;
    const MoveSpec a{i, dir}, b{i + 1, dir};
    CHECK(canonical_key(apply_moves(F, {a, b, a})) == canonical_key(apply_moves(F, {b, a, b})));
  }
  const auto F = load_factorization(corpus_path("conic.bfac"));
  CHECK_THROWS_AS(apply_move(F, {0, MoveDirection::Left}), Error);
  CHECK_THROWS_AS(apply_move(F, {2, MoveDirection::Left}), Error);
}

TEST_CASE("canonical keys compare factor braids") {
  const CuspidalFactorization a(3, {CuspidalFactor(BraidWord(3, {2, 1}), 1)});
  // X2 written with a different conjugator.
  const CuspidalFactorization b(3, {CuspidalFactor(BraidWord(3, {-2, -1}), 1)});
  CHECK(equals(factor_braid(a[0]), factor_braid(b[0])));
  CHECK(canonical_key(a) == canonical_key(b));
  const CuspidalFactorization c(3, {CuspidalFactor(BraidWord(3, {2, 1}), 2)});
  CHECK(canonical_key(a) != canonical_key(c));
}

TEST_CASE("quotient orbits in S_3") {
  const auto t12 = Permutation::transposition(3, 1, 2);
  const auto t13 = Permutation::transposition(3, 1, 3);
  const auto orbit = orbit_quotient({t12, t13});
  const auto brute = brute_orbit({1, 0, 2}, {2, 1, 0});
  CHECK(brute.size() == 3);
  CHECK(orbit.size() == 3);
  for (const auto &tuple : orbit) {
    const auto a = tuple[0].images(), b = tuple[1].images();
    CHECK(brute.count({P3{a[0] - 1, a[1] - 1, a[2] - 1}, P3{b[0] - 1, b[1] - 1, b[2] - 1}}) == 1);
  }
  CHECK(orbit_quotient({t12, t12}).size() == 1);
  CHECK(brute_orbit({1, 0, 2}, {1, 0, 2}).size() == 1);
  CHECK(orbit_quotient({}).empty());
  CHECK_THROWS_AS(orbit_quotient({Permutation::identity(9), Permutation::identity(9)}), Error);
}

TEST_CASE("quotient tuple of the conic") {
  const auto t = quotient_tuple(load_factorization(corpus_path("conic.bfac")));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == Permutation::transposition(2, 1, 2));
  CHECK(t[1] == t[0]);
}

TEST_CASE("first_difference names the separating invariant") {
  const auto conic = load_factorization(corpus_path("conic.bfac"));
  const auto cusp = load_factorization(corpus_path("cuspidal_cubic.bfac"));
  const auto smooth = load_factorization(corpus_path("smooth_cubic.bfac"));
  CHECK(first_difference(fingerprint(cusp), fingerprint(smooth)) == "factor-count");
  CHECK_FALSE(first_difference(fingerprint(conic), fingerprint(conic)).has_value());

  const CuspidalFactorization p(3, {CuspidalFactor(BraidWord::identity(3), 1),
                                    CuspidalFactor(BraidWord::identity(3), 2)});
  const CuspidalFactorization q(3, {CuspidalFactor(BraidWord::identity(3), 2),
                                    CuspidalFactor(BraidWord::identity(3), 2)});
  CHECK(first_difference(fingerprint(p), fingerprint(q)) == "rho-counts");

  const CuspidalFactorization r(3, {CuspidalFactor(BraidWord::identity(3), 1),
                                    CuspidalFactor(BraidWord::identity(3), 1)});
  const CuspidalFactorization s(3, {CuspidalFactor(BraidWord::identity(3), 1),
                                    CuspidalFactor(BraidWord(3, {-2}), 1)});
  CHECK(first_difference(fingerprint(r), fingerprint(s)) == "product");
}

TEST_CASE("witness text round trip") {
  const Witness w{{{1, MoveDirection::Left}, {3, MoveDirection::Right}}, BraidWord(3, {-1, 2})};
  const std::string text = serialize_witness(w);
  CHECK(text == "move 1 L\nmove 3 R\nconj -1 2\n");
  const Witness back = parse_witness(text, 3);
  CHECK(back.moves == w.moves);
  CHECK(back.conjugator == w.conjugator);
  CHECK(parse_witness("conj\n", 2).moves.empty());
  CHECK_THROWS_AS(parse_witness("move 1 X\nconj\n", 3), ParseError);
  CHECK_THROWS_AS(parse_witness("move 1 L\n", 3), ParseError);
  CHECK_THROWS_AS(parse_witness("conj 3\n", 3), ParseError);
}

TEST_CASE("bundled scrambled pairs are equivalent") {
  for (const auto &[a, b] : {std::pair{"cuspidal_cubic.bfac", "cuspidal_cubic_scrambled.bfac"},
                             std::pair{"smooth_cubic.bfac", "smooth_cubic_scrambled.bfac"}}) {
    CAPTURE(b);
    const auto F = load_factorization(corpus_path(a));
    const auto G = load_factorization(corpus_path(b));
    const auto start = std::chrono::steady_clock::now();
    const auto v = equivalent(F, G);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(60));
    REQUIRE(v.kind == EquivalenceVerdict::Kind::Equivalent);
    // Factor by factor, the normal-form words agree letter for letter.
    const auto R = replay(F, v.witness);
    REQUIRE(R.size() == G.size());
    for (std::size_t i = 0; i < G.size(); ++i) {
      CHECK(R[i].rho() == G[i].rho());
      CHECK(to_word(normal_form(factor_braid(R[i]))).letters() ==
            to_word(normal_form(factor_braid(G[i]))).letters());
    }
    CHECK(replay_matches(F, G, v.witness));
    CHECK(v.report.states_explored <= v.report.budget);
  }
}

TEST_CASE("random scrambles are recovered") {
  for (const char *name : {"cuspidal_cubic.bfac", "smooth_cubic.bfac", "conic.bfac"}) {
    const auto F = load_factorization(corpus_path(name));
    std::mt19937 rng(1000);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<MoveSpec> moves;
      for (int i = 0; i < 5; ++i)
        moves.push_back(random_move(rng, F.size()));
      std::uniform_int_distribution<int> gen(1, F.strands() - 1);
      const int g = gen(rng);
      const auto G = conjugate_all(apply_moves(F, moves), BraidWord(F.strands(), {(rng() & 1) ? g : -g}));
      const auto v = equivalent(F, G);
      CAPTURE(serialize(G));
      REQUIRE(v.kind == EquivalenceVerdict::Kind::Equivalent);
      CHECK(replay_matches(F, G, v.witness));
    }
  }
}

TEST_CASE("equivalence edge cases") {
  const auto conic = load_factorization(corpus_path("conic.bfac"));
  const auto cusp = load_factorization(corpus_path("cuspidal_cubic.bfac"));
  const auto self = equivalent(cusp, cusp);
  CHECK(self.kind == EquivalenceVerdict::Kind::Equivalent);
  CHECK(self.witness.moves.empty());
  CHECK(self.witness.conjugator.empty());

  CHECK_THROWS_AS(equivalent(conic, cusp), Error);
  CHECK_THROWS_AS(equivalent(cusp, cusp, {0, 3}), Error);

  const CuspidalFactorization p(3, {CuspidalFactor(BraidWord::identity(3), 1),
                                    CuspidalFactor(BraidWord::identity(3), 2)});
  const CuspidalFactorization q(3, {CuspidalFactor(BraidWord::identity(3), 2),
                                    CuspidalFactor(BraidWord::identity(3), 2)});
  const auto start = std::chrono::steady_clock::now();
  const auto d = equivalent(p, q);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::milliseconds(100));
  CHECK(d.kind == EquivalenceVerdict::Kind::Distinguished);
  CHECK(d.invariant == "rho-counts");
  CHECK(d.report.states_explored == 0);

  const auto G = load_factorization(corpus_path("smooth_cubic_scrambled.bfac"));
  const auto u = equivalent(load_factorization(corpus_path("smooth_cubic.bfac")), G, {1, 3});
  CHECK(u.kind == EquivalenceVerdict::Kind::Unknown);
  CHECK(u.report.states_explored <= 1);
  CHECK(std::string(to_string(u.kind)) == "Unknown");
}
