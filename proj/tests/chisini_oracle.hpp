#pragma once

// Exhaustive enumeration of transposition tuples, written against raw image
// arrays so it shares nothing with the library's enumerator.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "braidwb/chisini.hpp"
#include "test_support.hpp"

namespace braidwb::testing::oracle {

// Raw permutations: 0-based image arrays, products read left to right.
using Raw = std::vector<int>;
using RawTuple = std::vector<Raw>;

inline Raw raw_mul(const Raw &a, const Raw &b) {
  Raw r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    r[x] = b[a[x]];
  return r;
}

inline Raw raw_inv(const Raw &a) {
  Raw r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    r[a[x]] = static_cast<int>(x);
  return r;
}

inline Raw raw_identity(int N) {
  Raw r(N);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

inline Raw raw_eval(const FreeWord &w, const RawTuple &images, int N) {
  Raw out = raw_identity(N);
  for (int x : w.letters()) {
    const Raw &p = images[std::abs(x) - 1];
    out = raw_mul(out, x > 0 ? p : raw_inv(p));
  }
  return out;
}

inline std::vector<int> moved(const Raw &p) {
  std::vector<int> s;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x))
      s.push_back(static_cast<int>(x));
  return s;
}

inline bool factor_ok(int rho, const Raw &a, const Raw &b) {
  if (rho == 1)
    return a == b;
  const auto sa = moved(a), sb = moved(b);
  if (sa.size() != 2 || sb.size() != 2)
    return false;
  int common = 0;
  for (int x : sa)
    common += static_cast<int>(std::count(sb.begin(), sb.end(), x));
  return rho == 3 ? common == 1 : common == 0;
}

inline bool connected(const RawTuple &images, int N) {
  std::set<int> reached{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto &p : images) {
      const auto s = moved(p);
      if (reached.count(s[0]) != reached.count(s[1])) {
        reached.insert(s.begin(), s.end());
        grew = true;
      }
    }
  }
  return static_cast<int>(reached.size()) == N;
}

// Transpositions ordered by their (smaller, larger) moved points.
inline std::vector<std::pair<int, int>> pair_key(const RawTuple &t) {
  std::vector<std::pair<int, int>> key;
  for (const auto &p : t) {
    const auto s = moved(p);
    key.emplace_back(s[0], s[1]);
  }
  return key;
}

inline RawTuple relabel_min(const RawTuple &t, int N) {
  Raw sigma = raw_identity(N);
  RawTuple best;
  do {
    RawTuple c;
    for (const auto &p : t)
      c.push_back(raw_mul(raw_mul(raw_inv(sigma), p), sigma));
    if (best.empty() || pair_key(c) < pair_key(best))
      best = c;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

// Every tuple of transpositions checked against every condition, classes
// formed by brute-force minimum over all N! relabelings.
inline std::set<RawTuple> brute_classes(const CuspidalFactorization &F, int N) {
  std::vector<Raw> transpositions;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Raw t = raw_identity(N);
      std::swap(t[i], t[j]);
      transpositions.push_back(t);
    }
  std::set<RawTuple> classes;
  const int n = F.strands();
  if (transpositions.empty())
    return classes;
  std::vector<std::pair<FreeWord, FreeWord>> pairs;
  for (const auto &f : F.factors())
    pairs.emplace_back(braidwb::testing::substitute_action(f.conjugator(), FreeWord::generator(n, 1)),
                       braidwb::testing::substitute_action(f.conjugator(), FreeWord::generator(n, 2)));
  std::vector<int> boundary(n);
  std::iota(boundary.begin(), boundary.end(), 1);
  const FreeWord projective(n, boundary);

  std::vector<std::size_t> pick(n, 0);
  while (true) {
    RawTuple images;
    for (auto k : pick)
      images.push_back(transpositions[k]);
    bool ok = raw_eval(projective, images, N) == raw_identity(N) && connected(images, N);
    for (std::size_t i = 0; ok && i < F.size(); ++i)
      ok = factor_ok(F[i].rho(), raw_eval(pairs[i].first, images, N),
                     raw_eval(pairs[i].second, images, N));
    if (ok)
      classes.insert(relabel_min(images, N));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == transpositions.size())
      pick[k++] = 0;
    if (k == pick.size())
      break;
  }
  return classes;
}

inline RawTuple as_raw(const MonodromyRep &rep) {
  RawTuple t;
  for (const auto &p : rep.images) {
    Raw r;
    for (int x : p.images())
      r.push_back(x - 1);
    t.push_back(r);
  }
  return t;
}

} // namespace braidwb::testing::oracle
