#include "braidwb/vankampen.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "braidwb/error.hpp"
#include "braidwb/hurwitz.hpp"

namespace braidwb {

using boost::multiprecision::cpp_int;

bool AbelianInvariants::is_cyclic_of_order(long long order) const {
  if (order == 1)
    return free_rank == 0 && torsion.empty();
  return free_rank == 0 && torsion.size() == 1 && torsion.front() == order;
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1)
    parts.emplace_back("Z");
  else if (free_rank > 1)
    parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto &t : torsion)
    parts.push_back("Z/" + t.str());
  if (parts.empty())
    return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += " + " + parts[i];
  return out;
}

std::pair<FreeWord, FreeWord> local_pair(const CuspidalFactor &f) {
  const int n = f.strands();
  return {artin_action(f.conjugator(), FreeWord::generator(n, 1)),
          artin_action(f.conjugator(), FreeWord::generator(n, 2))};
}

GroupPresentation presentation(const CuspidalFactorization &F, RelatorMode mode) {
  if (!verify_full_twist(F))
    throw Error(ErrorCode::UnverifiedFactorization,
                "product of factors is not the full twist");
  const int n = F.strands();
  GroupPresentation P;
  P.generators = n;
  for (const auto &f : F.factors()) {
    if (mode == RelatorMode::Full) {
      const BraidWord beta = factor_braid(f);
      for (int j = 1; j <= n; ++j) {
        const FreeWord x = FreeWord::generator(n, j);
        FreeWord r = artin_action(beta, x) * x.inverse();
        if (!r.empty())
          P.relators.push_back(std::move(r));
      }
      continue;
    }
    const auto [a, b] = local_pair(f);
    switch (f.rho()) {
    case 1: P.relators.push_back(a * b.inverse()); break;
    case 2: P.relators.push_back(a * b * a.inverse() * b.inverse()); break;
    default: P.relators.push_back(a * b * a * (b * a * b).inverse()); break;
    }
  }
  std::vector<int> boundary(n);
  std::iota(boundary.begin(), boundary.end(), 1);
  P.relators.emplace_back(n, std::move(boundary));
  return P;
}

AbelianInvariants abelianization(const GroupPresentation &P) {
  const std::size_t cols = static_cast<std::size_t>(P.generators);
  std::vector<std::vector<cpp_int>> m;
  for (const auto &r : P.relators) {
    std::vector<cpp_int> row(cols);
    for (int letter : r.letters())
      row[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  const std::size_t rows = m.size();

  std::vector<cpp_int> diagonal;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows)
        break;
      std::swap(m[t], m[pr]);
      for (auto &row : m)
        std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0)
          continue;
        const cpp_int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j)
          m[i][j] -= q * m[t][j];
        clean &= m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0)
          continue;
        const cpp_int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i)
          m[i][j] -= q * m[i][t];
        clean &= m[t][j] == 0;
      }
      if (!clean)
        continue;
      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      for (std::size_t j = t; j < cols; ++j)
        m[t][j] += m[bad][j];
    }
    if (t >= rows || m[t][t] == 0)
      break;
    diagonal.push_back(abs(m[t][t]));
  }

  AbelianInvariants inv;
  inv.free_rank = static_cast<int>(cols - diagonal.size());
  for (const auto &d : diagonal)
    if (d > 1)
      inv.torsion.push_back(d);
  return inv;
}

namespace {

std::vector<int> cyclic_reduce(std::vector<int> w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return {w.begin() + static_cast<std::ptrdiff_t>(lo),
          w.begin() + static_cast<std::ptrdiff_t>(hi)};
}

// Replaces generator `gen` by `with` (0 deletes it) and shifts higher indices
// down by one.
std::vector<int> substitute(const std::vector<int> &w, int gen, int with) {
  std::vector<int> out;
  for (int letter : w) {
    const int g = std::abs(letter);
    const int sign = letter > 0 ? 1 : -1;
    if (g == gen) {
      if (with != 0)
        out.push_back(sign * with);
    } else {
      out.push_back(g > gen ? sign * (g - 1) : letter);
    }
  }
  return out;
}

} // namespace

GroupPresentation simplify(const GroupPresentation &P) {
  int gens = P.generators;
  std::vector<std::vector<int>> rels;
  for (const auto &r : P.relators)
    rels.push_back(r.letters());

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::vector<int>> kept;
    std::set<std::vector<int>> seen;
    for (const auto &r : rels) {
      auto w = cyclic_reduce(FreeWord(gens, r).letters());
      if (w != r)
        changed = true;
      if (w.empty() || !seen.insert(w).second) {
        changed = true;
        continue;
      }
      kept.push_back(std::move(w));
    }
    rels = std::move(kept);

    for (std::size_t k = 0; k < rels.size(); ++k) {
      const auto &r = rels[k];
      int gen = 0, with = 0;
      if (r.size() == 1) {
        gen = std::abs(r[0]);
      } else if (r.size() == 2 && std::abs(r[0]) != std::abs(r[1]) &&
                 (r[0] > 0) != (r[1] > 0)) {
        // x_i x_j^-1 (or x_i^-1 x_j): keep the smaller index.
        const int i = std::abs(r[0]), j = std::abs(r[1]);
        gen = std::max(i, j);
        with = std::min(i, j);
      } else {
        continue;
      }
      std::vector<std::vector<int>> next;
      for (std::size_t m = 0; m < rels.size(); ++m)
        if (m != k)
          next.push_back(substitute(rels[m], gen, with));
      rels = std::move(next);
      --gens;
      changed = true;
      break;
    }
  }

  GroupPresentation out;
  out.generators = gens;
  for (auto &r : rels)
    out.relators.emplace_back(gens, std::move(r));
  return out;
}

bool irreducibility_check(const CuspidalFactorization &F) {
  const int n = F.strands();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  const PermTuple tuple = quotient_tuple(F);
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].rho() == 2)
      continue;
    const auto moved = tuple[i].support();
    if (moved.size() == 2)
      parent[find(moved[0] - 1)] = find(moved[1] - 1);
  }
  for (int x = 1; x < n; ++x)
    if (find(x) != find(0))
      return false;
  return true;
}

std::string serialize(const GroupPresentation &P) {
  std::string out = "gens " + std::to_string(P.generators) + "\n";
  for (const auto &r : P.relators)
    out += r.to_string() + "\n";
  return out;
}

} // namespace braidwb
