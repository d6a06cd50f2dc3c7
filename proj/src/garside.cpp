#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "braidwb/braid.hpp"
#include "braidwb/error.hpp"

// Positive permutation braids ("simple elements") are stored as arrays p where
// p[pos] is the strand occupying position pos. Appending X_{i+1} swaps p[i]
// and p[i+1]; it keeps the braid simple iff p[i] < p[i+1]. Prepending X_{i+1}
// swaps the values i and i+1.

namespace braidwb {

namespace {

using Simple = std::vector<std::uint8_t>;

Simple identity_simple(int n) {
  Simple p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Simple delta_simple(int n) {
  Simple p(n);
  for (int i = 0; i < n; ++i)
    p[i] = static_cast<std::uint8_t>(n - 1 - i);
  return p;
}

bool is_identity(const Simple &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i)
      return false;
  return true;
}

bool is_delta(const Simple &p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != n - 1 - i)
      return false;
  return true;
}

// Delta p Delta^-1.
Simple tau(const Simple &p) {
  const int n = static_cast<int>(p.size());
  Simple out(n);
  for (int j = 0; j < n; ++j)
    out[j] = static_cast<std::uint8_t>(n - 1 - p[n - 1 - j]);
  return out;
}

Simple inverse_of(const Simple &p) {
  Simple inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    inv[p[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

// Makes (a, b) left-weighted in place: moves generators from the front of b
// to the back of a while some X_i starts b but does not finish a.
// Returns true if anything moved.
bool left_weight(Simple &a, Simple &b) {
  const int n = static_cast<int>(a.size());
  bool changed = false;
  Simple binv = inverse_of(b);
  for (;;) {
    int found = -1;
    for (int i = 0; i + 1 < n; ++i) {
      const bool starts_b = binv[i] > binv[i + 1];
      const bool finishes_a = a[i] > a[i + 1];
      if (starts_b && !finishes_a) {
        found = i;
        break;
      }
    }
    if (found < 0)
      return changed;
    std::swap(a[found], a[found + 1]);
    // b <- X^-1 b: swap the values found, found+1.
    std::swap(b[binv[found]], b[binv[found + 1]]);
    std::swap(binv[found], binv[found + 1]);
    changed = true;
  }
}

} // namespace

GarsideForm normal_form(const BraidWord &w) {
  const int n = w.strands();
  GarsideForm form;
  form.strands = n;
  if (n < 2)
    return form;

  // Each X_i^-1 is rewritten as Delta^-1 (Delta X_i^-1); sliding every
  // Delta^-1 to the front applies tau to each simple once per Delta^-1 that
  // stood to its right.
  int negatives = 0;
  for (int letter : w.letters())
    if (letter < 0)
      ++negatives;

  std::vector<Simple> simples;
  simples.reserve(w.length());
  int seen = 0;
  const Simple delta = delta_simple(n);
  for (int letter : w.letters()) {
    const int i = std::abs(letter) - 1;
    Simple s;
    if (letter > 0) {
      s = identity_simple(n);
      std::swap(s[i], s[i + 1]);
    } else {
      ++seen;
      s = delta;
      std::swap(s[i], s[i + 1]);
    }
    if ((negatives - seen) % 2 != 0)
      s = tau(s);
    simples.push_back(std::move(s));
  }

  std::vector<Simple> nf;
  nf.reserve(simples.size());
  for (auto &s : simples) {
    nf.push_back(std::move(s));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = nf.size() - 1; j > 0; --j)
        changed |= left_weight(nf[j - 1], nf[j]);
    }
    while (!nf.empty() && is_identity(nf.back()))
      nf.pop_back();
  }

  std::size_t leading = 0;
  while (leading < nf.size() && is_delta(nf[leading]))
    ++leading;
  form.delta_power = static_cast<int>(leading) - negatives;
  form.factors.assign(nf.begin() + static_cast<std::ptrdiff_t>(leading), nf.end());
  return form;
}

BraidWord to_word(const GarsideForm &form) {
  const int n = form.strands;
  if (n < 2)
    return BraidWord::identity(n);
  std::vector<int> letters;
  const BraidWord half = half_twist(n);
  const BraidWord half_inv = invert(half);
  const BraidWord &d = form.delta_power >= 0 ? half : half_inv;
  for (int k = 0; k < std::abs(form.delta_power); ++k)
    letters.insert(letters.end(), d.letters().begin(), d.letters().end());
  for (Simple p : form.factors) {
    // Peel generators off the left of p.
    Simple inv = inverse_of(p);
    for (;;) {
      int found = -1;
      for (int i = 0; i + 1 < n; ++i)
        if (inv[i] > inv[i + 1]) {
          found = i;
          break;
        }
      if (found < 0)
        break;
      letters.push_back(found + 1);
      std::swap(p[inv[found]], p[inv[found + 1]]);
      std::swap(inv[found], inv[found + 1]);
    }
  }
  return BraidWord(n, std::move(letters));
}

std::string encode(const GarsideForm &form) {
  std::string out;
  out.reserve(8 + form.factors.size() * static_cast<std::size_t>(form.strands));
  out += std::to_string(form.strands);
  out += ':';
  out += std::to_string(form.delta_power);
  out += ':';
  for (const auto &p : form.factors)
    out.append(p.begin(), p.end());
  return out;
}

bool equals(const BraidWord &u, const BraidWord &v) {
  if (u.strands() != v.strands())
    throw Error(ErrorCode::StrandMismatch, "cannot compare braids on " +
                                               std::to_string(u.strands()) + " and " +
                                               std::to_string(v.strands()) + " strands");
  return normal_form(u) == normal_form(v);
}

} // namespace braidwb
