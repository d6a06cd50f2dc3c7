#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidwb {

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

/// A bijection of {1..size}. Products read left to right: (p * q) applies p
/// first, then q, so (p * q)(x) == q(p(x)). This matches reading braid words
/// left to right as paths.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int size);
  static Permutation transposition(int size, int a, int b);
  /// Builds from 1-based images; throws InvalidArgument if not a bijection.
  static Permutation from_images(std::span<const int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// Image of the 1-based point x.
  int operator()(int x) const { return images_[x - 1] + 1; }

  Permutation inverse() const;
  Permutation conjugate_by(const Permutation &sigma) const; // sigma^-1 p sigma

  bool is_identity() const noexcept;
  bool is_transposition() const noexcept;
  /// Moved points in increasing order (1-based).
  std::vector<int> support() const;
  std::vector<int> images() const; // 1-based

  /// Cycle notation, "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation &p, const Permutation &q);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {}
  std::vector<int> images_; // 0-based
};

// ---------------------------------------------------------------------------
// FreeWord
// ---------------------------------------------------------------------------

/// An element of the free group on x_1..x_rank. Always stored freely reduced,
/// so == is equality in the free group.
class FreeWord {
public:
  FreeWord() = default;
  FreeWord(int rank, std::vector<int> letters);

  static FreeWord generator(int rank, int index);

  int rank() const noexcept { return rank_; }
  const std::vector<int> &letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  /// Total exponent of each generator, indexed 0..rank-1.
  std::vector<int> exponents() const;
  int exponent_sum() const;

  std::string to_string() const;

  friend FreeWord operator*(const FreeWord &u, const FreeWord &v);
  friend bool operator==(const FreeWord &, const FreeWord &) = default;
  friend auto operator<=>(const FreeWord &, const FreeWord &) = default;

private:
  int rank_ = 1;
  std::vector<int> letters_;
};

// ---------------------------------------------------------------------------
// BraidWord
// ---------------------------------------------------------------------------

/// A word in the Artin generators X_1..X_{n-1} of the braid group B_n. Letter
/// +i is X_i, -i is X_i^-1. The stored word is kept exactly as given; use
/// free_reduce or normal_form to canonicalize.
class BraidWord {
public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int strands);
  static BraidWord generator(int strands, int letter);

  int strands() const noexcept { return strands_; }
  const std::vector<int> &letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Whitespace-separated signed integers, "" for the identity.
  std::string to_string() const;

  friend bool operator==(const BraidWord &, const BraidWord &) = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Parses "1 2 -1" style text; throws ParseError (line 1) on bad tokens.
BraidWord parse_braid_word(int strands, std::string_view text);

BraidWord free_reduce(const BraidWord &w);
BraidWord compose(const BraidWord &u, const BraidWord &v);
BraidWord invert(const BraidWord &w);
/// z^-1 w z.
BraidWord conjugate(const BraidWord &w, const BraidWord &z);
BraidWord power(const BraidWord &w, int exponent);

/// (X_1 ... X_{n-1})^n.
BraidWord full_twist(int strands);
/// (X_1 ... X_{n-1})(X_1 ... X_{n-2}) ... (X_1).
BraidWord half_twist(int strands);

int exponent_sum(const BraidWord &w);
Permutation permutation_of(const BraidWord &w);

/// Right action of B_n on the free group F_n. X_i sends x_i to
/// x_i x_{i+1} x_i^-1 and x_{i+1} to x_i; letters of b are applied left to
/// right, so artin_action(u v, w) == artin_action(v, artin_action(u, w)).
FreeWord artin_action(const BraidWord &b, const FreeWord &w);

// ---------------------------------------------------------------------------
// Garside normal form
// ---------------------------------------------------------------------------

/// Left-greedy normal form Delta^delta_power * s_1 * ... * s_k. Each s_j is a
/// positive permutation braid, stored as the permutation it induces, and
/// differs from both the identity and Delta. Two braids are equal iff their
/// normal forms are equal.
struct GarsideForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<std::vector<std::uint8_t>> factors;

  friend bool operator==(const GarsideForm &, const GarsideForm &) = default;
  friend auto operator<=>(const GarsideForm &, const GarsideForm &) = default;
};

GarsideForm normal_form(const BraidWord &w);
/// A word representing the normal form (Delta powers spelled via half_twist).
BraidWord to_word(const GarsideForm &form);
/// Compact byte encoding, usable as a hash key.
std::string encode(const GarsideForm &form);

bool equals(const BraidWord &u, const BraidWord &v);

} // namespace braidwb
