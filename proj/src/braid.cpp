#include "braidwb/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidwb/error.hpp"

namespace braidwb {

namespace {

void require_same_strands(const BraidWord &u, const BraidWord &v) {
  if (u.strands() != v.strands())
    throw Error(ErrorCode::StrandMismatch,
                "strand counts differ: " + std::to_string(u.strands()) +
                    " vs " + std::to_string(v.strands()));
}

template <typename Letters> void reduce_in_place(Letters &letters) {
  std::size_t top = 0;
  for (int letter : letters) {
    if (top > 0 && letters[top - 1] == -letter)
      --top;
    else
      letters[top++] = letter;
  }
  letters.resize(top);
}

std::string join_letters(const std::vector<int> &letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int size) {
  if (size < 1)
    throw Error(ErrorCode::InvalidArgument, "permutation size must be positive");
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int size, int a, int b) {
  if (a < 1 || b < 1 || a > size || b > size || a == b)
    throw Error(ErrorCode::InvalidArgument, "bad transposition points");
  auto p = identity(size);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "permutation size must be positive");
  std::vector<int> zero(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int y = images[i] - 1;
    if (y < 0 || y >= n || seen[y])
      throw Error(ErrorCode::InvalidArgument, "images do not form a bijection");
    seen[y] = true;
    zero[i] = y;
  }
  return Permutation(std::move(zero));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::conjugate_by(const Permutation &sigma) const {
  return sigma.inverse() * *this * sigma;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

bool Permutation::is_transposition() const noexcept {
  int moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) {
      if (images_[images_[i]] != static_cast<int>(i))
        return false;
      ++moved;
    }
  }
  return moved == 2;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_);
  for (int &x : out)
    ++x;
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == static_cast<int>(start))
      continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        out += ' ';
      first = false;
      out += std::to_string(x + 1);
      x = static_cast<std::size_t>(images_[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::InvalidArgument, "permutation sizes differ");
  std::vector<int> out(p.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------
// FreeWord

FreeWord::FreeWord(int rank, std::vector<int> letters)
    : rank_(rank), letters_(std::move(letters)) {
  if (rank < 0)
    throw Error(ErrorCode::InvalidArgument, "free group rank must be nonnegative");
  for (int letter : letters_)
    if (letter == 0 || std::abs(letter) > rank)
      throw Error(ErrorCode::LetterOutOfRange,
                  "free letter " + std::to_string(letter) + " outside rank " +
                      std::to_string(rank));
  reduce_in_place(letters_);
}

FreeWord FreeWord::generator(int rank, int index) { return FreeWord(rank, {index}); }

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int &x : out)
    x = -x;
  return FreeWord(rank_, std::move(out));
}

std::vector<int> FreeWord::exponents() const {
  std::vector<int> out(rank_, 0);
  for (int letter : letters_)
    out[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
  return out;
}

int FreeWord::exponent_sum() const {
  int sum = 0;
  for (int letter : letters_)
    sum += letter > 0 ? 1 : -1;
  return sum;
}

std::string FreeWord::to_string() const { return join_letters(letters_); }

FreeWord operator*(const FreeWord &u, const FreeWord &v) {
  if (u.rank_ != v.rank_)
    throw Error(ErrorCode::RankMismatch, "free group ranks differ");
  std::vector<int> out;
  out.reserve(u.letters_.size() + v.letters_.size());
  out.insert(out.end(), u.letters_.begin(), u.letters_.end());
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return FreeWord(u.rank_, std::move(out));
}

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1)
    throw Error(ErrorCode::InvalidStrandCount, "strand count must be positive");
  for (int letter : letters_)
    if (letter == 0 || std::abs(letter) >= strands)
      throw Error(ErrorCode::LetterOutOfRange,
                  "braid letter " + std::to_string(letter) + " outside B_" +
                      std::to_string(strands));
}

BraidWord BraidWord::identity(int strands) { return BraidWord(strands, {}); }

BraidWord BraidWord::generator(int strands, int letter) {
  return BraidWord(strands, {letter});
}

std::string BraidWord::to_string() const { return join_letters(letters_); }

BraidWord parse_braid_word(int strands, std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
    if (pos >= text.size())
      break;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t')
      ++pos;
    const std::string_view token = text.substr(start, pos - start);
    int value = 0;
    const char *first = token.data();
    if (!token.empty() && token.front() == '+')
      ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError(ErrorCode::Parse, 1, start + 1,
                       "expected a signed integer, got '" + std::string(token) + "'");
    if (value == 0 || std::abs(value) >= strands)
      throw ParseError(ErrorCode::LetterOutOfRange, 1, start + 1,
                       "letter " + std::to_string(value) + " outside B_" +
                           std::to_string(strands));
    letters.push_back(value);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord free_reduce(const BraidWord &w) {
  std::vector<int> letters = w.letters();
  reduce_in_place(letters);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord compose(const BraidWord &u, const BraidWord &v) {
  require_same_strands(u, v);
  std::vector<int> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(out));
}

BraidWord invert(const BraidWord &w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int &x : out)
    x = -x;
  return BraidWord(w.strands(), std::move(out));
}

BraidWord conjugate(const BraidWord &w, const BraidWord &z) {
  return compose(compose(invert(z), w), z);
}

BraidWord power(const BraidWord &w, int exponent) {
  const BraidWord base = exponent < 0 ? invert(w) : w;
  std::vector<int> out;
  for (int k = 0; k < std::abs(exponent); ++k)
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  return BraidWord(w.strands(), std::move(out));
}

BraidWord full_twist(int strands) {
  if (strands < 2)
    throw Error(ErrorCode::InvalidStrandCount, "full twist needs at least 2 strands");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(strands) * (strands - 1));
  for (int rep = 0; rep < strands; ++rep)
    for (int i = 1; i < strands; ++i)
      letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

BraidWord half_twist(int strands) {
  if (strands < 2)
    throw Error(ErrorCode::InvalidStrandCount, "half twist needs at least 2 strands");
  std::vector<int> letters;
  for (int top = strands - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i)
      letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

int exponent_sum(const BraidWord &w) {
  int sum = 0;
  for (int letter : w.letters())
    sum += letter > 0 ? 1 : -1;
  return sum;
}

Permutation permutation_of(const BraidWord &w) {
  // Track which strand sits at each position; X_i swaps positions i, i+1.
  // The result maps a strand's starting position to its final position.
  const int n = w.strands();
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 1);
  for (int letter : w.letters()) {
    const int i = std::abs(letter) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> images(n);
  for (int pos = 0; pos < n; ++pos)
    images[at[pos] - 1] = pos + 1;
  return Permutation::from_images(images);
}

FreeWord artin_action(const BraidWord &b, const FreeWord &w) {
  if (b.strands() != w.rank())
    throw Error(ErrorCode::RankMismatch,
                "braid on " + std::to_string(b.strands()) +
                    " strands cannot act on free group of rank " +
                    std::to_string(w.rank()));
  const int n = w.rank();
  // images[j] is the image of x_{j+1} under the map M built so far. Each step
  // replaces M by M o phi, so scanning the word backwards yields
  // phi_{i_k} o ... o phi_{i_1}: the first letter acts first.
  std::vector<FreeWord> images;
  images.reserve(n);
  for (int j = 1; j <= n; ++j)
    images.push_back(FreeWord::generator(n, j));
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    const int letter = *it;
    const int i = std::abs(letter) - 1;
    const FreeWord a = images[i];
    const FreeWord c = images[i + 1];
    if (letter > 0) {
      images[i] = a * c * a.inverse();
      images[i + 1] = a;
    } else {
      images[i] = c;
      images[i + 1] = c.inverse() * a * c;
    }
  }
  std::vector<int> out;
  for (int letter : w.letters()) {
    const FreeWord &img = images[std::abs(letter) - 1];
    const FreeWord piece = letter > 0 ? img : img.inverse();
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return FreeWord(n, std::move(out));
}

} // namespace braidwb
