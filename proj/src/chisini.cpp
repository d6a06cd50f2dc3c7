#include "braidwb/chisini.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "braidwb/error.hpp"
#include "braidwb/vankampen.hpp"

namespace braidwb {

const char *to_string(FactorVerdict v) {
  switch (v) {
  case FactorVerdict::BranchOK: return "BranchOK";
  case FactorVerdict::CuspOK: return "CuspOK";
  case FactorVerdict::NodeOK: return "NodeOK";
  case FactorVerdict::BranchViolation: return "BranchViolation";
  case FactorVerdict::CuspViolation: return "CuspViolation";
  case FactorVerdict::NodeViolation: return "NodeViolation";
  }
  return "Unknown";
}

bool ConditionReport::passed() const {
  return transpositions && relators_hold && generation && transitive &&
         violations().empty();
}

std::vector<std::size_t> ConditionReport::violations() const {
  std::vector<std::size_t> out;
  for (const auto &f : factors)
    if (f.verdict == FactorVerdict::BranchViolation ||
        f.verdict == FactorVerdict::CuspViolation ||
        f.verdict == FactorVerdict::NodeViolation)
      out.push_back(f.index);
  return out;
}

namespace {

Permutation evaluate(const FreeWord &w, const std::vector<Permutation> &images, int N) {
  Permutation out = Permutation::identity(N);
  for (int letter : w.letters()) {
    const Permutation &p = images[std::abs(letter) - 1];
    out = out * (letter > 0 ? p : p.inverse());
  }
  return out;
}

FactorVerdict judge(int rho, const Permutation &a, const Permutation &b) {
  if (rho == 1)
    return a == b ? FactorVerdict::BranchOK : FactorVerdict::BranchViolation;
  const bool both = a.is_transposition() && b.is_transposition();
  std::vector<int> common;
  if (both) {
    const auto sa = a.support(), sb = b.support();
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::back_inserter(common));
  }
  if (rho == 3)
    return both && common.size() == 1 ? FactorVerdict::CuspOK : FactorVerdict::CuspViolation;
  return both && common.empty() ? FactorVerdict::NodeOK : FactorVerdict::NodeViolation;
}

// Transpositions generate S_N iff their support graph is connected on all N
// points.
bool transpositions_generate(const std::vector<Permutation> &images, int N) {
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &p : images) {
    if (!p.is_transposition())
      return false;
    const auto s = p.support();
    parent[find(s[0] - 1)] = find(s[1] - 1);
  }
  for (int x = 1; x < N; ++x)
    if (find(x) != find(0))
      return false;
  return true;
}

bool acts_transitively(const std::vector<Permutation> &images, int N) {
  std::vector<bool> reached(N, false);
  std::vector<int> stack{1};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto &p : images) {
      const int y = p(x);
      if (!reached[y - 1]) {
        reached[y - 1] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == N;
}

FreeWord boundary_word(int n) {
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  return FreeWord(n, std::move(letters));
}

FreeWord local_relator(int rho, const FreeWord &a, const FreeWord &b) {
  switch (rho) {
  case 1: return a * b.inverse();
  case 2: return a * b * a.inverse() * b.inverse();
  default: return a * b * a * (b * a * b).inverse();
  }
}

using Transposition = std::pair<int, int>;

Transposition as_pair(const Permutation &p) {
  const auto s = p.support();
  return {s[0], s[1]};
}

void canonical_search(const std::vector<Transposition> &tuple, std::size_t pos,
                      std::vector<int> &label, int next_label,
                      std::vector<Transposition> &current,
                      std::optional<std::vector<Transposition>> &best) {
  if (best && std::lexicographical_compare(
                  best->begin(), best->begin() + static_cast<std::ptrdiff_t>(current.size()),
                  current.begin(), current.end()))
    return;
  if (pos == tuple.size()) {
    if (!best || current < *best)
      best = current;
    return;
  }
  const auto [u, v] = tuple[pos];
  auto emit = [&](int next) {
    const int a = label[u], b = label[v];
    current.emplace_back(std::min(a, b), std::max(a, b));
    canonical_search(tuple, pos + 1, label, next, current, best);
    current.pop_back();
  };
  const bool ku = label[u] != 0, kv = label[v] != 0;
  if (ku && kv) {
    emit(next_label);
  } else if (ku || kv) {
    const int fresh = ku ? v : u;
    label[fresh] = next_label;
    emit(next_label + 1);
    label[fresh] = 0;
  } else {
    for (int flip = 0; flip < 2; ++flip) {
      label[u] = next_label + flip;
      label[v] = next_label + 1 - flip;
      emit(next_label + 2);
    }
    label[u] = label[v] = 0;
  }
}

} // namespace

ConditionReport check_rep(const CuspidalFactorization &F, const MonodromyRep &rep) {
  const int n = F.strands();
  if (static_cast<int>(rep.images.size()) != n)
    throw Error(ErrorCode::InvalidArgument,
                "representation has " + std::to_string(rep.images.size()) +
                    " images for " + std::to_string(n) + " generators");
  for (const auto &p : rep.images)
    if (p.size() != rep.degree)
      throw Error(ErrorCode::InvalidArgument, "image degree differs from N");

  ConditionReport report;
  report.transpositions = std::all_of(rep.images.begin(), rep.images.end(),
                                      [](const Permutation &p) { return p.is_transposition(); });
  bool relators = true;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto [a, b] = local_pair(F[i]);
    const Permutation pa = evaluate(a, rep.images, rep.degree);
    const Permutation pb = evaluate(b, rep.images, rep.degree);
    report.factors.push_back({i + 1, F[i].rho(), judge(F[i].rho(), pa, pb)});
    relators &= evaluate(local_relator(F[i].rho(), a, b), rep.images, rep.degree).is_identity();
  }
  relators &= evaluate(boundary_word(n), rep.images, rep.degree).is_identity();
  report.relators_hold = relators;
  report.generation = transpositions_generate(rep.images, rep.degree);
  report.transitive = acts_transitively(rep.images, rep.degree);
  return report;
}

MonodromyRep canonical_representative(const MonodromyRep &rep) {
  std::vector<Transposition> tuple;
  for (const auto &p : rep.images) {
    if (!p.is_transposition())
      throw Error(ErrorCode::InvalidArgument, "canonical form needs transpositions");
    tuple.push_back(as_pair(p));
  }
  std::vector<int> label(rep.degree + 1, 0);
  std::vector<Transposition> current;
  std::optional<std::vector<Transposition>> best;
  canonical_search(tuple, 0, label, 1, current, best);
  MonodromyRep out;
  out.degree = rep.degree;
  for (const auto &[a, b] : *best)
    out.images.push_back(Permutation::transposition(rep.degree, a, b));
  return out;
}

namespace {

class Enumerator {
public:
  Enumerator(const CuspidalFactorization &F, int N) : F_(F), n_(F.strands()), N_(N) {
    ready_.resize(n_ + 1);
    for (std::size_t i = 0; i < F.size(); ++i) {
      auto pr = local_pair(F[i]);
      int top = 1;
      for (const FreeWord *w : {&pr.first, &pr.second})
        for (int letter : w->letters())
          top = std::max(top, std::abs(letter));
      ready_[top].push_back(i);
      pairs_.push_back(std::move(pr));
    }
    for (int u = 1; u <= N; ++u)
      for (int v = u + 1; v <= N; ++v)
        transpositions_.emplace_back(u, v);
    boundary_ = boundary_word(n_);
  }

  std::vector<MonodromyRep> run() {
    images_.assign(n_, Permutation::identity(N_));
    dfs(0, 0);
    return {found_.begin(), found_.end()};
  }

private:
  // Assign x_{k+1}. Points are introduced in increasing order, which keeps at
  // least one member of every conjugacy class.
  void dfs(int k, int used) {
    if (k == n_) {
      if (used != N_)
        return;
      if (!evaluate(boundary_, images_, N_).is_identity())
        return;
      if (!transpositions_generate(images_, N_))
        return;
      MonodromyRep rep{N_, images_};
      found_.insert(canonical_representative(rep));
      return;
    }
    if (used + 2 * (n_ - k) < N_)
      return;
    for (const auto &[u, v] : transpositions_) {
      const bool ok = v <= used || (u <= used && v == used + 1) ||
                      (u == used + 1 && v == used + 2);
      if (!ok)
        continue;
      images_[k] = Permutation::transposition(N_, u, v);
      if (!locally_consistent(k + 1))
        continue;
      dfs(k + 1, std::max(used, v));
    }
  }

  bool locally_consistent(int gen) const {
    for (std::size_t i : ready_[gen]) {
      const Permutation a = evaluate(pairs_[i].first, images_, N_);
      const Permutation b = evaluate(pairs_[i].second, images_, N_);
      const FactorVerdict v = judge(F_[i].rho(), a, b);
      if (v != FactorVerdict::BranchOK && v != FactorVerdict::CuspOK &&
          v != FactorVerdict::NodeOK)
        return false;
    }
    return true;
  }

  const CuspidalFactorization &F_;
  int n_;
  int N_;
  std::vector<std::vector<std::size_t>> ready_;
  std::vector<std::pair<FreeWord, FreeWord>> pairs_;
  std::vector<std::pair<int, int>> transpositions_;
  FreeWord boundary_;
  std::vector<Permutation> images_;
  std::set<MonodromyRep> found_;
};

} // namespace

std::vector<MonodromyRep> enumerate_reps(const CuspidalFactorization &F, int N,
                                         const EnumerationOptions &options) {
  if (N < 1)
    throw Error(ErrorCode::DegenerateDegree,
                "covering degree must be positive, got " + std::to_string(N));
  if (!verify_full_twist(F))
    throw Error(ErrorCode::UnverifiedFactorization,
                "product of factors is not the full twist");
  if (!options.allow_large &&
      (N > options.max_degree || F.strands() > options.max_strands))
    throw Error(ErrorCode::BoundExceeded,
                "enumeration bounded to N <= " + std::to_string(options.max_degree) +
                    " and 2d <= " + std::to_string(options.max_strands) +
                    "; pass an explicit override");
  if (N == 1)
    return {};
  return Enumerator(F, N).run();
}

// ---------------------------------------------------------------------------

ChisiniCertificate chisini_bound(Rational d, long long g, long long c,
                                 std::optional<long long> N) {
  if (d <= 0 || (d * 2).denominator() != 1)
    throw Error(ErrorCode::InvalidArgument, "d must be a positive multiple of 1/2");
  if (g < 0 || c < 0)
    throw Error(ErrorCode::InvalidArgument, "g and c must be nonnegative");
  ChisiniCertificate cert;
  cert.d = d;
  cert.g = g;
  cert.c = c;
  cert.N = N;
  const Rational base = d * 3 + g - 1;
  const Rational denominator = base * 2 - c;
  cert.applicable = denominator > 0;
  if (cert.applicable)
    cert.threshold = base * 4 / denominator;
  if (N)
    cert.guaranteed = cert.applicable && Rational(*N) > *cert.threshold;
  return cert;
}

bool chisini_guaranteed(Rational d, long long g, long long c, long long N) {
  const ChisiniCertificate cert = chisini_bound(d, g, c, N);
  if (!cert.applicable)
    throw Error(ErrorCode::NotApplicable,
                "2(3d+g-1) - c <= 0: the inequality gives no information");
  return *cert.guaranteed;
}

long long euler_characteristic(long long N, long long g, long long c, long long n) {
  if (N < 1)
    throw Error(ErrorCode::DegenerateDegree, "covering degree must be positive");
  if (N == 1)
    return 3;
  const long long e_b = 2 - 2 * g - n;
  return N * (3 - e_b) + (N - 1) * (e_b - c - n) + (N - 2) * (c + n);
}

MorphismReport morphism_report(const CuspidalFactorization &F, int N,
                               const EnumerationOptions &options) {
  if (N < 1)
    throw Error(ErrorCode::DegenerateDegree,
                "covering degree must be positive, got " + std::to_string(N));
  MorphismReport report;
  report.degree = N;
  report.curve = curve_invariants(F);
  report.reps = enumerate_reps(F, N, options);
  for (const auto &rep : report.reps)
    report.checks.push_back(check_rep(F, rep));
  report.certificate = chisini_bound(Rational(report.curve.degree, 2), report.curve.genus,
                                     report.curve.cusps, N);
  report.euler = euler_characteristic(N, report.curve.genus, report.curve.cusps,
                                      report.curve.nodes);
  if (report.curve.degree % 2 != 0)
    report.warnings.push_back("odd degree " + std::to_string(report.curve.degree) +
                              ": discriminant curves have even degree");
  if (N == 1)
    report.warnings.push_back("N = 1: a one-sheeted cover has no branch curve");
  if (!irreducibility_check(F))
    report.warnings.push_back("strand graph is disconnected: curve is not irreducible");
  return report;
}

std::string to_string(const Rational &r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json to_json(const ChisiniCertificate &cert) {
  nlohmann::json j;
  j["d"] = to_string(cert.d);
  j["g"] = cert.g;
  j["c"] = cert.c;
  j["threshold"] = cert.threshold ? nlohmann::json(to_string(*cert.threshold)) : nlohmann::json();
  j["applicable"] = cert.applicable;
  j["N"] = cert.N ? nlohmann::json(*cert.N) : nlohmann::json();
  j["guaranteed"] = cert.guaranteed ? nlohmann::json(*cert.guaranteed) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const MorphismReport &report) {
  nlohmann::json j;
  j["N"] = report.degree;
  j["degree"] = report.curve.degree;
  j["genus"] = report.curve.genus;
  j["cusps"] = report.curve.cusps;
  j["nodes"] = report.curve.nodes;
  j["classes"] = report.reps.size();
  nlohmann::json reps = nlohmann::json::array();
  for (std::size_t i = 0; i < report.reps.size(); ++i) {
    nlohmann::json images = nlohmann::json::array();
    for (const auto &p : report.reps[i].images)
      images.push_back(p.to_string());
    reps.push_back({{"images", images}, {"passed", report.checks[i].passed()}});
  }
  j["representatives"] = reps;
  const auto cert = to_json(report.certificate);
  j["threshold"] = cert["threshold"];
  j["applicable"] = cert["applicable"];
  j["guaranteed"] = cert["guaranteed"];
  j["euler"] = report.euler;
  j["warnings"] = report.warnings;
  j["certified"] = {"(i) generators map to transpositions",
                    "(ii) cusp images generate S_3",
                    "(iii) node images are distinct commuting transpositions",
                    "epimorphism onto S_N"};
  j["assumed"] = {"factorization is the braid monodromy of an algebraic curve",
                  "f^*(B) = 2R + C with R irreducible and non-singular",
                  "f restricted to R is the normalization of B"};
  return j;
}

} // namespace braidwb
