#include "braidwb/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "braidwb/error.hpp"

namespace braidwb {

CuspidalFactorization apply_move(const CuspidalFactorization &F, MoveSpec move) {
  if (move.index < 1 || move.index >= F.size())
    throw Error(ErrorCode::IndexOutOfRange,
                "move index " + std::to_string(move.index) + " outside 1.." +
                    std::to_string(F.size() - 1));
  const std::size_t k = move.index - 1;
  std::vector<CuspidalFactor> out = F.factors();
  const CuspidalFactor &a = F[k];
  const CuspidalFactor &b = F[k + 1];
  if (move.direction == MoveDirection::Left) {
    // New g_k = g_k g_{k+1} g_k^-1, conjugator Q_{k+1} g_k^-1.
    out[k] = CuspidalFactor(
        free_reduce(compose(b.conjugator(), invert(factor_braid(a)))), b.rho());
    out[k + 1] = CuspidalFactor(free_reduce(a.conjugator()), a.rho());
  } else {
    // New g_{k+1} = g_{k+1}^-1 g_k g_{k+1}, conjugator Q_k g_{k+1}.
    out[k] = CuspidalFactor(free_reduce(b.conjugator()), b.rho());
    out[k + 1] =
        CuspidalFactor(free_reduce(compose(a.conjugator(), factor_braid(b))), a.rho());
  }
  return CuspidalFactorization(F.strands(), std::move(out));
}

CuspidalFactorization apply_moves(const CuspidalFactorization &F,
                                  const std::vector<MoveSpec> &moves) {
  CuspidalFactorization cur = F;
  for (const auto &m : moves)
    cur = apply_move(cur, m);
  return cur;
}

CuspidalFactorization conjugate_all(const CuspidalFactorization &F, const BraidWord &z) {
  if (z.strands() != F.strands())
    throw Error(ErrorCode::StrandMismatch, "conjugator lives in a different braid group");
  std::vector<CuspidalFactor> out;
  out.reserve(F.size());
  for (const auto &f : F.factors())
    out.emplace_back(free_reduce(compose(f.conjugator(), z)), f.rho());
  return CuspidalFactorization(F.strands(), std::move(out));
}

std::string canonical_key(const CuspidalFactorization &F) {
  std::string key;
  for (const auto &f : F.factors()) {
    const std::string nf = encode(normal_form(factor_braid(f)));
    key += static_cast<char>('0' + f.rho());
    key += std::to_string(nf.size());
    key += ':';
    key += nf;
  }
  return key;
}

// ---------------------------------------------------------------------------

PermTuple quotient_tuple(const CuspidalFactorization &F) {
  PermTuple out;
  out.reserve(F.size());
  for (const auto &f : F.factors())
    out.push_back(permutation_of(factor_braid(f)));
  return out;
}

namespace {

PermTuple move_tuple(const PermTuple &t, std::size_t k, MoveDirection dir) {
  PermTuple out = t;
  const Permutation &a = t[k];
  const Permutation &b = t[k + 1];
  if (dir == MoveDirection::Left) {
    out[k] = a * b * a.inverse();
    out[k + 1] = a;
  } else {
    out[k] = b;
    out[k + 1] = b.inverse() * a * b;
  }
  return out;
}

std::vector<int> flatten(const PermTuple &t) {
  std::vector<int> out;
  for (const auto &p : t) {
    const auto imgs = p.images();
    out.insert(out.end(), imgs.begin(), imgs.end());
  }
  return out;
}

} // namespace

std::set<PermTuple> orbit_quotient(const PermTuple &t, const OrbitOptions &options) {
  std::set<PermTuple> seen;
  if (t.empty())
    return seen;
  const int degree = t.front().size();
  if (degree > options.max_degree)
    throw Error(ErrorCode::BoundExceeded,
                "permutation degree " + std::to_string(degree) + " exceeds bound " +
                    std::to_string(options.max_degree));
  for (const auto &p : t)
    if (p.size() != degree)
      throw Error(ErrorCode::InvalidArgument, "tuple mixes permutation degrees");

  std::deque<PermTuple> queue{t};
  seen.insert(t);
  while (!queue.empty()) {
    PermTuple cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k)
      for (auto dir : {MoveDirection::Left, MoveDirection::Right}) {
        PermTuple next = move_tuple(cur, k, dir);
        if (seen.insert(next).second) {
          if (seen.size() > options.max_states)
            throw Error(ErrorCode::BoundExceeded,
                        "quotient orbit exceeds " + std::to_string(options.max_states) +
                            " tuples");
          queue.push_back(std::move(next));
        }
      }
  }
  return seen;
}

namespace {

constexpr std::size_t kFingerprintOrbitStates = 5'000;
constexpr std::size_t kFingerprintRelabelWork = 4'000'000;

std::optional<QuotientOrbitClass> orbit_class(const PermTuple &t) {
  if (t.empty())
    return std::nullopt;
  const int n = t.front().size();
  std::set<PermTuple> orbit;
  try {
    orbit = orbit_quotient(t, {8, kFingerprintOrbitStates});
  } catch (const Error &) {
    return std::nullopt;
  }
  std::size_t factorial = 1;
  for (int k = 2; k <= n; ++k)
    factorial *= static_cast<std::size_t>(k);
  if (factorial * orbit.size() > kFingerprintRelabelWork)
    return std::nullopt;

  QuotientOrbitClass cls;
  cls.size = orbit.size();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  bool first = true;
  do {
    const Permutation sigma = Permutation::from_images(images);
    for (const auto &member : orbit) {
      PermTuple conj;
      conj.reserve(member.size());
      for (const auto &p : member)
        conj.push_back(p.conjugate_by(sigma));
      auto flat = flatten(conj);
      if (first || flat < cls.canonical) {
        cls.canonical = std::move(flat);
        first = false;
      }
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return cls;
}

} // namespace

Fingerprint fingerprint(const CuspidalFactorization &F) {
  Fingerprint fp;
  fp.factor_count = F.size();
  fp.counts = singularity_counts(F);
  fp.product_form = encode(normal_form(product(F)));
  for (const auto &f : F.factors())
    fp.exponent_sums.push_back(exponent_sum(factor_braid(f)));
  std::sort(fp.exponent_sums.begin(), fp.exponent_sums.end());
  fp.quotient_orbit = orbit_class(quotient_tuple(F));
  return fp;
}

std::optional<std::string> first_difference(const Fingerprint &a, const Fingerprint &b) {
  if (a.factor_count != b.factor_count)
    return "factor-count";
  if (!(a.counts == b.counts))
    return "rho-counts";
  if (a.product_form != b.product_form)
    return "product";
  if (a.exponent_sums != b.exponent_sums)
    return "exponent-sums";
  if (a.quotient_orbit != b.quotient_orbit)
    return "quotient-orbit";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Witnesses

CuspidalFactorization replay(const CuspidalFactorization &F, const Witness &w) {
  return conjugate_all(apply_moves(F, w.moves), w.conjugator);
}

bool replay_matches(const CuspidalFactorization &from, const CuspidalFactorization &to,
                    const Witness &w) {
  if (from.strands() != to.strands() || from.size() != to.size())
    return false;
  return canonical_key(replay(from, w)) == canonical_key(to);
}

std::string serialize_witness(const Witness &w) {
  std::string out;
  for (const auto &m : w.moves)
    out += "move " + std::to_string(m.index) + ' ' +
           (m.direction == MoveDirection::Left ? 'L' : 'R') + '\n';
  out += "conj " + w.conjugator.to_string() + '\n';
  return out;
}

Witness parse_witness(std::string_view text, int strands) {
  Witness w;
  w.conjugator = BraidWord::identity(strands);
  bool have_conj = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
      continue;
    if (have_conj)
      throw ParseError(ErrorCode::Parse, line_no, first + 1,
                       "content after the final 'conj' line");
    std::istringstream fields{std::string(line)};
    std::string head;
    fields >> head;
    if (head == "move") {
      long long index = 0;
      std::string dir;
      if (!(fields >> index >> dir) || index < 1 || (dir != "L" && dir != "R"))
        throw ParseError(ErrorCode::Parse, line_no, first + 1,
                         "expected 'move <i> <L|R>'");
      std::string extra;
      if (fields >> extra)
        throw ParseError(ErrorCode::Parse, line_no, first + 1, "trailing tokens after move");
      w.moves.push_back({static_cast<std::size_t>(index),
                         dir == "L" ? MoveDirection::Left : MoveDirection::Right});
    } else if (head == "conj") {
      const std::size_t word_start = first + 4;
      std::string_view rest = line.substr(std::min(word_start, line.size()));
      while (!rest.empty() && rest.back() == '\r')
        rest.remove_suffix(1);
      try {
        w.conjugator = parse_braid_word(strands, rest);
      } catch (const ParseError &e) {
        throw ParseError(e.code(), line_no, word_start + e.column(), e.message());
      }
      have_conj = true;
    } else {
      throw ParseError(ErrorCode::Parse, line_no, first + 1,
                       "unknown directive '" + head + "'");
    }
  }
  if (!have_conj)
    throw ParseError(ErrorCode::Parse, line_no == 0 ? 1 : line_no, 1,
                     "missing final 'conj' line");
  return w;
}

// ---------------------------------------------------------------------------
// Equivalence search

const char *to_string(EquivalenceVerdict::Kind kind) {
  switch (kind) {
  case EquivalenceVerdict::Kind::Equivalent: return "Equivalent";
  case EquivalenceVerdict::Kind::Distinguished: return "Distinguished";
  case EquivalenceVerdict::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kRoot = std::numeric_limits<std::size_t>::max();

// Freely reduced words of length <= radius, shortest first, deduplicated by
// normal form, that commute with X_1^rho.
std::vector<BraidWord> centralizer_ball(int n, int rho, int radius) {
  const BraidWord core = power(BraidWord::generator(n, 1), rho);
  const GarsideForm core_nf = normal_form(core);
  std::vector<BraidWord> out;
  std::set<GarsideForm> seen;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= radius; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto &letters : layer) {
      const BraidWord y(n, letters);
      if (seen.insert(normal_form(y)).second && normal_form(conjugate(core, y)) == core_nf)
        out.push_back(y);
      if (len == radius)
        continue;
      for (int i = 1; i < n; ++i)
        for (int s : {i, -i}) {
          if (!letters.empty() && letters.back() == -s)
            continue;
          auto ext = letters;
          ext.push_back(s);
          next.push_back(std::move(ext));
        }
    }
    layer = std::move(next);
  }
  return out;
}

CuspidalFactorization normalized(const CuspidalFactorization &F) {
  return conjugate_all(F, invert(F[0].conjugator()));
}

struct Node {
  std::size_t parent;
  MoveSpec move;
};

struct Match {
  std::size_t node;
  std::size_t anchor; // index into the centralizer list for the first rho
};

class Search {
public:
  Search(const CuspidalFactorization &F1, const CuspidalFactorization &F2,
         const EquivalenceOptions &options)
      : f1_(F1), f2_(F2), options_(options) {
    for (int rho = 1; rho <= 3; ++rho)
      anchors_[rho] = centralizer_ball(F1.strands(), rho, options.conjugator_radius);
    report_.budget = options.budget;
    report_.conjugator_radius = options.conjugator_radius;
  }

  EquivalenceVerdict run() {
    frontier_a_.push_back({0, f1_});
    frontier_b_.push_back({0, f2_});
    nodes_a_.push_back({kRoot, {}});
    nodes_b_.push_back({kRoot, {}});
    if (auto v = index_a(0, f1_))
      return *v;
    if (auto v = index_b(0, f2_))
      return *v;

    bool turn_a = true;
    while (!frontier_a_.empty() || !frontier_b_.empty()) {
      const bool expand_a = frontier_b_.empty() || (turn_a && !frontier_a_.empty());
      turn_a = !turn_a;
      auto &frontier = expand_a ? frontier_a_ : frontier_b_;
      auto &nodes = expand_a ? nodes_a_ : nodes_b_;
      std::vector<std::pair<std::size_t, CuspidalFactorization>> next;
      for (const auto &[id, F] : frontier) {
        for (std::size_t i = 1; i < F.size(); ++i)
          for (auto dir : {MoveDirection::Left, MoveDirection::Right}) {
            const MoveSpec move{i, dir};
            if (nodes[id].parent != kRoot && nodes[id].move.inverse() == move)
              continue;
            if (states() >= options_.budget)
              return unknown(false);
            CuspidalFactorization child = apply_move(F, move);
            const std::size_t child_id = nodes.size();
            nodes.push_back({id, move});
            auto verdict = expand_a ? index_a(child_id, child) : index_b(child_id, child);
            if (verdict)
              return *verdict;
            if (fresh_)
              next.emplace_back(child_id, std::move(child));
          }
      }
      frontier = std::move(next);
    }
    return unknown(true);
  }

private:
  // The two roots are free; every child costs one unit of budget.
  std::size_t states() const { return nodes_a_.size() + nodes_b_.size() - 2; }

  EquivalenceVerdict unknown(bool exhausted) {
    EquivalenceVerdict v;
    v.kind = EquivalenceVerdict::Kind::Unknown;
    report_.states_explored = states();
    report_.orbits_exhausted = exhausted;
    v.report = report_;
    return v;
  }

  std::vector<MoveSpec> path(const std::vector<Node> &nodes, std::size_t id) const {
    std::vector<MoveSpec> moves;
    while (nodes[id].parent != kRoot) {
      moves.push_back(nodes[id].move);
      id = nodes[id].parent;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  }

  // s_A normalized equals s_B normalized and conjugated by y, so
  // F2 = conj(H_B^-1 H_A F1, Q_A^-1 y^-1 Q_B).
  std::optional<EquivalenceVerdict> try_witness(std::size_t node_a, std::size_t node_b,
                                                const BraidWord &y) {
    const auto moves_a = path(nodes_a_, node_a);
    const auto moves_b = path(nodes_b_, node_b);
    const CuspidalFactorization s_a = apply_moves(f1_, moves_a);
    const CuspidalFactorization s_b = apply_moves(f2_, moves_b);
    Witness w;
    w.moves = moves_a;
    for (auto it = moves_b.rbegin(); it != moves_b.rend(); ++it)
      w.moves.push_back(it->inverse());
    w.conjugator = free_reduce(compose(compose(invert(s_a[0].conjugator()), invert(y)),
                                       s_b[0].conjugator()));
    if (!replay_matches(f1_, f2_, w))
      return std::nullopt;
    EquivalenceVerdict v;
    v.kind = EquivalenceVerdict::Kind::Equivalent;
    v.witness = std::move(w);
    report_.states_explored = states();
    v.report = report_;
    return v;
  }

  std::optional<EquivalenceVerdict> index_a(std::size_t id, const CuspidalFactorization &F) {
    const std::string key = canonical_key(normalized(F));
    fresh_ = index_a_.emplace(key, id).second;
    if (!fresh_)
      return std::nullopt;
    if (auto it = index_b_.find(key); it != index_b_.end()) {
      const auto &anchors = anchors_[F[0].rho()];
      if (auto v = try_witness(id, it->second.node, anchors[it->second.anchor]))
        return v;
    }
    return std::nullopt;
  }

  std::optional<EquivalenceVerdict> index_b(std::size_t id, const CuspidalFactorization &F) {
    const CuspidalFactorization base = normalized(F);
    const auto &anchors = anchors_[F[0].rho()];
    report_.conjugator_candidates = std::max(report_.conjugator_candidates, anchors.size());
    fresh_ = seen_b_.insert(canonical_key(base)).second;
    if (!fresh_)
      return std::nullopt;
    for (std::size_t k = 0; k < anchors.size(); ++k) {
      const std::string key = canonical_key(conjugate_all(base, anchors[k]));
      index_b_.emplace(key, Match{id, k});
      if (auto it = index_a_.find(key); it != index_a_.end())
        if (auto v = try_witness(it->second, id, anchors[k]))
          return v;
    }
    return std::nullopt;
  }

  const CuspidalFactorization &f1_;
  const CuspidalFactorization &f2_;
  EquivalenceOptions options_;
  BudgetReport report_;
  std::map<int, std::vector<BraidWord>> anchors_;

  std::vector<Node> nodes_a_, nodes_b_;
  std::vector<std::pair<std::size_t, CuspidalFactorization>> frontier_a_, frontier_b_;
  std::unordered_map<std::string, std::size_t> index_a_;
  std::unordered_map<std::string, Match> index_b_;
  std::unordered_set<std::string> seen_b_;
  bool fresh_ = false;
};

} // namespace

EquivalenceVerdict equivalent(const CuspidalFactorization &F1,
                              const CuspidalFactorization &F2,
                              const EquivalenceOptions &options) {
  if (F1.strands() != F2.strands())
    throw Error(ErrorCode::StrandMismatch, "factorizations live in different braid groups");
  if (options.budget == 0)
    throw Error(ErrorCode::ZeroBudget, "search budget must be positive");

  if (auto diff = first_difference(fingerprint(F1), fingerprint(F2))) {
    EquivalenceVerdict v;
    v.kind = EquivalenceVerdict::Kind::Distinguished;
    v.invariant = *diff;
    v.report.budget = options.budget;
    v.report.conjugator_radius = options.conjugator_radius;
    return v;
  }
  if (canonical_key(F1) == canonical_key(F2)) {
    EquivalenceVerdict v;
    v.kind = EquivalenceVerdict::Kind::Equivalent;
    v.witness.conjugator = BraidWord::identity(F1.strands());
    v.report.budget = options.budget;
    v.report.conjugator_radius = options.conjugator_radius;
    return v;
  }
  return Search(F1, F2, options).run();
}

} // namespace braidwb
