#include "braidwb/factorization.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "braidwb/error.hpp"

namespace braidwb {

CuspidalFactor::CuspidalFactor(BraidWord conjugator, int rho)
    : conjugator_(std::move(conjugator)), rho_(rho) {
  if (rho < 1 || rho > 3)
    throw Error(ErrorCode::RhoOutOfRange,
                "rho must be 1, 2 or 3, got " + std::to_string(rho));
}

CuspidalFactorization::CuspidalFactorization(int strands,
                                             std::vector<CuspidalFactor> factors)
    : strands_(strands), factors_(std::move(factors)) {
  if (strands < 2)
    throw Error(ErrorCode::InvalidStrandCount,
                "a factorization needs at least 2 strands");
  if (factors_.empty())
    throw Error(ErrorCode::EmptyFactorization, "factorization has no factors");
  for (const auto &f : factors_)
    if (f.strands() != strands)
      throw Error(ErrorCode::StrandMismatch,
                  "conjugator on " + std::to_string(f.strands()) +
                      " strands in a factorization on " + std::to_string(strands));
}

BraidWord factor_braid(const CuspidalFactor &f) {
  const int n = f.strands();
  return conjugate(power(BraidWord::generator(n, 1), f.rho()), f.conjugator());
}

BraidWord product(const CuspidalFactorization &F) {
  std::vector<int> letters;
  for (const auto &f : F.factors()) {
    const BraidWord g = factor_braid(f);
    letters.insert(letters.end(), g.letters().begin(), g.letters().end());
  }
  return free_reduce(BraidWord(F.strands(), std::move(letters)));
}

bool verify_full_twist(const CuspidalFactorization &F) {
  const GarsideForm nf = normal_form(product(F));
  return nf.delta_power == 2 && nf.factors.empty();
}

SingularityCounts singularity_counts(const CuspidalFactorization &F) {
  SingularityCounts counts;
  for (const auto &f : F.factors()) {
    switch (f.rho()) {
    case 1: ++counts.branch; break;
    case 2: ++counts.nodes; break;
    default: ++counts.cusps; break;
    }
  }
  return counts;
}

int genus_from_counts(int degree, int cusps, int nodes) {
  return (degree - 1) * (degree - 2) / 2 - cusps - nodes;
}

CurveInvariants curve_invariants(const CuspidalFactorization &F) {
  if (!verify_full_twist(F))
    throw Error(ErrorCode::UnverifiedFactorization,
                "product of factors is not the full twist");
  const SingularityCounts counts = singularity_counts(F);
  CurveInvariants inv;
  inv.degree = F.strands();
  inv.cusps = counts.cusps;
  inv.nodes = counts.nodes;
  inv.genus = genus_from_counts(inv.degree, inv.cusps, inv.nodes);
  if (inv.genus < 0)
    throw Error(ErrorCode::NegativeGenus,
                "genus " + std::to_string(inv.genus) +
                    " is negative; the singularity counts are not realizable");
  return inv;
}

CuspidalFactorization normalize(const CuspidalFactorization &F) {
  std::vector<CuspidalFactor> out;
  out.reserve(F.size());
  for (const auto &f : F.factors())
    out.emplace_back(free_reduce(f.conjugator()), f.rho());
  return CuspidalFactorization(F.strands(), std::move(out));
}

std::optional<CuspidalFactor> recognize_factor(const BraidWord &g, int max_length) {
  const int rho = exponent_sum(g);
  if (rho < 1 || rho > 3)
    return std::nullopt;
  const int n = g.strands();
  const GarsideForm target = normal_form(g);
  const BraidWord core = power(BraidWord::generator(n, 1), rho);

  // Breadth-first over freely reduced words, shortest conjugator first.
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto &letters : layer) {
      const BraidWord q(n, letters);
      if (normal_form(conjugate(core, q)) == target)
        return CuspidalFactor(q, rho);
      if (len == max_length)
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
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string_view text;
  std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
      ++pos;
    if (pos >= line.size())
      break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
      ++pos;
    out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return value;
}

} // namespace

CuspidalFactorization parse_factorization(std::string_view text) {
  std::optional<int> strands;
  std::vector<CuspidalFactor> factors;
  std::size_t line_no = 0;
  std::size_t last_line = 1;

  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size())
        break;
      continue;
    }
    last_line = line_no;
    const Token &head = tokens.front();

    if (head.text == "strands") {
      if (strands)
        throw ParseError(ErrorCode::Parse, line_no, head.column, "duplicate 'strands' header");
      if (tokens.size() != 2)
        throw ParseError(ErrorCode::Parse, line_no, head.column,
                         "expected 'strands <n>'");
      const auto n = to_int(tokens[1].text);
      if (!n || *n < 2)
        throw ParseError(ErrorCode::InvalidStrandCount, line_no, tokens[1].column,
                         "strand count must be an integer >= 2");
      strands = *n;
    } else if (head.text == "factor") {
      if (!strands)
        throw ParseError(ErrorCode::Parse, line_no, head.column,
                         "'factor' before 'strands' header");
      if (tokens.size() < 3 || !tokens[1].text.starts_with("rho="))
        throw ParseError(ErrorCode::Parse, line_no,
                         tokens.size() > 1 ? tokens[1].column : head.column,
                         "expected 'factor rho=<1|2|3> Q=<word>'");
      const auto rho = to_int(tokens[1].text.substr(4));
      if (!rho)
        throw ParseError(ErrorCode::Parse, line_no, tokens[1].column + 4,
                         "rho is not an integer");
      if (*rho < 1 || *rho > 3)
        throw ParseError(ErrorCode::RhoOutOfRange, line_no, tokens[1].column + 4,
                         "rho must be 1, 2 or 3, got " + std::to_string(*rho));
      if (!tokens[2].text.starts_with("Q="))
        throw ParseError(ErrorCode::Parse, line_no, tokens[2].column,
                         "expected 'Q=' after rho");
      std::vector<Token> word;
      if (tokens[2].text.size() > 2)
        word.push_back({tokens[2].text.substr(2), tokens[2].column + 2});
      word.insert(word.end(), tokens.begin() + 3, tokens.end());
      std::vector<int> letters;
      for (const auto &tok : word) {
        const auto value = to_int(tok.text);
        if (!value)
          throw ParseError(ErrorCode::Parse, line_no, tok.column,
                           "expected a signed integer, got '" + std::string(tok.text) + "'");
        if (*value == 0 || std::abs(*value) >= *strands)
          throw ParseError(ErrorCode::StrandMismatch, line_no, tok.column,
                           "letter " + std::to_string(*value) + " outside B_" +
                               std::to_string(*strands));
        letters.push_back(*value);
      }
      factors.emplace_back(BraidWord(*strands, std::move(letters)), *rho);
    } else {
      throw ParseError(ErrorCode::Parse, line_no, head.column,
                       "unknown directive '" + std::string(head.text) + "'");
    }
    if (end == text.size())
      break;
  }

  if (!strands)
    throw ParseError(ErrorCode::Parse, last_line, 1, "missing 'strands' header");
  if (factors.empty())
    throw ParseError(ErrorCode::EmptyFactorization, last_line, 1, "no factors");
  return CuspidalFactorization(*strands, std::move(factors));
}

std::string serialize(const CuspidalFactorization &F) {
  std::string out = "strands " + std::to_string(F.strands()) + "\n";
  for (const auto &f : F.factors()) {
    out += "factor rho=" + std::to_string(f.rho()) + " Q=";
    out += free_reduce(f.conjugator()).to_string();
    out += '\n';
  }
  return out;
}

CuspidalFactorization load_factorization(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_factorization(buf.str());
}

} // namespace braidwb
