#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "braidwb/chisini.hpp"
#include "braidwb/error.hpp"
#include "braidwb/factorization.hpp"
#include "braidwb/hurwitz.hpp"
#include "braidwb/vankampen.hpp"

using namespace braidwb;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2, kUnknown = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool structured = false;
// File being parsed, for diagnostics.
std::string source;

std::string render(const json &v) {
  if (v.is_null())
    return "none";
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
      out += (i ? "; " : "") + render(v[i]);
    return out;
  }
  return v.dump();
}

// Text mode: one "key: value" line per field; nested objects flatten to
// "key.sub".
void print_text(const json &doc, const std::string &prefix = "") {
  for (const auto &[key, value] : doc.items()) {
    if (value.is_object()) {
      print_text(value, prefix + key + ".");
      continue;
    }
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i)
        print_text(value[i], prefix + key + "." + std::to_string(i) + ".");
      continue;
    }
    std::cout << prefix << key << ": " << render(value) << '\n';
  }
}

void emit(const json &doc) {
  if (structured)
    std::cout << doc.dump(2) << '\n';
  else
    print_text(doc);
}

std::string read_text(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CuspidalFactorization load(const std::string &path) {
  const std::string text = read_text(path);
  source = path;
  return parse_factorization(text);
}

json counts_json(const SingularityCounts &c) {
  return {{"branch", c.branch}, {"nodes", c.nodes}, {"cusps", c.cusps}};
}

// Exact rational from "3", "3/2" or "1.5".
Rational parse_rational(const std::string &s) {
  try {
    if (const auto slash = s.find('/'); slash != std::string::npos)
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      if (frac.empty() || frac.size() > 12 ||
          frac.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad decimal '" + s + "'");
      long long den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i)
        den *= 10;
      const std::string whole = s.substr(0, dot);
      const long long w = whole.empty() ? 0 : std::stoll(whole);
      const long long f = std::stoll(frac);
      return Rational(w * den + (s[0] == '-' ? -f : f), den);
    }
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size())
      throw UsageError("bad number '" + s + "'");
    return Rational(v);
  } catch (const std::logic_error &) {
    // Also covers boost::bad_rational for a zero denominator.
    throw UsageError("bad number '" + s + "'");
  }
}

int cmd_verify(const std::string &path) {
  const auto F = load(path);
  json doc;
  doc["file"] = path;
  doc["strands"] = F.strands();
  doc["factors"] = F.size();
  const bool ok = verify_full_twist(F);
  doc["verified"] = ok;
  doc["counts"] = counts_json(singularity_counts(F));
  if (!ok) {
    emit(doc);
    return kDomain;
  }
  const auto c = singularity_counts(F);
  doc["degree"] = F.strands();
  doc["genus"] = genus_from_counts(F.strands(), c.cusps, c.nodes);
  emit(doc);
  return doc["genus"].get<int>() < 0 ? kDomain : kOk;
}

int cmd_hurwitz(const std::string &a, const std::string &b, std::size_t budget, int radius,
                const std::string &witness_out, const std::string &replay_in) {
  const auto F1 = load(a);
  const auto F2 = load(b);
  json doc;
  if (!replay_in.empty()) {
    const std::string text = read_text(replay_in);
    source = replay_in;
    const Witness w = parse_witness(text, F1.strands());
    bool matches = false;
    try {
      matches = replay_matches(F1, F2, w);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::IndexOutOfRange && e.code() != ErrorCode::StrandMismatch)
        throw;
    }
    doc["replay"] = replay_in;
    doc["moves"] = w.moves.size();
    doc["matches"] = matches;
    emit(doc);
    return matches ? kOk : kDomain;
  }

  if (F1.strands() != F2.strands()) {
    doc["verdict"] = "Distinguished";
    doc["invariant"] = "strands";
    emit(doc);
    return kDomain;
  }
  EquivalenceOptions options;
  options.budget = budget;
  options.conjugator_radius = radius;
  const auto v = equivalent(F1, F2, options);
  doc["verdict"] = to_string(v.kind);
  doc["invariant"] = v.kind == EquivalenceVerdict::Kind::Distinguished ? json(v.invariant) : json();
  doc["states_explored"] = v.report.states_explored;
  doc["budget"] = v.report.budget;
  doc["conjugator_radius"] = v.report.conjugator_radius;
  doc["orbits_exhausted"] = v.report.orbits_exhausted;
  if (v.kind == EquivalenceVerdict::Kind::Equivalent) {
    doc["moves"] = v.witness.moves.size();
    doc["conjugator"] = v.witness.conjugator.to_string();
    if (!witness_out.empty()) {
      std::ofstream out(witness_out);
      if (!out)
        throw UsageError("cannot write '" + witness_out + "'");
      out << serialize_witness(v.witness);
      doc["witness"] = witness_out;
    }
  }
  emit(doc);
  switch (v.kind) {
  case EquivalenceVerdict::Kind::Equivalent: return kOk;
  case EquivalenceVerdict::Kind::Distinguished: return kDomain;
  case EquivalenceVerdict::Kind::Unknown: return kUnknown;
  }
  return kUnknown;
}

json presentation_json(const GroupPresentation &P) {
  json rels = json::array();
  for (const auto &r : P.relators) {
    std::string s;
    for (int x : r.letters())
      s += (s.empty() ? "" : " ") + std::to_string(x);
    rels.push_back(s);
  }
  return {{"gens", P.generators}, {"relators", rels}};
}

int cmd_vk(const std::string &path, bool full) {
  const auto F = load(path);
  const auto P = presentation(F, full ? RelatorMode::Full : RelatorMode::Economical);
  const auto S = simplify(P);
  json doc;
  doc["file"] = path;
  doc["mode"] = full ? "full" : "economical";
  doc["presentation"] = presentation_json(P);
  doc["simplified"] = presentation_json(S);
  doc["abelianization"] = abelianization(P).to_string();
  doc["irreducible"] = irreducibility_check(F);
  emit(doc);
  return kOk;
}

int cmd_enumerate(const std::string &path, int N, bool override_bounds) {
  const auto F = load(path);
  EnumerationOptions options;
  options.allow_large = override_bounds;
  auto doc = to_json(morphism_report(F, N, options));
  doc["file"] = path;
  emit(doc);
  return kOk;
}

int cmd_chisini(const std::string &d, long long g, long long c, std::optional<long long> N) {
  const Rational dr = parse_rational(d);
  ChisiniCertificate cert;
  try {
    cert = chisini_bound(dr, g, c, N);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::InvalidArgument)
      throw UsageError(e.what());
    throw;
  }
  emit(to_json(cert));
  return cert.applicable ? kOk : kDomain;
}

void report_error(const std::string &code, const std::string &message,
                  std::optional<std::size_t> line = std::nullopt,
                  std::optional<std::size_t> column = std::nullopt) {
  std::cerr << "error: " << message << '\n';
  if (!structured)
    return;
  json doc{{"error", code}, {"message", message}};
  if (line)
    doc["line"] = *line;
  if (column)
    doc["column"] = *column;
  std::cout << doc.dump(2) << '\n';
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Braid monodromy workbench"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output mode")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.fallthrough();

  std::string file, file2, witness_out, replay_in;
  std::size_t budget = EquivalenceOptions{}.budget;
  int radius = EquivalenceOptions{}.conjugator_radius;
  bool full = false, override_bounds = false;
  int N = 0;
  std::string d;
  long long g = 0, c = 0;
  std::optional<long long> chisini_N;

  auto *verify = app.add_subcommand("verify", "Check a factorization of the full twist");
  verify->add_option("file", file, "Factorization (.bfac)")->required();

  auto *hurwitz = app.add_subcommand("hurwitz", "Decide Hurwitz equivalence up to conjugation");
  hurwitz->add_option("file1", file, "First factorization")->required();
  hurwitz->add_option("file2", file2, "Second factorization")->required();
  hurwitz->add_option("--budget", budget, "Search budget in states")->capture_default_str();
  hurwitz->add_option("--radius", radius, "Conjugator search radius")->capture_default_str();
  hurwitz->add_option("--witness", witness_out, "Write the witness here (.wit)");
  hurwitz->add_option("--replay", replay_in, "Replay a witness instead of searching");

  auto *vk = app.add_subcommand("vk", "Fundamental group presentation and abelianization");
  vk->add_option("file", file, "Factorization (.bfac)")->required();
  vk->add_flag("--full", full, "Emit the complete relator set");

  auto *enumerate = app.add_subcommand("enumerate", "Classes of monodromy representations");
  enumerate->add_option("file", file, "Factorization (.bfac)")->required();
  enumerate->add_option("--degree,-N", N, "Covering degree")->required();
  enumerate->add_flag("--override", override_bounds, "Lift the enumeration bounds");

  auto *chisini = app.add_subcommand("chisini", "Chisini inequality certificate");
  chisini->add_option("--d", d, "Half the curve degree: 3, 3/2 or 1.5")->required();
  chisini->add_option("--g", g, "Genus")->required();
  chisini->add_option("--c", c, "Number of cusps")->required();
  chisini->add_option("--N", chisini_N, "Covering degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }
  structured = format == "structured";

  try {
    if (*verify)
      return cmd_verify(file);
    if (*hurwitz)
      return cmd_hurwitz(file, file2, budget, radius, witness_out, replay_in);
    if (*vk)
      return cmd_vk(file, full);
    if (*enumerate)
      return cmd_enumerate(file, N, override_bounds);
    if (*chisini)
      return cmd_chisini(d, g, c, chisini_N);
  } catch (const ParseError &e) {
    report_error(to_string(e.code()),
                 source + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": " + e.message(),
                 e.line(), e.column());
    return kUsage;
  } catch (const UsageError &e) {
    report_error("Usage", e.what());
    return kUsage;
  } catch (const Error &e) {
    report_error(to_string(e.code()), e.what());
    return e.code() == ErrorCode::ZeroBudget ? kUsage : kDomain;
  }
  return kUsage;
}
