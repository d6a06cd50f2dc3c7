#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidwb/chisini.hpp"
#include "braidwb/error.hpp"
#include "braidwb/hurwitz.hpp"
#include "braidwb/vankampen.hpp"

namespace py = pybind11;
using namespace braidwb;

namespace {

py::object to_python(const nlohmann::json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Rational to_rational(const py::object &value) {
  const py::object f = py::module_::import("fractions").attr("Fraction")(value);
  return Rational(f.attr("numerator").cast<long long>(), f.attr("denominator").cast<long long>());
}

py::object fraction(const Rational &r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

MoveDirection direction(const std::string &s) {
  if (s == "L")
    return MoveDirection::Left;
  if (s == "R")
    return MoveDirection::Right;
  throw Error(ErrorCode::InvalidArgument, "direction must be 'L' or 'R'");
}

py::dict counts_dict(const SingularityCounts &c) {
  py::dict d;
  d["branch"] = c.branch;
  d["nodes"] = c.nodes;
  d["cusps"] = c.cusps;
  return d;
}

} // namespace

PYBIND11_MODULE(_braidwb, m) {
  m.doc() = "Braid monodromy workbench";

  // Later registrations are tried first, so ParseError wins over Error.
  const auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &BraidWord::letters)
      .def("__mul__", [](const BraidWord &a, const BraidWord &b) { return compose(a, b); })
      .def("inverse", [](const BraidWord &w) { return invert(w); })
      .def("__eq__", [](const BraidWord &a, const BraidWord &b) { return a == b; })
      .def("__str__", &BraidWord::to_string)
      .def("__repr__", [](const BraidWord &w) {
        return "BraidWord(" + std::to_string(w.strands()) + ", [" + w.to_string() + "])";
      });

  m.def("equals", &equals, "Decide equality in the braid group");
  m.def("full_twist", &full_twist);
  m.def("exponent_sum", [](const BraidWord &w) { return exponent_sum(w); });
  m.def("permutation_of", [](const BraidWord &w) { return permutation_of(w).to_string(); });
  m.def("normal_form", [](const BraidWord &w) {
    const GarsideForm g = normal_form(w);
    py::dict d;
    d["delta_power"] = g.delta_power;
    d["word"] = to_word(g).letters();
    return d;
  });

  py::class_<CuspidalFactor>(m, "CuspidalFactor")
      .def(py::init<BraidWord, int>(), py::arg("conjugator"), py::arg("rho"))
      .def_property_readonly("conjugator", &CuspidalFactor::conjugator)
      .def_property_readonly("rho", &CuspidalFactor::rho);

  py::class_<CuspidalFactorization>(m, "CuspidalFactorization")
      .def(py::init<int, std::vector<CuspidalFactor>>(), py::arg("strands"), py::arg("factors"))
      .def_property_readonly("strands", &CuspidalFactorization::strands)
      .def_property_readonly("factors", &CuspidalFactorization::factors)
      .def("__len__", &CuspidalFactorization::size)
      .def("__eq__", [](const CuspidalFactorization &a, const CuspidalFactorization &b) {
        return a == b;
      })
      .def("__str__", [](const CuspidalFactorization &F) { return serialize(F); });

  m.def("parse_factorization", [](const std::string &text) { return parse_factorization(text); });
  m.def("load_factorization", &load_factorization);
  m.def("serialize", [](const CuspidalFactorization &F) { return serialize(F); });
  m.def("verify_full_twist", &verify_full_twist);
  m.def("singularity_counts",
        [](const CuspidalFactorization &F) { return counts_dict(singularity_counts(F)); });
  m.def("curve_invariants", [](const CuspidalFactorization &F) {
    const auto c = curve_invariants(F);
    py::dict d;
    d["degree"] = c.degree;
    d["genus"] = c.genus;
    d["cusps"] = c.cusps;
    d["nodes"] = c.nodes;
    return d;
  });

  m.def(
      "apply_move",
      [](const CuspidalFactorization &F, std::size_t index, const std::string &dir) {
        return apply_move(F, {index, direction(dir)});
      },
      py::arg("F"), py::arg("index"), py::arg("direction"));
  m.def("conjugate_all", &conjugate_all);
  m.def("fingerprint", [](const CuspidalFactorization &F) {
    const auto fp = fingerprint(F);
    py::dict d;
    d["factor_count"] = fp.factor_count;
    d["counts"] = counts_dict(fp.counts);
    d["exponent_sums"] = fp.exponent_sums;
    d["quotient_orbit_size"] =
        fp.quotient_orbit ? py::cast(fp.quotient_orbit->size) : py::object(py::none());
    return d;
  });
  m.def(
      "equivalent",
      [](const CuspidalFactorization &a, const CuspidalFactorization &b, std::size_t budget) {
        EquivalenceOptions options;
        options.budget = budget;
        const auto v = equivalent(a, b, options);
        py::dict d;
        d["verdict"] = to_string(v.kind);
        d["invariant"] = v.invariant;
        d["states_explored"] = v.report.states_explored;
        d["witness"] = v.kind == EquivalenceVerdict::Kind::Equivalent
                           ? py::cast(serialize_witness(v.witness))
                           : py::object(py::none());
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("budget") = EquivalenceOptions{}.budget);
  m.def("replay_matches",
        [](const CuspidalFactorization &a, const CuspidalFactorization &b,
           const std::string &witness) {
          return replay_matches(a, b, parse_witness(witness, a.strands()));
        });

  m.def(
      "presentation",
      [](const CuspidalFactorization &F, bool full) {
        const auto P = presentation(F, full ? RelatorMode::Full : RelatorMode::Economical);
        return serialize(P);
      },
      py::arg("F"), py::arg("full") = false, "Presentation in the 'gens k' text format");
  m.def(
      "abelianization",
      [](const CuspidalFactorization &F, bool full) {
        return abelianization(presentation(F, full ? RelatorMode::Full : RelatorMode::Economical))
            .to_string();
      },
      py::arg("F"), py::arg("full") = false);
  m.def("simplify", [](const CuspidalFactorization &F) { return serialize(simplify(presentation(F))); });

  m.def(
      "enumerate_reps",
      [](const CuspidalFactorization &F, int N, bool allow_large) {
        EnumerationOptions options;
        options.allow_large = allow_large;
        std::vector<std::vector<std::string>> out;
        for (const auto &rep : enumerate_reps(F, N, options)) {
          std::vector<std::string> images;
          for (const auto &p : rep.images)
            images.push_back(p.to_string());
          out.push_back(images);
        }
        return out;
      },
      py::arg("F"), py::arg("N"), py::arg("allow_large") = false);
  m.def(
      "morphism_report",
      [](const CuspidalFactorization &F, int N) { return to_python(to_json(morphism_report(F, N))); },
      py::arg("F"), py::arg("N"));
  m.def(
      "chisini_bound",
      [](const py::object &d, long long g, long long c, std::optional<long long> N) {
        const auto cert = chisini_bound(to_rational(d), g, c, N);
        py::dict out;
        out["threshold"] = cert.threshold ? fraction(*cert.threshold) : py::object(py::none());
        out["applicable"] = cert.applicable;
        out["guaranteed"] = cert.guaranteed ? py::cast(*cert.guaranteed) : py::object(py::none());
        return out;
      },
      py::arg("d"), py::arg("g"), py::arg("c"), py::arg("N") = py::none());
  m.def(
      "chisini_guaranteed",
      [](const py::object &d, long long g, long long c, long long N) {
        return chisini_guaranteed(to_rational(d), g, c, N);
      },
      py::arg("d"), py::arg("g"), py::arg("c"), py::arg("N"));
  m.def("euler_characteristic", &euler_characteristic, py::arg("N"), py::arg("g"), py::arg("c"),
        py::arg("n"));
}
