#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oortscan/construct.hpp"
#include "oortscan/error.hpp"
#include "oortscan/group_spec.hpp"
#include "oortscan/oort.hpp"
#include "oortscan/ramification.hpp"
#include "oortscan/report.hpp"
#include "oortscan/structure.hpp"

namespace py = pybind11;
using namespace oortscan;

namespace {

py::object to_int(BigInt const &v)
{
  std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_fraction(Rational const &q)
{
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_int(boost::multiprecision::numerator(q)), to_int(boost::multiprecision::denominator(q)));
}

py::dict verdict_dict(Verdict const &v)
{
  py::dict d;
  d["group"] = v.group_id;
  d["p"] = v.p;
  d["order"] = v.order;
  d["shape"] = v.shape.str();
  py::list al;
  for (auto const &a : v.shape_aliases)
    al.append(a.str());
  d["shape_aliases"] = al;
  d["cyclic_by_p"] = v.cyclic_by_p;
  d["local"] = status_name(v.local);
  d["local_reason"] = v.local_reason;
  d["oort_candidate"] = v.oort;
  d["passes"] = v.passes();
  d["witness"] = v.candidate.witness ? py::object(py::str(v.candidate.witness_shape.str())) : py::none();
  d["pgl2_char0"] = v.pgl2_char0;

  py::list hits;
  for (auto const &h : v.forbidden_quotients) {
    py::dict x;
    x["type"] = h.type_index;
    x["quotient_order"] = h.quotient_order;
    x["kernel_order"] = h.kernel.order();
    py::dict det;
    for (auto const &[k, val] : h.details)
      det[py::str(k)] = val;
    x["details"] = det;
    hits.append(x);
  }
  d["forbidden_quotients"] = hits;

  py::dict cors;
  for (auto const &c : v.corollaries)
    cors[py::str(c.key)] = status_name(c.status);
  d["corollaries"] = cors;
  d["caveats"] = v.caveats;
  return d;
}

FiniteGroup family_group(std::string const &family) { return build(parse_family(family), Limits::from_env()); }

RamificationFiltration filtration(std::vector<std::uint64_t> orders, std::uint64_t p) { return {std::move(orders), p}; }

} // namespace

PYBIND11_MODULE(_oortscan, m)
{
  m.doc() = "Oort group classification for cyclic-by-p groups";

  static py::exception<Error> base(m, "OortscanError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<BadParameters>(m, "BadParameters", base.ptr());
  py::register_exception<UnknownScenario>(m, "UnknownScenario", base.ptr());

  m.def(
      "classify",
      [](std::string const &family, std::uint64_t p) {
        return verdict_dict(classify(family_group(family), p, family, Limits::from_env()));
      },
      py::arg("family"), py::arg("p"), "Classify a group given in the family mini-language.");
  m.def(
      "classify_spec",
      [](std::string const &text, std::uint64_t p) {
        auto limits = Limits::from_env();
        return verdict_dict(classify(build_from_spec(parse_group_spec(text), limits), p, "spec", limits));
      },
      py::arg("text"), py::arg("p"), "Classify a group given as group-spec text (degree line plus cycles).");

  m.def("recognize", [](std::string const &family) { return recognize(family_group(family)).str(); },
        py::arg("family"));
  m.def("group_order", [](std::string const &family) { return family_order(parse_family(family)); },
        py::arg("family"));
  m.def("make", [](std::string const &family) { return format_group_spec(realize(parse_family(family))); },
        py::arg("family"), "Permutation generators in group-spec text.");
  m.def("subgroup_count", [](std::string const &family) { return all_subgroups(family_group(family)).size(); },
        py::arg("family"));
  m.def("forbidden_fixture",
        [](std::uint64_t p, unsigned type, std::uint64_t param) { return forbidden_fixture_spec(p, type, param).str(); },
        py::arg("p"), py::arg("type"), py::arg("param") = 0u);

  m.def("artin_schreier_genus", [](std::uint64_t p, std::uint64_t deg) { return to_int(artin_schreier_genus(p, deg)); },
        py::arg("p"), py::arg("m"));
  m.def("tame_genus", [](std::string const &text) { return to_int(tame_rh_genus(parse_cover_spec(text))); },
        py::arg("cover"));
  m.def("wild_genus", [](std::string const &text) { return to_int(wild_rh_genus(parse_cover_spec(text))); },
        py::arg("cover"));

  m.def(
      "upper_jumps",
      [](std::vector<std::uint64_t> orders, std::uint64_t p) {
        py::list out;
        for (auto const &j : lower_to_upper(filtration(std::move(orders), p)))
          out.append(py::make_tuple(to_fraction(j.u), j.order_after));
        return out;
      },
      py::arg("orders"), py::arg("p"), "Upper-numbering jumps as (Fraction, order after the jump).");
  m.def(
      "hasse_arf_check",
      [](std::vector<std::uint64_t> orders, std::uint64_t p, std::uint64_t sub) {
        return hasse_arf_check(filtration(std::move(orders), p), sub);
      },
      py::arg("orders"), py::arg("p"), py::arg("sub_order"));
  m.def("different_exponent",
        [](std::vector<std::uint64_t> orders, std::uint64_t p) {
          return to_int(different_exponent(filtration(std::move(orders), p)));
        },
        py::arg("orders"), py::arg("p"));

  m.def("scenario_names", &scenario_names);
  m.def(
      "scenario",
      [](std::string const &name, std::optional<std::uint64_t> p, std::optional<std::uint64_t> l,
         std::optional<std::uint64_t> n_order) {
        ScenarioParams params{p, l, n_order};
        auto r = scenario(name, params);
        py::dict d;
        d["name"] = r.name;
        py::dict values;
        for (auto const &[k, v] : r.values)
          values[py::str(k)] = v;
        d["values"] = values;
        d["obstruction"] = r.obstruction;
        d["conclusion"] = r.conclusion;
        return d;
      },
      py::arg("name"), py::arg("p") = py::none(), py::arg("l") = py::none(), py::arg("n_order") = py::none());

  m.def(
      "corpus",
      [](std::string const &profile, std::vector<std::uint64_t> const &primes, unsigned jobs) {
        std::vector<CorpusRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_corpus(parse_profile(profile), primes, jobs, Limits::from_env());
        }
        py::list out;
        for (auto const &r : rows) {
          py::dict d;
          d["group"] = r.group;
          d["p"] = r.p;
          d["order"] = r.order;
          d["expected"] = r.expected.label();
          d["status"] = row_status_name(r.status);
          d["verdict"] = r.verdict ? py::object(verdict_dict(*r.verdict)) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("profile") = "smoke", py::arg("primes") = std::vector<std::uint64_t>{}, py::arg("jobs") = 1u);
}
