#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dklr/codec.hpp"
#include "dklr/core.hpp"
#include "dklr/counting.hpp"
#include "dklr/dcrll.hpp"
#include "dklr/direct.hpp"
#include "dklr/genfunc.hpp"

namespace py = pybind11;

// Arbitrary-precision integers cross the boundary as Python ints.
namespace pybind11::detail {
template <>
struct type_caster<dklr::BigInt> {
  PYBIND11_TYPE_CASTER(dklr::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = dklr::BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const dklr::BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace dklr;
using Values = std::optional<std::vector<int>>;
using Bounds = std::optional<std::pair<int, int>>;

SelectionMask make_mask(const Values& weights, const Values& charges) {
  if (weights && charges) throw DomainError("give weights or charges, not both");
  if (weights) return SelectionMask::weights(*weights);
  if (charges) return SelectionMask::charges(*charges);
  return SelectionMask::unrestricted();
}

ShiftDirection parse_direction(const std::string& s) {
  if (s == "left") return ShiftDirection::left;
  if (s == "right") return ShiftDirection::right;
  throw DomainError("direction must be 'left' or 'right'");
}

DistributionKind parse_kind(const std::string& s) {
  if (s == "weight") return DistributionKind::weight;
  if (s == "charge") return DistributionKind::charge;
  throw DomainError("kind must be 'weight' or 'charge'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Enumeration and enumerative coding of (d, k, l, r) constrained sequences";

  py::class_<Constraints>(m, "Constraints")
      .def(py::init(&validate), py::arg("d"), py::arg("k"), py::arg("l"), py::arg("r"))
      .def_readonly("d", &Constraints::d)
      .def_readonly("k", &Constraints::k)
      .def_readonly("l", &Constraints::l)
      .def_readonly("r", &Constraints::r)
      .def("__eq__", [](const Constraints& a, const Constraints& b) { return a == b; })
      .def("__repr__", [](const Constraints& c) {
        return "Constraints(d=" + std::to_string(c.d) + ", k=" + std::to_string(c.k) +
               ", l=" + std::to_string(c.l) + ", r=" + std::to_string(c.r) + ")";
      });

  py::enum_<Variant>(m, "Variant")
      .value("first_one", Variant::first_one)
      .value("leading_run", Variant::leading_run);

  m.def("is_valid", [](const std::string& x, const Constraints& c) { return is_valid(BitSequence::parse(x), c); },
        py::arg("seq"), py::arg("c"));
  m.def("nrzi", [](const std::string& x) { return nrzi(BitSequence::parse(x)).str(); }, py::arg("seq"));
  m.def(
      "stats",
      [](const std::string& x) {
        const auto s = stats(BitSequence::parse(x));
        py::dict out;
        out["weight"] = s.weight;
        out["charge"] = s.charge;
        out["rds"] = s.rds;
        return out;
      },
      py::arg("seq"));
  m.def(
      "enumerate_all",
      [](int n, const Constraints& c, int limit) {
        std::vector<std::string> out;
        for (const auto& x : enumerate_all(n, c, limit)) out.push_back(x.str());
        return out;
      },
      py::arg("n"), py::arg("c"), py::arg("limit") = kDefaultOracleLimit);
  m.def(
      "peak_shift",
      [](const std::string& x, int one, const std::string& direction) {
        return peak_shift(BitSequence::parse(x), one, parse_direction(direction)).str();
      },
      py::arg("seq"), py::arg("one"), py::arg("direction"));

  m.def("count_weight", &count_weight, py::arg("n"), py::arg("nu"), py::arg("c"),
        py::arg("variant") = Variant::leading_run);
  m.def("count_charge", &count_charge, py::arg("n"), py::arg("sigma"), py::arg("c"),
        py::arg("variant") = Variant::leading_run);
  m.def("count_dkr", &count_dkr, py::arg("n"), py::arg("c"));
  m.def("count_dklr", &count_dklr, py::arg("n"), py::arg("c"));
  m.def(
      "count_charge_dsv",
      [](int n, int sigma, const Constraints& c, int b1, int b2, Variant v) {
        return count_charge_dsv(n, sigma, c, DsvBounds::make(b1, b2), v);
      },
      py::arg("n"), py::arg("sigma"), py::arg("c"), py::arg("b1"), py::arg("b2"),
      py::arg("variant") = Variant::leading_run);
  m.def(
      "weight_bounds",
      [](int n, const Constraints& c) {
        const auto b = weight_bounds(n, c);
        return std::pair{b.min, b.max};
      },
      py::arg("n"), py::arg("c"));
  m.def("charge_bound", &charge_bound, py::arg("n"), py::arg("d"), py::arg("k"));
  m.def(
      "distribution_table",
      [](int n_max, const Constraints& c, const std::string& kind, Variant v) {
        return distribution_table(n_max, c, parse_kind(kind), v).rows;
      },
      py::arg("n_max"), py::arg("c"), py::arg("kind") = "weight", py::arg("variant") = Variant::leading_run);

  m.def("a_direct", &a_direct, py::arg("n"), py::arg("nu"), py::arg("c"));
  m.def("c_direct", &c_direct, py::arg("n"), py::arg("sigma"), py::arg("c"));
  m.def("ccs_sum", &ccs_sum, py::arg("n"), py::arg("sigma"), py::arg("c"));

  m.def(
      "codebook_size",
      [](int n, const Constraints& c, const Values& weights, const Values& charges, const Bounds& rds) {
        const auto mask = make_mask(weights, charges);
        if (rds) return codebook_size_dsv(n, c, mask, DsvBounds::make(rds->first, rds->second));
        return codebook_size(n, c, mask);
      },
      py::arg("n"), py::arg("c"), py::kw_only(), py::arg("weights") = py::none(), py::arg("charges") = py::none(),
      py::arg("rds") = py::none());
  m.def(
      "encode",
      [](const BigInt& index, int n, const Constraints& c, const Values& weights, const Values& charges,
         const Bounds& rds) {
        const auto mask = make_mask(weights, charges);
        if (rds) return unrank_dsv(index, n, c, mask, DsvBounds::make(rds->first, rds->second)).str();
        return unrank(index, n, c, mask).str();
      },
      py::arg("index"), py::arg("n"), py::arg("c"), py::kw_only(), py::arg("weights") = py::none(),
      py::arg("charges") = py::none(), py::arg("rds") = py::none());
  m.def(
      "decode",
      [](const std::string& seq, const Constraints& c, const Values& weights, const Values& charges,
         const Bounds& rds) {
        const auto x = BitSequence::parse(seq);
        const auto mask = make_mask(weights, charges);
        if (rds) return rank_dsv(x, c, mask, DsvBounds::make(rds->first, rds->second));
        return rank(x, c, mask);
      },
      py::arg("seq"), py::arg("c"), py::kw_only(), py::arg("weights") = py::none(), py::arg("charges") = py::none(),
      py::arg("rds") = py::none());

  m.def(
      "gf_dkr_coefficients",
      [](const Constraints& c, int order) {
        const auto s = expand(gf_dkr(c), order);
        std::vector<BigInt> out;
        for (int n = 0; n <= order; ++n) out.push_back(s.at(n));
        return out;
      },
      py::arg("c"), py::arg("order"));
  m.def(
      "gf_weight_coefficients",
      [](const Constraints& c, int order) {
        const auto s = expand(gf_A(c), order, order);
        std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(order) + 1);
        for (int n = 0; n <= order; ++n) {
          for (int nu = 0; nu <= order; ++nu) out[static_cast<std::size_t>(n)].push_back(s.at(n, nu));
        }
        return out;
      },
      py::arg("c"), py::arg("order"));
  m.def(
      "series_charge",
      [](int sigma, int n_max, const Constraints& c, Variant v) {
        const auto s = series_C_sigma(sigma, n_max, c, v);
        std::vector<BigInt> out;
        for (int n = 0; n <= n_max; ++n) out.push_back(s.at(n));
        return out;
      },
      py::arg("sigma"), py::arg("n_max"), py::arg("c"), py::arg("variant") = Variant::first_one);
  m.def(
      "eval_weight_poly",
      [](int n, double y, const Constraints& c) {
        const auto res = eval_A_n_residue(n, y, c);
        return py::make_tuple(res.value, res.fallback, res.note);
      },
      py::arg("n"), py::arg("y"), py::arg("c"));
}
