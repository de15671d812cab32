#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>

#include <partrec/counting.hpp>
#include <partrec/oracle.hpp>
#include <partrec/sequences.hpp>
#include <partrec/series.hpp>
#include <partrec/verify.hpp>

namespace py = pybind11;
using namespace partrec;

namespace {

py::int_ to_py(const BigInt& x) {
  const std::string digits = x.get_str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& x) { return BigInt(py::str(x).cast<std::string>()); }

py::list to_py_list(std::span<const BigInt> xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

Family family_arg(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw py::value_error("unknown function '" + name + "'");
  return *f;
}

std::optional<Method> method_arg(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  auto m = parse_method(*name);
  if (!m) throw py::value_error("unknown method '" + *name + "'");
  return m;
}

PartitionTable table_for(const std::string& function, std::size_t max_n,
                         const std::optional<std::string>& method) {
  const Family f = family_arg(function);
  const auto m = method_arg(method);
  try {
    return m ? build_table(f, max_n, *m) : build_table(f, max_n);
  } catch (const std::invalid_argument& e) {
    throw py::value_error(e.what());
  }
}

oracle::ConstraintKind kind_arg(const std::string& name) {
  auto k = oracle::parse_kind(name);
  if (!k) throw py::value_error("unknown constraint kind '" + name + "'");
  return *k;
}

ExponentStream stream_for(const std::string& name, std::int64_t bound) {
  if (name == "pentagonal") return gen_pentagonal(bound);
  if (name == "triangular") return gen_triangular(bound);
  if (name == "triangular_even") return gen_triangular_parity(Parity::even, bound);
  if (name == "triangular_odd") return gen_triangular_parity(Parity::odd, bound);
  if (name == "squares_and_doubles") return gen_squares_and_doubles(bound);
  if (name == "phi") return gen_phi(bound);
  if (name == "phi_signed") return gen_phi_signed(bound);
  if (name == "ewell") return gen_ewell(bound);
  if (name == "heptagonal") return gen_heptagonal(bound);
  if (name == "octagonal") return gen_octagonal(bound);
  if (name == "quintuple") return rs_quintuple_stream(bound);
  if (name == "lemma2_odd") return gen_lemma2_exponents(Parity::odd, bound);
  if (name == "lemma2_even") return gen_lemma2_exponents(Parity::even, bound);
  throw py::value_error("unknown generator '" + name + "'");
}

py::list stream_terms(const ExponentStream& s) {
  py::list out;
  for (const Term& t : s) out.append(py::make_tuple(t.exponent, t.coefficient));
  return out;
}

}  // namespace

PYBIND11_MODULE(_partrec, m) {
  m.doc() = "Exact partition recurrences and series identities";

  py::register_exception<oracle::BoundExceeded>(m, "BoundExceeded", PyExc_ValueError);
  py::register_exception<NonInvertibleSeries>(m, "NonInvertibleSeries", PyExc_ZeroDivisionError);

  m.def("families", [] {
    std::vector<std::string> out;
    for (Family f : {Family::p, Family::q, Family::qq, Family::p2, Family::op, Family::opr, Family::v}) {
      out.emplace_back(to_string(f));
    }
    return out;
  });

  m.def(
      "compute",
      [](const std::string& function, std::int64_t n, const std::optional<std::string>& method) {
        if (n < 0) throw py::value_error("n must be nonnegative");
        return to_py(table_for(function, static_cast<std::size_t>(n), method).values.back());
      },
      py::arg("function"), py::arg("n"), py::arg("method") = py::none());

  m.def(
      "table",
      [](const std::string& function, std::size_t max_n, const std::optional<std::string>& method) {
        return to_py_list(table_for(function, max_n, method).values);
      },
      py::arg("function"), py::arg("max_n"), py::arg("method") = py::none());

  m.def(
      "parity",
      [](std::int64_t n, const std::string& method) {
        auto pm = parse_parity_method(method);
        if (!pm) throw py::value_error("unknown parity method '" + method + "'");
        if (n < 0) throw py::value_error("n must be nonnegative");
        return parity_p(n, *pm);
      },
      py::arg("n"), py::arg("method") = "direct");

  m.def(
      "verify",
      [](const std::string& check, std::optional<std::size_t> max_n) {
        const auto checks = verify::select_checks(check);
        if (checks.empty()) throw py::value_error("unknown check '" + check + "'");
        std::size_t bound = 0;
        for (const auto* c : checks) bound = std::max(bound, max_n.value_or(c->default_bound));
        const auto tables = verify::TableSet::build(bound);
        py::list out;
        for (const auto* c : checks) {
          const auto r = verify::run_check(*c, tables, max_n.value_or(c->default_bound));
          py::dict row;
          row["name"] = r.name;
          row["bound"] = r.bound;
          row["passed"] = r.passed();
          if (r.failure) {
            row["n"] = r.failure->n;
            row["lhs"] = to_py(r.failure->lhs);
            row["rhs"] = to_py(r.failure->rhs);
          }
          out.append(row);
        }
        return out;
      },
      py::arg("check") = "all", py::arg("max_n") = py::none());

  m.def(
      "count_partitions",
      [](int n, const std::string& kind) { return oracle::count_partitions(n, kind_arg(kind)); },
      py::arg("n"), py::arg("kind") = "unrestricted");

  m.def(
      "enumerate_partitions",
      [](int n, const std::string& kind) {
        std::vector<std::string> out;
        for (const auto& part : oracle::enumerate_partitions(n, kind_arg(kind))) {
          out.push_back(oracle::to_string(part));
        }
        return out;
      },
      py::arg("n"), py::arg("kind") = "unrestricted");

  m.def(
      "generator", [](const std::string& name, std::int64_t bound) { return stream_terms(stream_for(name, bound)); },
      py::arg("name"), py::arg("bound"));

  py::class_<Series>(m, "Series")
      .def(py::init([](const std::vector<py::int_>& coeffs) {
             std::vector<BigInt> xs;
             for (const auto& c : coeffs) xs.push_back(from_py(c));
             try {
               return Series(std::move(xs));
             } catch (const std::invalid_argument& e) {
               throw py::value_error(e.what());
             }
           }),
           py::arg("coefficients"))
      .def_property_readonly("order", &Series::order)
      .def_property_readonly("coefficients", [](const Series& s) { return to_py_list(s.coeffs()); })
      .def("__len__", &Series::order)
      .def("__getitem__",
           [](const Series& s, std::size_t i) {
             if (i >= s.order()) throw py::index_error();
             return to_py(s[i]);
           })
      .def("__add__", [](const Series& a, const Series& b) { return a + b; })
      .def("__sub__", [](const Series& a, const Series& b) { return a - b; })
      .def("__mul__", [](const Series& a, const Series& b) { return a * b; })
      .def("__mul__", [](const Series& a, const py::int_& c) { return scale(a, from_py(c)); })
      .def("__rmul__", [](const Series& a, const py::int_& c) { return scale(a, from_py(c)); })
      .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
      .def("invert", &series_invert)
      .def("substitute_neg", &substitute_neg)
      .def("substitute_power", [](const Series& a, std::size_t k) {
        if (k == 0) throw py::value_error("power must be positive");
        return substitute_power(a, k);
      })
      .def("even_part", &even_part)
      .def("odd_part", &odd_part)
      .def("__repr__", [](const Series& s) { return to_string(s); });

  m.def(
      "expand_product",
      [](const std::vector<std::tuple<std::int64_t, std::int64_t, int, int>>& factors, std::size_t order) {
        FactorSpec spec;
        for (const auto& [stride, offset, sign, exponent] : factors) spec.times(stride, offset, sign, exponent);
        try {
          return expand_product(spec, order);
        } catch (const std::invalid_argument& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("factors"), py::arg("order"));

  m.def(
      "theta_series",
      [](const std::string& name, std::size_t order) {
        return theta_series(stream_for(name, static_cast<std::int64_t>(order)), order);
      },
      py::arg("name"), py::arg("order"));
}
