#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcscount/cli.hpp"
#include "lcscount/core.hpp"
#include "lcscount/oracle.hpp"

namespace py = pybind11;

namespace {

using lcscount::Algorithm;
using lcscount::CountKind;
using lcscount::Sequence;

py::int_ to_python(const lcscount::Count& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::tuple to_python(const lcscount::CountResult& r) {
  return py::make_tuple(r.length, to_python(r.count));
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "linear") return Algorithm::Linear;
  if (name == "full") return Algorithm::Full;
  throw py::value_error("algorithm must be 'linear' or 'full', got '" + name + "'");
}

py::tuple count(const Sequence& a, const Sequence& b, CountKind kind, const std::string& algorithm) {
  const Algorithm which = parse_algorithm(algorithm);
  lcscount::CountResult r;
  {
    py::gil_scoped_release release;
    r = which == Algorithm::Full ? lcscount::count_full(a, b, kind)
                                 : lcscount::count_linear_space(a, b, kind);
  }
  return to_python(r);
}

}  // namespace

PYBIND11_MODULE(_lcscount, m) {
  m.doc() = "LCS length and exact LCS counts (distinct strings and embeddings)";

  m.def(
      "lcs_length", [](const Sequence& a, const Sequence& b) { return lcscount::lcs_length(a, b); },
      py::arg("a"), py::arg("b"));

  m.def(
      "count_distinct",
      [](const Sequence& a, const Sequence& b, const std::string& algorithm) {
        return count(a, b, CountKind::Distinct, algorithm);
      },
      py::arg("a"), py::arg("b"), py::arg("algorithm") = "linear");

  m.def(
      "count_embeddings",
      [](const Sequence& a, const Sequence& b, const std::string& algorithm) {
        return count(a, b, CountKind::Embeddings, algorithm);
      },
      py::arg("a"), py::arg("b"), py::arg("algorithm") = "linear");

  m.def(
      "summarize",
      [](const Sequence& a, const Sequence& b, bool distinct, bool embeddings,
         const std::string& algorithm) {
        const auto s = lcscount::summarize(a, b, {distinct, embeddings, parse_algorithm(algorithm)});
        py::dict out;
        out["lcs_length"] = s.lcs_length;
        out["distinct_count"] = s.distinct_count ? py::object(to_python(*s.distinct_count)) : py::none();
        out["embedding_count"] =
            s.embedding_count ? py::object(to_python(*s.embedding_count)) : py::none();
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("distinct") = true, py::arg("embeddings") = true,
      py::arg("algorithm") = "linear");

  // InputTooLarge derives from std::length_error, which surfaces as ValueError.
  m.def(
      "oracle_distinct",
      [](const Sequence& a, const Sequence& b) { return to_python(lcscount::oracle::oracle_distinct(a, b)); },
      py::arg("a"), py::arg("b"));
  m.def(
      "oracle_embeddings",
      [](const Sequence& a, const Sequence& b) {
        return to_python(lcscount::oracle::oracle_embeddings(a, b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::ostringstream out;
        std::ostringstream err;
        std::istringstream in(stdin_text);
        const int code = lcscount::cli::run(args, out, err, in);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
