#include "streamaccel/cli.hpp"
#include "streamaccel/estimators.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace streamaccel;

namespace {

// Accepts anything whose str() is an integer, "p/q" or a plain decimal:
// int, fractions.Fraction, str, and finite floats.
Scalar to_scalar(py::handle obj)
{
    const std::string text = py::str(obj);
    if (auto s = parse_scalar(text))
        return *s;
    throw py::value_error("cannot convert '" + text + "' to an exact rational");
}

py::object to_python(const Element& e)
{
    if (!e)
        return py::none();
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(e.value().to_string());
}

NumStream from_python(const py::iterable& values)
{
    std::vector<Element> out;
    for (auto v : values) {
        if (v.is_none())
            out.push_back(Element::undefined(UndefinedReason::OutOfRange));
        else
            out.emplace_back(to_scalar(v));
    }
    return NumStream::from_values(std::move(out));
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Convergence acceleration (E-algorithm, Levin, Aitken) over exact rationals";

    py::enum_<UndefinedReason>(m, "UndefinedReason")
        .value("DivByZero", UndefinedReason::DivByZero)
        .value("IndeterminateZeroOverZero", UndefinedReason::IndeterminateZeroOverZero)
        .value("OutOfRange", UndefinedReason::OutOfRange)
        .value("PropagatedFromInput", UndefinedReason::PropagatedFromInput);

    py::enum_<Kind>(m, "Kind").value("T", Kind::T).value("U", Kind::U).value("V", Kind::V);
    py::enum_<Method>(m, "Method").value("EAlg", Method::EAlg).value("Levin", Method::Levin);
    py::enum_<GConvention>(m, "GConvention")
        .value("TextFormula", GConvention::TextFormula)
        .value("CodeFormula", GConvention::CodeFormula);
    py::enum_<RatioAlignment>(m, "RatioAlignment")
        .value("DropLeadingZeros", RatioAlignment::DropLeadingZeros)
        .value("KeepPositions", RatioAlignment::KeepPositions);

    py::class_<Element>(m, "Element")
        .def_property_readonly("defined", &Element::defined)
        .def_property_readonly("value", &to_python, "fractions.Fraction, or None when undefined")
        .def_property_readonly("reason",
                               [](const Element& e) -> std::optional<UndefinedReason> {
                                   if (e)
                                       return std::nullopt;
                                   return e.why().reason;
                               })
        .def_property_readonly("origin",
                               [](const Element& e) -> std::optional<UndefinedReason> {
                                   if (e)
                                       return std::nullopt;
                                   return e.why().origin;
                               })
        .def("render", &render_decimal, py::arg("digits"))
        .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
        .def("__str__", [](const Element& e) { return to_string(e); })
        .def("__repr__", [](const Element& e) { return "Element(" + to_string(e) + ")"; });

    py::class_<NumStream>(m, "NumStream")
        .def("at", &NumStream::at, py::arg("i"))
        .def("__getitem__", &NumStream::at)
        .def_property_readonly("length", [](const NumStream& s) { return s.extent().length(); })
        .def_property_readonly("forced", &NumStream::forced)
        .def("prefix", &NumStream::prefix, py::arg("n"))
        .def("values",
             [](const NumStream& s, std::size_t n) {
                 py::list out;
                 for (const auto& e : s.prefix(n))
                     out.append(to_python(e));
                 return out;
             },
             py::arg("n"), "First n elements as Fractions (None where undefined)");

    py::class_<TransformSpec>(m, "TransformSpec")
        .def(py::init([](Method method, Kind kind, int order, GConvention g) {
                 TransformSpec s{method, kind, order, g};
                 s.validate();
                 return s;
             }),
             py::arg("method") = Method::Levin, py::arg("kind") = Kind::U, py::arg("order") = 2,
             py::arg("g_convention") = GConvention::TextFormula)
        .def_readwrite("method", &TransformSpec::method)
        .def_readwrite("kind", &TransformSpec::kind)
        .def_readwrite("order", &TransformSpec::order)
        .def_readwrite("g_convention", &TransformSpec::g_convention)
        .def("__repr__", [](const TransformSpec& s) { return "TransformSpec(" + to_string(s) + ")"; });

    py::class_<AccelerationReport>(m, "AccelerationReport")
        .def_readonly("spec", &AccelerationReport::spec)
        .def_readonly("terms_used", &AccelerationReport::terms_used)
        .def_readonly("estimate", &AccelerationReport::estimate)
        .def_readonly("rendered", &AccelerationReport::rendered)
        .def_readonly("digits_stable", &AccelerationReport::digits_stable)
        .def_property_readonly("defined", &AccelerationReport::defined);

    m.def("stream", &from_python, py::arg("values"), "Finite stream from ints, Fractions, decimal strings or None");
    m.def("iota", [](py::handle a, py::handle b) { return iota(to_scalar(a), to_scalar(b)); },
          py::arg("start"), py::arg("step"));
    m.def("repeat_const", [](py::handle c) { return repeat_const(to_scalar(c)); }, py::arg("c"));
    m.def("take", &take, py::arg("s"), py::arg("n"));
    m.def("stream_tail", &stream_tail);
    m.def("forward_difference", &forward_difference);
    m.def("partial_sums", &partial_sums);
    m.def("last_defined", &last_defined);

    m.def("delta", &delta, py::arg("kind"), py::arg("s"));
    m.def("g_alg", &g_alg, py::arg("kind"), py::arg("k"), py::arg("j"), py::arg("s"),
          py::arg("g_convention") = GConvention::TextFormula);
    m.def("e_alg", &e_alg, py::arg("kind"), py::arg("k"), py::arg("s"),
          py::arg("g_convention") = GConvention::TextFormula);
    m.def("aitken", &aitken);
    m.def("levin", &levin, py::arg("kind"), py::arg("k"), py::arg("s"));
    m.def("apply", &apply, py::arg("spec"), py::arg("s"));
    m.def("ratio_stream", &ratio_stream, py::arg("s"), py::arg("align") = RatioAlignment::DropLeadingZeros);

    m.def("builtin", &builtin, py::arg("name"));
    m.def("builtin_names", [] {
        std::vector<std::string> out;
        for (auto n : builtin_names())
            out.emplace_back(n);
        return out;
    });
    m.def("load_sequence", &load_sequence, py::arg("path"));
    m.def("render_decimal", &render_decimal, py::arg("x"), py::arg("digits"));

    auto options = [](int digits, std::optional<std::size_t> index, RatioAlignment align) {
        EstimateOptions o;
        o.digits = digits;
        o.mode.index = index;
        o.alignment = align;
        return o;
    };
    m.def("exp_coeff_ac",
          [options](const TransformSpec& spec, const NumStream& s, std::size_t n, int digits,
                    std::optional<std::size_t> at_index, RatioAlignment align) {
              return exp_coeff_ac(spec, s, n, options(digits, at_index, align));
          },
          py::arg("spec"), py::arg("sequence"), py::arg("n"), py::arg("digits") = 10,
          py::arg("at_index") = py::none(), py::arg("align") = RatioAlignment::DropLeadingZeros);
    m.def("sum_series_ac",
          [options](const TransformSpec& spec, const NumStream& terms, std::size_t n, int digits,
                    std::optional<std::size_t> at_index) {
              return sum_series_ac(spec, terms, n, options(digits, at_index, RatioAlignment::DropLeadingZeros));
          },
          py::arg("spec"), py::arg("terms"), py::arg("n"), py::arg("digits") = 10,
          py::arg("at_index") = py::none());

    m.def("run_cli",
          [](std::vector<std::string> args) {
              args.insert(args.begin(), "streamaccel");
              std::ostringstream out, err;
              int code = cli::main_entry(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr)");

    py::register_exception<InsufficientTerms>(m, "InsufficientTerms", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
