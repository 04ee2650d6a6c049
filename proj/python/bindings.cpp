#include "cantor/cli.hpp"
#include "cantor/error.hpp"
#include "cantor/measure.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cantor;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }

NaryExpansion parse(const std::string& t, const DigitSet& ds) { return parse_translation(t, ds.base()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Intersections of deleted-digits Cantor sets with their translates";

    static py::exception<Error> error(m, "CantorError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyObject* type = error.ptr();
            py::object inst = py::reinterpret_borrow<py::object>(type)(e.what());
            inst.attr("code") = std::string(to_string(e.code()));
            inst.attr("level") = e.level() ? py::cast(*e.level()) : py::none();
            PyErr_SetObject(type, inst.ptr());
        }
    });

    m.def(
        "classify",
        [](int n, std::vector<int> digits) {
            const DigitSet ds = make_digit_set(n, std::move(digits));
            const DeltaSet& d = ds.delta();
            py::dict out;
            out["delta"] = d.values;
            out["uniform"] = d.uniform;
            out["regular"] = d.regular;
            out["sparse"] = d.sparse;
            return out;
        },
        py::arg("n"), py::arg("digits"));

    m.def(
        "to_fraction",
        [](int n, const std::string& t) {
            const Rational v = rational_from_expansion(parse_translation(t, n));
            return py::make_tuple(to_py(num(v)), to_py(den(v)));
        },
        py::arg("n"), py::arg("t"), "Value of an expansion or fraction as (numerator, denominator).");

    m.def(
        "sigma",
        [](int n, std::vector<int> digits, const std::string& t, std::size_t K) {
            const DigitSet ds = make_digit_set(n, std::move(digits));
            const auto tr = sigma_sequence(parse(t, ds), K, ds);
            std::vector<std::string> out;
            for (CaseState s : tr.states) out.emplace_back(sigma_symbol(s));
            return out;
        },
        py::arg("n"), py::arg("digits"), py::arg("t"), py::arg("K"));

    m.def(
        "mu",
        [](int n, std::vector<int> digits, const std::string& t, std::size_t K) {
            const DigitSet ds = make_digit_set(n, std::move(digits));
            const auto prof = mu_profile(parse(t, ds), K, ds);
            py::list out;
            for (const auto& r : prof.records) out.append(to_py(r.mu));
            return out;
        },
        py::arg("n"), py::arg("digits"), py::arg("t"), py::arg("K"));

    m.def(
        "oracle_counts",
        [](int n, std::vector<int> digits, const std::string& t, std::size_t k, std::size_t cap) {
            const DigitSet ds = make_digit_set(n, std::move(digits));
            OracleOptions opts;
            opts.cap = cap;
            const auto c = oracle_counts(ds, parse(t, ds), k, opts);
            py::dict out;
            out["interval"] = c.interval;
            out["potential"] = c.potential;
            out["potentially_empty"] = c.potentially_empty;
            out["empty"] = c.empty;
            return out;
        },
        py::arg("n"), py::arg("digits"), py::arg("t"), py::arg("k"), py::arg("cap") = kDefaultCap);

    m.def(
        "bounds_json",
        [](int n, std::vector<int> digits, const std::string& t, std::size_t K, int precision) {
            const DigitSet ds = make_digit_set(n, std::move(digits));
            const NaryExpansion e = parse(t, ds);
            MeasureOptions opts;
            opts.K = K;
            return cli::report_json(measure_bounds(e, ds, opts), &e, precision);
        },
        py::arg("n"), py::arg("digits"), py::arg("t"), py::arg("K") = 64, py::arg("precision") = 30);

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
}
