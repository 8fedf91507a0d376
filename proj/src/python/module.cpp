#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tracecode/driver.hpp"
#include "tracecode/dual.hpp"
#include "tracecode/error.hpp"
#include "tracecode/weil.hpp"
#include "tracecode/wmap.hpp"

namespace py = pybind11;
using namespace tracecode;

namespace {

std::vector<std::int64_t> coeffs(const CycInt& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

XDescriptor parse_class(const std::optional<std::string>& name) {
    if (!name || *name == "ZERO_ELEMENT")
        return std::nullopt;
    const auto c = jclass_from_string(*name);
    if (!c)
        throw Error(Errc::invalid_parameter, "unknown class " + *name);
    return c;
}

Mode parse_mode(const std::string& s) {
    if (s == "closed")
        return Mode::closed;
    if (s == "brute")
        return Mode::brute;
    if (s == "both")
        return Mode::both;
    throw Error(Errc::invalid_parameter, "mode must be closed, brute or both");
}

Felem to_felem(const FieldCtx& ctx, const std::vector<std::int64_t>& c) {
    if (c.size() > static_cast<std::size_t>(ctx.degree()))
        throw Error(Errc::invalid_parameter, "too many coefficients");
    Felem x = ctx.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
        x.coeffs[i] = static_cast<std::uint32_t>(((c[i] % ctx.p()) + ctx.p()) % ctx.p());
    return x;
}

BetaSpec beta_spec(std::optional<std::int64_t> index) {
    BetaSpec b;
    if (index) {
        b.kind = BetaSpec::Kind::index;
        b.index = *index;
    }
    return b;
}

py::dict prediction_dict(const Prediction& pr) {
    py::dict d;
    d["branch_id"] = pr.branch_id;
    d["n"] = pr.n;
    d["k"] = pr.k;
    d["empty"] = pr.empty;
    d["weights"] = pr.weights;
    if (pr.enumerators)
        d["enumerators"] = *pr.enumerators;
    else
        d["enumerators"] = py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_tracecode, m) {
    m.doc() = "Trace codes from two-term defining sets over GF(p^phi(2 ell^m))";

    py::register_exception<Error>(m, "TracecodeError");

    py::class_<FieldParams>(m, "FieldParams")
        .def_readonly("p", &FieldParams::p)
        .def_readonly("ell", &FieldParams::ell)
        .def_readonly("m", &FieldParams::m)
        .def_readonly("N", &FieldParams::N)
        .def_readonly("e", &FieldParams::e)
        .def_readonly("q", &FieldParams::q)
        .def_readonly("sqrt_q", &FieldParams::sqrt_q)
        .def("__repr__", [](const FieldParams& f) {
            return "FieldParams(p=" + std::to_string(f.p) + ", ell=" + std::to_string(f.ell) +
                   ", m=" + std::to_string(f.m) + ", q=" + std::to_string(f.q) + ")";
        });

    m.def("validate_params", &validate_params, py::arg("p"), py::arg("ell"), py::arg("m"),
          py::arg("q_limit") = kEnumerationQLimit);

    m.def("classify_j", [](std::int64_t ell, std::int64_t mm, std::int64_t j) {
        return std::string(to_string(classify_j(ell, mm, j)));
    });
    m.def("trace_of_xi_power", &trace_of_xi_power);

    m.def("s_single_closed", [](const FieldParams& f, std::int64_t a) { return coeffs(s_single_closed(f, a)); });
    m.def(
        "s_binomial_closed",
        [](const FieldParams& f, std::int64_t a, std::optional<std::int64_t> j_b) {
            return coeffs(s_binomial_closed(f, a, j_b));
        },
        py::arg("params"), py::arg("a"), py::arg("j_b") = py::none());
    m.def(
        "w_closed",
        [](const FieldParams& f, std::int64_t alpha, std::optional<std::string> cls, bool printed) {
            return w_closed(f, alpha, parse_class(cls), printed ? Reading::printed : Reading::corrected);
        },
        py::arg("params"), py::arg("alpha"), py::arg("x_class") = py::none(), py::arg("printed") = false);
    m.def(
        "predict",
        [](const FieldParams& f, std::int64_t alpha, std::optional<std::string> cls) {
            return prediction_dict(predict(f, alpha, parse_class(cls)));
        },
        py::arg("params"), py::arg("alpha"), py::arg("beta_class") = py::none());
    m.def("y_count_closed", [](const FieldParams& f, std::int64_t alpha, std::string cls) {
        return y_count_closed(f, alpha, parse_class(cls));
    });
    m.def("sphere_packing_optimal", &sphere_packing_optimal, py::arg("n"), py::arg("k_dual"), py::arg("p"));
    m.def("secret_sharing_check", [](const std::map<std::int64_t, std::int64_t>& dist, std::int64_t p) {
        const auto s = secret_sharing_check(dist, p);
        return py::make_tuple(s.wt_min, s.wt_max, s.ok);
    });

    py::class_<FieldCtx>(m, "Field")
        .def(py::init([](std::int64_t p, std::int64_t ell, std::int64_t mm) {
                 return FieldCtx::build(validate_params(p, ell, mm));
             }),
             py::arg("p"), py::arg("ell"), py::arg("m") = 1)
        .def_property_readonly("params", &FieldCtx::params)
        .def_property_readonly("g", [](const FieldCtx& c) { return c.g().coeffs; })
        .def_property_readonly("xi", [](const FieldCtx& c) { return c.xi().coeffs; })
        .def("trace", [](const FieldCtx& c, const std::vector<std::int64_t>& x) { return c.trace(to_felem(c, x)); })
        .def("dlog", [](const FieldCtx& c, const std::vector<std::int64_t>& x) { return c.dlog(to_felem(c, x)); })
        .def("j_index",
             [](const FieldCtx& c, const std::vector<std::int64_t>& x) { return c.j_index(to_felem(c, x)); })
        .def("g_power", [](const FieldCtx& c, std::int64_t t) { return c.g_power(t).coeffs; })
        .def("s_single_brute",
             [](const FieldCtx& c, const std::vector<std::int64_t>& a) {
                 return coeffs(s_single_brute(c, to_felem(c, a)));
             })
        .def("s_binomial_brute",
             [](const FieldCtx& c, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
                 py::gil_scoped_release release;
                 return coeffs(s_binomial_brute(c, to_felem(c, a), to_felem(c, b)));
             })
        .def("w_brute",
             [](const FieldCtx& c, std::int64_t alpha, const std::vector<std::int64_t>& x) {
                 py::gil_scoped_release release;
                 return w_brute(c, alpha, to_felem(c, x));
             })
        .def("y_count_brute",
             [](const FieldCtx& c, std::int64_t alpha, const std::vector<std::int64_t>& b) {
                 return y_count_brute(c, alpha, to_felem(c, b));
             })
        .def(
            "weight_distribution",
            [](const FieldCtx& c, std::int64_t alpha, std::optional<std::int64_t> beta_index, unsigned threads) {
                const Felem b = beta_index ? c.g_power(*beta_index) : c.zero();
                py::gil_scoped_release release;
                return weight_distribution_brute(c, alpha, b, threads).entries;
            },
            py::arg("alpha"), py::arg("beta_index") = py::none(), py::arg("threads") = 1);

    m.def(
        "code_report_json",
        [](std::int64_t p, std::int64_t ell, std::int64_t mm, std::int64_t alpha, std::optional<std::int64_t> beta_index,
           const std::string& mode, unsigned threads) {
            const Mode md = parse_mode(mode);
            const auto f = validate_params(p, ell, mm, md == Mode::closed ? kClosedFormQLimit : kEnumerationQLimit);
            std::optional<FieldCtx> ctx;
            py::gil_scoped_release release;
            if (md != Mode::closed)
                ctx.emplace(FieldCtx::build(f));
            return render_json(build_code_report(f, ctx ? &*ctx : nullptr, alpha, beta_spec(beta_index), md, threads));
        },
        py::arg("p"), py::arg("ell"), py::arg("m"), py::arg("alpha"), py::arg("beta_index") = py::none(),
        py::arg("mode") = "both", py::arg("threads") = 1);
}
