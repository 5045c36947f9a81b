#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pseries/cli.hpp"
#include "pseries/theorems.hpp"

namespace py = pybind11;
using namespace pseries;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ big(const BigInt& b) { return py::reinterpret_steal<py::int_>(PyLong_FromString(b.get_str().c_str(), nullptr, 10)); }

py::dict ring_info(const std::string& spec) {
    const RingSpec r = parse_ring_spec(spec);
    py::dict d;
    d["ring"] = r.canonical();
    d["order"] = r.order();
    d["units"] = r.unit_count();
    d["exponent"] = r.unit_exponent();
    py::list factors;
    for (const auto& l : r.locals()) {
        py::dict f;
        f["factor"] = l.to_string();
        f["order"] = l.order();
        f["units"] = l.unit_count();
        f["is_field"] = l.is_field();
        f["residue_order"] = l.residue_field().order();
        factors.append(f);
    }
    d["factors"] = factors;
    return d;
}

py::object verify(const std::string& spec, unsigned n, std::uint64_t seed, std::vector<std::string> only,
                  std::vector<std::string> skip, bool timing) {
    VerifyOptions o;
    o.seed = seed;
    o.only = {only.begin(), only.end()};
    o.skip = {skip.begin(), skip.end()};
    const RingSpec r = parse_ring_spec(spec);
    VerifyReport rep;
    {
        py::gil_scoped_release release;
        rep = run_verification(r, n, o);
    }
    return to_py(rep.to_json(timing));
}

py::dict intertwining(const std::string& spec, unsigned n, std::uint64_t seed) {
    const RingSpec r = parse_ring_spec(spec);
    require_pipeline_size(r, n, kDefaultMaxOrder);
    const GroupTable t = GroupTable::build(r, n);
    PrincipalSeries ps(t, seed);
    const IntertwiningTable tab = intertwining_table(ps);
    py::dict d;
    std::vector<std::string> names;
    for (const auto& c : tab.chars) names.push_back(c.to_string());
    d["chars"] = names;
    d["formula"] = tab.formula;
    d["oracle"] = tab.oracle;
    d["characters"] = tab.characters;
    return d;
}

py::dict count(const std::string& spec, unsigned n, bool formula_only) {
    const RingSpec r = parse_ring_spec(spec);
    py::dict d;
    d["formula"] = big(principal_series_formula(r, n));
    d["pipeline"] = py::none();
    if (!formula_only) {
        require_pipeline_size(r, n, kDefaultMaxOrder);
        const GroupTable t = GroupTable::build(r, n);
        PrincipalSeries ps(t);
        const auto c = count_principal_series(ps);
        d["pipeline"] = big(c.pipeline);
        d["stabilizer_classes"] = big(c.stabilizer_classes);
    }
    return d;
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int rc = run_cli(args, out, err);
    return py::make_tuple(rc, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(pseries, m) {
    m.doc() = "Principal series of GL_n over finite commutative rings";

    static py::exception<SizeGuardExceeded> size_guard(m, "SizeGuardExceeded");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SizeGuardExceeded& e) {
            py::set_error(size_guard, e.what());
        } catch (const ParseError& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.def("ring_info", &ring_info, py::arg("ring"));
    m.def("verify", &verify, py::arg("ring"), py::arg("n"), py::arg("seed") = 1, py::arg("only") = std::vector<std::string>{},
          py::arg("skip") = std::vector<std::string>{}, py::arg("timing") = false,
          "Runs the verification suite and returns the JSON report as a dict.");
    m.def("intertwining", &intertwining, py::arg("ring"), py::arg("n"), py::arg("seed") = 1);
    m.def("count", &count, py::arg("ring"), py::arg("n"), py::arg("formula_only") = false);
    m.def("multipartition_count", [](unsigned k, unsigned n) { return big(multipartition_count(k, n)); }, py::arg("k"),
          py::arg("n"));
    m.def("check_ids", &check_ids);
    m.def("cli", &cli, py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
