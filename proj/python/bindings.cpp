#include "spiralcolor/bench.hpp"
#include "spiralcolor/error.hpp"
#include "spiralcolor/io.hpp"
#include "spiralcolor/layout.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spiralcolor;

namespace {

py::object to_python(const Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& o)
{
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ElementSet parse_set(const std::string& s)
{
    if (s == "vertex")
        return ElementSet::Vertices;
    if (s == "edge")
        return ElementSet::Edges;
    if (s == "total")
        return ElementSet::Total;
    if (s == "entire")
        return ElementSet::Entire;
    throw Error(ErrorKind::InvalidArgument, "unknown element set '" + s + "'");
}

SpiralDecomposition decompose_with(const PlanarEmbedding& g, std::optional<VertexId> start, bool ccw)
{
    return decompose(g, start, ccw ? Direction::Counterclockwise : Direction::Clockwise);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Spiral-chain colouring of planar embeddings";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object value = py::reinterpret_borrow<py::object>(error.ptr())(py::str(e.what()));
            value.attr("kind") = py::str(std::string(to_string(e.kind())));
            PyErr_SetObject(error.ptr(), value.ptr());
        }
    });

    py::class_<PlanarEmbedding>(m, "Embedding")
        .def(py::init([](const std::vector<std::vector<VertexId>>& rotation) {
                 return PlanarEmbedding::build(RotationSystem{rotation});
             }),
             py::arg("rotation"))
        .def_property_readonly("num_vertices", &PlanarEmbedding::num_vertices)
        .def_property_readonly("num_edges", &PlanarEmbedding::num_edges)
        .def_property_readonly("num_faces", &PlanarEmbedding::num_faces)
        .def_property_readonly("max_degree", &PlanarEmbedding::max_degree)
        .def_property_readonly("edges", &PlanarEmbedding::edges)
        .def_property_readonly("rotation", [](const PlanarEmbedding& g) { return g.rotation().neighbors; })
        .def("neighbors", &PlanarEmbedding::neighbors, py::arg("v"))
        .def("is_maximal", [](const PlanarEmbedding& g) { return is_maximal_planar(g); })
        .def("is_triangle_free", [](const PlanarEmbedding& g) { return is_triangle_free(g); })
        .def("to_rot", [](const PlanarEmbedding& g) { return to_rot(g); })
        .def("to_dimacs", [](const PlanarEmbedding& g) { return to_dimacs(g); })
        .def("__repr__", [](const PlanarEmbedding& g) {
            return "<Embedding n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("parse_rot", &parse_rot, py::arg("text"));
    m.def("named", &named_instance, py::arg("name"));
    m.def("named_instances", &named_instances);
    m.def(
        "maximal",
        [](int n, std::uint64_t seed) { return gen_maximal_planar({GenKind::Maximal, n, seed}); },
        py::arg("n"), py::arg("seed") = 1);
    m.def(
        "triangle_free",
        [](int n, std::uint64_t seed) { return gen_triangle_free({GenKind::TriangleFree, n, seed}); },
        py::arg("n"), py::arg("seed") = 1);
    m.def("outerplanar", &gen_maximal_outerplanar, py::arg("n"), py::arg("seed") = 1);

    m.def(
        "decompose",
        [](const PlanarEmbedding& g, std::optional<VertexId> start, bool ccw) {
            return to_python(decomposition_to_json(g, decompose_with(g, start, ccw)));
        },
        py::arg("embedding"), py::arg("start") = py::none(), py::arg("ccw") = false);

    m.def(
        "color",
        [](const PlanarEmbedding& g, const std::string& algorithm, std::optional<VertexId> start, bool ccw,
           int palette_cap) {
            RepairBudget budget;
            budget.palette_cap = palette_cap;
            auto r = run_algorithm(g, decompose_with(g, start, ccw), parse_algorithm(algorithm), budget);
            return to_python(result_to_json(r));
        },
        py::arg("embedding"), py::arg("algorithm") = "vertex", py::arg("start") = py::none(), py::arg("ccw") = false,
        py::arg("palette_cap") = 0);

    m.def(
        "verify",
        [](const PlanarEmbedding& g, const py::object& coloring, const std::string& set) {
            return to_python(violations_to_json(verify(g, coloring_from_json(from_python(coloring)), parse_set(set))));
        },
        py::arg("embedding"), py::arg("coloring"), py::arg("set") = "vertex");

    m.def(
        "exact",
        [](const PlanarEmbedding& g, const std::string& set, int cap) {
            return exact_colors(g, parse_set(set), cap);
        },
        py::arg("embedding"), py::arg("set") = "vertex", py::arg("cap") = 32);

    m.def(
        "layout",
        [](const PlanarEmbedding& g) {
            auto l = tutte_layout(g);
            std::vector<std::pair<double, double>> pos;
            for (const auto& p : l.position)
                pos.emplace_back(p.x, p.y);
            py::dict out;
            out["position"] = pos;
            out["outer"] = l.outer;
            out["three_connected"] = l.three_connected;
            out["warnings"] = l.warnings;
            return out;
        },
        py::arg("embedding"));

    m.def(
        "render_svg",
        [](const PlanarEmbedding& g, const py::object& coloring) {
            auto d = decompose(g);
            if (coloring.is_none())
                return render_svg(g, tutte_layout(g), nullptr, &d);
            auto c = coloring_from_json(from_python(coloring));
            return render_svg(g, tutte_layout(g), &c, &d);
        },
        py::arg("embedding"), py::arg("coloring") = py::none());
}
