#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torbord/bier.hpp"
#include "torbord/bordism.hpp"
#include "torbord/charnum.hpp"
#include "torbord/enumerate.hpp"
#include "torbord/io.hpp"
#include "torbord/oracle.hpp"
#include "torbord/vectors.hpp"

namespace py = pybind11;
using namespace torbord;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py_list(const std::vector<Int>& v) {
    py::list out;
    for (const Int& x : v) out.append(to_py(x));
    return out;
}

py::object to_fraction(const Rat& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(Int(boost::multiprecision::numerator(v))),
                    to_py(Int(boost::multiprecision::denominator(v))));
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::tuple partition_key(const Partition& p) {
    py::tuple t(p.length());
    for (int i = 0; i < p.length(); ++i) t[i] = p.parts()[i];
    return t;
}

std::vector<std::vector<int>> faces_as_lists(const std::vector<Mask>& masks) {
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (Mask s : masks) out.push_back(mask_to_vertices(s));
    return out;
}

} // namespace

PYBIND11_MODULE(_torbord, m) {
    m.doc() = "exact invariants of canonical toric manifolds of simplicial complexes";

    py::register_exception<error>(m, "TorbordError");

    py::class_<SimplicialComplex>(m, "Complex")
        .def(py::init([](int mm, const std::vector<std::vector<int>>& facets) {
                 return SimplicialComplex::parse(mm, facets);
             }),
             py::arg("m"), py::arg("facets"))
        .def_property_readonly("m", &SimplicialComplex::m)
        .def("facets", [](const SimplicialComplex& k) { return k.facet_vertices(); })
        .def("f_vector", [](const SimplicialComplex& k) { return to_py_list(k.f_vector()); })
        .def("euler_characteristic",
             [](const SimplicialComplex& k) { return to_py(k.euler_characteristic()); })
        .def("contains_face",
             [](const SimplicialComplex& k, const std::vector<int>& f) {
                 return k.contains_face(vertices_to_mask(f, k.m()));
             })
        .def("link",
             [](const SimplicialComplex& k, const std::vector<int>& f) {
                 return k.link(vertices_to_mask(f, k.m()));
             })
        .def("minimal_nonfaces",
             [](const SimplicialComplex& k) { return faces_as_lists(k.minimal_nonfaces()); })
        .def("dual", &SimplicialComplex::alexander_dual)
        .def("is_void", &SimplicialComplex::is_void)
        .def("to_text", &SimplicialComplex::to_text)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& k) { return "Complex('" + k.to_text() + "')"; });

    m.def("parse_text", &parse_complex_text, py::arg("text"));
    m.def("bier", [](const SimplicialComplex& k) { return bier_sphere(k).complex; });
    m.def("bier_f_vector", [](const SimplicialComplex& k) { return to_py_list(bier_f_vector(k)); });
    m.def("h_bier", [](const SimplicialComplex& k) { return to_py_list(h_vector_bier(k)); });
    m.def("fan_check", &facet_cones_unimodular);

    m.def("alpha", [](const SimplicialComplex& k) { return to_py_list(alpha_vector(k, false)); });
    m.def("mu", [](const SimplicialComplex& k) { return to_py_list(mu_vector(k, false)); });

    m.def("gamma", [](int mm, const std::vector<int>& I) {
        return to_py_list(gamma_vector(mm, to_partition(I)));
    });
    m.def("gamma_table", [](int mm) {
        py::dict out;
        for (const auto& I : partitions(mm - 1))
            out[partition_key(I)] = to_py_list(gamma_vector(mm, I));
        return out;
    });
    m.def("product_chern", [](int mm, int j, const std::vector<int>& I) {
        return to_py(product_chern(mm, j, to_partition(I)));
    });

    m.def("chern_number", [](const SimplicialComplex& k, const std::vector<int>& I) {
        return to_py(chern_number(k, to_partition(I)));
    });
    m.def("chern_numbers", [](const SimplicialComplex& k) {
        py::dict out;
        for (const auto& [I, v] : all_chern_numbers(k)) out[partition_key(I)] = to_py(v);
        return out;
    });
    m.def("milnor_number",
          [](const SimplicialComplex& k) { return to_py(milnor_number(k)); });
    m.def("pontryagin_number", [](const SimplicialComplex& k, const std::vector<int>& I) {
        return to_py(pontryagin_number(k, to_partition(I)));
    });
    m.def("sw_real", [](const SimplicialComplex& k, const std::vector<int>& I) {
        return sw_number_real(k, to_partition(I));
    });
    m.def("sw_complex", [](const SimplicialComplex& k, const std::vector<int>& I) {
        return sw_number_complex(k, to_partition(I));
    });
    m.def("chi_y", [](const SimplicialComplex& k) { return to_py_list(chi_y(k).coeffs); });
    m.def("signature", [](const SimplicialComplex& k) { return to_py(signature(k)); });
    m.def("todd_genus", [](const SimplicialComplex& k) { return to_py(todd_genus(k)); });
    m.def("todd_check", &todd_check);
    m.def("todd_coefficients", [](int n) {
        py::dict out;
        for (const auto& [I, t] : todd_coefficients(n)) out[partition_key(I)] = to_fraction(t);
        return out;
    });

    m.def("immersion_bounds", [](const SimplicialComplex& k) {
        const auto b = immersion_bounds(k);
        return py::make_tuple(b.k_max, b.n_real_min, b.n_complex_min);
    });

    m.def("bordant", &bordant_unitary);
    m.def("decompose", [](const SimplicialComplex& k) {
        const auto cls = decompose(k);
        py::dict reduced;
        for (const auto& [b, v] : cls.reduced) reduced[py::int_(b)] = to_py(v);
        return py::make_tuple(to_py_list(cls.raw), reduced);
    });
    m.def("is_generator", [](const SimplicialComplex& k) {
        const auto cert = is_polynomial_generator(k);
        py::dict out;
        out["generator"] = cert.generator;
        out["milnor"] = to_py(cert.milnor);
        out["bound"] = to_py(cert.bound);
        out["condition"] = cert.condition;
        return out;
    });
    m.def("null_bordant_real", &null_bordant_real);
    m.def("null_bordant_oriented", &null_bordant_oriented);
    m.def("orientable_real", &orientable_real);
    m.def("oriented_class", [](const SimplicialComplex& k) {
        return to_py(oriented_class_coefficient(k));
    });

    m.def("verify", [](const SimplicialComplex& k) { return verify(k).mismatches; });
    m.def("analyze_json",
          [](const SimplicialComplex& k) { return analyze_report(k).dump(); });

    m.def("matrix_A", [](int mm) {
        py::list rows;
        for (const auto& row : matrix_A(mm)) rows.append(to_py_list(row));
        return rows;
    });
    m.def("stirling2", [](int n, int kk) { return to_py(stirling2(n, kk)); });
    m.def("transition_M", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return to_py(transition_M(to_partition(lam), to_partition(mu)));
    });
    m.def("partitions", [](int n) {
        py::list out;
        for (const auto& p : partitions(n)) out.append(partition_key(p));
        return out;
    });
}
