#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliffga/group_algebra.hpp"
#include "cliffga/multivector.hpp"
#include "cliffga/spinor.hpp"
#include "cliffga/vee_group.hpp"

namespace py = pybind11;
using namespace cliffga;

namespace {

Signature make_sig(int p, int q, int r) { return Signature(p, q, r); }

std::string mul_str(int p, int q, int r, const std::string& lhs, const std::string& rhs) {
    Signature sig(p, q, r);
    return format_mv(mv_mul(parse_mv(sig, lhs), parse_mv(sig, rhs)));
}

std::string unary_str(int p, int q, int r, const std::string& text,
                      Multivector (*op)(const Multivector&)) {
    Signature sig(p, q, r);
    return format_mv(op(parse_mv(sig, text)));
}

std::string classify_str(int p, int q) {
    Signature sig(p, q);
    VeeClass cls = classify(sig);
    Table1Row row = table1_row(cls);
    Json j;
    j["signature"] = {{"p", p}, {"q", q}};
    j["class"] = cls.name;
    j["k"] = cls.k;
    j["center"] = row.center;
    j["group_order"] = row.group_order;
    j["algebra_dim"] = row.algebra_dim;
    return j.dump();
}

std::string table2_str(long long max_order) {
    Json j = Json::array();
    for (const auto& e : table2(max_order)) {
        Json item;
        item["signature"] = {{"p", e.sig.p}, {"q", e.sig.q}};
        item["class"] = e.cls.name;
        item["k"] = e.cls.k;
        item["center"] = center_type_name(e.center);
        item["group_order"] = e.group_order;
        item["algebra_dim"] = e.algebra_dim;
        j.push_back(std::move(item));
    }
    return j.dump();
}

std::string idempotents_str(int p, int q) {
    Signature sig(p, q);
    SpinorStructure s = spinor_structure(sig);
    Json j;
    j["signature"] = {{"p", p}, {"q", q}};
    j["k"] = s.spec.monomials.size();
    j["f"] = format_mv(s.f);
    Json set = Json::array();
    for (const auto& e : s.idempotents) set.push_back(format_mv(e));
    j["complete_set"] = std::move(set);
    j["orbit_size"] = s.orbit.orbit.size();
    j["stabilizer_order"] = s.orbit.stabilizer.size();
    j["T_order"] = s.t_group.size();
    j["K_order"] = s.k_group.size();
    j["dim_K"] = s.field.basis.size();
    return j.dump();
}

std::string verify_str(const std::string& which, int p, int q) {
    Signature sig(p, q);
    Report rep;
    if (which == "chernov")
        rep = verify_chernov(sig);
    else if (which == "main-theorem")
        rep = verify_main_theorem(sig);
    else if (which == "structure")
        rep = verify_structure(sig);
    else if (which == "passman")
        rep = verify_passman(sig);
    else
        throw std::invalid_argument("unknown verifier: " + which);
    return rep.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Clifford algebra and vee group kernel";

    py::class_<Signature>(m, "Signature")
        .def(py::init(&make_sig), py::arg("p"), py::arg("q"), py::arg("r") = 0)
        .def_readonly("p", &Signature::p)
        .def_readonly("q", &Signature::q)
        .def_readonly("r", &Signature::r)
        .def_property_readonly("n", &Signature::n)
        .def("__repr__", [](const Signature& s) { return "Signature" + s.str(); });

    m.def("mul", &mul_str, py::arg("p"), py::arg("q"), py::arg("r"), py::arg("lhs"),
          py::arg("rhs"), "Product of two multivectors in text form");
    m.def("normalize", [](int p, int q, int r, const std::string& text) {
        Signature sig(p, q, r);
        return format_mv(parse_mv(sig, text));
    });
    m.def("grade_involution",
          [](int p, int q, int r, const std::string& t) { return unary_str(p, q, r, t, &grade_involution); });
    m.def("reversion",
          [](int p, int q, int r, const std::string& t) { return unary_str(p, q, r, t, &reversion); });
    m.def("conjugation",
          [](int p, int q, int r, const std::string& t) { return unary_str(p, q, r, t, &conjugation); });
    m.def("transposition",
          [](int p, int q, int r, const std::string& t) { return unary_str(p, q, r, t, &transposition); });

    m.def("cmul", [](int p, int q, int r, std::uint64_t a, std::uint64_t b) {
        Signature sig(p, q, r);
        CmulResult res = cmul_blades(BladeIndex(a, sig.n()), BladeIndex(b, sig.n()), sig);
        return py::make_tuple(res.coeff, res.blade.bits);
    }, "Signed blade product: (coeff, blade mask)");

    m.def("radon_hurwitz", &radon_hurwitz);
    m.def("k_value", [](int p, int q) { return k_value(Signature(p, q)); });

    m.def("classify_json", &classify_str);
    m.def("table2_json", &table2_str, py::arg("max_order") = 256);
    m.def("idempotents_json", &idempotents_str);
    m.def("verify_json", &verify_str);
}
