#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsh/bases.hpp"
#include "qsh/factorization.hpp"
#include "qsh/lyndon.hpp"
#include "qsh/symqsym.hpp"
#include "qsh/text.hpp"
#include "qsh/verify.hpp"

namespace py = pybind11;
using namespace qsh;

namespace {

// Polynomials cross the boundary as [(letters, "p/q"), ...] in canonical order.
using Terms = std::vector<std::pair<std::vector<int>, std::string>>;

Terms to_terms(const Polynomial& p)
{
    Terms out;
    for (const auto& [w, c] : p)
        out.emplace_back(w.letters(), to_fraction_string(c));
    return out;
}

Polynomial from_terms(const Terms& t)
{
    Polynomial p;
    for (const auto& [w, c] : t)
        p.add(Word(w), parse_rational(c));
    return p;
}

ProductKind product_kind(const std::string& k)
{
    if (k == "concat")
        return ProductKind::concat;
    if (k == "shuffle")
        return ProductKind::shuffle;
    if (k == "stuffle")
        return ProductKind::stuffle;
    throw std::invalid_argument("unknown product '" + k + "'");
}

std::vector<std::vector<int>> letters_of(const std::vector<Word>& ws)
{
    std::vector<std::vector<int>> out;
    for (const auto& w : ws)
        out.push_back(w.letters());
    return out;
}

std::string convert_text(const std::string& element, const std::string& from, const std::string& to)
{
    bool qsym = false;
    try {
        parse_qsym_basis(from);
        qsym = true;
    } catch (const std::invalid_argument&) {
    }
    if (qsym)
        return format_element(convert(parse_qsym_element(element, parse_qsym_basis(from)), parse_qsym_basis(to)));
    return format_element(convert(parse_sym_element(element, parse_sym_basis(from)), parse_sym_basis(to)));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact shuffle and quasi-shuffle algebra kernel";

    m.def("lyndon_words", [](int n) { return letters_of(lyndon_up_to(n)); }, py::arg("max_weight"));
    m.def("is_lyndon", [](const std::vector<int>& w) { return is_lyndon(Word(w)); });
    m.def("lyndon_factorization", [](const std::vector<int>& w) {
        std::vector<std::pair<std::vector<int>, int>> out;
        for (const auto& f : lyndon_factorization(Word(w)))
            out.emplace_back(f.word.letters(), f.multiplicity);
        return out;
    });

    m.def("product", [](const Terms& a, const Terms& b, const std::string& kind) {
        return to_terms(product(from_terms(a), from_terms(b), product_kind(kind)));
    });
    m.def("pairing", [](const Terms& a, const Terms& b) { return to_fraction_string(pairing(from_terms(a), from_terms(b))); });
    m.def("pi1", [](const Terms& a) { return to_terms(pi1(from_terms(a))); });
    m.def("basis_element", [](const std::string& family, const std::vector<int>& w) {
        return to_terms(basis_element(parse_family(family), Word(w)));
    });
    m.def("format_polynomial", [](const Terms& a) { return format_polynomial(from_terms(a)); });
    m.def("parse_polynomial", [](const std::string& s) { return to_terms(parse_polynomial(s)); });

    m.def("convert", &convert_text, py::arg("element"), py::arg("source"), py::arg("target"));
    m.def("pair_sym_qsym", [](const std::string& x, const std::string& y) {
        return to_fraction_string(pairing_ext(parse_sym_element(x), parse_qsym_element(y)));
    });

    m.def("verify_factorization", [](int n, const std::string& pair, bool negative_control) {
        const auto r = verify_factorization(n, parse_dual_pair(pair), negative_control);
        return std::make_pair(r.ok, describe(r));
    }, py::arg("max_weight"), py::arg("pair"), py::arg("negative_control") = false);
    m.def("hall_littlewood_check", &hall_littlewood_check, py::arg("max_weight"), py::arg("q_degree"));
    m.def("verify", [](int n, int q_degree, std::uint64_t seed) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        {
            py::gil_scoped_release release;
            for (const auto& r : run_verify({n, q_degree, seed}))
                out.emplace_back(r.name, r.passed, r.detail);
        }
        return out;
    }, py::arg("max_weight") = 5, py::arg("q_degree") = 8, py::arg("seed") = 0);

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
}
