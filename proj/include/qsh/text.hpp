#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qsh/ncpoly.hpp"
#include "qsh/symqsym.hpp"
#include "qsh/words.hpp"

namespace qsh {

// Words: space-separated letter indices, "1 2 2"; the empty word is "e".
std::string format_word(const Word& w);
Word parse_word(std::string_view text);

// Compositions: "(1,2,2)", empty "()". The parser also accepts the word form.
std::string format_composition(const Composition& c);
Composition parse_composition(std::string_view text);

// Polynomials: terms in canonical order, "1 + 2·[1 1] + 1/2·[2]"; zero is "0".
// The parser also accepts '*' in place of '·'.
std::string format_polynomial(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

// JSON: [{"word": [1, 1], "coeff": "2/1"}, ...]
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

std::string format_tensor(const TensorPolynomial& t);

// Sym / QSym elements: "S:(1,1) - S:(2)", "2·M:(1,1) + M:(2)". Terms without a
// basis prefix ("(2)") take `default_basis`.
std::string format_element(const SymElement& x);
std::string format_element(const QSymElement& x);
std::string format_tensor(const SymTensor& t);
std::string format_tensor(const QSymTensor& t);
SymElement parse_sym_element(std::string_view text, SymBasis default_basis = SymBasis::S);
QSymElement parse_qsym_element(std::string_view text, QSymBasis default_basis = QSymBasis::M);

nlohmann::json to_json(const SymElement& x);
nlohmann::json to_json(const QSymElement& x);

} // namespace qsh
