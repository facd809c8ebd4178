#include "qsh/text.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qsh {

namespace {

const std::string kDot = "\xC2\xB7"; // U+00B7 middle dot

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

int parse_index(const std::string& tok)
{
    if (tok.empty() || tok.size() > 9)
        throw std::invalid_argument("bad index '" + tok + "'");
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad index '" + tok + "'");
    int v = std::stoi(tok);
    if (v < 1)
        throw std::invalid_argument("indices must be positive: '" + tok + "'");
    return v;
}

std::vector<int> parse_indices(std::string_view text, char sep)
{
    std::vector<int> out;
    std::string body = trim(text);
    if (body.empty() || body == "e")
        return out;
    std::string tok;
    auto flush = [&] {
        std::string t = trim(tok);
        if (t.empty())
            throw std::invalid_argument("empty index in '" + body + "'");
        out.push_back(parse_index(t));
        tok.clear();
    };
    for (char ch : body) {
        if (ch == sep || (sep == ' ' && std::isspace(static_cast<unsigned char>(ch)))) {
            if (sep == ' ' && trim(tok).empty())
                continue;
            flush();
        } else {
            tok += ch;
        }
    }
    flush();
    return out;
}

std::string replace_dots(std::string_view text)
{
    std::string s(text);
    std::size_t pos = 0;
    while ((pos = s.find(kDot, pos)) != std::string::npos)
        s.replace(pos, kDot.size(), "*");
    return s;
}

struct RawTerm {
    Rational coeff;
    std::string key; // empty when the term is a bare scalar
};

// Splits "a + b - c" into signed terms at bracket depth 0. Each term is
// "coeff", "key" or "coeff*key"; the key is everything from the first
// character that cannot belong to a rational.
std::vector<RawTerm> split_terms(std::string_view text)
{
    std::string s = replace_dots(text);
    std::vector<std::pair<int, std::string>> pieces;
    int depth = 0;
    int sign = 1;
    std::string cur;
    bool seen_body = false;
    for (char ch : s) {
        if (ch == '[' || ch == '(')
            ++depth;
        else if (ch == ']' || ch == ')')
            --depth;
        if (depth < 0)
            throw std::invalid_argument("unbalanced brackets in '" + s + "'");
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (seen_body) {
                pieces.emplace_back(sign, cur);
                cur.clear();
                seen_body = false;
                sign = 1;
            }
            if (ch == '-')
                sign = -sign;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch)))
            seen_body = true;
        cur += ch;
    }
    if (depth != 0)
        throw std::invalid_argument("unbalanced brackets in '" + s + "'");
    if (seen_body)
        pieces.emplace_back(sign, cur);
    else if (!trim(cur).empty() || sign != 1 || !pieces.empty())
        throw std::invalid_argument("dangling operator in '" + s + "'");

    std::vector<RawTerm> out;
    for (const auto& [sg, raw] : pieces) {
        std::string t = trim(raw);
        std::size_t i = 0;
        while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/'))
            ++i;
        RawTerm term;
        std::string num = t.substr(0, i);
        std::string rest = trim(std::string_view(t).substr(i));
        if (!num.empty() && !rest.empty()) {
            if (rest.front() != '*')
                throw std::invalid_argument("expected '*' after coefficient in '" + t + "'");
            rest = trim(std::string_view(rest).substr(1));
            if (rest.empty())
                throw std::invalid_argument("missing factor after '*' in '" + t + "'");
        }
        term.coeff = num.empty() ? Rational(1) : parse_rational(num);
        if (sg < 0)
            term.coeff = -term.coeff;
        term.key = rest;
        out.push_back(std::move(term));
    }
    return out;
}

// Appends " + " / " - " / leading "-" followed by |c| and the key.
void append_term(std::string& out, const Rational& c, const std::string& key)
{
    bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (key.empty())
        out += to_string(a);
    else if (a == 1)
        out += key;
    else
        out += to_string(a) + kDot + key;
}

template <class Basis>
std::string format_based(const BasedElement<Basis>& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    const std::string prefix = std::string(basis_name(x.basis())) + ":";
    for (const auto& [c, coeff] : x.terms())
        append_term(out, coeff, prefix + format_composition(c));
    return out;
}

template <class Basis>
std::string format_based_tensor(const BasedTensor<Basis>& t)
{
    if (t.terms.is_zero())
        return "0";
    std::string out;
    const std::string prefix = std::string(basis_name(t.basis)) + ":";
    for (const auto& [k, coeff] : t.terms)
        append_term(out, coeff, prefix + format_composition(k.first) + " (x) " + prefix + format_composition(k.second));
    return out;
}

template <class Basis, class ParseBasis>
BasedElement<Basis> parse_based(std::string_view text, Basis default_basis, ParseBasis parse_basis)
{
    std::string body = trim(text);
    if (body.empty())
        throw std::invalid_argument("empty element");
    if (body == "0")
        return BasedElement<Basis>(default_basis);
    std::optional<Basis> basis;
    CompositionCombination terms;
    for (auto& term : split_terms(body)) {
        if (term.key.empty())
            term.key = "()";
        Basis b = default_basis;
        std::string comp = term.key;
        if (auto colon = term.key.find(':'); colon != std::string::npos) {
            b = parse_basis(trim(std::string_view(term.key).substr(0, colon)));
            comp = term.key.substr(colon + 1);
        }
        if (basis && *basis != b)
            throw std::invalid_argument("mixed bases in one element: '" + body + "'");
        basis = b;
        terms.add(parse_composition(comp), term.coeff);
    }
    return BasedElement<Basis>(basis.value_or(default_basis), std::move(terms));
}

template <class Basis>
nlohmann::json based_to_json(const BasedElement<Basis>& x)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [c, coeff] : x.terms())
        arr.push_back({{"composition", c.parts()}, {"coeff", to_fraction_string(coeff)}});
    return {{"basis", std::string(basis_name(x.basis()))}, {"terms", arr}};
}

} // namespace

std::string format_word(const Word& w)
{
    if (w.empty())
        return "e";
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(std::string_view text)
{
    std::string body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            throw std::invalid_argument("unterminated word '" + body + "'");
        body = trim(std::string_view(body).substr(1, body.size() - 2));
    }
    return Word(parse_indices(body, ' '));
}

std::string format_composition(const Composition& c)
{
    std::string out = "(";
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(c[i]);
    }
    return out + ")";
}

Composition parse_composition(std::string_view text)
{
    std::string body = trim(text);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            throw std::invalid_argument("unterminated composition '" + body + "'");
        return Composition(parse_indices(std::string_view(body).substr(1, body.size() - 2), ','));
    }
    return to_composition(parse_word(body));
}

std::string format_polynomial(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [w, c] : p)
        append_term(out, c, w.empty() ? std::string() : "[" + format_word(w) + "]");
    return out;
}

Polynomial parse_polynomial(std::string_view text)
{
    std::string body = trim(text);
    if (body.empty())
        throw std::invalid_argument("empty polynomial");
    Polynomial p;
    if (body == "0")
        return p;
    for (const auto& term : split_terms(body)) {
        if (term.key.empty()) {
            p.add(Word(), term.coeff);
            continue;
        }
        if (term.key.front() != '[' || term.key.back() != ']')
            throw std::invalid_argument("expected [word] in '" + term.key + "'");
        p.add(parse_word(term.key), term.coeff);
    }
    return p;
}

nlohmann::json to_json(const Polynomial& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : p)
        arr.push_back({{"word", w.letters()}, {"coeff", to_fraction_string(c)}});
    return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array");
    Polynomial p;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("word") || !t.contains("coeff"))
            throw std::invalid_argument("polynomial JSON term needs 'word' and 'coeff'");
        p.add(Word(t.at("word").get<std::vector<int>>()), parse_rational(t.at("coeff").get<std::string>()));
    }
    return p;
}

std::string format_tensor(const TensorPolynomial& t)
{
    if (t.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, c] : t)
        append_term(out, c, "[" + format_word(k.first) + "] (x) [" + format_word(k.second) + "]");
    return out;
}

std::string format_element(const SymElement& x) { return format_based(x); }
std::string format_element(const QSymElement& x) { return format_based(x); }
std::string format_tensor(const SymTensor& t) { return format_based_tensor(t); }
std::string format_tensor(const QSymTensor& t) { return format_based_tensor(t); }

SymElement parse_sym_element(std::string_view text, SymBasis default_basis)
{
    return parse_based(text, default_basis, [](const std::string& n) { return parse_sym_basis(n); });
}

QSymElement parse_qsym_element(std::string_view text, QSymBasis default_basis)
{
    return parse_based(text, default_basis, [](const std::string& n) { return parse_qsym_basis(n); });
}

nlohmann::json to_json(const SymElement& x) { return based_to_json(x); }
nlohmann::json to_json(const QSymElement& x) { return based_to_json(x); }

} // namespace qsh
