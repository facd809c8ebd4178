// qsh: command-line front end for the qshuffle library.

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsh/bases.hpp"
#include "qsh/factorization.hpp"
#include "qsh/lyndon.hpp"
#include "qsh/symqsym.hpp"
#include "qsh/text.hpp"
#include "qsh/verify.hpp"

namespace {

using nlohmann::json;
using namespace qsh;

constexpr int kWeightCap = 8;

enum class Format { text, json, csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int max_weight = 5;
    int q_degree = 8;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool unsafe_weight = false;
    bool negative_control = false;
    std::string pair = "stuffle";
    std::string family;
    std::vector<std::string> words;
    std::string kind = "shuffle";
    std::string element;
    std::string from;
    std::string to;
    std::string sym;
    std::string qsym;
};

Format parse_format(const std::string& f)
{
    if (f == "text")
        return Format::text;
    if (f == "json")
        return Format::json;
    if (f == "csv")
        return Format::csv;
    throw UsageError("unknown format '" + f + "'");
}

void check_weight(const Config& c)
{
    if (c.max_weight < 1)
        throw UsageError("--max-weight must be at least 1");
    if (c.max_weight > kWeightCap && !c.unsafe_weight)
        throw UsageError("--max-weight above " + std::to_string(kWeightCap) + " needs --unsafe-weight");
    if (c.q_degree < 1)
        throw UsageError("--q-degree must be at least 1");
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

// --- output helpers --------------------------------------------------------

void emit_polynomial(const Polynomial& p, Format f)
{
    switch (f) {
    case Format::text:
        std::cout << format_polynomial(p) << "\n";
        break;
    case Format::json:
        std::cout << to_json(p).dump() << "\n";
        break;
    case Format::csv:
        std::cout << "word,coeff\n";
        for (const auto& [w, c] : p)
            std::cout << format_word(w) << "," << to_fraction_string(c) << "\n";
        break;
    }
}

template <class Element>
void emit_element(const Element& x, Format f)
{
    switch (f) {
    case Format::text:
        std::cout << format_element(x) << "\n";
        break;
    case Format::json:
        std::cout << to_json(x).dump() << "\n";
        break;
    case Format::csv:
        std::cout << "basis,composition,coeff\n";
        for (const auto& [c, coeff] : x.terms())
            std::cout << basis_name(x.basis()) << "," << csv_field(format_composition(c)) << ","
                      << to_fraction_string(coeff) << "\n";
        break;
    }
}

int emit_checks(const std::vector<CheckResult>& results, Format f)
{
    bool all = true;
    switch (f) {
    case Format::text:
        for (const auto& r : results)
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << " -- " << r.detail << "\n";
        break;
    case Format::json: {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"check", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
        std::cout << arr.dump(2) << "\n";
        break;
    }
    case Format::csv:
        std::cout << "check,status,detail\n";
        for (const auto& r : results)
            std::cout << csv_field(r.name) << "," << (r.passed ? "pass" : "fail") << "," << csv_field(r.detail) << "\n";
        break;
    }
    for (const auto& r : results)
        all = all && r.passed;
    if (f == Format::text) {
        std::size_t passed = 0;
        for (const auto& r : results)
            passed += r.passed ? 1 : 0;
        std::cout << passed << "/" << results.size() << " checks passed\n";
    }
    return all ? 0 : 1;
}

// --- subcommands -----------------------------------------------------------

int cmd_lyndon(const Config& c, Format f)
{
    const auto words = lyndon_up_to(c.max_weight);
    switch (f) {
    case Format::text:
        for (const auto& w : words)
            std::cout << format_word(w) << "\n";
        break;
    case Format::json: {
        json arr = json::array();
        for (const auto& w : words)
            arr.push_back(w.letters());
        std::cout << arr.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "weight,word\n";
        for (const auto& w : words)
            std::cout << w.weight() << "," << format_word(w) << "\n";
        break;
    }
    return 0;
}

Word single_word(const Config& c)
{
    if (c.words.size() != 1)
        throw UsageError("expected exactly one --word");
    return parse_word(c.words.front());
}

int cmd_basis(const Config& c, Format f)
{
    if (c.family.empty())
        throw UsageError("--family is required");
    Family fam;
    try {
        fam = parse_family(c.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Word w = single_word(c);
    if (w.weight() > kWeightCap && !c.unsafe_weight)
        throw UsageError("word weight above " + std::to_string(kWeightCap) + " needs --unsafe-weight");
    emit_polynomial(basis_element(fam, w), f);
    return 0;
}

Polynomial operand(const std::string& text)
{
    if (text.find('[') != std::string::npos || text == "0")
        return parse_polynomial(text);
    return monomial(parse_word(text));
}

int cmd_product(const Config& c, Format f)
{
    if (c.words.size() != 2)
        throw UsageError("product needs two --word operands");
    ProductKind kind;
    if (c.kind == "concat")
        kind = ProductKind::concat;
    else if (c.kind == "shuffle")
        kind = ProductKind::shuffle;
    else if (c.kind == "stuffle")
        kind = ProductKind::stuffle;
    else
        throw UsageError("--kind must be concat, shuffle or stuffle");
    const Polynomial a = operand(c.words[0]);
    const Polynomial b = operand(c.words[1]);
    if (max_weight(a) + max_weight(b) > kWeightCap && !c.unsafe_weight)
        throw UsageError("product weight above " + std::to_string(kWeightCap) + " needs --unsafe-weight");
    emit_polynomial(product(a, b, kind), f);
    return 0;
}

bool is_qsym_basis(const std::string& name)
{
    try {
        parse_qsym_basis(name);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

int cmd_convert(const Config& c, Format f)
{
    if (c.from.empty() || c.to.empty() || c.element.empty())
        throw UsageError("convert needs --from, --to and --element");
    const bool qfrom = is_qsym_basis(c.from);
    const bool qto = is_qsym_basis(c.to);
    if (qfrom != qto)
        throw UsageError("cannot convert between Sym and QSym bases");
    if (qfrom) {
        const QSymElement x = parse_qsym_element(c.element, parse_qsym_basis(c.from));
        if (x.basis() != parse_qsym_basis(c.from))
            throw UsageError("element basis does not match --from");
        emit_element(convert(x, parse_qsym_basis(c.to)), f);
    } else {
        const SymElement x = parse_sym_element(c.element, parse_sym_basis(c.from));
        if (x.basis() != parse_sym_basis(c.from))
            throw UsageError("element basis does not match --from");
        emit_element(convert(x, parse_sym_basis(c.to)), f);
    }
    return 0;
}

int cmd_pair(const Config& c, Format f)
{
    if (c.sym.empty() || c.qsym.empty())
        throw UsageError("pair needs --sym and --qsym");
    const SymElement x = parse_sym_element(c.sym);
    const QSymElement y = parse_qsym_element(c.qsym);
    const Rational v = pairing_ext(x, y);
    switch (f) {
    case Format::text:
        std::cout << to_string(v) << "\n";
        break;
    case Format::json:
        std::cout << json{{"sym", format_element(x)}, {"qsym", format_element(y)}, {"value", to_fraction_string(v)}}.dump()
                  << "\n";
        break;
    case Format::csv:
        std::cout << "sym,qsym,value\n"
                  << csv_field(format_element(x)) << "," << csv_field(format_element(y)) << "," << to_fraction_string(v)
                  << "\n";
        break;
    }
    return 0;
}

int cmd_verify(const Config& c, Format f)
{
    return emit_checks(run_verify({c.max_weight, c.q_degree, c.seed}), f);
}

int cmd_factorize(const Config& c, Format f)
{
    DualPair pair;
    try {
        pair = parse_dual_pair(c.pair);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto report = verify_factorization(c.max_weight, pair, c.negative_control);
    std::string name = "factorization " + dual_pair_name(pair) + " up to weight " + std::to_string(c.max_weight);
    if (c.negative_control)
        name += " (negative control)";
    return emit_checks({{name, report.ok, describe(report)}}, f);
}

std::string series_text(const QSeries& s)
{
    std::string out;
    for (int e = 0; e < s.bound(); ++e) {
        if (e)
            out += ' ';
        out += to_string(s[e]);
    }
    return out;
}

int cmd_hl_check(const Config& c, Format f)
{
    const auto expansion = hall_littlewood_expansion(c.max_weight, c.q_degree);
    std::vector<CheckResult> rows;
    for (int n = 1; n <= c.max_weight; ++n)
        for (const auto& comp : compositions_of(n)) {
            auto it = expansion.find(comp);
            const QSeries lhs = it == expansion.end() ? QSeries(c.q_degree) : it->second;
            const QSeries rhs = specialize_Mq(comp, c.q_degree);
            std::string detail = "q-coefficients " + series_text(lhs);
            if (!(lhs == rhs))
                detail += "; M_I(X_q) gives " + series_text(rhs);
            rows.push_back({"S" + format_composition(comp), lhs == rhs, detail});
        }
    return emit_checks(rows, f);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact shuffle and quasi-shuffle algebra toolkit"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-weight", cfg.max_weight, "Largest weight considered")->capture_default_str();
        sub->add_option("--format", cfg.format, "text, json or csv")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Seed for randomized sweeps")->capture_default_str();
        sub->add_flag("--unsafe-weight", cfg.unsafe_weight, "Allow weights above the cap");
    };

    auto* lyndon = app.add_subcommand("lyndon", "List Lyndon words up to a weight");
    add_common(lyndon);

    auto* basis = app.add_subcommand("basis", "Expand one basis element on words");
    add_common(basis);
    basis->add_option("--family", cfg.family, "p, s, Pi, Sigma, PiL, SigmaL, PiR, SigmaR");
    basis->add_option("--word", cfg.words, "Index word, e.g. \"2 1\"");

    auto* prod = app.add_subcommand("product", "Multiply two words or polynomials");
    add_common(prod);
    prod->add_option("--kind", cfg.kind, "concat, shuffle or stuffle")->capture_default_str();
    prod->add_option("--word", cfg.words, "Operand (give twice)");

    auto* conv = app.add_subcommand("convert", "Change basis in Sym or QSym");
    add_common(conv);
    conv->add_option("--from", cfg.from, "S, Lambda, Psi, Phi, Rib, M or F");
    conv->add_option("--to", cfg.to, "S, Lambda, Psi, Phi, Rib, M or F");
    conv->add_option("--element", cfg.element, "Element, e.g. \"(2)\" or \"S:(1,1) - S:(2)\"");

    auto* pair = app.add_subcommand("pair", "Pair a Sym element with a QSym element");
    add_common(pair);
    pair->add_option("--sym", cfg.sym, "Sym element");
    pair->add_option("--qsym", cfg.qsym, "QSym element");

    auto* verify = app.add_subcommand("verify", "Run every invariant check");
    add_common(verify);
    verify->add_option("--q-degree", cfg.q_degree, "q-series truncation")->capture_default_str();

    auto* fact = app.add_subcommand("factorize", "Check the factorization of the diagonal series");
    add_common(fact);
    fact->add_option("--pair", cfg.pair, "stuffle, shuffle, L or R")->capture_default_str();
    fact->add_flag("--negative-control", cfg.negative_control, "Use a mismatched primal family");

    auto* hl = app.add_subcommand("hl-check", "Check the q-specialization of the sigma product");
    add_common(hl);
    hl->add_option("--q-degree", cfg.q_degree, "q-series truncation")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format f = parse_format(cfg.format);
        check_weight(cfg);
        if (lyndon->parsed())
            return cmd_lyndon(cfg, f);
        if (basis->parsed())
            return cmd_basis(cfg, f);
        if (prod->parsed())
            return cmd_product(cfg, f);
        if (conv->parsed())
            return cmd_convert(cfg, f);
        if (pair->parsed())
            return cmd_pair(cfg, f);
        if (verify->parsed())
            return cmd_verify(cfg, f);
        if (fact->parsed())
            return cmd_factorize(cfg, f);
        if (hl->parsed())
            return cmd_hl_check(cfg, f);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
