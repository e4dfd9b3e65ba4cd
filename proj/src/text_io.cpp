#include "pbred/text_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pbred/errors.hpp"

namespace pbred {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokenize(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool looks_like_integer(const std::string& tok) {
    std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& tok, std::size_t line_no) {
    if (tok.empty() || !looks_like_integer(tok))
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    return Integer(tok);
}

var_index parse_variable(const std::string& tok, std::size_t line_no) {
    if (tok.size() < 2 || tok[0] != 'x' || !looks_like_integer(tok.substr(1)) || tok[1] == '+' ||
        tok[1] == '-')
        throw ParseError(line_no, "expected a variable like x3, got '" + tok + "'");
    unsigned long long v = 0;
    try {
        v = std::stoull(tok.substr(1));
    } catch (const std::exception&) {
        throw ParseError(line_no, "variable index out of range in '" + tok + "'");
    }
    if (v > 0xffffffffull) throw ParseError(line_no, "variable index out of range in '" + tok + "'");
    return static_cast<var_index>(v);
}

Polynomial::Term parse_term_tokens(const std::vector<std::string>& tokens, std::size_t first,
                                   std::size_t last, std::size_t line_no) {
    if (first >= last) throw ParseError(line_no, "empty term");
    Integer coeff = parse_integer(tokens[first], line_no);
    std::vector<var_index> vars;
    for (std::size_t i = first + 1; i < last; ++i)
        vars.push_back(parse_variable(tokens[i], line_no));
    return {Monomial(std::move(vars)), std::move(coeff)};
}

// Splits "lhs <sep> rhs" and complains when the separator is missing.
std::pair<std::string, std::string> split_once(const std::string& text, const std::string& sep,
                                               std::size_t line_no) {
    auto pos = text.find(sep);
    if (pos == std::string::npos)
        throw ParseError(line_no, "expected '" + sep + "' separator");
    return {text.substr(0, pos), text.substr(pos + sep.size())};
}

template <typename Fn>
void for_each_content_line(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (tokenize(body).empty()) continue;
        fn(body, line_no);
    }
}

template <typename Fn>
void with_input_file(const std::string& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    fn(in);
}

template <typename Fn>
void with_output_file(const std::string& path, Fn&& fn) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    fn(out);
    out.flush();
    if (!out) throw Error("failed while writing " + path);
}

}  // namespace

std::string format_term(const Polynomial::Term& term) {
    std::string out = term.second.str();
    for (var_index v : term.first.variables()) {
        out += " x";
        out += std::to_string(v);
    }
    return out;
}

std::string format_inline(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& term : p.terms()) {
        if (!out.empty()) out += " + ";
        out += format_term(term);
    }
    return out;
}

Polynomial parse_inline(const std::string& text, std::size_t line_no) {
    std::vector<std::string> tokens = tokenize(text);
    if (tokens.empty()) throw ParseError(line_no, "empty polynomial");
    std::vector<Polynomial::Term> terms;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= tokens.size(); ++i) {
        if (i < tokens.size() && tokens[i] != "+") continue;
        terms.push_back(parse_term_tokens(tokens, start, i, line_no));
        start = i + 1;
    }
    return Polynomial::from_terms(std::move(terms));
}

void write_polynomial(std::ostream& out, const Polynomial& p) {
    for (const auto& term : p.terms()) out << format_term(term) << '\n';
}

Polynomial read_polynomial(std::istream& in) {
    std::vector<Polynomial::Term> terms;
    for_each_content_line(in, [&](const std::string& body, std::size_t line_no) {
        std::vector<std::string> tokens = tokenize(body);
        terms.push_back(parse_term_tokens(tokens, 0, tokens.size(), line_no));
    });
    return Polynomial::from_terms(std::move(terms));
}

void write_equations(std::ostream& out, const std::vector<BinaryEquation>& eqs) {
    for (const BinaryEquation& eq : eqs)
        out << format_inline(eq.lhs) << " := " << format_inline(eq.rhs) << '\n';
}

std::vector<BinaryEquation> read_equations(std::istream& in) {
    std::vector<BinaryEquation> eqs;
    for_each_content_line(in, [&](const std::string& body, std::size_t line_no) {
        auto [lhs_text, rhs_text] = split_once(body, ":=", line_no);
        BinaryEquation eq{parse_inline(lhs_text, line_no), parse_inline(rhs_text, line_no)};
        for (const Polynomial* side : {&eq.lhs, &eq.rhs})
            for (const auto& term : side->terms())
                if (term.second < 0)
                    throw ParseError(line_no, "equation sides must have non-negative coefficients");
        eqs.push_back(std::move(eq));
    });
    return eqs;
}

void write_deduction_pairs(std::ostream& out,
                           const std::vector<std::pair<Polynomial, Polynomial>>& pairs) {
    for (const auto& [f, g] : pairs)
        out << format_inline(f) << " == " << format_inline(g) << '\n';
}

std::vector<std::pair<Polynomial, Polynomial>> read_deduction_pairs(std::istream& in) {
    std::vector<std::pair<Polynomial, Polynomial>> pairs;
    for_each_content_line(in, [&](const std::string& body, std::size_t line_no) {
        auto [f_text, g_text] = split_once(body, "==", line_no);
        pairs.emplace_back(parse_inline(f_text, line_no), parse_inline(g_text, line_no));
    });
    return pairs;
}

void write_substitution(std::ostream& out, const Substitution& sub) {
    for (const auto& step : sub.steps())
        out << 'x' << step.variable << " := " << format_inline(step.replacement) << '\n';
}

Substitution read_substitution(std::istream& in) {
    Substitution sub;
    for_each_content_line(in, [&](const std::string& body, std::size_t line_no) {
        auto [var_text, poly_text] = split_once(body, ":=", line_no);
        std::vector<std::string> var_tokens = tokenize(var_text);
        if (var_tokens.size() != 1)
            throw ParseError(line_no, "expected a single variable before ':='");
        sub.replace(parse_variable(var_tokens[0], line_no), parse_inline(poly_text, line_no));
    });
    return sub;
}

void write_instance(std::ostream& out, const FactorizationInstance& inst) {
    out << "product = " << inst.product.str() << '\n';
    out << "p_bits = " << inst.p_bits << '\n';
    out << "q_bits = " << inst.q_bits << '\n';
    for (var_index v = 0; v < inst.variables.size(); ++v) {
        const VariableInfo& info = inst.variables.info(v);
        out << "var = " << v << ' ';
        switch (info.role) {
            case VariableRole::factor_p: out << "p " << info.position; break;
            case VariableRole::factor_q: out << "q " << info.position; break;
            case VariableRole::carry: out << "c " << info.position << ' ' << info.slot; break;
            case VariableRole::generic: out << "x " << info.position; break;
        }
        out << '\n';
    }
    for (const BinaryEquation& eq : inst.equations)
        out << "equation = " << format_inline(eq.lhs) << " := " << format_inline(eq.rhs) << '\n';
}

FactorizationInstance read_instance(std::istream& in) {
    FactorizationInstance inst;
    bool have_product = false, have_p_bits = false, have_q_bits = false;
    std::vector<std::pair<std::string, std::size_t>> equation_lines;

    for_each_content_line(in, [&](const std::string& body, std::size_t line_no) {
        auto [key_text, value] = split_once(body, "=", line_no);
        std::vector<std::string> key = tokenize(key_text);
        if (key.size() != 1) throw ParseError(line_no, "expected 'key = value'");

        if (key[0] == "product") {
            std::vector<std::string> toks = tokenize(value);
            if (toks.size() != 1) throw ParseError(line_no, "expected a single product value");
            inst.product = parse_integer(toks[0], line_no);
            have_product = true;
        } else if (key[0] == "p_bits" || key[0] == "q_bits") {
            std::vector<std::string> toks = tokenize(value);
            if (toks.size() != 1) throw ParseError(line_no, "expected a single width");
            Integer w = parse_integer(toks[0], line_no);
            if (w < 2 || w > 1000000) throw ParseError(line_no, "factor width out of range");
            (key[0] == "p_bits" ? inst.p_bits : inst.q_bits) = static_cast<unsigned>(w);
            (key[0] == "p_bits" ? have_p_bits : have_q_bits) = true;
        } else if (key[0] == "var") {
            std::vector<std::string> toks = tokenize(value);
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError(line_no, "expected 'var = <index> <role> <position> [slot]'");
            Integer idx = parse_integer(toks[0], line_no);
            if (idx != inst.variables.size())
                throw ParseError(line_no, "variable indices must be sequential from 0");
            VariableInfo info;
            if (toks[1] == "p") info.role = VariableRole::factor_p;
            else if (toks[1] == "q") info.role = VariableRole::factor_q;
            else if (toks[1] == "c") info.role = VariableRole::carry;
            else if (toks[1] == "x") info.role = VariableRole::generic;
            else throw ParseError(line_no, "unknown variable role '" + toks[1] + "'");
            Integer pos = parse_integer(toks[2], line_no);
            if (pos < 0 || pos > 0xffffffff) throw ParseError(line_no, "position out of range");
            info.position = static_cast<std::uint32_t>(pos);
            if (info.role == VariableRole::carry) {
                if (toks.size() != 4) throw ParseError(line_no, "carry variables need a slot");
                Integer slot = parse_integer(toks[3], line_no);
                if (slot < 1 || slot > 64) throw ParseError(line_no, "slot out of range");
                info.slot = static_cast<std::uint32_t>(slot);
            } else if (toks.size() == 4) {
                throw ParseError(line_no, "only carry variables take a slot");
            }
            var_index v = inst.variables.add(info);
            if (info.role == VariableRole::factor_p) inst.p_vars[info.position] = v;
            if (info.role == VariableRole::factor_q) inst.q_vars[info.position] = v;
        } else if (key[0] == "equation") {
            equation_lines.emplace_back(value, line_no);
        } else {
            throw ParseError(line_no, "unknown key '" + key[0] + "'");
        }
    });

    if (!have_product || !have_p_bits || !have_q_bits)
        throw ParseError(0, "instance needs product, p_bits and q_bits");

    for (const auto& [text, line_no] : equation_lines) {
        auto [lhs_text, rhs_text] = split_once(text, ":=", line_no);
        BinaryEquation eq{parse_inline(lhs_text, line_no), parse_inline(rhs_text, line_no)};
        for (const Polynomial* side : {&eq.lhs, &eq.rhs})
            for (var_index v : side->support())
                if (v >= inst.variables.size())
                    throw ParseError(line_no, "equation uses unregistered variable x" +
                                                  std::to_string(v));
        inst.equations.push_back(std::move(eq));
    }
    return inst;
}

Polynomial read_polynomial_file(const std::string& path) {
    Polynomial p;
    with_input_file(path, [&](std::istream& in) { p = read_polynomial(in); });
    return p;
}

void write_polynomial_file(const std::string& path, const Polynomial& p) {
    with_output_file(path, [&](std::ostream& out) { write_polynomial(out, p); });
}

std::vector<BinaryEquation> read_equations_file(const std::string& path) {
    std::vector<BinaryEquation> eqs;
    with_input_file(path, [&](std::istream& in) { eqs = read_equations(in); });
    return eqs;
}

void write_equations_file(const std::string& path, const std::vector<BinaryEquation>& eqs) {
    with_output_file(path, [&](std::ostream& out) { write_equations(out, eqs); });
}

std::vector<std::pair<Polynomial, Polynomial>> read_deduction_pairs_file(const std::string& path) {
    std::vector<std::pair<Polynomial, Polynomial>> pairs;
    with_input_file(path, [&](std::istream& in) { pairs = read_deduction_pairs(in); });
    return pairs;
}

Substitution read_substitution_file(const std::string& path) {
    Substitution sub;
    with_input_file(path, [&](std::istream& in) { sub = read_substitution(in); });
    return sub;
}

void write_substitution_file(const std::string& path, const Substitution& sub) {
    with_output_file(path, [&](std::ostream& out) { write_substitution(out, sub); });
}

FactorizationInstance read_instance_file(const std::string& path) {
    FactorizationInstance inst;
    with_input_file(path, [&](std::istream& in) { inst = read_instance(in); });
    return inst;
}

void write_instance_file(const std::string& path, const FactorizationInstance& inst) {
    with_output_file(path, [&](std::ostream& out) { write_instance(out, inst); });
}

}  // namespace pbred
