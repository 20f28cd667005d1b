#include "specdom/domain_file.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace specdom {

namespace {

struct Token {
    enum Kind { ident, number, symbol, eof };
    Kind kind = eof;
    std::string text;
    int line = 1;
    int column = 1;
};

[[noreturn]] void fail(const Token& at, const std::string& message) {
    throw parse_error(at.line, at.column, message);
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    const auto step = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            step(c);
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.column = column;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::ident;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                t.text += text[i];
                step(text[i]);
                ++i;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::number;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                t.text += text[i];
                step(text[i]);
                ++i;
            }
        } else if (std::string(";={}()+-*^/").find(c) != std::string::npos) {
            t.kind = Token::symbol;
            t.text = c;
            step(c);
            ++i;
        } else {
            throw parse_error(line, column,
                              std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::eof;
    end.text = "end of input";
    end.line = line;
    end.column = column;
    out.push_back(end);
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    const Token& peek() const { return toks_[pos_]; }

    const Token& take() { return toks_[pos_++]; }

    bool at_symbol(const char* s) const {
        return peek().kind == Token::symbol && peek().text == s;
    }

    const Token& expect_symbol(const char* s) {
        if (!at_symbol(s)) fail(peek(), std::string("expected '") + s + "'");
        return take();
    }

    const Token& expect_ident() {
        if (peek().kind != Token::ident) fail(peek(), "expected an identifier");
        return take();
    }

    // ---- expression grammar over a fixed variable table ----------------

    void set_variables(const std::vector<std::string>& names) {
        nvars_ = static_cast<int>(names.size());
        var_index_.clear();
        for (int i = 0; i < nvars_; ++i) var_index_[names[static_cast<std::size_t>(i)]] = i;
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (at_symbol("+") || at_symbol("-")) {
            const bool plus = take().text == "+";
            Polynomial rhs = parse_term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

  private:
    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (at_symbol("*")) {
            take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        // The sign binds more loosely than '^', so -z1^2 parses as -(z1^2),
        // matching the canonical printer.
        if (at_symbol("-")) {
            take();
            return Polynomial::constant(nvars_, rat(-1)) * parse_factor();
        }
        Polynomial base = parse_primary();
        if (!at_symbol("^")) return base;
        take();
        if (peek().kind != Token::number) fail(peek(), "expected an integer exponent");
        const Token& e = take();
        long exponent = 0;
        try {
            exponent = std::stol(e.text);
        } catch (const std::exception&) {
            fail(e, "exponent out of range");
        }
        if (exponent > polynomial_degree_cap_hint())
            fail(e, "exponent exceeds the degree cap");
        return pow(base, static_cast<int>(exponent));
    }

    Polynomial parse_primary() {
        const Token& t = peek();
        if (t.kind == Token::symbol && t.text == "(") {
            take();
            Polynomial inner = parse_expr();
            expect_symbol(")");
            return inner;
        }
        if (t.kind == Token::number) {
            const Token num = take();
            Rational value(num.text);
            if (at_symbol("/")) {
                take();
                if (peek().kind != Token::number)
                    fail(peek(), "expected an integer denominator");
                const Token den = take();
                Rational d(den.text);
                if (d == 0) fail(den, "division by zero in rational literal");
                value /= d;
            }
            value.canonicalize();
            return Polynomial::constant(nvars_, value);
        }
        if (t.kind == Token::ident) {
            const Token name = take();
            auto it = var_index_.find(name.text);
            if (it == var_index_.end())
                fail(name, "undeclared variable '" + name.text + "'");
            return Polynomial::variable(nvars_, it->second);
        }
        fail(t, "expected a variable, literal, or parenthesized expression");
    }

    static long polynomial_degree_cap_hint() { return degree_cap(); }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int nvars_ = 0;
    std::map<std::string, int> var_index_;
};

/// "h" followed by a decimal without leading zeros.
std::optional<int> h_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'h') return std::nullopt;
    if (name[1] == '0') return std::nullopt;
    int value = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        if (value > 100000) return std::nullopt;
        value = value * 10 + (name[i] - '0');
    }
    return value;
}

bool reserved_name(const std::string& name) {
    return name == "vars" || name == "config" || h_index(name).has_value();
}

int config_int(const Token& value_token, bool negative, long lo, long hi) {
    long v = 0;
    try {
        v = std::stol(value_token.text);
    } catch (const std::exception&) {
        fail(value_token, "config value out of range");
    }
    if (negative) v = -v;
    if (v < lo || v > hi) fail(value_token, "config value out of range");
    return static_cast<int>(v);
}

}  // namespace

DomainFile parse_domain(const std::string& text) {
    Parser p(text);
    DomainFile out;

    // vars <id>+ ;
    const Token& head = p.expect_ident();
    if (head.text != "vars") fail(head, "expected 'vars'");
    while (p.peek().kind == Token::ident) {
        const Token& name = p.take();
        if (reserved_name(name.text))
            fail(name, "'" + name.text + "' is reserved and cannot name a variable");
        for (const auto& seen : out.variables)
            if (seen == name.text) fail(name, "duplicate variable '" + name.text + "'");
        out.variables.push_back(name.text);
    }
    if (out.variables.empty()) fail(p.peek(), "expected at least one variable name");
    p.expect_symbol(";");
    p.set_variables(out.variables);

    // h<k> = <expr> ;  (numbered consecutively from h1)
    while (p.peek().kind == Token::ident && h_index(p.peek().text)) {
        const Token name = p.take();
        const int k = *h_index(name.text);
        const int expected = static_cast<int>(out.h.size()) + 1;
        if (k != expected)
            fail(name, "boundary functions must be numbered consecutively; expected h" +
                           std::to_string(expected));
        p.expect_symbol("=");
        Polynomial value = [&] {
            try {
                return p.parse_expr();
            } catch (const degree_cap_error& e) {
                fail(name, std::string("polynomial exceeds the degree cap: ") + e.what());
            }
        }();
        p.expect_symbol(";");
        if (value.eval_at_origin() != 0)
            fail(name, name.text + " must vanish at the origin");
        out.h.push_back(std::move(value));
    }

    // config { key = value ; * }
    if (p.peek().kind == Token::ident && p.peek().text == "config") {
        p.take();
        p.expect_symbol("{");
        while (!p.at_symbol("}")) {
            const Token key = p.expect_ident();
            p.expect_symbol("=");
            bool negative = false;
            if (p.at_symbol("-")) {
                p.take();
                negative = true;
            }
            if (p.peek().kind != Token::number) fail(p.peek(), "expected an integer value");
            const Token value = p.take();

            const auto set_int = [&](std::optional<int>& slot, long lo, long hi) {
                if (slot) fail(key, "duplicate config key '" + key.text + "'");
                slot = config_int(value, negative, lo, hi);
            };
            if (key.text == "max_level") {
                set_int(out.config.max_level, 1, 1000000);
            } else if (key.text == "m_max") {
                set_int(out.config.m_max, 1, 1000000);
            } else if (key.text == "generator_cap") {
                set_int(out.config.generator_cap, 1, 1000000);
            } else if (key.text == "random_combos") {
                set_int(out.config.random_combos, 0, 1000000);
            } else if (key.text == "p_cap") {
                set_int(out.config.p_cap, 1, 1000000);
            } else if (key.text == "exponent_cap") {
                set_int(out.config.exponent_cap, 1, 1000000);
            } else if (key.text == "samples") {
                set_int(out.config.samples, 0, 1000000);
            } else if (key.text == "degree_cap") {
                set_int(out.config.degree_cap, 1, 1000000);
            } else if (key.text == "seed") {
                if (out.config.seed) fail(key, "duplicate config key 'seed'");
                if (negative) fail(value, "config value out of range");
                try {
                    std::size_t used = 0;
                    const unsigned long long v = std::stoull(value.text, &used);
                    if (used != value.text.size()) throw std::invalid_argument("trail");
                    out.config.seed = static_cast<std::uint64_t>(v);
                } catch (const std::exception&) {
                    fail(value, "config value out of range");
                }
            } else {
                fail(key, "unknown config key '" + key.text + "'");
            }
            p.expect_symbol(";");
        }
        p.expect_symbol("}");
    }

    if (p.peek().kind != Token::eof) fail(p.peek(), "expected end of file");
    return out;
}

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
    Parser p(text);
    p.set_variables(variables);
    Polynomial value = p.parse_expr();
    if (p.peek().kind != Token::eof) fail(p.peek(), "expected end of expression");
    return value;
}

std::string print_domain(const DomainFile& f) {
    std::ostringstream os;
    os << "vars";
    for (const auto& v : f.variables) os << " " << v;
    os << ";\n";
    for (std::size_t j = 0; j < f.h.size(); ++j)
        os << "h" << (j + 1) << " = " << f.h[j].to_string(f.variables) << ";\n";

    std::ostringstream cfg;
    const auto emit = [&cfg](const char* key, const auto& slot) {
        if (slot) cfg << "    " << key << " = " << *slot << ";\n";
    };
    emit("max_level", f.config.max_level);
    emit("m_max", f.config.m_max);
    emit("generator_cap", f.config.generator_cap);
    emit("random_combos", f.config.random_combos);
    emit("seed", f.config.seed);
    emit("p_cap", f.config.p_cap);
    emit("exponent_cap", f.config.exponent_cap);
    emit("samples", f.config.samples);
    emit("degree_cap", f.config.degree_cap);
    if (!cfg.str().empty()) os << "config {\n" << cfg.str() << "}\n";
    return os.str();
}

SpecialDomain to_special_domain(const DomainFile& f) {
    return SpecialDomain(static_cast<int>(f.variables.size()), f.h);
}

}  // namespace specdom
