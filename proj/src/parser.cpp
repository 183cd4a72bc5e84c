#include "germlab/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace germlab {

namespace {

constexpr std::uint32_t kMaxExponent = 1000000;

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        const int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::End, "", line, col};
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                num.push_back(src_[pos_]);
                advance();
            }
            return {Tok::Int, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id.push_back(src_[pos_]);
                advance();
            }
            return {Tok::Ident, id, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Tok::Plus, "+", line, col};
            case '-': return {Tok::Minus, "-", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    Parser(const std::string& src, const std::vector<std::string>& vars) : lex_(src) {
        if (vars.empty()) throw std::invalid_argument("variable list must be nonempty");
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!var_index_.emplace(vars[i], static_cast<int>(i)).second) {
                throw std::invalid_argument("duplicate variable name '" + vars[i] + "'");
            }
        }
        n_ = static_cast<int>(vars.size());
        cur_ = lex_.next();
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (cur_.kind != Tok::End) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(cur_.line, cur_.col, msg);
    }

    void bump() { cur_ = lex_.next(); }

    bool accept(Tok k) {
        if (cur_.kind != k) return false;
        bump();
        return true;
    }

    Polynomial expr() {
        Polynomial acc = accept(Tok::Minus) ? -term() : term();
        for (;;) {
            if (accept(Tok::Plus)) {
                acc = acc + term();
            } else if (accept(Tok::Minus)) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept(Tok::Star)) acc = acc * factor();
        if (cur_.kind == Tok::Int || cur_.kind == Tok::Ident || cur_.kind == Tok::LParen) {
            fail("missing operator before '" + cur_.text + "' (implicit multiplication is not allowed)");
        }
        return acc;
    }

    Polynomial factor() {
        if (accept(Tok::Minus)) return -factor();
        Polynomial base = primary();
        if (accept(Tok::Caret)) return base.pow(exponent());
        return base;
    }

    Polynomial primary() {
        switch (cur_.kind) {
            case Tok::Int: {
                Int num(cur_.text);
                bump();
                if (accept(Tok::Slash)) {
                    if (cur_.kind != Tok::Int) fail("expected integer after '/' in rational literal");
                    Int den(cur_.text);
                    bump();
                    if (den == 0) fail("zero denominator in rational literal");
                    Rat q(num, den);
                    q.canonicalize();
                    return Polynomial::constant(n_, q);
                }
                return Polynomial::constant(n_, Rat(num));
            }
            case Tok::Ident: {
                auto it = var_index_.find(cur_.text);
                if (it == var_index_.end()) fail("unknown variable '" + cur_.text + "'");
                bump();
                return Polynomial::variable(n_, it->second);
            }
            case Tok::LParen: {
                bump();
                Polynomial p = expr();
                if (!accept(Tok::RParen)) fail("expected ')'");
                return p;
            }
            default:
                fail("expected a number, variable or '('");
        }
    }

    // Integer literal, or a right-associative tower of them (2^3^2 = 2^9).
    std::uint32_t exponent() {
        if (cur_.kind == Tok::Minus) fail("exponent must be a nonnegative integer literal");
        if (cur_.kind != Tok::Int) fail("exponent must be a nonnegative integer literal");
        Int e(cur_.text);
        bump();
        if (accept(Tok::Caret)) {
            const std::uint32_t upper = exponent();
            if (e > kMaxExponent || (e > 1 && upper > 20)) fail("exponent too large");
            e = int_pow(e, upper);
        }
        if (e > kMaxExponent) fail("exponent too large");
        return static_cast<std::uint32_t>(e.get_ui());
    }

    Lexer lex_;
    Token cur_{Tok::End, "", 1, 1};
    std::map<std::string, int> var_index_;
    int n_ = 0;
};

std::string coeff_str(const Rat& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace

Polynomial parse_poly(const std::string& src, const std::vector<std::string>& vars) {
    return Parser(src, vars).parse();
}

std::string format_poly(const Polynomial& p, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != p.n()) {
        throw std::invalid_argument("variable list length differs from ring dimension");
    }
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
        }
        if (mono.empty()) {
            os << coeff_str(c);
        } else if (c == 1) {
            os << mono;
        } else {
            os << coeff_str(c) << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace germlab
