#include "textio.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "wlin/errors.hpp"

namespace wlin::cli {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(current_.line, current_.column, what);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            current_.text.clear();
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            // A slash directly followed by digits is a rational literal;
            // the grammar has no other use for division.
            if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                bump();
                num += "/" + read_digits();
            }
            current_.kind = Tok::Number;
            current_.text = std::move(num);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_];
                bump();
            }
            current_.kind = Tok::Ident;
            current_.text = std::move(id);
            return;
        }
        switch (c) {
            case '+': current_.kind = Tok::Plus; break;
            case '-': current_.kind = Tok::Minus; break;
            case '*': current_.kind = Tok::Star; break;
            case '^': current_.kind = Tok::Caret; break;
            case '/': current_.kind = Tok::Slash; break;
            case '(': current_.kind = Tok::LParen; break;
            case ')': current_.kind = Tok::RParen; break;
            case ',': current_.kind = Tok::Comma; break;
            default:
                throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
        }
        current_.text = std::string(1, c);
        bump();
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            bump();
        }
        return out;
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, column_ = 1;
    Token current_{Tok::End, "", 1, 1};
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars,
           const SeriesContext& ctx)
        : lex_(text), vars_(vars), ctx_(ctx) {
        for (std::size_t i = 0; i < vars.size(); ++i) var_index_[vars[i]] = i;
    }

    TruncatedSeries series_expression() {
        TruncatedSeries f = sum();
        expect_end();
        return f;
    }

    VectorField field_expression() {
        VectorField X = VectorField::zero(ctx_);
        int sign = 1;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            sign = -1;
        } else if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        }
        while (true) {
            X += field_term(sign);
            if (lex_.peek().kind == Tok::Plus) {
                lex_.take();
                sign = 1;
            } else if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                sign = -1;
            } else {
                break;
            }
        }
        expect_end();
        return X;
    }

    SeriesTuple tuple_expression() {
        SeriesTuple out;
        out.push_back(sum());
        while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            out.push_back(sum());
        }
        expect_end();
        if (out.size() != ctx_.dimension()) {
            std::ostringstream msg;
            msg << "expected " << ctx_.dimension() << " comma-separated components, got "
                << out.size();
            lex_.fail(msg.str());
        }
        return out;
    }

private:
    void expect_end() {
        if (lex_.peek().kind != Tok::End) lex_.fail("trailing input");
    }

    // sum := ['+'|'-'] product (('+'|'-') product)*
    TruncatedSeries sum() {
        TruncatedSeries acc(ctx_);
        int sign = 1;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            sign = -1;
        } else if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        }
        while (true) {
            TruncatedSeries term = product();
            acc += (sign < 0) ? -term : term;
            if (lex_.peek().kind == Tok::Plus) {
                lex_.take();
                sign = 1;
            } else if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                sign = -1;
            } else {
                return acc;
            }
        }
    }

    // product := factor ('*' factor)*
    TruncatedSeries product() {
        TruncatedSeries acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    // factor := number | var ['^' nat] | '(' sum ')'
    TruncatedSeries factor() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                lex_.take();
                return TruncatedSeries::constant(ctx_, Rational::parse(t.text));
            }
            case Tok::Ident: {
                lex_.take();
                const std::size_t axis = variable_axis(t);
                const std::uint32_t e = maybe_exponent();
                MultiIndex alpha = MultiIndex::zero(ctx_.dimension());
                alpha[axis] = e;
                return TruncatedSeries::monomial(ctx_, alpha, Rational(1));
            }
            case Tok::LParen: {
                lex_.take();
                TruncatedSeries inner = sum();
                if (lex_.peek().kind != Tok::RParen) lex_.fail("expected ')'");
                lex_.take();
                return inner;
            }
            default:
                lex_.fail("expected a number, variable, or '('");
        }
    }

    std::uint32_t maybe_exponent() {
        if (lex_.peek().kind != Tok::Caret) return 1;
        lex_.take();
        const Token t = lex_.peek();
        if (t.kind != Tok::Number || t.text.find('/') != std::string::npos)
            lex_.fail("expected a non-negative integer exponent");
        lex_.take();
        return static_cast<std::uint32_t>(std::stoul(t.text));
    }

    std::size_t variable_axis(const Token& t) {
        const auto it = var_index_.find(t.text);
        if (it == var_index_.end())
            throw ParseError(t.line, t.column, "unknown identifier '" + t.text + "'");
        return it->second;
    }

    // field term: '*'-separated factors, exactly one being d/dvar.
    VectorField field_term(int sign) {
        TruncatedSeries coeff = TruncatedSeries::constant(ctx_, Rational(sign));
        bool have_component = false;
        std::size_t component = 0;
        while (true) {
            if (is_derivative_marker()) {
                const std::size_t axis = derivative_marker();
                if (have_component)
                    lex_.fail("more than one d/d factor in a term");
                have_component = true;
                component = axis;
            } else {
                coeff = coeff * factor();
            }
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                continue;
            }
            break;
        }
        if (!have_component) lex_.fail("term is missing its d/d<var> factor");
        SeriesTuple comps(ctx_.dimension(), TruncatedSeries(ctx_));
        comps[component] = std::move(coeff);
        return VectorField(ctx_, std::move(comps));
    }

    bool is_derivative_marker() const {
        return lex_.peek().kind == Tok::Ident && lex_.peek().text == "d";
    }

    std::size_t derivative_marker() {
        lex_.take();  // 'd'
        if (lex_.peek().kind != Tok::Slash) lex_.fail("expected '/' after 'd'");
        lex_.take();
        const Token t = lex_.peek();
        if (t.kind != Tok::Ident || t.text.size() < 2 || t.text[0] != 'd')
            lex_.fail("expected 'd<var>' after 'd/'");
        lex_.take();
        Token var = t;
        var.text = t.text.substr(1);
        var.column += 1;
        return variable_axis(var);
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
    SeriesContext ctx_;
    std::map<std::string, std::size_t> var_index_;
};

std::string monomial_text(const MultiIndex& alpha, const std::vector<std::string>& vars,
                          const Rational& coeff_magnitude) {
    std::ostringstream os;
    bool printed = false;
    if (alpha.is_zero() || coeff_magnitude != Rational(1)) {
        os << coeff_magnitude.str();
        printed = true;
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (printed) os << "*";
        os << vars[i];
        if (alpha[i] > 1) os << "^" << alpha[i];
        printed = true;
    }
    return os.str();
}

}  // namespace

TruncatedSeries parse_series(const std::string& text, const std::vector<std::string>& vars,
                             const SeriesContext& ctx) {
    return Parser(text, vars, ctx).series_expression();
}

VectorField parse_field(const std::string& text, const std::vector<std::string>& vars,
                        const SeriesContext& ctx) {
    return Parser(text, vars, ctx).field_expression();
}

SeriesTuple parse_tuple(const std::string& text, const std::vector<std::string>& vars,
                        const SeriesContext& ctx) {
    return Parser(text, vars, ctx).tuple_expression();
}

std::string print_series(const TruncatedSeries& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : f.terms()) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        os << monomial_text(alpha, vars, c.abs());
    }
    return os.str();
}

std::string print_field(const VectorField& X, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool printed = false;
    for (std::size_t i = 0; i < X.context().dimension(); ++i) {
        if (X.component(i).is_zero()) continue;
        if (printed) os << " + ";
        os << "(" << print_series(X.component(i), vars) << ")*d/d" << vars[i];
        printed = true;
    }
    if (!printed) return "0*d/d" + vars[0];
    return os.str();
}

}  // namespace wlin::cli
