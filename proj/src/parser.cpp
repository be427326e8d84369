#include "riordan/parser.hpp"

#include <cctype>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

using ast::Kind;
using ast::Node;
using ast::NodePtr;

struct Token {
    enum class Type { integer, ident, symbol, end };
    Type type;
    std::string text;
    Int value; // integer tokens
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const noexcept { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Type::end, "", Int(0), text_.size()};
            return;
        }
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string digits(text_.substr(start, pos_ - start));
            current_ = {Token::Type::integer, digits, Int(digits, 10), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_ = {Token::Type::ident, std::string(text_.substr(start, pos_ - start)),
                        Int(0), start};
            return;
        }
        if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
            ++pos_;
            current_ = {Token::Type::symbol, std::string(1, c), Int(0), start};
            return;
        }
        throw SyntaxError(start, std::string("unexpected character `") + c + "`");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Token::Type::end, "", Int(0), 0};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    NodePtr parse() {
        NodePtr e = parse_sum();
        const Token& t = lexer_.peek();
        if (t.type != Token::Type::end)
            throw SyntaxError(t.offset, "unexpected `" + t.text + "` after expression");
        return e;
    }

private:
    static constexpr int max_depth = 256;

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > max_depth)
                throw SyntaxError(parser.lexer_.peek().offset, "expression nests too deeply");
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    bool at_symbol(const char* s) const {
        const Token& t = lexer_.peek();
        return t.type == Token::Type::symbol && t.text == s;
    }

    Token expect_symbol(const char* s) {
        if (!at_symbol(s)) {
            const Token& t = lexer_.peek();
            throw SyntaxError(t.offset, std::string("expected `") + s + "`" +
                                             (t.type == Token::Type::end
                                                  ? " before end of input"
                                                  : ", found `" + t.text + "`"));
        }
        return lexer_.take();
    }

    static std::shared_ptr<Node> make(Kind kind, std::size_t begin, std::size_t end,
                                      std::vector<NodePtr> children = {}) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->begin = begin;
        n->end = end;
        n->children = std::move(children);
        return n;
    }

    NodePtr parse_sum() {
        DepthGuard guard(*this);
        NodePtr left = parse_product();
        while (at_symbol("+") || at_symbol("-")) {
            bool plus = at_symbol("+");
            lexer_.take();
            NodePtr right = parse_product();
            left = make(plus ? Kind::add : Kind::sub, left->begin, right->end, {left, right});
        }
        return left;
    }

    NodePtr parse_product() {
        NodePtr left = parse_unary();
        while (at_symbol("*") || at_symbol("/")) {
            bool times = at_symbol("*");
            lexer_.take();
            NodePtr right = parse_unary();
            left = make(times ? Kind::mul : Kind::div, left->begin, right->end, {left, right});
        }
        return left;
    }

    NodePtr parse_unary() {
        DepthGuard guard(*this);
        if (at_symbol("-")) {
            Token minus = lexer_.take();
            NodePtr inner = parse_unary();
            return make(Kind::neg, minus.offset, inner->end, {inner});
        }
        if (at_symbol("+")) {
            lexer_.take();
            return parse_unary();
        }
        return parse_power();
    }

    long parse_integer_literal(const char* what) {
        bool negative = false;
        std::size_t begin = lexer_.peek().offset;
        if (at_symbol("-")) {
            lexer_.take();
            negative = true;
        }
        const Token& t = lexer_.peek();
        if (t.type != Token::Type::integer)
            throw SyntaxError(t.offset, std::string("expected an integer ") + what);
        Token tok = lexer_.take();
        if (!tok.value.fits_slong_p())
            throw SyntaxError(begin, std::string("integer ") + what + " is out of range");
        long v = tok.value.get_si();
        return negative ? -v : v;
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (!at_symbol("^")) return base;
        lexer_.take();
        long e = parse_integer_literal("exponent");
        auto n = make(Kind::pow, base->begin, lexer_.peek().offset, {base});
        n->exponent = e;
        if (at_symbol("^"))
            throw SyntaxError(lexer_.peek().offset,
                              "chained `^` needs parentheses, e.g. (a^2)^3");
        return n;
    }

    NodePtr parse_atom() {
        const Token& t = lexer_.peek();
        switch (t.type) {
            case Token::Type::integer: {
                Token tok = lexer_.take();
                auto n = make(Kind::number, tok.offset, tok.offset + tok.text.size());
                n->value = Rational(tok.value);
                return n;
            }
            case Token::Type::ident:
                return parse_ident();
            case Token::Type::symbol:
                if (t.text == "(") {
                    Token open = lexer_.take();
                    NodePtr inner = parse_sum();
                    Token close = expect_symbol(")");
                    auto n = std::make_shared<Node>(*inner);
                    n->begin = open.offset;
                    n->end = close.offset + 1;
                    return n;
                }
                throw SyntaxError(t.offset, "unexpected `" + t.text + "`");
            case Token::Type::end:
                throw SyntaxError(t.offset, "unexpected end of input");
        }
        throw SyntaxError(t.offset, "unexpected token");
    }

    NodePtr parse_ident() {
        Token tok = lexer_.take();
        const std::string& name = tok.text;
        const std::size_t begin = tok.offset;
        if (name == "w") return make(Kind::zeta, begin, begin + 1);
        if (name == "x") return make(Kind::var, begin, begin + 1);

        static const struct { const char* name; int arity; } functions[] = {
            {"inv", 1}, {"sqrt", 1}, {"log", 1}, {"exp", 1}, {"compinv", 1},
            {"comp", 2}, {"root", 1},
        };
        for (const auto& fn : functions) {
            if (name != fn.name) continue;
            expect_symbol("(");
            std::vector<NodePtr> args;
            args.push_back(parse_sum());
            long root_index = 0;
            if (name == "root") {
                expect_symbol(",");
                root_index = parse_integer_literal("root index");
            } else {
                for (int i = 1; i < fn.arity; ++i) {
                    expect_symbol(",");
                    args.push_back(parse_sum());
                }
            }
            Token close = expect_symbol(")");
            auto n = make(Kind::call, begin, close.offset + 1, std::move(args));
            n->func = name;
            n->exponent = root_index;
            return n;
        }
        throw SyntaxError(begin, "unknown name `" + name + "`");
    }

    Lexer lexer_;
    int depth_ = 0;
};

int precedence(const Node& n) {
    switch (n.kind) {
        case Kind::add:
        case Kind::sub: return 10;
        case Kind::mul:
        case Kind::div: return 20;
        case Kind::neg: return 30;
        case Kind::pow: return 40;
        default: return 50;
    }
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int min_prec, std::string& out) {
    if (precedence(child) < min_prec) {
        out += '(';
        print_node(child, out);
        out += ')';
    } else {
        print_node(child, out);
    }
}

void print_node(const Node& n, std::string& out) {
    switch (n.kind) {
        case Kind::number:
            out += to_string(n.value);
            return;
        case Kind::zeta:
            out += 'w';
            return;
        case Kind::var:
            out += 'x';
            return;
        case Kind::neg:
            out += '-';
            print_child(*n.children[0], 20, out);
            return;
        case Kind::add:
            print_child(*n.children[0], 10, out);
            out += " + ";
            print_child(*n.children[1], 11, out);
            return;
        case Kind::sub:
            print_child(*n.children[0], 10, out);
            out += " - ";
            print_child(*n.children[1], 11, out);
            return;
        case Kind::mul:
            print_child(*n.children[0], 20, out);
            out += "*";
            print_child(*n.children[1], 21, out);
            return;
        case Kind::div:
            print_child(*n.children[0], 20, out);
            out += "/";
            print_child(*n.children[1], 21, out);
            return;
        case Kind::pow:
            print_child(*n.children[0], 50, out);
            out += "^" + std::to_string(n.exponent);
            return;
        case Kind::call:
            out += n.func;
            out += '(';
            for (size_t i = 0; i < n.children.size(); ++i) {
                if (i) out += ", ";
                print_node(*n.children[i], out);
            }
            if (n.func == "root") out += ", " + std::to_string(n.exponent);
            out += ')';
            return;
    }
}

bool node_mentions_var(const Node& n) {
    if (n.kind == Kind::var) return true;
    for (const auto& child : n.children)
        if (node_mentions_var(*child)) return true;
    return false;
}

class Evaluator {
public:
    Evaluator(const FieldRef& field, int precision, std::string_view source)
        : field_(field), precision_(precision), source_(source) {}

    Series eval(const Node& n) {
        try {
            return eval_raw(n);
        } catch (const DomainError&) {
            throw;
        } catch (const SyntaxError&) {
            throw;
        } catch (const Error& e) {
            throw DomainError(fragment(n), e.what());
        }
    }

private:
    std::string fragment(const Node& n) const {
        return std::string(source_.substr(n.begin, n.end - n.begin));
    }

    Series eval_raw(const Node& n) {
        switch (n.kind) {
            case Kind::number:
                return Series::constant(Scalar::of(field_, n.value), precision_);
            case Kind::zeta:
                return Series::constant(Scalar::zeta(field_), precision_);
            case Kind::var:
                if (precision_ < 1)
                    throw DomainError(fragment(n), "x needs precision at least 1");
                return Series::identity(field_, precision_);
            case Kind::neg:
                return -eval(*n.children[0]);
            case Kind::add:
                return eval(*n.children[0]) + eval(*n.children[1]);
            case Kind::sub:
                return eval(*n.children[0]) - eval(*n.children[1]);
            case Kind::mul:
                return mul(eval(*n.children[0]), eval(*n.children[1]));
            case Kind::div: {
                Series numer = eval(*n.children[0]);
                Series denom = eval(*n.children[1]);
                if (denom.coeff(0).is_zero())
                    throw DomainError(fragment(*n.children[1]),
                                      "division needs a unit denominator (nonzero constant term)");
                return mul(numer, inv(denom));
            }
            case Kind::pow: {
                Series base = eval(*n.children[0]);
                if (n.exponent < 0 && base.coeff(0).is_zero())
                    throw DomainError(fragment(n), "negative power of a non-unit series");
                return pow_int(base, n.exponent);
            }
            case Kind::call:
                return eval_call(n);
        }
        throw DomainError(fragment(n), "unreachable");
    }

    Series eval_call(const Node& n) {
        const Series arg = eval(*n.children[0]);
        try {
            if (n.func == "inv") return inv(arg);
            if (n.func == "sqrt") return sqrt_unit(arg);
            if (n.func == "root") return nth_root_unit(arg, n.exponent);
            if (n.func == "log") return log_unit(arg);
            if (n.func == "exp") return exp_pos(arg);
            if (n.func == "compinv") return comp_inverse(arg);
            if (n.func == "comp") return compose(arg, eval(*n.children[1]));
        } catch (const DomainError&) {
            throw;
        } catch (const Error& e) {
            throw DomainError(fragment(n), e.what());
        }
        throw DomainError(fragment(n), "unknown function");
    }

    const FieldRef& field_;
    int precision_;
    std::string_view source_;
};

} // namespace

SeriesExpr::SeriesExpr(NodePtr root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

SeriesExpr SeriesExpr::parse(std::string_view text) {
    Parser parser(text);
    return SeriesExpr(parser.parse(), std::string(text));
}

std::string SeriesExpr::str() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

bool SeriesExpr::mentions_var() const { return node_mentions_var(*root_); }

Series SeriesExpr::eval(const FieldRef& field, int precision) const {
    Evaluator ev(field, precision, source_);
    return ev.eval(*root_);
}

Series parse_series(std::string_view text, const FieldRef& field, int precision) {
    return SeriesExpr::parse(text).eval(field, precision);
}

Scalar parse_scalar(std::string_view text, const FieldRef& field) {
    SeriesExpr expr = SeriesExpr::parse(text);
    if (expr.mentions_var())
        throw DomainError(std::string(text), "expected a constant expression without x");
    return expr.eval(field, 0).coeff(0);
}

} // namespace riordan
