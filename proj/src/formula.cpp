#include "cy/formula.hpp"

#include <cctype>

#include "cy/errors.hpp"
#include "cy/frobenius.hpp"

namespace cy {

namespace {

struct Token {
    enum class Type { Int, Ident, Op, End };
    Type type;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_; ++line_; col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_; ++col_;
            } else break;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Type::End, "", line_, col_};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_; ++col_;
            }
            tok_ = {Token::Type::Int, s_.substr(start, pos_ - start), tok_.line, tok_.col};
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_; ++col_;
            }
            tok_ = {Token::Type::Ident, s_.substr(start, pos_ - start), tok_.line, tok_.col};
        } else if (c == '.' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '.') {
            pos_ += 2; col_ += 2;
            tok_ = {Token::Type::Op, "..", tok_.line, tok_.col};
        } else if (std::string("+-*/^(),=").find(c) != std::string::npos) {
            ++pos_; ++col_;
            tok_ = {Token::Type::Op, std::string(1, c), tok_.line, tok_.col};
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

using Ptr = std::shared_ptr<const FormulaAst>;

Ptr node(FormulaAst::Kind kind, std::vector<Ptr> args = {}, std::string name = {},
         Rat value = rat(0)) {
    auto p = std::make_shared<FormulaAst>();
    p->kind = kind;
    p->value = std::move(value);
    p->name = std::move(name);
    p->args = std::move(args);
    return p;
}

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) {}

    Ptr parse() {
        Ptr e = expr();
        const Token& t = lex_.peek();
        if (t.type != Token::Type::End)
            throw SyntaxError("unexpected trailing input '" + t.text + "'", t.line, t.col);
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        const Token& t = lex_.peek();
        throw SyntaxError(msg + (t.text.empty() ? "" : " near '" + t.text + "'"),
                          t.line, t.col);
    }

    bool accept_op(const std::string& op) {
        const Token& t = lex_.peek();
        if (t.type == Token::Type::Op && t.text == op) {
            lex_.next();
            return true;
        }
        return false;
    }

    void expect_op(const std::string& op) {
        if (!accept_op(op)) fail("expected '" + op + "'");
    }

    Ptr expr() {
        Ptr e;
        if (accept_op("-")) e = node(FormulaAst::Kind::Neg, {term()});
        else e = term();
        for (;;) {
            if (accept_op("+")) e = node(FormulaAst::Kind::Add, {e, term()});
            else if (accept_op("-")) e = node(FormulaAst::Kind::Sub, {e, term()});
            else return e;
        }
    }

    Ptr term() {
        Ptr e = factor();
        for (;;) {
            if (accept_op("*")) e = node(FormulaAst::Kind::Mul, {e, factor()});
            else if (accept_op("/")) e = node(FormulaAst::Kind::Div, {e, factor()});
            else return e;
        }
    }

    Ptr factor() {
        Ptr e = atom();
        if (accept_op("^")) e = node(FormulaAst::Kind::Pow, {e, exponent()});
        return e;
    }

    // exponent := '-'? (int | ident)
    Ptr exponent() {
        bool neg = accept_op("-");
        Token t = lex_.peek();
        Ptr e;
        if (t.type == Token::Type::Int) {
            lex_.next();
            e = node(FormulaAst::Kind::Num, {}, {}, rat_from_string(t.text));
        } else if (t.type == Token::Type::Ident) {
            lex_.next();
            e = node(FormulaAst::Kind::Var, {}, t.text);
        } else {
            fail("expected integer or identifier exponent");
        }
        return neg ? node(FormulaAst::Kind::Neg, {e}) : e;
    }

    Ptr atom() {
        Token t = lex_.peek();
        if (t.type == Token::Type::Int) {
            lex_.next();
            return node(FormulaAst::Kind::Num, {}, {}, rat_from_string(t.text));
        }
        if (t.type == Token::Type::Ident) {
            lex_.next();
            if (lex_.peek().type == Token::Type::Op && lex_.peek().text == "(")
                return call(t.text);
            return node(FormulaAst::Kind::Var, {}, t.text);
        }
        if (accept_op("(")) {
            Ptr e = expr();
            expect_op(")");
            return e;
        }
        fail("expected expression");
    }

    Ptr call(const std::string& name) {
        expect_op("(");
        if (name == "sum") {
            Token v = lex_.peek();
            if (v.type != Token::Type::Ident) fail("expected summation variable");
            lex_.next();
            expect_op("=");
            Ptr lo = expr();
            expect_op("..");
            Ptr hi = expr();
            expect_op(",");
            Ptr body = expr();
            expect_op(")");
            return node(FormulaAst::Kind::Sum, {lo, hi, body}, v.text);
        }
        static const std::map<std::string, size_t> arity = {
            {"binom", 2}, {"fact", 1}, {"H", 1}, {"poch", 2}, {"floor", 1}};
        auto it = arity.find(name);
        if (it == arity.end()) fail("unknown function '" + name + "'");
        std::vector<Ptr> args;
        args.push_back(expr());
        while (accept_op(",")) args.push_back(expr());
        expect_op(")");
        if (args.size() != it->second)
            fail("'" + name + "' expects " + std::to_string(it->second) + " argument(s)");
        return node(FormulaAst::Kind::Call, std::move(args), name);
    }

    Lexer lex_;
};

long to_long(const Rat& q, const char* what) {
    if (!is_integer(q)) throw DomainError(std::string(what) + " must be an integer");
    Int n = num(q);
    if (!n.fits_slong_p()) throw DomainError(std::string(what) + " out of range");
    return n.get_si();
}

Rat factorial(long a) {
    if (a < 0) throw DomainError("fact of negative integer");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a));
    return Rat(f);
}

Rat pochhammer(const Rat& r, long k) {
    if (k < 0) throw DomainError("poch with negative length");
    Rat p = 1, t = r;
    for (long j = 0; j < k; ++j) {
        p *= t;
        t += 1;
    }
    return p;
}

} // namespace

Rat harmonic(long a) {
    if (a < 0) throw DomainError("H of negative integer");
    Rat h = 0;
    for (long j = 1; j <= a; ++j) h += rat(1, j);
    return h;
}

Rat binomial(const Rat& a, long b) {
    if (b < 0) return rat(0);
    if (is_integer(a) && num(a) >= 0 && num(a) < b) return rat(0);
    Rat p = 1, t = a;
    for (long j = 0; j < b; ++j) {
        p *= t;
        t -= 1;
    }
    return p / factorial(b);
}

AstPtr formula_parse(const std::string& text) { return Parser(text).parse(); }

Rat formula_eval_env(const AstPtr& ast, std::map<std::string, Rat>& env) {
    using K = FormulaAst::Kind;
    switch (ast->kind) {
        case K::Num: return ast->value;
        case K::Var: {
            auto it = env.find(ast->name);
            if (it == env.end()) throw DomainError("unbound variable '" + ast->name + "'");
            return it->second;
        }
        case K::Add: return formula_eval_env(ast->args[0], env) + formula_eval_env(ast->args[1], env);
        case K::Sub: return formula_eval_env(ast->args[0], env) - formula_eval_env(ast->args[1], env);
        case K::Mul: return formula_eval_env(ast->args[0], env) * formula_eval_env(ast->args[1], env);
        case K::Div: {
            Rat d = formula_eval_env(ast->args[1], env);
            if (d == 0) throw DivisionByZero("division by zero in formula");
            return formula_eval_env(ast->args[0], env) / d;
        }
        case K::Neg: return -formula_eval_env(ast->args[0], env);
        case K::Pow: {
            Rat b = formula_eval_env(ast->args[0], env);
            long e = to_long(formula_eval_env(ast->args[1], env), "exponent");
            if (e < 0) {
                if (b == 0) throw DivisionByZero("zero to a negative power");
                b = 1 / b;
                e = -e;
            }
            Rat p = 1;
            for (long j = 0; j < e; ++j) p *= b;
            return p;
        }
        case K::Call: {
            if (ast->name == "binom")
                return binomial(formula_eval_env(ast->args[0], env),
                                to_long(formula_eval_env(ast->args[1], env), "binom index"));
            if (ast->name == "fact")
                return factorial(to_long(formula_eval_env(ast->args[0], env), "fact argument"));
            if (ast->name == "H")
                return harmonic(to_long(formula_eval_env(ast->args[0], env), "H argument"));
            if (ast->name == "poch")
                return pochhammer(formula_eval_env(ast->args[0], env),
                                  to_long(formula_eval_env(ast->args[1], env), "poch length"));
            if (ast->name == "floor")
                return Rat(rfloor(formula_eval_env(ast->args[0], env)));
            throw DomainError("unknown function '" + ast->name + "'");
        }
        case K::Sum: {
            long lo = to_long(formula_eval_env(ast->args[0], env), "sum lower bound");
            long hi = to_long(formula_eval_env(ast->args[1], env), "sum upper bound");
            Rat acc = 0;
            auto saved = env.find(ast->name);
            Rat old;
            bool had = saved != env.end();
            if (had) old = saved->second;
            for (long v = lo; v <= hi; ++v) {
                env[ast->name] = rat(v);
                acc += formula_eval_env(ast->args[2], env);
            }
            if (had) env[ast->name] = old;
            else env.erase(ast->name);
            return acc;
        }
    }
    throw DomainError("corrupt formula AST");
}

Rat formula_eval(const AstPtr& ast, long n) {
    std::map<std::string, Rat> env;
    env["n"] = rat(n);
    return formula_eval_env(ast, env);
}

VerifyResult verify_entry(const ThetaOperator& D, const AstPtr& ast, int N,
                          const std::vector<std::pair<long, Rat>>& base_cases) {
    PowerSeries A = holomorphic_coeffs(D, N);
    std::map<long, Rat> base(base_cases.begin(), base_cases.end());
    for (long n = 0; n < N; ++n) {
        auto it = base.find(n);
        Rat want = it != base.end() ? it->second : formula_eval(ast, n);
        if (want != A.coeff(static_cast<int>(n))) return {false, n};
    }
    return {true, -1};
}

} // namespace cy
