#include "meadowlab/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "meadowlab/gf.hpp"

namespace meadowlab {

static TermPtr mk(Term t) { return std::make_shared<const Term>(std::move(t)); }

TermPtr t_var(const std::string& name) {
    if (name.empty()) throw Error(ErrorCode::SyntaxError, "empty variable name");
    Term t;
    t.kind = Term::Kind::Var;
    t.name = name;
    return mk(std::move(t));
}
TermPtr t_zero() {
    Term t;
    t.kind = Term::Kind::Zero;
    return mk(std::move(t));
}
TermPtr t_one() {
    Term t;
    t.kind = Term::Kind::One;
    return mk(std::move(t));
}
TermPtr t_numeral(long k) {
    Term t;
    t.kind = Term::Kind::Numeral;
    t.value = k;
    return mk(std::move(t));
}
TermPtr t_add(TermPtr a, TermPtr b) {
    Term t;
    t.kind = Term::Kind::Add;
    t.left = std::move(a);
    t.right = std::move(b);
    return mk(std::move(t));
}
TermPtr t_mul(TermPtr a, TermPtr b) {
    Term t;
    t.kind = Term::Kind::Mul;
    t.left = std::move(a);
    t.right = std::move(b);
    return mk(std::move(t));
}
TermPtr t_neg(TermPtr a) {
    Term t;
    t.kind = Term::Kind::Neg;
    t.left = std::move(a);
    return mk(std::move(t));
}
TermPtr t_sub(TermPtr a, TermPtr b) { return t_add(std::move(a), t_neg(std::move(b))); }
TermPtr t_star(TermPtr a) {
    Term t;
    t.kind = Term::Kind::Star;
    t.left = std::move(a);
    return mk(std::move(t));
}
TermPtr t_root(int p, TermPtr a) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "root index must be prime, got " + std::to_string(p));
    Term t;
    t.kind = Term::Kind::Root;
    t.prime = p;
    t.left = std::move(a);
    return mk(std::move(t));
}
TermPtr t_pow(TermPtr a, int e) {
    TermPtr r = a;
    for (int i = 1; i < e; ++i) r = t_mul(r, a);
    return r;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case Term::Kind::Var: return a->name == b->name;
    case Term::Kind::Zero:
    case Term::Kind::One: return true;
    case Term::Kind::Numeral: return a->value == b->value;
    case Term::Kind::Neg:
    case Term::Kind::Star: return term_equal(a->left, b->left);
    case Term::Kind::Root: return a->prime == b->prime && term_equal(a->left, b->left);
    case Term::Kind::Add:
    case Term::Kind::Mul: return term_equal(a->left, b->left) && term_equal(a->right, b->right);
    }
    return false;
}

static void collect_vars(const TermPtr& t, std::set<std::string>& s) {
    if (!t) return;
    if (t->kind == Term::Kind::Var) s.insert(t->name);
    collect_vars(t->left, s);
    collect_vars(t->right, s);
}

void free_vars(const TermPtr& t, std::vector<std::string>& out) {
    std::set<std::string> s(out.begin(), out.end());
    collect_vars(t, s);
    out.assign(s.begin(), s.end());
}

std::vector<std::string> PPFormula::free() const {
    std::set<std::string> s;
    for (const auto& eq : conjuncts) {
        collect_vars(eq.lhs, s);
        collect_vars(eq.rhs, s);
    }
    for (const auto& v : bound) s.erase(v);
    return {s.begin(), s.end()};
}

PPFormula pp_inv() {
    TermPtr x = t_var("x"), y = t_var("y");
    PPFormula f;
    f.conjuncts.push_back({t_mul(t_mul(x, x), y), x});
    f.conjuncts.push_back({t_mul(x, t_mul(y, y)), y});
    return f;
}

PPFormula pp_exists_root(int p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "root index must be prime: " + std::to_string(p));
    TermPtr x = t_var("x"), y = t_var("y"), z = t_var("z");
    TermPtr pn = t_numeral(p);
    PPFormula f;
    f.bound = {"z"};
    // inv(p, z)
    f.conjuncts.push_back({t_mul(t_mul(pn, pn), z), pn});
    f.conjuncts.push_back({t_mul(pn, t_mul(z, z)), z});
    // y^p ~ (1 - z p) x
    f.conjuncts.push_back({t_pow(y, p), t_mul(t_sub(t_one(), t_mul(z, pn)), x)});
    return f;
}

Equation eq_root(int p) {
    TermPtr x = t_var("x"), y = t_var("y");
    TermPtr pn = t_numeral(p);
    return {t_pow(y, p), t_mul(t_sub(t_one(), t_mul(t_star(pn), pn)), x)};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum class Kind { LParen, RParen, Atom, End } kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::Kind::End, "", pos_};
        const size_t start = pos_;
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            return {Token::Kind::LParen, "(", start};
        }
        if (c == ')') {
            ++pos_;
            return {Token::Kind::RParen, ")", start};
        }
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
               s_[pos_] != ')')
            ++pos_;
        return {Token::Kind::Atom, s_.substr(start, pos_ - start), start};
    }

    Token peek() {
        size_t save = pos_;
        Token t = next();
        pos_ = save;
        return t;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

[[noreturn]] void syntax_error(const std::string& msg, size_t pos) {
    throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos));
}

long parse_int(const Token& t) {
    try {
        size_t used = 0;
        long v = std::stol(t.text, &used);
        if (used != t.text.size()) syntax_error("expected integer, got '" + t.text + "'", t.pos);
        return v;
    } catch (const std::invalid_argument&) {
        syntax_error("expected integer, got '" + t.text + "'", t.pos);
    } catch (const std::out_of_range&) {
        syntax_error("integer out of range", t.pos);
    }
}

bool valid_var_name(const std::string& s) {
    if (s.empty() || s == "0" || s == "1") return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_';
}

TermPtr parse_term_rec(Lexer& lx) {
    Token t = lx.next();
    if (t.kind == Token::Kind::Atom) {
        if (t.text == "0") return t_zero();
        if (t.text == "1") return t_one();
        if (!valid_var_name(t.text)) syntax_error("invalid variable name '" + t.text + "'", t.pos);
        return t_var(t.text);
    }
    if (t.kind != Token::Kind::LParen) syntax_error("expected term", t.pos);
    Token head = lx.next();
    if (head.kind != Token::Kind::Atom) syntax_error("expected operator", head.pos);
    TermPtr result;
    if (head.text == "int") {
        result = t_numeral(parse_int(lx.next()));
    } else if (head.text == "+") {
        TermPtr a = parse_term_rec(lx);
        TermPtr b = parse_term_rec(lx);
        result = t_add(a, b);
    } else if (head.text == "*") {
        TermPtr a = parse_term_rec(lx);
        TermPtr b = parse_term_rec(lx);
        result = t_mul(a, b);
    } else if (head.text == "-") {
        result = t_neg(parse_term_rec(lx));
    } else if (head.text == "star") {
        result = t_star(parse_term_rec(lx));
    } else if (head.text == "root") {
        Token pt = lx.next();
        long p = parse_int(pt);
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "(root " + std::to_string(p) + " _): index not prime");
        result = t_root(static_cast<int>(p), parse_term_rec(lx));
    } else {
        syntax_error("unknown operator '" + head.text + "'", head.pos);
    }
    Token close = lx.next();
    if (close.kind != Token::Kind::RParen) syntax_error("expected ')'", close.pos);
    return result;
}

Equation parse_equation_rec(Lexer& lx) {
    Token t = lx.next();
    if (t.kind != Token::Kind::LParen) syntax_error("expected '(='", t.pos);
    Token head = lx.next();
    if (head.kind != Token::Kind::Atom || head.text != "=") syntax_error("expected '='", head.pos);
    TermPtr a = parse_term_rec(lx);
    TermPtr b = parse_term_rec(lx);
    Token close = lx.next();
    if (close.kind != Token::Kind::RParen) syntax_error("expected ')'", close.pos);
    return {a, b};
}

std::vector<Equation> parse_and(Lexer& lx) {
    Token t = lx.next();
    if (t.kind != Token::Kind::LParen) syntax_error("expected '(and'", t.pos);
    Token head = lx.next();
    if (head.kind != Token::Kind::Atom || head.text != "and") syntax_error("expected 'and'", head.pos);
    std::vector<Equation> eqs;
    while (lx.peek().kind == Token::Kind::LParen) eqs.push_back(parse_equation_rec(lx));
    Token close = lx.next();
    if (close.kind != Token::Kind::RParen) syntax_error("expected ')'", close.pos);
    return eqs;
}

void expect_end(Lexer& lx) {
    Token t = lx.next();
    if (t.kind != Token::Kind::End) syntax_error("trailing input", t.pos);
}

} // namespace

TermPtr parse_term(const std::string& text) {
    Lexer lx(text);
    TermPtr t = parse_term_rec(lx);
    expect_end(lx);
    return t;
}

Equation parse_equation(const std::string& text) {
    Lexer lx(text);
    Equation e = parse_equation_rec(lx);
    expect_end(lx);
    return e;
}

Quasiequation parse_quasiequation(const std::string& text) {
    Lexer lx(text);
    Token t = lx.next();
    if (t.kind != Token::Kind::LParen) syntax_error("expected '(=>'", t.pos);
    Token head = lx.next();
    if (head.kind != Token::Kind::Atom || head.text != "=>") syntax_error("expected '=>'", head.pos);
    Quasiequation q;
    q.premises = parse_and(lx);
    q.conclusion = parse_equation_rec(lx);
    Token close = lx.next();
    if (close.kind != Token::Kind::RParen) syntax_error("expected ')'", close.pos);
    expect_end(lx);
    return q;
}

PPFormula parse_pp(const std::string& text) {
    Lexer lx(text);
    Token t = lx.next();
    if (t.kind != Token::Kind::LParen) syntax_error("expected '(exists'", t.pos);
    Token head = lx.next();
    if (head.kind != Token::Kind::Atom || head.text != "exists") syntax_error("expected 'exists'", head.pos);
    Token open = lx.next();
    if (open.kind != Token::Kind::LParen) syntax_error("expected '('", open.pos);
    PPFormula f;
    while (lx.peek().kind == Token::Kind::Atom) {
        Token v = lx.next();
        if (!valid_var_name(v.text)) syntax_error("invalid variable name '" + v.text + "'", v.pos);
        f.bound.push_back(v.text);
    }
    Token closevars = lx.next();
    if (closevars.kind != Token::Kind::RParen) syntax_error("expected ')'", closevars.pos);
    f.conjuncts = parse_and(lx);
    Token close = lx.next();
    if (close.kind != Token::Kind::RParen) syntax_error("expected ')'", close.pos);
    expect_end(lx);
    // bound and free variables must be disjoint, which holds by construction
    // since free() removes bound names; reject shadowing duplicates instead.
    std::set<std::string> seen;
    for (const auto& v : f.bound)
        if (!seen.insert(v).second) syntax_error("duplicate bound variable '" + v + "'", 0);
    return f;
}

Parsed parse_any(const std::string& text) {
    Lexer lx(text);
    Token t = lx.peek();
    if (t.kind == Token::Kind::LParen) {
        // peek at the head symbol
        Lexer lx2(text);
        lx2.next();
        Token head = lx2.next();
        if (head.kind == Token::Kind::Atom) {
            if (head.text == "=") return parse_equation(text);
            if (head.text == "=>") return parse_quasiequation(text);
            if (head.text == "exists") return parse_pp(text);
        }
    }
    return parse_term(text);
}

std::string render(const TermPtr& t) {
    switch (t->kind) {
    case Term::Kind::Var: return t->name;
    case Term::Kind::Zero: return "0";
    case Term::Kind::One: return "1";
    case Term::Kind::Numeral: return "(int " + std::to_string(t->value) + ")";
    case Term::Kind::Add: return "(+ " + render(t->left) + " " + render(t->right) + ")";
    case Term::Kind::Mul: return "(* " + render(t->left) + " " + render(t->right) + ")";
    case Term::Kind::Neg: return "(- " + render(t->left) + ")";
    case Term::Kind::Star: return "(star " + render(t->left) + ")";
    case Term::Kind::Root: return "(root " + std::to_string(t->prime) + " " + render(t->left) + ")";
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

std::string render(const Equation& e) { return "(= " + render(e.lhs) + " " + render(e.rhs) + ")"; }

std::string render(const Quasiequation& q) {
    std::string s = "(=> (and";
    for (const auto& e : q.premises) s += " " + render(e);
    s += ") " + render(q.conclusion) + ")";
    return s;
}

std::string render(const PPFormula& f) {
    std::string s = "(exists (";
    for (size_t i = 0; i < f.bound.size(); ++i) s += (i ? " " : "") + f.bound[i];
    s += ") (and";
    for (const auto& e : f.conjuncts) s += " " + render(e);
    s += "))";
    return s;
}

} // namespace meadowlab
