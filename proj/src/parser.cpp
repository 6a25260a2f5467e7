#include "qplane/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace qplane {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                         message),
      pos_(position) {}

namespace {

enum class Tok { integer, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::integer, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(c)) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (s[i]) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '^': kind = Tok::caret; break;
            case '/': kind = Tok::slash; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", i);
        }
        out.push_back({kind, std::string(s.substr(i, 1)), i});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

// Intermediate value of a subexpression: a scalar until it meets a
// generator, then an element, then possibly a tensor.
struct Value {
    std::optional<QScalar> scalar;
    std::optional<Element> element;
    std::optional<TensorElement> tensor;
};

Value make_scalar(QScalar s) { return Value{std::move(s), std::nullopt, std::nullopt}; }
Value make_element(Element e) { return Value{std::nullopt, std::move(e), std::nullopt}; }
Value make_tensor(TensorElement t) { return Value{std::nullopt, std::nullopt, std::move(t)}; }

Element lift_element(const Value& v, const Presentation& p) {
    if (v.element) return *v.element;
    return scale(*v.scalar, Element::unit(p));
}

Value negate(Value v) {
    if (v.scalar) return make_scalar(-*v.scalar);
    if (v.element) return make_element(-*v.element);
    return make_tensor(-*v.tensor);
}

Value add_values(Value a, Value b, const Presentation& p, std::size_t pos) {
    if (a.tensor || b.tensor) {
        if (!a.tensor || !b.tensor) {
            throw ParseError("cannot add an element and a tensor", pos);
        }
        if (a.tensor->arity() != b.tensor->arity()) {
            throw ParseError("cannot add tensors of different arity", pos);
        }
        *a.tensor += *b.tensor;
        return a;
    }
    if (a.scalar && b.scalar) return make_scalar(*a.scalar + *b.scalar);
    return make_element(lift_element(a, p) + lift_element(b, p));
}

Value mul_values(Value a, Value b, std::size_t pos) {
    if (a.scalar) {
        if (b.scalar) return make_scalar(*a.scalar * *b.scalar);
        if (b.element) return make_element(scale(*a.scalar, *b.element));
        return make_tensor(*a.scalar * *b.tensor);
    }
    if (b.scalar) {
        if (a.element) return make_element(scale(*b.scalar, *a.element));
        return make_tensor(*b.scalar * *a.tensor);
    }
    if (a.element && b.element) return make_element(multiply(*a.element, *b.element));
    if (a.tensor && b.tensor) {
        if (a.tensor->arity() != b.tensor->arity()) {
            throw ParseError("cannot multiply tensors of different arity", pos);
        }
        return make_tensor(tensor_multiply(*a.tensor, *b.tensor));
    }
    throw ParseError("cannot multiply an element and a tensor", pos);
}

struct Flat {
    std::vector<SlotPres> slots;
    std::vector<std::pair<QScalar, TensorKey>> terms;
};

Flat to_flat(const Value& v, const Presentation& p) {
    Flat f;
    if (v.tensor) {
        f.slots = v.tensor->slots();
        for (const auto& [key, c] : v.tensor->terms()) f.terms.emplace_back(c, key);
        return f;
    }
    Element e = lift_element(v, p);
    f.slots = {&e.presentation()};
    for (const auto& [w, c] : e.terms()) f.terms.emplace_back(c, TensorKey{w});
    return f;
}

// Digit strings go through manual accumulation: cpp_int's string
// constructor reads a leading 0 as an octal prefix and rejects "09".
boost::multiprecision::cpp_int digits_to_int(const std::string& text) {
    boost::multiprecision::cpp_int v = 0;
    for (char ch : text) v = v * 10 + (ch - '0');
    return v;
}

Value tensor_join(const Value& a, const Value& b, const Presentation& p) {
    Flat fa = to_flat(a, p);
    Flat fb = to_flat(b, p);
    std::vector<SlotPres> slots = fa.slots;
    slots.insert(slots.end(), fb.slots.begin(), fb.slots.end());
    TensorElement out(std::move(slots));
    for (const auto& [ca, ka] : fa.terms) {
        for (const auto& [cb, kb] : fb.terms) {
            TensorKey key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            out.add_term(ca * cb, std::move(key));
        }
    }
    return make_tensor(std::move(out));
}

constexpr int kMaxExponent = 4096;

class Parser {
public:
    Parser(std::string_view s, const Presentation& p) : toks_(lex(s)), p_(p) {}

    Value run() {
        Value v = parse_expr();
        if (peek().kind != Tok::end) {
            throw ParseError("unexpected trailing input", peek().pos);
        }
        return v;
    }

private:
    std::vector<Token> toks_;
    const Presentation& p_;
    std::size_t i_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(i_ + ahead, toks_.size() - 1)];
    }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(Tok kind, const char* what) {
        if (!accept(kind)) {
            throw ParseError(std::string("expected ") + what, peek().pos);
        }
    }

    bool at_tensor_sep() const {
        return peek(0).kind == Tok::lparen && peek(1).kind == Tok::ident &&
               peek(1).text == "x" && peek(2).kind == Tok::rparen;
    }

    Value parse_expr() {
        bool neg = accept(Tok::minus);
        Value v = parse_tensorterm();
        if (neg) v = negate(std::move(v));
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool minus = peek().kind == Tok::minus;
            std::size_t pos = peek().pos;
            ++i_;
            Value rhs = parse_tensorterm();
            if (minus) rhs = negate(std::move(rhs));
            v = add_values(std::move(v), std::move(rhs), p_, pos);
        }
        return v;
    }

    Value parse_tensorterm() {
        Value v = parse_term();
        while (at_tensor_sep()) {
            i_ += 3;
            Value rhs = parse_term();
            v = tensor_join(v, rhs, p_);
        }
        return v;
    }

    Value parse_term() {
        Value v = parse_factor();
        while (peek().kind == Tok::star) {
            std::size_t pos = peek().pos;
            ++i_;
            Value rhs = parse_factor();
            v = mul_values(std::move(v), std::move(rhs), pos);
        }
        return v;
    }

    Value parse_factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer: {
                ++i_;
                Rational num{digits_to_int(t.text)};
                if (accept(Tok::slash)) {
                    const Token& d = peek();
                    if (d.kind != Tok::integer) {
                        throw ParseError("expected a denominator", d.pos);
                    }
                    ++i_;
                    Rational den{digits_to_int(d.text)};
                    if (den == 0) throw ParseError("division by zero", d.pos);
                    num /= den;
                }
                return make_scalar(QScalar(num));
            }
            case Tok::ident: {
                ++i_;
                if (t.text == "q") {
                    int k = accept(Tok::caret) ? parse_exponent() : 1;
                    return make_scalar(QScalar::q_power(k));
                }
                auto g = gen_from_name(t.text);
                if (!g) {
                    throw ParseError("unknown symbol '" + t.text + "'", t.pos);
                }
                if (!p_.contains(*g)) {
                    throw ParseError("generator " + t.text + " is not in presentation " +
                                         p_.name(),
                                     t.pos);
                }
                int k = accept(Tok::caret) ? parse_exponent() : 1;
                Gen base = *g;
                if (k < 0) {
                    auto inv = p_.inverse_of(*g);
                    if (!inv) {
                        throw ParseError("generator " + t.text + " is not invertible", t.pos);
                    }
                    base = *inv;
                    k = -k;
                }
                return make_element(
                    Element::from_word(p_, Word(static_cast<std::size_t>(k), base)));
            }
            case Tok::lparen: {
                ++i_;
                Value v = parse_expr();
                expect(Tok::rparen, "')'");
                return v;
            }
            default:
                throw ParseError("expected a term", t.pos);
        }
    }

    int parse_exponent() {
        bool neg = accept(Tok::minus);
        const Token& t = peek();
        if (t.kind != Tok::integer) {
            throw ParseError("expected an exponent", t.pos);
        }
        ++i_;
        if (t.text.size() > 5) {
            throw ParseError("exponent out of range (|k| <= 4096)", t.pos);
        }
        int k = std::stoi(t.text);
        if (k > kMaxExponent) {
            throw ParseError("exponent out of range (|k| <= 4096)", t.pos);
        }
        return neg ? -k : k;
    }
};

std::string term_string(const QScalar& c, const std::string& body) {
    if (c.single_term()) {
        std::string cs = to_string(c);
        if (body.empty()) return cs;
        if (cs == "1") return body;
        if (cs == "-1") return "-" + body;
        return cs + "*" + body;
    }
    std::string cs = "(" + to_string(c) + ")";
    if (body.empty()) return cs;
    return cs + "*" + body;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (!terms[i].empty() && terms[i][0] == '-') {
            out += " - " + terms[i].substr(1);
        } else {
            out += " + " + terms[i];
        }
    }
    return out;
}

} // namespace

Parsed parse(std::string_view input, const Presentation& p) {
    Value v = Parser(input, p).run();
    if (v.tensor) return Parsed(std::move(*v.tensor));
    return Parsed(lift_element(v, p));
}

Element parse_element(std::string_view input, const Presentation& p) {
    Parsed v = parse(input, p);
    if (std::holds_alternative<TensorElement>(v)) {
        throw ParseError("expected an element, got a tensor expression", 0);
    }
    return std::get<Element>(std::move(v));
}

std::string render_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += "*";
        out += gen_name(w[i]);
        if (j - i > 1) {
            out += "^";
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

std::string render(const Element& e) {
    std::vector<std::string> terms;
    terms.reserve(e.terms().size());
    for (const auto& [w, c] : e.terms()) {
        terms.push_back(term_string(c, w.empty() ? std::string() : render_word(w)));
    }
    return join_terms(terms);
}

std::string render(const TensorElement& t) {
    std::vector<std::string> terms;
    terms.reserve(t.terms().size());
    for (const auto& [key, c] : t.terms()) {
        std::string body = render_word(key.front());
        for (std::size_t i = 1; i < key.size(); ++i) {
            body += " (x) ";
            body += render_word(key[i]);
        }
        terms.push_back(term_string(c, body));
    }
    return join_terms(terms);
}

std::string render(const QScalar& s) { return to_string(s); }

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << render(e); }

std::ostream& operator<<(std::ostream& os, const TensorElement& t) { return os << render(t); }

} // namespace qplane
