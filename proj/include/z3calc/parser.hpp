#ifndef Z3CALC_PARSER_HPP
#define Z3CALC_PARSER_HPP

#include <z3calc/rewrite.hpp>

#include <json.hpp>

#include <cctype>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace z3calc
{

class parse_error : public algebra_error
{
public:
    parse_error(const std::string &msg, std::size_t off)
        : algebra_error(msg + " at offset " + std::to_string(off)), offset(off)
    {
    }
    std::size_t offset;
};

struct expr_node {
    enum class kind { number, symbol, sum, product, power, negate };
    kind k = kind::number;
    rational value;                // number
    std::string name;              // symbol
    std::vector<expr_node> kids;   // sum, product, power base, negate operand
    std::vector<char> ops;         // '+'/'-' for sum, '*'/'/' for product
    long exponent = 0;             // power
    std::size_t offset = 0;
};

inline const std::vector<std::string> &default_generator_tokens()
{
    static const std::vector<std::string> t{"x", "th", "h", "xinv", "dx", "dth", "d2x", "d2th", "w", "u", "a",
                                            "b", "g", "dT", "ainv", "dTinv", "phi", "y", "px", "pth"};
    return t;
}

namespace detail
{

struct unicode_alias {
    const char *utf8;
    const char *ascii;
};

// Longest spellings first so that d²θ wins over d².
inline const std::vector<unicode_alias> &unicode_aliases()
{
    static const std::vector<unicode_alias> a{
        {"dT⁻¹", "dTinv"}, {"d²θ", "d2th"}, {"d²x", "d2x"}, {"dθ", "dth"},
        {"x⁻¹", "xinv"},   {"a⁻¹", "ainv"}, {"d⁻¹", "dTinv"}, {"∂θ", "pth"},
        {"∂x", "px"},           {"θ", "th"},          {"β", "b"},           {"γ", "g"},
        {"φ", "phi"},           {"·", "*"},           {"−", "-"},           {"²", "^2"},
        {"³", "^3"},
    };
    return a;
}

struct token {
    enum class kind { number, ident, op, lparen, rparen, end } k;
    std::string text;
    std::size_t offset;
};

inline std::vector<token> tokenize(std::string_view src)
{
    std::vector<token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c) != 0) {
            ++i;
            continue;
        }
        bool aliased = false;
        for (const auto &al : unicode_aliases()) {
            std::string_view u(al.utf8);
            if (src.substr(i, u.size()) == u) {
                std::string_view a(al.ascii);
                if (a == "*" || a == "-") {
                    out.push_back({token::kind::op, std::string(a), i});
                } else if (a[0] == '^') {
                    out.push_back({token::kind::op, "^", i});
                    out.push_back({token::kind::number, std::string(a.substr(1)), i});
                } else {
                    out.push_back({token::kind::ident, std::string(a), i});
                }
                i += u.size();
                aliased = true;
                break;
            }
        }
        if (aliased) {
            continue;
        }
        if (std::isdigit(c) != 0) {
            std::size_t s = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])) != 0) {
                ++i;
            }
            if (i < src.size() && (src[i] == '.' || std::isalpha(static_cast<unsigned char>(src[i])) != 0)) {
                throw parse_error("malformed rational", s);
            }
            out.push_back({token::kind::number, std::string(src.substr(s, i - s)), s});
            continue;
        }
        if (std::isalpha(c) != 0 || c == '_') {
            std::size_t s = i;
            while (i < src.size()
                   && (std::isalnum(static_cast<unsigned char>(src[i])) != 0 || src[i] == '_')) {
                ++i;
            }
            out.push_back({token::kind::ident, std::string(src.substr(s, i - s)), s});
            continue;
        }
        if (c == '(' || c == ')') {
            out.push_back({c == '(' ? token::kind::lparen : token::kind::rparen, std::string(1, char(c)), i});
            ++i;
            continue;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            out.push_back({token::kind::op, std::string(1, char(c)), i});
            ++i;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + char(c) + "'", i);
    }
    out.push_back({token::kind::end, "", src.size()});
    return out;
}

class expr_parser
{
public:
    expr_parser(std::vector<token> toks, std::function<bool(const std::string &)> known)
        : t_(std::move(toks)), known_(std::move(known))
    {
    }

    expr_node parse()
    {
        expr_node e = sum();
        if (peek().k == token::kind::rparen) {
            throw parse_error("unbalanced parenthesis", peek().offset);
        }
        if (peek().k != token::kind::end) {
            throw parse_error("unexpected '" + peek().text + "'", peek().offset);
        }
        return e;
    }

private:
    const token &peek() const
    {
        return t_[i_];
    }
    bool is_op(char c) const
    {
        return peek().k == token::kind::op && peek().text[0] == c;
    }

    expr_node sum()
    {
        expr_node n{expr_node::kind::sum};
        n.offset = peek().offset;
        n.kids.push_back(product());
        n.ops.push_back('+');
        while (is_op('+') || is_op('-')) {
            n.ops.push_back(t_[i_++].text[0]);
            n.kids.push_back(product());
        }
        return n.kids.size() == 1 ? std::move(n.kids[0]) : n;
    }
    expr_node product()
    {
        expr_node n{expr_node::kind::product};
        n.offset = peek().offset;
        n.kids.push_back(unary());
        n.ops.push_back('*');
        while (is_op('*') || is_op('/')) {
            n.ops.push_back(t_[i_++].text[0]);
            n.kids.push_back(unary());
        }
        return n.kids.size() == 1 ? std::move(n.kids[0]) : n;
    }
    expr_node unary()
    {
        if (is_op('-') || is_op('+')) {
            const token &t = t_[i_++];
            expr_node inner = unary();
            if (t.text[0] == '+') {
                return inner;
            }
            expr_node n{expr_node::kind::negate};
            n.offset = t.offset;
            n.kids.push_back(std::move(inner));
            return n;
        }
        return power();
    }
    expr_node power()
    {
        expr_node base = atom();
        if (!is_op('^')) {
            return base;
        }
        std::size_t off = t_[i_++].offset;
        bool neg = false;
        if (is_op('-')) {
            neg = true;
            ++i_;
        }
        if (peek().k != token::kind::number) {
            throw parse_error("expected integer exponent", peek().offset);
        }
        expr_node n{expr_node::kind::power};
        n.offset = off;
        n.exponent = std::stol(t_[i_++].text) * (neg ? -1 : 1);
        n.kids.push_back(std::move(base));
        return n;
    }
    expr_node atom()
    {
        const token &t = peek();
        switch (t.k) {
        case token::kind::number: {
            ++i_;
            expr_node n{expr_node::kind::number};
            n.value = rational(t.text);
            n.offset = t.offset;
            return n;
        }
        case token::kind::ident: {
            if (t.text != "q" && t.text != "j" && !known_(t.text)) {
                throw parse_error("unknown symbol '" + t.text + "'", t.offset);
            }
            ++i_;
            expr_node n{expr_node::kind::symbol};
            n.name = t.text;
            n.offset = t.offset;
            return n;
        }
        case token::kind::lparen: {
            ++i_;
            expr_node e = sum();
            if (peek().k != token::kind::rparen) {
                throw parse_error("unbalanced parenthesis", peek().offset);
            }
            ++i_;
            return e;
        }
        case token::kind::end:
            throw parse_error("unexpected end of input", t.offset);
        default:
            throw parse_error("unexpected '" + t.text + "'", t.offset);
        }
    }

    std::vector<token> t_;
    std::size_t i_ = 0;
    std::function<bool(const std::string &)> known_;
};

} // namespace detail

// Parses against a set of generator names; q and j are always scalars.
inline expr_node parse(std::string_view src, const std::vector<std::string> &generators = default_generator_tokens())
{
    std::set<std::string> names(generators.begin(), generators.end());
    detail::expr_parser p(detail::tokenize(src), [&names](const std::string &n) { return names.count(n) != 0; });
    return p.parse();
}

inline polynomial evaluate(const expr_node &n)
{
    switch (n.k) {
    case expr_node::kind::number:
        return polynomial(scalar(n.value));
    case expr_node::kind::symbol:
        if (n.name == "q") {
            return polynomial(scalar::q());
        }
        if (n.name == "j") {
            return polynomial(scalar::j());
        }
        return polynomial::gen(n.name);
    case expr_node::kind::negate:
        return -evaluate(n.kids[0]);
    case expr_node::kind::sum: {
        polynomial r;
        for (std::size_t i = 0; i < n.kids.size(); ++i) {
            polynomial k = evaluate(n.kids[i]);
            r += n.ops[i] == '-' ? -k : k;
        }
        return r;
    }
    case expr_node::kind::product: {
        polynomial r = evaluate(n.kids[0]);
        for (std::size_t i = 1; i < n.kids.size(); ++i) {
            polynomial k = evaluate(n.kids[i]);
            if (n.ops[i] == '/') {
                if (!k.is_constant() || k.is_zero()) {
                    throw parse_error(k.is_zero() ? "division by zero" : "division by a non-scalar",
                                      n.kids[i].offset);
                }
                r *= k.constant_term().inverse();
            } else {
                r = r * k;
            }
        }
        return r;
    }
    case expr_node::kind::power: {
        polynomial base = evaluate(n.kids[0]);
        if (n.exponent < 0) {
            if (!base.is_constant() || base.is_zero()) {
                throw parse_error("negative power of a non-scalar", n.offset);
            }
            return polynomial(base.constant_term().pow(n.exponent));
        }
        return base.pow(static_cast<unsigned>(n.exponent));
    }
    }
    return {};
}

inline polynomial parse_poly(std::string_view src, const std::vector<std::string> &generators = default_generator_tokens())
{
    return evaluate(parse(src, generators));
}

inline std::vector<std::string> generator_names(const alphabet &a)
{
    std::vector<std::string> r;
    for (const auto &g : a.generators()) {
        r.push_back(g.name);
    }
    return r;
}

inline scalar parse_scalar(std::string_view src)
{
    polynomial p = parse_poly(src, {});
    return p.constant_term();
}

enum class print_style { text, unicode, latex };

inline std::string display_name(const std::string &name, print_style st)
{
    static const std::map<std::string, std::pair<std::string, std::string>> names{
        {"th", {"θ", "\\theta"}},
        {"xinv", {"x⁻¹", "x^{-1}"}},
        {"dx", {"dx", "{\\sf d}x"}},
        {"dth", {"dθ", "{\\sf d}\\theta"}},
        {"d2x", {"d²x", "{\\sf d}^2x"}},
        {"d2th", {"d²θ", "{\\sf d}^2\\theta"}},
        {"b", {"β", "\\beta"}},
        {"g", {"γ", "\\gamma"}},
        {"dT", {"dT", "d"}},
        {"ainv", {"a⁻¹", "a^{-1}"}},
        {"dTinv", {"dT⁻¹", "d^{-1}"}},
        {"phi", {"φ", "\\varphi"}},
        {"px", {"∂x", "\\partial_x"}},
        {"pth", {"∂θ", "\\partial_\\theta"}},
    };
    if (st == print_style::text) {
        return name;
    }
    auto it = names.find(name);
    if (it == names.end()) {
        return name;
    }
    return st == print_style::unicode ? it->second.first : it->second.second;
}

inline std::string word_display(const word &w, print_style st)
{
    std::string sep = st == print_style::latex ? " \\, " : (st == print_style::unicode ? "·" : "*");
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i != 0 ? sep : "") + display_name(sym_name(w[i]), st);
    }
    return s;
}

// Terms in descending term order; coefficient signs are pulled out.
inline std::string print(const polynomial &p, const term_order &ord, print_style st = print_style::text)
{
    if (p.is_zero()) {
        return "0";
    }
    bool latex = st == print_style::latex;
    std::string out;
    bool first = true;
    for (const word &w : ord.descending(p)) {
        coeff_text c = format_coeff(p.coeff(w), latex);
        std::string body;
        if (w.empty()) {
            body = c.magnitude;
            if (!latex && body.size() > 1 && body.front() == '(' && body.back() == ')' && p.size() == 1) {
                body = body.substr(1, body.size() - 2);
            }
        } else if (c.magnitude == "1") {
            body = word_display(w, st);
        } else {
            body = c.magnitude + (latex ? " \\, " : (st == print_style::unicode ? "·" : "*")) + word_display(w, st);
        }
        if (first) {
            out += c.negative ? "-" : "";
        } else {
            out += c.negative ? " - " : " + ";
        }
        out += body;
        first = false;
    }
    return out;
}

inline nlohmann::json poly_to_json(const polynomial &p, const term_order &ord)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const word &w : ord.descending(p)) {
        nlohmann::json names = nlohmann::json::array();
        for (symbol s : w) {
            names.push_back(sym_name(s));
        }
        terms.push_back({{"coeff", to_string(p.coeff(w))}, {"word", names}});
    }
    return terms;
}

inline polynomial poly_from_json(const nlohmann::json &terms)
{
    polynomial p;
    for (const auto &t : terms) {
        word w;
        for (const auto &n : t.at("word")) {
            w.push_back(sym(n.get<std::string>()));
        }
        p.add_term(w, parse_scalar(t.at("coeff").get<std::string>()));
    }
    return p;
}

} // namespace z3calc

#endif
