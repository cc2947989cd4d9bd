#ifndef Z3CALC_SCALARS_HPP
#define Z3CALC_SCALARS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace z3calc
{

using rational = mpq_class;

class algebra_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public algebra_error
{
public:
    division_by_zero() : algebra_error("division by zero") {}
};

class pole_error : public algebra_error
{
public:
    using algebra_error::algebra_error;
};

inline std::string to_string(const rational &r)
{
    return r.get_str();
}

// r0 + r1*j in Q(j), with j^2 + j + 1 = 0.
class cyclotomic
{
public:
    cyclotomic() = default;
    cyclotomic(long v) : re_(v) {}
    cyclotomic(rational re, rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static cyclotomic j()
    {
        return {0, 1};
    }

    const rational &re() const
    {
        return re_;
    }
    const rational &im() const
    {
        return im_;
    }

    bool is_zero() const
    {
        return sgn(re_) == 0 && sgn(im_) == 0;
    }
    bool is_one() const
    {
        return re_ == 1 && sgn(im_) == 0;
    }
    bool is_rational() const
    {
        return sgn(im_) == 0;
    }

    cyclotomic operator-() const
    {
        return {-re_, -im_};
    }
    cyclotomic &operator+=(const cyclotomic &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    cyclotomic &operator-=(const cyclotomic &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    cyclotomic &operator*=(const cyclotomic &o)
    {
        if (o.is_rational()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        // (a + bj)(c + dj) = ac - bd + (ad + bc - bd) j
        rational bd = im_ * o.im_;
        rational nre = re_ * o.re_ - bd;
        rational nim = re_ * o.im_ + im_ * o.re_ - bd;
        re_ = std::move(nre);
        im_ = std::move(nim);
        return *this;
    }
    // Galois conjugate j -> j^2.
    cyclotomic conj() const
    {
        return {re_ - im_, -im_};
    }
    rational norm() const
    {
        return re_ * re_ - re_ * im_ + im_ * im_;
    }
    cyclotomic inverse() const
    {
        if (is_zero()) {
            throw division_by_zero();
        }
        rational n = norm();
        cyclotomic c = conj();
        return {c.re_ / n, c.im_ / n};
    }
    cyclotomic &operator/=(const cyclotomic &o)
    {
        return *this *= o.inverse();
    }

    friend cyclotomic operator+(cyclotomic a, const cyclotomic &b)
    {
        return a += b;
    }
    friend cyclotomic operator-(cyclotomic a, const cyclotomic &b)
    {
        return a -= b;
    }
    friend cyclotomic operator*(cyclotomic a, const cyclotomic &b)
    {
        return a *= b;
    }
    friend cyclotomic operator/(cyclotomic a, const cyclotomic &b)
    {
        return a /= b;
    }
    friend bool operator==(const cyclotomic &a, const cyclotomic &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const cyclotomic &a, const cyclotomic &b)
    {
        return !(a == b);
    }

private:
    rational re_{0};
    rational im_{0};
};

// Dense polynomial in q over Q(j), lowest degree first, no trailing zeros.
class qpoly
{
public:
    qpoly() = default;
    qpoly(cyclotomic c)
    {
        if (!c.is_zero()) {
            c_.push_back(std::move(c));
        }
    }
    explicit qpoly(std::vector<cyclotomic> c) : c_(std::move(c))
    {
        trim();
    }

    static qpoly q()
    {
        return qpoly(std::vector<cyclotomic>{0, 1});
    }
    static qpoly monomial(cyclotomic c, std::size_t k)
    {
        std::vector<cyclotomic> v(k + 1);
        v[k] = std::move(c);
        return qpoly(std::move(v));
    }

    bool is_zero() const
    {
        return c_.empty();
    }
    bool is_one() const
    {
        return c_.size() == 1 && c_[0].is_one();
    }
    bool is_constant() const
    {
        return c_.size() <= 1;
    }
    int degree() const
    {
        return static_cast<int>(c_.size()) - 1;
    }
    const cyclotomic &lead() const
    {
        return c_.back();
    }
    const std::vector<cyclotomic> &coeffs() const
    {
        return c_;
    }
    cyclotomic coeff(std::size_t k) const
    {
        return k < c_.size() ? c_[k] : cyclotomic{};
    }
    std::size_t term_count() const
    {
        std::size_t n = 0;
        for (const auto &c : c_) {
            n += c.is_zero() ? 0 : 1;
        }
        return n;
    }
    // Lowest k with a nonzero coefficient.
    std::size_t order() const
    {
        std::size_t k = 0;
        while (k < c_.size() && c_[k].is_zero()) {
            ++k;
        }
        return k;
    }

    cyclotomic eval(const rational &q0) const
    {
        cyclotomic acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= cyclotomic(q0);
            acc += *it;
        }
        return acc;
    }

    qpoly operator-() const
    {
        qpoly r(*this);
        for (auto &c : r.c_) {
            c = -c;
        }
        return r;
    }
    qpoly &operator+=(const qpoly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }
    qpoly &operator-=(const qpoly &o)
    {
        return *this += -o;
    }
    friend qpoly operator+(qpoly a, const qpoly &b)
    {
        return a += b;
    }
    friend qpoly operator-(qpoly a, const qpoly &b)
    {
        return a -= b;
    }
    friend qpoly operator*(const qpoly &a, const qpoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<cyclotomic> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < b.c_.size(); ++k) {
                r[i + k] += a.c_[i] * b.c_[k];
            }
        }
        return qpoly(std::move(r));
    }
    qpoly scaled(const cyclotomic &s) const
    {
        qpoly r(*this);
        for (auto &c : r.c_) {
            c *= s;
        }
        r.trim();
        return r;
    }
    qpoly monic() const
    {
        return is_zero() ? qpoly{} : scaled(lead().inverse());
    }
    qpoly shifted_down(std::size_t k) const
    {
        return qpoly(std::vector<cyclotomic>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    static std::pair<qpoly, qpoly> divmod(const qpoly &a, const qpoly &b)
    {
        if (b.is_zero()) {
            throw division_by_zero();
        }
        std::vector<cyclotomic> r = a.c_;
        std::vector<cyclotomic> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
        cyclotomic inv = b.lead().inverse();
        for (std::size_t i = r.size(); i >= b.c_.size() && i > 0; --i) {
            const cyclotomic &top = r[i - 1];
            if (top.is_zero()) {
                continue;
            }
            cyclotomic f = top * inv;
            std::size_t shift = i - b.c_.size();
            for (std::size_t k = 0; k < b.c_.size(); ++k) {
                r[shift + k] -= f * b.c_[k];
            }
            quo[shift] = f;
        }
        r.resize(std::min(r.size(), b.c_.size()));
        return {qpoly(std::move(quo)), qpoly(std::move(r))};
    }

    static qpoly gcd(qpoly a, qpoly b)
    {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const qpoly &a, const qpoly &b)
    {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const qpoly &a, const qpoly &b)
    {
        return !(a == b);
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<cyclotomic> c_;
};

// Element of Q(j)(q): reduced fraction with monic denominator.
class scalar
{
public:
    scalar() : den_(cyclotomic(1)) {}
    scalar(long v) : num_(cyclotomic(v)), den_(cyclotomic(1)) {}
    scalar(rational v) : num_(cyclotomic(std::move(v))), den_(cyclotomic(1)) {}
    scalar(cyclotomic v) : num_(std::move(v)), den_(cyclotomic(1)) {}
    scalar(qpoly num, qpoly den) : num_(std::move(num)), den_(std::move(den))
    {
        normalize();
    }

    static scalar q()
    {
        return scalar(qpoly::q(), cyclotomic(1));
    }
    static scalar j()
    {
        return scalar(cyclotomic::j());
    }

    const qpoly &num() const
    {
        return num_;
    }
    const qpoly &den() const
    {
        return den_;
    }
    bool is_zero() const
    {
        return num_.is_zero();
    }
    bool is_one() const
    {
        return num_.is_one() && den_.is_one();
    }
    // Free of q.
    bool is_constant() const
    {
        return num_.is_constant() && den_.is_constant();
    }
    cyclotomic constant_value() const
    {
        return num_.is_zero() ? cyclotomic{} : num_.coeffs()[0];
    }

    scalar operator-() const
    {
        scalar r(*this);
        r.num_ = -r.num_;
        return r;
    }
    scalar &operator+=(const scalar &o)
    {
        if (o.is_zero()) {
            return *this;
        }
        if (den_ == o.den_) {
            num_ += o.num_;
            if (!den_.is_one()) {
                normalize();
            } else if (num_.is_zero()) {
                den_ = qpoly(cyclotomic(1));
            }
            return *this;
        }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    scalar &operator-=(const scalar &o)
    {
        return *this += -o;
    }
    scalar &operator*=(const scalar &o)
    {
        if (is_zero()) {
            return *this;
        }
        if (o.is_zero()) {
            return *this = scalar();
        }
        num_ = num_ * o.num_;
        if (!o.den_.is_one()) {
            den_ = den_ * o.den_;
        }
        if (!den_.is_one()) {
            normalize();
        }
        return *this;
    }
    scalar inverse() const
    {
        if (is_zero()) {
            throw division_by_zero();
        }
        return scalar(den_, num_);
    }
    scalar &operator/=(const scalar &o)
    {
        return *this *= o.inverse();
    }
    scalar pow(long n) const
    {
        scalar base = n < 0 ? inverse() : *this;
        unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
        scalar r(1);
        while (e != 0) {
            if ((e & 1U) != 0) {
                r *= base;
            }
            e >>= 1U;
            if (e != 0) {
                base *= base;
            }
        }
        return r;
    }

    // Substitute q = q0; the result is free of q.
    scalar specialize_q(const rational &q0) const
    {
        cyclotomic d = den_.eval(q0);
        if (d.is_zero()) {
            throw pole_error("pole at q = " + to_string(q0));
        }
        return scalar(num_.eval(q0) / d);
    }

    friend scalar operator+(scalar a, const scalar &b)
    {
        return a += b;
    }
    friend scalar operator-(scalar a, const scalar &b)
    {
        return a -= b;
    }
    friend scalar operator*(scalar a, const scalar &b)
    {
        return a *= b;
    }
    friend scalar operator/(scalar a, const scalar &b)
    {
        return a /= b;
    }
    friend bool operator==(const scalar &a, const scalar &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const scalar &a, const scalar &b)
    {
        return !(a == b);
    }

private:
    void normalize()
    {
        if (den_.is_zero()) {
            throw division_by_zero();
        }
        if (num_.is_zero()) {
            den_ = qpoly(cyclotomic(1));
            return;
        }
        if (den_.term_count() == 1) {
            // Monomial denominator: only a power of q can cancel.
            std::size_t k = std::min(num_.order(), den_.order());
            if (k != 0) {
                num_ = num_.shifted_down(k);
                den_ = den_.shifted_down(k);
            }
        } else {
            qpoly g = qpoly::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = qpoly::divmod(num_, g).first;
                den_ = qpoly::divmod(den_, g).first;
            }
        }
        if (!den_.lead().is_one()) {
            cyclotomic inv = den_.lead().inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    qpoly num_;
    qpoly den_;
};

namespace detail
{

struct signed_text {
    bool negative = false;
    std::string text;
    bool compound = false;
};

inline std::string abs_str(const rational &r)
{
    return to_string(abs(r));
}

inline signed_text cyclotomic_text(const cyclotomic &c, bool latex)
{
    const rational &a = c.re();
    const rational &b = c.im();
    auto with_unit = [&](const rational &m, const char *unit) {
        return m == 1 ? std::string(unit) : abs_str(m) + (latex ? std::string(" ") : std::string("*")) + unit;
    };
    const char *j1 = "j";
    const char *j2 = "j^2";
    if (sgn(b) == 0) {
        return {sgn(a) < 0, abs_str(a), false};
    }
    if (sgn(a) == 0) {
        return {sgn(b) < 0, with_unit(abs(b), j1), false};
    }
    if (a == b) {
        // a(1 + j) = -a j^2
        return {sgn(a) > 0, with_unit(abs(a), j2), false};
    }
    std::string s = to_string(a) + (sgn(b) < 0 ? " - " : " + ") + with_unit(abs(b), j1);
    return {false, s, true};
}

inline std::string join_signed(const std::vector<signed_text> &terms)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            out += terms[i].negative ? "-" : "";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].text;
    }
    return out.empty() ? "0" : out;
}

inline std::vector<signed_text> qpoly_terms(const qpoly &p, bool latex)
{
    std::vector<signed_text> terms;
    const auto &c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) {
            continue;
        }
        signed_text ct = cyclotomic_text(c[k], latex);
        if (k == 0) {
            if (ct.compound) {
                terms.push_back({false, ct.text, false});
            } else {
                terms.push_back(ct);
            }
            continue;
        }
        std::string qk = k == 1 ? "q" : (latex ? "q^{" + std::to_string(k) + "}" : "q^" + std::to_string(k));
        std::string sep = latex ? " " : "*";
        if (ct.compound) {
            std::string open = latex ? "\\left(" : "(";
            std::string close = latex ? "\\right)" : ")";
            terms.push_back({false, open + ct.text + close + sep + qk, false});
        } else {
            terms.push_back({ct.negative, ct.text == "1" ? qk : ct.text + sep + qk, false});
        }
    }
    return terms;
}

inline std::string latex_j(std::string s)
{
    for (std::size_t p = s.find("j^2"); p != std::string::npos; p = s.find("j^2", p + 1)) {
        s.replace(p, 3, "j^{2}");
    }
    return s;
}

} // namespace detail

// Coefficient split into sign and magnitude for printing as a term prefix.
// A magnitude of "1" means the coefficient is +-1.
struct coeff_text {
    bool negative = false;
    std::string magnitude;
};

inline coeff_text format_coeff(const scalar &s, bool latex = false)
{
    auto num_terms = detail::qpoly_terms(s.num(), latex);
    auto wrap = [&](const std::string &t) { return latex ? "\\left(" + t + "\\right)" : "(" + t + ")"; };
    coeff_text out;
    std::string num_text;
    if (num_terms.size() == 1 && !num_terms[0].compound && num_terms[0].text.find(" + ") == std::string::npos
        && num_terms[0].text.find(" - ") == std::string::npos) {
        out.negative = num_terms[0].negative;
        num_text = num_terms[0].text;
    } else {
        num_text = wrap(detail::join_signed(num_terms));
    }
    if (s.den().is_one()) {
        out.magnitude = num_text;
    } else {
        auto den_terms = detail::qpoly_terms(s.den(), latex);
        std::string den_text = detail::join_signed(den_terms);
        bool simple_den = den_terms.size() == 1 && !den_terms[0].negative;
        if (latex) {
            bool wrapped = num_text.rfind("\\left(", 0) == 0;
            out.magnitude = "\\frac{" + (wrapped ? detail::join_signed(num_terms) : num_text) + "}{" + den_text + "}";
        } else {
            out.magnitude = num_text + "/" + (simple_den ? den_text : wrap(den_text));
        }
    }
    if (latex) {
        out.magnitude = detail::latex_j(out.magnitude);
    }
    return out;
}

inline std::string to_string(const scalar &s)
{
    if (s.is_zero()) {
        return "0";
    }
    coeff_text c = format_coeff(s);
    std::string m = c.magnitude;
    if (s.den().is_one() && m.size() > 1 && m.front() == '(' && m.back() == ')') {
        m = m.substr(1, m.size() - 2);
    }
    return (c.negative ? "-" : "") + m;
}

inline std::string to_latex(const scalar &s)
{
    if (s.is_zero()) {
        return "0";
    }
    coeff_text c = format_coeff(s, true);
    return (c.negative ? "-" : "") + c.magnitude;
}

inline std::size_t hash_value(const scalar &s)
{
    return std::hash<std::string>{}(to_string(s));
}

} // namespace z3calc

#endif
