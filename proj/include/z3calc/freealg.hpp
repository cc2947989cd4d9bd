#ifndef Z3CALC_FREEALG_HPP
#define Z3CALC_FREEALG_HPP

#include <z3calc/scalars.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace z3calc
{

using symbol = std::uint32_t;
using word = std::vector<symbol>;

// Process-wide interning of generator names.
class symbol_table
{
public:
    static symbol_table &instance()
    {
        static symbol_table t;
        return t;
    }

    symbol intern(std::string_view name)
    {
        std::lock_guard<std::mutex> lock(m_);
        auto it = ids_.find(std::string(name));
        if (it != ids_.end()) {
            return it->second;
        }
        auto id = static_cast<symbol>(names_.size());
        names_.emplace_back(name);
        ids_.emplace(names_.back(), id);
        return id;
    }
    std::optional<symbol> find(std::string_view name) const
    {
        std::lock_guard<std::mutex> lock(m_);
        auto it = ids_.find(std::string(name));
        if (it == ids_.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    const std::string &name(symbol s) const
    {
        std::lock_guard<std::mutex> lock(m_);
        return names_.at(s);
    }
    std::size_t size() const
    {
        std::lock_guard<std::mutex> lock(m_);
        return names_.size();
    }

private:
    mutable std::mutex m_;
    std::deque<std::string> names_;
    std::unordered_map<std::string, symbol> ids_;
};

inline symbol sym(std::string_view name)
{
    return symbol_table::instance().intern(name);
}

inline const std::string &sym_name(symbol s)
{
    return symbol_table::instance().name(s);
}

inline word make_word(std::initializer_list<std::string_view> names)
{
    word w;
    for (auto n : names) {
        w.push_back(sym(n));
    }
    return w;
}

inline word concat(const word &a, const word &b)
{
    word r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline std::string word_text(const word &w, std::string_view sep = "*")
{
    if (w.empty()) {
        return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            s += sep;
        }
        s += sym_name(w[i]);
    }
    return s;
}

struct word_hash {
    std::size_t operator()(const word &w) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (symbol s : w) {
            h = (h ^ s) * 1099511628211ULL;
        }
        return h;
    }
};

class unknown_generator : public algebra_error
{
public:
    explicit unknown_generator(const std::string &name) : algebra_error("unknown generator '" + name + "'") {}
};

struct generator_info {
    std::string name;
    int grade = 0;  // declared Z3 grade
    int omega = 0;  // effective commutation weight, used for all grading
    std::optional<int> nilpotency;
    std::optional<std::string> d_image; // generator name, or "zero"
    std::optional<scalar> d_passage;
};

inline int mod3(long v)
{
    return static_cast<int>(((v % 3) + 3) % 3);
}

class alphabet
{
public:
    alphabet() = default;
    alphabet(std::initializer_list<generator_info> gens)
    {
        for (const auto &g : gens) {
            add(g);
        }
    }

    void add(generator_info g)
    {
        symbol s = sym(g.name);
        if (index_.count(s) != 0) {
            throw algebra_error("duplicate generator '" + g.name + "'");
        }
        g.grade = mod3(g.grade);
        g.omega = mod3(g.omega);
        index_.emplace(s, gens_.size());
        gens_.push_back(std::move(g));
    }

    bool contains(symbol s) const
    {
        return index_.count(s) != 0;
    }
    const generator_info &info(symbol s) const
    {
        auto it = index_.find(s);
        if (it == index_.end()) {
            throw unknown_generator(sym_name(s));
        }
        return gens_[it->second];
    }
    const std::vector<generator_info> &generators() const
    {
        return gens_;
    }
    std::vector<symbol> symbols() const
    {
        std::vector<symbol> r;
        for (const auto &g : gens_) {
            r.push_back(sym(g.name));
        }
        return r;
    }
    std::size_t size() const
    {
        return gens_.size();
    }

    int grade(const word &w) const
    {
        long t = 0;
        for (symbol s : w) {
            t += info(s).omega;
        }
        return mod3(t);
    }

private:
    std::vector<generator_info> gens_;
    std::unordered_map<symbol, std::size_t> index_;
};

// Finite sum of scalar multiples of words; zero terms are never stored.
class polynomial
{
public:
    using map_type = std::map<word, scalar>;

    polynomial() = default;
    polynomial(scalar c)
    {
        add_term({}, std::move(c));
    }
    polynomial(long c) : polynomial(scalar(c)) {}
    polynomial(const word &w, scalar c = scalar(1))
    {
        add_term(w, std::move(c));
    }

    static polynomial gen(std::string_view name)
    {
        return polynomial(word{sym(name)});
    }

    bool is_zero() const
    {
        return terms_.empty();
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    const map_type &terms() const
    {
        return terms_;
    }
    scalar coeff(const word &w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? scalar() : it->second;
    }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    scalar constant_term() const
    {
        return coeff({});
    }

    void add_term(const word &w, const scalar &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    polynomial operator-() const
    {
        polynomial r;
        for (const auto &[w, c] : terms_) {
            r.terms_.emplace(w, -c);
        }
        return r;
    }
    polynomial &operator+=(const polynomial &o)
    {
        for (const auto &[w, c] : o.terms_) {
            add_term(w, c);
        }
        return *this;
    }
    polynomial &operator-=(const polynomial &o)
    {
        for (const auto &[w, c] : o.terms_) {
            add_term(w, -c);
        }
        return *this;
    }
    polynomial &operator*=(const scalar &s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[w, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial &b)
    {
        return a += b;
    }
    friend polynomial operator-(polynomial a, const polynomial &b)
    {
        return a -= b;
    }
    friend polynomial operator*(polynomial a, const scalar &s)
    {
        return a *= s;
    }
    friend polynomial operator*(const scalar &s, polynomial a)
    {
        return a *= s;
    }
    friend polynomial operator*(const polynomial &a, const polynomial &b)
    {
        polynomial r;
        for (const auto &[wa, ca] : a.terms_) {
            for (const auto &[wb, cb] : b.terms_) {
                r.add_term(concat(wa, wb), ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const polynomial &a, const polynomial &b)
    {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const polynomial &a, const polynomial &b)
    {
        return !(a == b);
    }

    polynomial pow(unsigned n) const
    {
        polynomial r(1);
        for (unsigned i = 0; i < n; ++i) {
            r = r * *this;
        }
        return r;
    }

    template <typename F>
    polynomial map_coeffs(F &&f) const
    {
        polynomial r;
        for (const auto &[w, c] : terms_) {
            r.add_term(w, f(c));
        }
        return r;
    }

    // Minimal number of occurrences of s over all terms.
    std::size_t min_count(symbol s) const
    {
        std::size_t best = SIZE_MAX;
        for (const auto &[w, c] : terms_) {
            best = std::min<std::size_t>(best, static_cast<std::size_t>(std::count(w.begin(), w.end(), s)));
        }
        return terms_.empty() ? 0 : best;
    }

private:
    map_type terms_;
};

// Common grade of all words, or nullopt if the polynomial is not homogeneous.
inline std::optional<int> homogeneous_grade(const polynomial &p, const alphabet &a)
{
    std::optional<int> g;
    for (const auto &[w, c] : p.terms()) {
        int v = a.grade(w);
        if (g && *g != v) {
            return std::nullopt;
        }
        g = v;
    }
    return g;
}

inline polynomial substitute(const polynomial &p, const std::map<symbol, polynomial> &images)
{
    polynomial out;
    for (const auto &[w, c] : p.terms()) {
        polynomial t(c);
        for (symbol s : w) {
            auto it = images.find(s);
            t = t * (it == images.end() ? polynomial(word{s}) : it->second);
        }
        out += t;
    }
    return out;
}

// Algebra map given by images of generators; unlisted generators are fixed.
class graded_hom
{
public:
    graded_hom() = default;
    explicit graded_hom(std::map<symbol, polynomial> images) : images_(std::move(images)) {}

    void set(std::string_view name, polynomial image)
    {
        images_[sym(name)] = std::move(image);
    }
    const std::map<symbol, polynomial> &images() const
    {
        return images_;
    }
    polynomial operator()(const polynomial &p) const
    {
        return substitute(p, images_);
    }

    // Generators whose image is not homogeneous of the generator's weight.
    std::vector<std::string> grade_violations(const alphabet &source, const alphabet &target) const
    {
        std::vector<std::string> bad;
        for (const auto &[s, img] : images_) {
            if (!source.contains(s) || img.is_zero()) {
                continue;
            }
            auto g = homogeneous_grade(img, target);
            if (!g || *g != source.info(s).omega) {
                bad.push_back(sym_name(s));
            }
        }
        return bad;
    }

private:
    std::map<symbol, polynomial> images_;
};

} // namespace z3calc

#endif
