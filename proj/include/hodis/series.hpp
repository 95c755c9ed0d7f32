#ifndef HODIS_SERIES_HPP
#define HODIS_SERIES_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hodis/common.hpp"
#include "hodis/scalar.hpp"

namespace hodis {

// A neighbouring grid value u_{i+di, j+dj} relative to the generic element.
struct Sym {
    int di = 0;
    int dj = 0;
    friend auto operator<=>(const Sym&, const Sym&) = default;
};

// Product of symbol powers in canonical form: factors sorted by symbol,
// exponents positive.  Ordering between monomials is graded lexicographic.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial symbol(Sym s, int exp = 1) {
        Monomial m;
        if (exp > 0) m.f_.push_back({s, exp});
        return m;
    }

    bool is_one() const { return f_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [s, e] : f_) d += e;
        return d;
    }

    int radius() const {
        int r = 0;
        for (const auto& [s, e] : f_) r = std::max({r, std::abs(s.di), std::abs(s.dj)});
        return r;
    }

    int exponent_of(Sym s) const {
        for (const auto& [t, e] : f_)
            if (t == s) return e;
        return 0;
    }

    const std::vector<std::pair<Sym, int>>& factors() const { return f_; }

    Monomial operator*(const Monomial& o) const {
        Monomial out;
        out.f_.reserve(f_.size() + o.f_.size());
        auto a = f_.begin();
        auto b = o.f_.begin();
        while (a != f_.end() && b != o.f_.end()) {
            if (a->first == b->first) {
                out.f_.push_back({a->first, a->second + b->second});
                ++a;
                ++b;
            } else if (a->first < b->first) {
                out.f_.push_back(*a++);
            } else {
                out.f_.push_back(*b++);
            }
        }
        out.f_.insert(out.f_.end(), a, f_.end());
        out.f_.insert(out.f_.end(), b, o.f_.end());
        return out;
    }

    // all symbols shifted by the same offset; canonical order is preserved
    Monomial translated(int di, int dj) const {
        Monomial out = *this;
        for (auto& [s, e] : out.f_) {
            s.di += di;
            s.dj += dj;
        }
        return out;
    }

    // exponent of s lowered by one; requires exponent_of(s) > 0
    Monomial divided_by(Sym s) const {
        Monomial out = *this;
        for (auto it = out.f_.begin(); it != out.f_.end(); ++it) {
            if (it->first == s) {
                if (--it->second == 0) out.f_.erase(it);
                return out;
            }
        }
        throw std::logic_error("divided_by: symbol not present");
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da <=> db;
        return a.f_ <=> b.f_;
    }

private:
    std::vector<std::pair<Sym, int>> f_;
};

// Sparse polynomial over grid symbols with coefficients in S.  Canonical
// form: terms sorted, no stored zeros.
template <class S>
class Poly {
public:
    using Term = std::pair<Monomial, S>;

    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(S c) {
        Poly p;
        if (!ScalarOps<S>::is_zero(c)) p.t_.push_back({Monomial::one(), std::move(c)});
        return p;
    }
    static Poly symbol(Sym s, int exp = 1) {
        Poly p;
        p.t_.push_back({Monomial::symbol(s, exp), S(1)});
        return p;
    }
    static Poly term(Monomial m, S c) {
        Poly p;
        if (!ScalarOps<S>::is_zero(c)) p.t_.push_back({std::move(m), std::move(c)});
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    int max_degree() const {
        // graded order puts the highest degree last
        return t_.empty() ? 0 : t_.back().first.degree();
    }

    int radius() const {
        int r = 0;
        for (const auto& [m, c] : t_) r = std::max(r, m.radius());
        return r;
    }

    S coefficient(const Monomial& m) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        if (it != t_.end() && it->first == m) return it->second;
        return S(0);
    }

    Poly& operator+=(const Poly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        std::vector<Term> out;
        out.reserve(t_.size() + o.t_.size());
        auto a = t_.begin();
        auto b = o.t_.begin();
        while (a != t_.end() && b != o.t_.end()) {
            if (a->first == b->first) {
                S c = a->second + b->second;
                if (!ScalarOps<S>::is_zero(c)) out.push_back({a->first, std::move(c)});
                ++a;
                ++b;
            } else if (a->first < b->first) {
                out.push_back(*a++);
            } else {
                out.push_back(*b++);
            }
        }
        out.insert(out.end(), a, t_.end());
        out.insert(out.end(), b, o.t_.end());
        t_ = std::move(out);
        return *this;
    }

    Poly operator+(const Poly& o) const {
        Poly p = *this;
        p += o;
        return p;
    }

    Poly operator-() const {
        Poly p = *this;
        for (auto& [m, c] : p.t_) c = -c;
        return p;
    }

    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly operator-(const Poly& o) const {
        Poly p = *this;
        p -= o;
        return p;
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Term> prods;
        prods.reserve(t_.size() * o.t_.size());
        for (const auto& [ma, ca] : t_)
            for (const auto& [mb, cb] : o.t_) prods.push_back({ma * mb, ca * cb});
        std::sort(prods.begin(), prods.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        Poly out;
        out.t_.reserve(prods.size());
        for (auto& t : prods) {
            if (!out.t_.empty() && out.t_.back().first == t.first)
                out.t_.back().second += t.second;
            else
                out.t_.push_back(std::move(t));
        }
        out.prune();
        return out;
    }

    Poly scaled(const S& c) const {
        if (ScalarOps<S>::is_zero(c)) return Poly();
        Poly p = *this;
        for (auto& [m, v] : p.t_) v *= c;
        p.prune();
        return p;
    }

    // partial derivative with respect to one symbol
    Poly derivative(Sym s) const {
        Poly out;
        for (const auto& [m, c] : t_) {
            int e = m.exponent_of(s);
            if (e == 0) continue;
            out += Poly::term(m.divided_by(s), c * S(e));
        }
        return out;
    }

    Poly translated(int di, int dj) const {
        Poly p = *this;
        for (auto& [m, c] : p.t_) m = m.translated(di, dj);
        // the symbol order is translation invariant, so terms stay sorted
        return p;
    }

    // substitute u_s -> -u_s for every symbol
    Poly negated_symbols() const {
        Poly p = *this;
        for (auto& [m, c] : p.t_) {
            if (m.degree() % 2 == 1) c = -c;
        }
        return p;
    }

    void collect_symbols(std::vector<Sym>& out) const {
        for (const auto& [m, c] : t_)
            for (const auto& [s, e] : m.factors()) out.push_back(s);
    }

    // numeric evaluation with a symbol-value functor
    double eval(const std::function<double(Sym)>& value) const {
        double acc = 0.0;
        for (const auto& [m, c] : t_) {
            double prod = ScalarOps<S>::to_double(c);
            for (const auto& [s, e] : m.factors()) {
                double v = value(s);
                for (int k = 0; k < e; ++k) prod *= v;
            }
            acc += prod;
        }
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

private:
    void prune() {
        t_.erase(std::remove_if(t_.begin(), t_.end(),
                                [](const Term& t) { return ScalarOps<S>::is_zero(t.second); }),
                 t_.end());
    }

    std::vector<Term> t_;
};

// Truncation shape of a bivariate power series: slots (a, b) with
// a < order_g, b < order_a and a + b < cap are represented.
struct SeriesShape {
    int order_g = 1;
    int order_a = 1;
    int cap = 0;  // 0 means no extra cap beyond the rectangle

    int effective_cap() const { return cap > 0 ? cap : order_g + order_a - 1; }

    bool contains(int a, int b) const {
        return a >= 0 && b >= 0 && a < order_g && b < order_a && a + b < effective_cap();
    }

    friend bool operator==(const SeriesShape&, const SeriesShape&) = default;
};

// Truncated power series in the coupling parameter and the scaled reaction
// parameter, with polynomial coefficients over grid symbols.  Products
// discard orders beyond the shape.
template <class S>
class Series2 {
public:
    Series2() : shape_{1, 1, 0}, c_(1) {}
    explicit Series2(SeriesShape shape)
        : shape_(shape),
          c_(static_cast<std::size_t>(shape.order_g) * static_cast<std::size_t>(shape.order_a)) {}

    const SeriesShape& shape() const { return shape_; }

    static Series2 from_poly(SeriesShape shape, Poly<S> p) {
        Series2 s(shape);
        s.at(0, 0) = std::move(p);
        return s;
    }

    Poly<S>& at(int a, int b) { return c_[static_cast<std::size_t>(a) * shape_.order_a + b]; }
    const Poly<S>& at(int a, int b) const {
        return c_[static_cast<std::size_t>(a) * shape_.order_a + b];
    }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    Series2& operator+=(const Series2& o) {
        HODIS_REQUIRE(shape_ == o.shape_, "series shape mismatch");
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series2 operator+(const Series2& o) const {
        Series2 s = *this;
        s += o;
        return s;
    }
    Series2 operator-() const {
        Series2 s = *this;
        for (auto& p : s.c_) p = -p;
        return s;
    }
    Series2& operator-=(const Series2& o) { return *this += -o; }
    Series2 operator-(const Series2& o) const {
        Series2 s = *this;
        s -= o;
        return s;
    }

    Series2 scaled(const S& c) const {
        Series2 s = *this;
        for (auto& p : s.c_) p = p.scaled(c);
        return s;
    }

    // product truncated to `shape`, reading only the slots each factor defines
    static Series2 mul(const Series2& x, const Series2& y, SeriesShape shape) {
        Series2 out(shape);
        for (int a = 0; a < shape.order_g; ++a)
            for (int b = 0; b < shape.order_a; ++b) {
                if (!shape.contains(a, b)) continue;
                Poly<S> acc;
                for (int a1 = 0; a1 <= a; ++a1)
                    for (int b1 = 0; b1 <= b; ++b1) {
                        if (!x.shape_.contains(a1, b1)) continue;
                        if (!y.shape_.contains(a - a1, b - b1)) continue;
                        const Poly<S>& px = x.at(a1, b1);
                        if (px.is_zero()) continue;
                        const Poly<S>& py = y.at(a - a1, b - b1);
                        if (py.is_zero()) continue;
                        acc += px * py;
                    }
                out.at(a, b) = std::move(acc);
            }
        return out;
    }

    Series2 operator*(const Series2& o) const { return mul(*this, o, shape_); }

    // multiplication by the series variables
    Series2 shifted_coupling(int k = 1) const {
        Series2 s(shape_);
        for (int a = 0; a + k < shape_.order_g; ++a)
            for (int b = 0; b < shape_.order_a; ++b) {
                if (!shape_.contains(a + k, b) || !shape_.contains(a, b)) continue;
                s.at(a + k, b) = at(a, b);
            }
        return s;
    }
    Series2 shifted_reaction(int k = 1) const {
        Series2 s(shape_);
        for (int a = 0; a < shape_.order_g; ++a)
            for (int b = 0; b + k < shape_.order_a; ++b) {
                if (!shape_.contains(a, b + k) || !shape_.contains(a, b)) continue;
                s.at(a, b + k) = at(a, b);
            }
        return s;
    }

    Series2 derivative(Sym sym) const {
        Series2 s(shape_);
        for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k].derivative(sym);
        return s;
    }

    Series2 translated(int di, int dj) const {
        Series2 s(shape_);
        for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k].translated(di, dj);
        return s;
    }

    Series2 restricted(SeriesShape shape) const {
        Series2 s(shape);
        for (int a = 0; a < shape.order_g; ++a)
            for (int b = 0; b < shape.order_a; ++b)
                if (shape.contains(a, b) && shape_.contains(a, b)) s.at(a, b) = at(a, b);
        return s;
    }

    void collect_symbols(std::vector<Sym>& out) const {
        for (const auto& p : c_) p.collect_symbols(out);
    }

    friend bool operator==(const Series2& a, const Series2& b) {
        return a.shape_ == b.shape_ && a.c_ == b.c_;
    }

private:
    SeriesShape shape_;
    std::vector<Poly<S>> c_;
};

template <class S>
std::vector<Sym> sorted_unique_symbols(const Series2<S>& s) {
    std::vector<Sym> syms;
    s.collect_symbols(syms);
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    return syms;
}

} // namespace hodis

#endif
