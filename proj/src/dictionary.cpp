#include "hodis/dictionary.hpp"

#include <cmath>

#include "hodis/correction.hpp"

namespace hodis {

Poly<Rational> sym_poly(int di, int dj, int power) {
    return Poly<Rational>::symbol(Sym{di, dj}, power);
}

Poly<Rational> u00_power(int power) { return Poly<Rational>::symbol(Sym{0, 0}, power); }

namespace {

Rational weight_to_rational(double w) {
    // stencil tables hold halves and integers only
    long long twice = static_cast<long long>(std::llround(2.0 * w));
    return Rational(twice, 2);
}

} // namespace

Poly<Rational> stencil_expansion(StencilId id, int power) {
    Poly<Rational> p;
    for (const auto& s : stencil_weights(id))
        p += Poly<Rational>::symbol(Sym{s.di, s.dj}, power).scaled(weight_to_rational(s.w));
    return p;
}

Poly<Rational> stencil_compose_expansion(StencilId outer, StencilId inner) {
    Poly<Rational> p;
    for (const auto& s : stencil_weights(outer))
        p += stencil_expansion(inner).translated(s.di, s.dj).scaled(weight_to_rational(s.w));
    return p;
}

namespace {

using P = Poly<Rational>;
using Id = StencilId;

P frac(long long n, long long d, const P& p) { return p.scaled(Rational(n, d)); }

// third-order mixed group, scaled by 1/720
P group_coupling2_reaction() {
    P u1 = u00_power(1);
    P u2 = u00_power(2);
    P d2 = stencil_expansion(Id::delta2);
    P d4 = stencil_expansion(Id::delta4);
    P dxy = stencil_expansion(Id::delta2x_delta2y);
    P d2x = stencil_expansion(Id::delta2x);
    P d2y = stencil_expansion(Id::delta2y);
    P d2sq = stencil_expansion(Id::delta2, 2);
    P d2xsq = stencil_expansion(Id::delta2x, 2);
    P d2ysq = stencil_expansion(Id::delta2y, 2);
    P mdx = stencil_expansion(Id::mu_delta_x);
    P mdy = stencil_expansion(Id::mu_delta_y);
    P mdx2 = stencil_expansion(Id::mu_delta_x, 2);
    P mdy2 = stencil_expansion(Id::mu_delta_y, 2);
    P md3x = stencil_expansion(Id::mu_delta3_x);
    P md3y = stencil_expansion(Id::mu_delta3_y);
    P mdy_d2x = stencil_compose_expansion(Id::mu_delta_y, Id::delta2x);
    P mdx_d2y = stencil_compose_expansion(Id::mu_delta_x, Id::delta2y);
    P d2c = stencil_expansion(Id::delta2, 3);
    P d4c = stencil_expansion(Id::delta4, 3);
    P dxyc = stencil_expansion(Id::delta2x_delta2y, 3);

    P b = frac(222, 1, u2 * d2) + frac(24, 1, u2 * d4) + frac(-3, 1, u2 * dxy);
    b += frac(-102, 1, u1 * d2sq) + frac(36, 1, u1 * d2 * d2) + frac(6, 1, u1 * d2x * d2y);
    b += frac(-144, 1, u1 * (mdx * mdx + mdy * mdy));
    b += frac(-6, 1, mdy_d2x * mdy2 + mdx_d2y * mdx2);
    b += frac(12, 1, mdx2 * mdx + mdy2 * mdy);
    b += frac(12, 1, md3x * mdx2 + md3y * mdy2);
    b += frac(-3, 2, d2sq * dxy) + frac(3, 1, d4 * d2sq);
    b += frac(-3, 1, d2xsq * d2y + d2ysq * d2x);
    b += frac(9, 1, d2sq * d2);
    b += frac(-8, 1, d4c) + frac(-6, 1, d2c) + dxyc;
    return frac(1, 720, b);
}

// third-order reaction-squared group, scaled by 1/240
P group_coupling_reaction2() {
    P u2 = u00_power(2);
    P u4 = u00_power(4);
    P d2 = stencil_expansion(Id::delta2);
    P d2c = stencil_expansion(Id::delta2, 3);
    P d2q = stencil_expansion(Id::delta2, 5);
    P b = frac(3, 1, u4 * d2) + frac(6, 1, u2 * (d2 - d2c)) + frac(-2, 1, d2c) + frac(3, 1, d2q);
    return frac(1, 240, b);
}

} // namespace

Poly<Rational> analytic_evolution_cell(int a, int b) {
    if (a == 1 && b == 0) return stencil_expansion(Id::delta2);
    if (a == 0 && b == 1) return u00_power(1) - u00_power(3);
    if (a == 0) return {};  // decoupled elements evolve exactly by the reaction
    if (a == 2 && b == 0) return frac(-1, 12, stencil_expansion(Id::delta4));
    if (a == 1 && b == 1)
        return frac(1, 12, stencil_expansion(Id::delta2, 3)) -
               frac(3, 12, u00_power(2) * stencil_expansion(Id::delta2));
    if (a == 3 && b == 0) return frac(1, 90, stencil_expansion(Id::delta6));
    if (a == 2 && b == 1) return group_coupling2_reaction();
    if (a == 1 && b == 2) return group_coupling_reaction2();
    throw ValidationError("no closed-form evolution slot (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
}

std::vector<StencilTerm> dictionary_for_cell(int a, int b) {
    using Id = StencilId;
    std::vector<StencilTerm> d;
    auto add = [&](std::string name, P expansion, bool ambiguous = false) {
        d.push_back({std::move(name), std::move(expansion), ambiguous});
    };
    if (a == 1 && b == 0) {
        add("d2(u)", stencil_expansion(Id::delta2));
    } else if (a == 0 && b == 1) {
        add("u", u00_power(1));
        add("u^3", u00_power(3));
    } else if (a == 2 && b == 0) {
        add("d4(u)", stencil_expansion(Id::delta4));
    } else if (a == 1 && b == 1) {
        add("d2(u^3)", stencil_expansion(Id::delta2, 3));
        add("u^2 d2(u)", u00_power(2) * stencil_expansion(Id::delta2));
    } else if (a == 3 && b == 0) {
        add("d6(u)", stencil_expansion(Id::delta6));
    } else if (a == 2 && b == 1) {
        // Two discrete identities relate the natural term set, so the
        // gradient-square term and the bare cube-difference term are omitted
        // to keep the basis independent; their analytic weight redistributes
        // over the remaining terms in this fixed gauge.
        P u1 = u00_power(1);
        P u2 = u00_power(2);
        add("u^2 d2(u)", u2 * stencil_expansion(Id::delta2));
        add("u^2 d4(u)", u2 * stencil_expansion(Id::delta4));
        add("u^2 d2xd2y(u)", u2 * stencil_expansion(Id::delta2x_delta2y));
        add("u d2(u^2)", u1 * stencil_expansion(Id::delta2, 2));
        add("u (d2 u)^2",
            u1 * stencil_expansion(Id::delta2) * stencil_expansion(Id::delta2));
        add("u (d2x u)(d2y u)",
            u1 * stencil_expansion(Id::delta2x) * stencil_expansion(Id::delta2y));
        add("(mud_t d2 u)(mud_t u^2)",
            stencil_compose_expansion(Id::mu_delta_y, Id::delta2x) *
                    stencil_expansion(Id::mu_delta_y, 2) +
                stencil_compose_expansion(Id::mu_delta_x, Id::delta2y) *
                    stencil_expansion(Id::mu_delta_x, 2),
            true);
        add("(mud u^2)(mud u)",
            stencil_expansion(Id::mu_delta_x, 2) * stencil_expansion(Id::mu_delta_x) +
                stencil_expansion(Id::mu_delta_y, 2) * stencil_expansion(Id::mu_delta_y),
            true);
        add("(mud3 u)(mud u^2)",
            stencil_expansion(Id::mu_delta3_x) * stencil_expansion(Id::mu_delta_x, 2) +
                stencil_expansion(Id::mu_delta3_y) * stencil_expansion(Id::mu_delta_y, 2),
            true);
        add("(d2 u^2)(d2xd2y u)",
            stencil_expansion(Id::delta2, 2) * stencil_expansion(Id::delta2x_delta2y));
        add("(d4 u)(d2 u^2)", stencil_expansion(Id::delta4) * stencil_expansion(Id::delta2, 2));
        add("(d2x u^2)(d2y u) + (d2y u^2)(d2x u)",
            stencil_expansion(Id::delta2x, 2) * stencil_expansion(Id::delta2y) +
                stencil_expansion(Id::delta2y, 2) * stencil_expansion(Id::delta2x));
        add("(d2 u^2)(d2 u)", stencil_expansion(Id::delta2, 2) * stencil_expansion(Id::delta2));
        add("d4(u^3)", stencil_expansion(Id::delta4, 3));
        add("d2xd2y(u^3)", stencil_expansion(Id::delta2x_delta2y, 3));
    } else if (a == 1 && b == 2) {
        add("u^4 d2(u)", u00_power(4) * stencil_expansion(Id::delta2));
        add("u^2 d2(u)", u00_power(2) * stencil_expansion(Id::delta2));
        add("u^2 d2(u^3)", u00_power(2) * stencil_expansion(Id::delta2, 3));
        add("d2(u^3)", stencil_expansion(Id::delta2, 3));
        add("d2(u^5)", stencil_expansion(Id::delta2, 5));
    } else {
        throw ValidationError("no dictionary for slot (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
    }
    return d;
}

namespace {

template <class S>
Poly<S> convert_poly(const Poly<Rational>& p) {
    if constexpr (std::is_same_v<S, Rational>) {
        return p;
    } else {
        Poly<S> out;
        for (const auto& [m, c] : p.terms()) out += Poly<S>::term(m, ScalarOps<Rational>::to_double(c));
        return out;
    }
}

template <class S>
Extraction<S> extract_impl(const Poly<S>& p, const std::vector<StencilTerm>& dict) {
    const std::size_t k = dict.size();
    std::vector<Poly<S>> terms;
    terms.reserve(k);
    for (const auto& t : dict) terms.push_back(convert_poly<S>(t.expansion));

    std::vector<Monomial> monos;
    for (const auto& t : terms)
        for (const auto& [m, c] : t.terms()) monos.push_back(m);
    for (const auto& [m, c] : p.terms()) monos.push_back(m);
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());

    // exact least squares via the normal equations; a complete dictionary
    // leaves a zero residual
    std::vector<std::vector<S>> ata(k, std::vector<S>(k, S(0)));
    std::vector<S> atb(k, S(0));
    for (const Monomial& m : monos) {
        std::vector<S> row(k);
        for (std::size_t t = 0; t < k; ++t) row[t] = terms[t].coefficient(m);
        S bm = p.coefficient(m);
        for (std::size_t i = 0; i < k; ++i) {
            if (ScalarOps<S>::is_zero(row[i])) continue;
            for (std::size_t j = 0; j < k; ++j) ata[i][j] += row[i] * row[j];
            atb[i] += row[i] * bm;
        }
    }

    DenseLU<S> lu(std::move(ata));
    std::vector<S> c = atb;
    lu.solve(c);

    Extraction<S> out;
    Poly<S> reconstructed;
    for (std::size_t t = 0; t < k; ++t) {
        reconstructed += terms[t].scaled(c[t]);
        ExtractedCoefficient e;
        e.name = dict[t].name;
        e.mu_ambiguous = dict[t].mu_ambiguous;
        if constexpr (std::is_same_v<S, Rational>)
            e.value = c[t];
        else
            e.value = Rational(0);
        out.coefficients.push_back(std::move(e));
        out.values.push_back(ScalarOps<S>::to_double(c[t]));
    }
    out.residual = p - reconstructed;
    return out;
}

} // namespace

Extraction<Rational> extract_coefficients(const Poly<Rational>& p,
                                          const std::vector<StencilTerm>& dict) {
    return extract_impl<Rational>(p, dict);
}

Extraction<double> extract_coefficients(const Poly<double>& p,
                                        const std::vector<StencilTerm>& dict) {
    return extract_impl<double>(p, dict);
}

Rational CoefficientReference::table1_limit(int column) {
    switch (column) {
        case 0: return Rational(-1, 12);
        case 1: return Rational(1, 12);
        case 2: return Rational(-1, 4);
    }
    throw ValidationError("table1 column out of range");
}

Rational CoefficientReference::table1_value(int n, int column) {
    if (n == 2) {
        const Rational v[3] = {Rational(-1, 16), Rational(1, 16), Rational(-3, 16)};
        return v[column];
    }
    if (n == 4) {
        const Rational v[3] = {Rational(-5, 64), Rational(5, 64), Rational(-15, 64)};
        return v[column];
    }
    if (n == 8) {
        const Rational v[3] = {Rational(-21, 256), Rational(21, 256), Rational(-63, 256)};
        return v[column];
    }
    throw ValidationError("table1 row for n=" + std::to_string(n) + " not tabulated");
}

} // namespace hodis
