#ifndef HODIS_DICTIONARY_HPP
#define HODIS_DICTIONARY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hodis/series.hpp"
#include "hodis/stencil.hpp"

namespace hodis {

// A named stencil-term descriptor expanded as an exact polynomial over grid
// symbols, e.g. "d2(u^3)" or "u^2 d2(u)".
struct StencilTerm {
    std::string name;
    Poly<Rational> expansion;
    bool mu_ambiguous = false;  // mean-difference operators adopted from the
                                // catalogue rather than printed in full
};

// building blocks for term expansions
Poly<Rational> sym_poly(int di, int dj, int power = 1);
Poly<Rational> u00_power(int power);
Poly<Rational> stencil_expansion(StencilId id, int power = 1);
// outer stencil applied to the per-point values of an inner expansion family
Poly<Rational> stencil_compose_expansion(StencilId outer, StencilId inner);

// evolution slot (a, b) of the closed-form third-order model in the scaled
// convention (pure rational coefficients)
Poly<Rational> analytic_evolution_cell(int a, int b);

// dictionary of linearly independent stencil terms spanning slot (a, b)
std::vector<StencilTerm> dictionary_for_cell(int a, int b);

struct ExtractedCoefficient {
    std::string name;
    Rational value;
    bool mu_ambiguous = false;
};

template <class S>
struct Extraction {
    std::vector<ExtractedCoefficient> coefficients;  // exact in rational mode
    std::vector<double> values;                      // same entries as doubles
    Poly<S> residual;                                // zero iff dictionary complete
};

// exact match of a polynomial against the dictionary span; the residual
// collects whatever the dictionary cannot represent
Extraction<Rational> extract_coefficients(const Poly<Rational>& p,
                                          const std::vector<StencilTerm>& dict);
Extraction<double> extract_coefficients(const Poly<double>& p,
                                        const std::vector<StencilTerm>& dict);

// reference values the constructed models are compared against
struct CoefficientReference {
    // slot (2,0): fourth-difference coefficient; slots (1,1): cube-difference
    // and square-times-difference coefficients
    static Rational table1_limit(int column);              // -1/12, 1/12, -1/4
    static Rational table1_value(int n, int column);       // exact finite-n values
};

struct GroupError {
    std::string group;          // order-group label
    int a = 0, b = 0;           // evolution slot
    double max_error = 0.0;     // over non-ambiguous dictionary terms
    double max_error_ambiguous = -1.0;  // vs the high-resolution oracle, -1 if none
    bool oracle_used = false;
};

} // namespace hodis

#endif
