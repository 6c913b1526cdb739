#pragma once

#include <cstdint>
#include <iosfwd>

#include "ncalg/scalars.hpp"

namespace ncalg {

/**
 * The three algebra presentations, each with generators x, y and one
 * defining relation:
 *
 *   QuantumWeyl   yx = p*xy + 1   (p transcendental, so never a root of unity)
 *   Jordanian     yx = xy + y^2
 *   FirstWeyl     yx = xy + 1
 *
 * Every element is kept on the basis {x^i y^j}.
 */
enum class Presentation : uint8_t { QuantumWeyl, Jordanian, FirstWeyl };

const char* presentation_name(Presentation p);

/** Basis monomial x^i y^j. */
struct Monomial {
    unsigned i = 0;  // power of x
    unsigned j = 0;  // power of y

    auto operator<=>(const Monomial&) const = default;
};

/**
 * Normal-form noncommutative polynomial: a sparse map from basis
 * monomials to nonzero Scalars, tagged with its presentation. All
 * arithmetic renormalizes through the rewrite table, so products of
 * normal forms are again normal forms.
 */
class NcPoly {
  public:
    NcPoly(Presentation pres, ContextPtr ctx);

    static NcPoly zero(Presentation pres, const ContextPtr& ctx);
    static NcPoly constant(Presentation pres, const Scalar& c);
    static NcPoly monomial(Presentation pres, const ContextPtr& ctx, unsigned i, unsigned j);
    static NcPoly x(Presentation pres, const ContextPtr& ctx) { return monomial(pres, ctx, 1, 0); }
    static NcPoly y(Presentation pres, const ContextPtr& ctx) { return monomial(pres, ctx, 0, 1); }

    Presentation presentation() const { return pres_; }
    const ContextPtr& context() const { return ctx_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Nonzero only at (0,0).
    bool is_constant() const;
    // The coefficient of x^0 y^0 (zero if absent).
    Scalar constant_term() const;
    // True when every term has j == 0 (a polynomial in x alone).
    bool is_x_univariate() const;
    bool is_y_univariate() const;

    unsigned deg_x() const;
    unsigned deg_y() const;
    unsigned total_degree() const;

    // Coefficient of x^i y^j (zero if absent).
    Scalar coeff(unsigned i, unsigned j) const;

    NcPoly operator-() const;
    NcPoly operator+(const NcPoly& other) const;
    NcPoly operator-(const NcPoly& other) const;
    NcPoly operator*(const NcPoly& other) const;  // noncommutative, renormalized
    NcPoly operator*(const Scalar& c) const;

    NcPoly pow(unsigned k) const;

    bool operator==(const NcPoly& other) const { return (*this - other).is_zero(); }
    bool operator!=(const NcPoly& other) const { return !(*this == other); }

    void add_term(Monomial m, const Scalar& c);

    std::string to_string() const;

  private:
    void check_compatible(const NcPoly& other) const;

    Presentation pres_;
    ContextPtr ctx_;
    std::map<Monomial, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const NcPoly& f);

// Normal form of y^m x^n, computed by iterated single swaps of the
// defining relation (memoized per presentation, independent of the
// scalar context).
NcPoly rewrite_yx(Presentation pres, unsigned m, unsigned n, const ContextPtr& ctx);

// Jordanian closed form
//   y^m x^n = sum_{l=0}^{n} C(n,l) (m+n-l-1)!/(m-1)! x^l y^(m+n-l)
// for m, n >= 1 (m = 0 or n = 0 is already normal). Exists as an
// independent route; tests check it against rewrite_yx.
NcPoly jordan_closed_rewrite(unsigned m, unsigned n, const ContextPtr& ctx);

// Normal form of 1 - yx in the quantum Weyl algebra: -p*xy.
NcPoly h_element(const ContextPtr& ctx);

// The rescaled h-gauge 1 + (p-1)*xy, the unique (up to scalar) affine
// combination of 1 and xy with the clean commutation rules
//   h*x = p*x*h,  y*h = p*h*y.
// The skew-derivation families in maps are built on this element.
NcPoly h_normalized(const ContextPtr& ctx);

// f must be a polynomial in x alone; returns sum_k f_k * arg^k.
NcPoly substitute(const NcPoly& f, const NcPoly& arg);

}  // namespace ncalg
