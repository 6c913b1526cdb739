#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncalg {

/**
 * Ordered set of formal parameter symbols (e.g. {p, mu, beta, c1, ...}).
 * The ordering is fixed at construction and determines the monomial order
 * used everywhere downstream, so two contexts agree iff their parameter
 * lists agree element by element.
 */
class ParamSet {
  public:
    ParamSet() = default;
    explicit ParamSet(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(size_t i) const { return names_.at(i); }

    bool contains(const std::string& name) const;
    // Throws std::invalid_argument for unknown symbols.
    size_t index_of(const std::string& name) const;

    bool operator==(const ParamSet& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

/**
 * Sparse multivariate polynomial over Z in the symbols of a ParamSet.
 * Terms map an exponent vector (one entry per parameter) to a nonzero
 * arbitrary-precision integer coefficient; zero coefficients are never
 * stored, so is_zero() is a structural test.
 */
class MultiPoly {
  public:
    using ExpVec = std::vector<unsigned>;

    explicit MultiPoly(ParamSetPtr params);
    MultiPoly(ParamSetPtr params, const mpz_class& constant);

    static MultiPoly variable(ParamSetPtr params, size_t var, unsigned power = 1);

    const ParamSetPtr& params() const { return params_; }
    const std::map<ExpVec, mpz_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True when the polynomial is a single term.
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;

    unsigned degree(size_t var) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator*(const mpz_class& c) const;

    bool operator==(const MultiPoly& other) const;

    // Adds c * x^exps in place, erasing the term if it cancels.
    void add_term(const ExpVec& exps, const mpz_class& c);

    // Substitutes an integer value for one parameter (exact).
    MultiPoly substitute(size_t var, const mpz_class& value) const;

    // gcd of all integer coefficients (0 for the zero polynomial).
    mpz_class content() const;
    // Componentwise minimum of all exponent vectors.
    ExpVec monomial_content() const;
    // Divides by an integer (must divide every coefficient exactly).
    void divexact(const mpz_class& c);
    // Divides by a monomial (every exponent vector must dominate it).
    void shift_down(const ExpVec& mono);

    std::string to_string() const;

  private:
    void check_compatible(const MultiPoly& other) const;

    ParamSetPtr params_;
    std::map<ExpVec, mpz_class> terms_;
};

/**
 * Quotient of two MultiPolys. Fractions are not reduced to a canonical
 * form; zero is decided on the numerator and equality by cross
 * multiplication. Integer and monomial content common to numerator and
 * denominator is stripped after each operation to bound growth.
 */
class RatFunc {
  public:
    explicit RatFunc(ParamSetPtr params);
    RatFunc(MultiPoly num, MultiPoly den);
    explicit RatFunc(MultiPoly num);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const ParamSetPtr& params() const { return num_.params(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& other) const;
    RatFunc operator-(const RatFunc& other) const;
    RatFunc operator*(const RatFunc& other) const;
    RatFunc operator/(const RatFunc& other) const;
    RatFunc operator*(const mpz_class& c) const;

    // Mathematical equality: num*other.den == other.num*den.
    bool operator==(const RatFunc& other) const;

    RatFunc inverse() const;

    std::string to_string() const;

  private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

class CycloContext;
using ContextPtr = std::shared_ptr<const CycloContext>;

/**
 * Coefficient-field description: formal parameters (all transcendental
 * over Q) extended by one formal root of unity zeta of order e, realized
 * as Q(params)[z]/Phi_e(z). order == 1 means no extension (zeta == 1).
 */
class CycloContext {
  public:
    static ContextPtr make(std::vector<std::string> params, unsigned order = 1);

    const ParamSetPtr& params() const { return params_; }
    unsigned order() const { return order_; }
    // deg Phi_e == Euler phi(e); the dimension of the extension.
    size_t ext_degree() const { return modulus_.size() - 1; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    bool has_param(const std::string& name) const { return params_->contains(name); }
    size_t param_index(const std::string& name) const { return params_->index_of(name); }

    // zeta^k in the power basis {1, ..., zeta^(deg-1)}, any k >= 0.
    const std::vector<mpz_class>& zeta_power(size_t k) const;

    bool operator==(const CycloContext& other) const {
        return order_ == other.order_ && *params_ == *other.params_;
    }

  private:
    CycloContext(ParamSetPtr params, unsigned order, std::vector<mpz_class> modulus);

    ParamSetPtr params_;
    unsigned order_;
    std::vector<mpz_class> modulus_;
    std::vector<std::vector<mpz_class>> zeta_pow_;  // rows for zeta^deg .. zeta^(2deg-2)
};

/**
 * Element of Q(params)[zeta]/Phi_e: a vector of RatFunc coordinates in
 * the power basis of zeta, reduced after every operation. All values are
 * immutable; arithmetic returns new objects.
 */
class Scalar {
  public:
    static Scalar zero(const ContextPtr& ctx);
    static Scalar one(const ContextPtr& ctx);
    static Scalar integer(const ContextPtr& ctx, const mpz_class& n);
    static Scalar integer(const ContextPtr& ctx, long n) { return integer(ctx, mpz_class(n)); }
    static Scalar rational(const ContextPtr& ctx, const mpz_class& num, const mpz_class& den);
    static Scalar param(const ContextPtr& ctx, const std::string& name);
    static Scalar zeta(const ContextPtr& ctx);
    static Scalar from_ratfunc(const ContextPtr& ctx, RatFunc r);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const { return (*this - one(ctx_)).is_zero(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;

    bool operator==(const Scalar& other) const { return (*this - other).is_zero(); }
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    Scalar inverse() const;

    std::string to_string() const;

  private:
    Scalar(ContextPtr ctx, std::vector<RatFunc> coeffs);

    void check_context(const Scalar& other) const;
    void reduce(std::vector<RatFunc>& raw) const;  // mod Phi_e, raw may exceed ext degree

    ContextPtr ctx_;
    std::vector<RatFunc> coeffs_;
};

// Phi_e as a univariate integer polynomial over the single-symbol set
// {"t"}, computed by exact division of t^e - 1 by the proper-divisor
// cyclotomics. Throws std::domain_error for e == 0.
MultiPoly cyclotomic_poly(unsigned e);

// Dense coefficient vector of Phi_e, constant term first.
std::vector<mpz_class> cyclotomic_coeffs(unsigned e);

// 1 + p + ... + p^(n-1); requires the parameter p in the context.
Scalar q_integer(const ContextPtr& ctx, unsigned n);

// Exact integer power; negative exponents require a nonzero base.
Scalar pow(const Scalar& a, long k);

}  // namespace ncalg
