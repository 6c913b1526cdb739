#include "ncalg/scalars.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ncalg {

// ---------------------------------------------------------------------------
// ParamSet

ParamSet::ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("ParamSet: empty symbol name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("ParamSet: duplicate symbol '" + n + "'");
    }
}

bool ParamSet::contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

size_t ParamSet::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw std::invalid_argument("ParamSet: unknown symbol '" + name + "'");
    return static_cast<size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(ParamSetPtr params) : params_(std::move(params)) {
    if (!params_)
        throw std::invalid_argument("MultiPoly: null parameter set");
}

MultiPoly::MultiPoly(ParamSetPtr params, const mpz_class& constant) : MultiPoly(std::move(params)) {
    if (constant != 0)
        terms_.emplace(ExpVec(params_->size(), 0), constant);
}

MultiPoly MultiPoly::variable(ParamSetPtr params, size_t var, unsigned power) {
    MultiPoly p(std::move(params));
    if (var >= p.params_->size())
        throw std::invalid_argument("MultiPoly::variable: index out of range");
    ExpVec e(p.params_->size(), 0);
    e[var] = power;
    p.terms_.emplace(std::move(e), mpz_class(1));
    return p;
}

bool MultiPoly::is_one() const {
    if (terms_.size() != 1)
        return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

bool MultiPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

unsigned MultiPoly::degree(size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.at(var));
    return d;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (params_ != other.params_ && !(*params_ == *other.params_))
        throw std::invalid_argument("MultiPoly: parameter set mismatch");
}

void MultiPoly::add_term(const ExpVec& exps, const mpz_class& c) {
    if (exps.size() != params_->size())
        throw std::invalid_argument("MultiPoly::add_term: exponent arity mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(params_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    check_compatible(other);
    MultiPoly r = *this;
    for (const auto& [e, c] : other.terms_)
        r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    check_compatible(other);
    MultiPoly r = *this;
    for (const auto& [e, c] : other.terms_)
        r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    check_compatible(other);
    MultiPoly r(params_);
    ExpVec e(params_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const mpz_class& c) const {
    MultiPoly r(params_);
    if (c == 0)
        return r;
    for (const auto& [e, coeff] : terms_)
        r.terms_.emplace(e, coeff * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    check_compatible(other);
    return terms_ == other.terms_;
}

MultiPoly MultiPoly::substitute(size_t var, const mpz_class& value) const {
    MultiPoly r(params_);
    ExpVec e;
    for (const auto& [exps, c] : terms_) {
        mpz_class scaled = c;
        for (unsigned k = 0; k < exps.at(var); ++k)
            scaled *= value;
        e = exps;
        e[var] = 0;
        r.add_term(e, scaled);
    }
    return r;
}

mpz_class MultiPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        g = gcd(g, c);
        if (g == 1)
            break;
    }
    return g;
}

MultiPoly::ExpVec MultiPoly::monomial_content() const {
    if (terms_.empty())
        return ExpVec(params_->size(), 0);
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

void MultiPoly::divexact(const mpz_class& c) {
    if (c == 0)
        throw std::domain_error("MultiPoly::divexact: division by zero");
    for (auto& [e, coeff] : terms_) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
        if (r != 0)
            throw std::domain_error("MultiPoly::divexact: inexact division");
        coeff = q;
    }
}

void MultiPoly::shift_down(const ExpVec& mono) {
    std::map<ExpVec, mpz_class> shifted;
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        for (size_t i = 0; i < ne.size(); ++i) {
            if (ne[i] < mono[i])
                throw std::domain_error("MultiPoly::shift_down: monomial does not divide");
            ne[i] -= mono[i];
        }
        shifted.emplace(std::move(ne), c);
    }
    terms_ = std::move(shifted);
}

namespace {

// One printed term, e.g. "3*p^2*mu"; sign handled by the caller.
std::string term_string(const ParamSet& ps, const MultiPoly::ExpVec& e, const mpz_class& abs_c) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!mono.empty())
            mono += "*";
        mono += ps.name(i);
        if (e[i] > 1)
            mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
        return abs_c.get_str();
    if (abs_c == 1)
        return mono;
    return abs_c.get_str() + "*" + mono;
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    // Descending lex so the leading term prints first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->second < 0;
        mpz_class a = abs(it->second);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_string(*params_, it->first, a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(ParamSetPtr params)
    : num_(params), den_(std::move(params), mpz_class(1)) {}

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(num_.params(), mpz_class(1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(num_.params(), mpz_class(1));
        return;
    }
    mpz_class g = gcd(num_.content(), den_.content());
    if (g > 1) {
        num_.divexact(g);
        den_.divexact(g);
    }
    auto mn = num_.monomial_content();
    auto md = den_.monomial_content();
    MultiPoly::ExpVec common(mn.size());
    bool any = false;
    for (size_t i = 0; i < mn.size(); ++i) {
        common[i] = std::min(mn[i], md[i]);
        any = any || common[i] != 0;
    }
    if (any) {
        num_.shift_down(common);
        den_.shift_down(common);
    }
    // Keep the leading denominator coefficient positive for stable printing.
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RatFunc::is_one() const { return num_ == den_; }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& other) const {
    return RatFunc(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RatFunc RatFunc::operator-(const RatFunc& other) const {
    return RatFunc(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RatFunc RatFunc::operator*(const RatFunc& other) const {
    return RatFunc(num_ * other.num_, den_ * other.den_);
}

RatFunc RatFunc::operator/(const RatFunc& other) const {
    if (other.is_zero())
        throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * other.den_, den_ * other.num_);
}

RatFunc RatFunc::operator*(const mpz_class& c) const {
    return RatFunc(num_ * c, den_);
}

bool RatFunc::operator==(const RatFunc& other) const {
    return (num_ * other.den_ - other.num_ * den_).is_zero();
}

RatFunc RatFunc::inverse() const {
    if (is_zero())
        throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

std::string RatFunc::to_string() const {
    if (den_.is_one())
        return num_.to_string();
    auto wrap = [](const MultiPoly& p) {
        std::string s = p.to_string();
        // A bare integer or single positive monomial needs no parentheses.
        if (p.is_monomial() && s.find('-') == std::string::npos && s.find('*') == std::string::npos)
            return s;
        return "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials (dense integer helpers)

namespace {

using ZPoly = std::vector<mpz_class>;  // constant term first

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

// Exact division by a monic divisor; throws if a remainder survives.
ZPoly zdivexact(ZPoly a, const ZPoly& b) {
    if (b.empty() || b.back() != 1)
        throw std::domain_error("zdivexact: divisor must be monic");
    ztrim(a);
    if (a.size() < b.size()) {
        if (!a.empty())
            throw std::domain_error("zdivexact: inexact division");
        return {};
    }
    ZPoly q(a.size() - b.size() + 1, mpz_class(0));
    for (size_t i = q.size(); i-- > 0;) {
        mpz_class c = a[i + b.size() - 1];
        q[i] = c;
        if (c == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            a[i + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0)
            throw std::domain_error("zdivexact: inexact division");
    return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_coeffs(unsigned e) {
    if (e == 0)
        throw std::domain_error("cyclotomic_coeffs: order must be positive");
    // Phi_e = (t^e - 1) / prod_{d | e, d < e} Phi_d, built bottom-up.
    std::vector<ZPoly> phi(e + 1);
    for (unsigned n = 1; n <= e; ++n) {
        if (e % n != 0)
            continue;
        ZPoly num(n + 1, mpz_class(0));
        num[0] = -1;
        num[n] = 1;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0)
                num = zdivexact(std::move(num), phi[d]);
        phi[n] = std::move(num);
    }
    return phi[e];
}

MultiPoly cyclotomic_poly(unsigned e) {
    auto coeffs = cyclotomic_coeffs(e);
    auto ps = std::make_shared<const ParamSet>(std::vector<std::string>{"t"});
    MultiPoly p(ps);
    for (size_t k = 0; k < coeffs.size(); ++k)
        p.add_term({static_cast<unsigned>(k)}, coeffs[k]);
    return p;
}

// ---------------------------------------------------------------------------
// CycloContext

CycloContext::CycloContext(ParamSetPtr params, unsigned order, std::vector<mpz_class> modulus)
    : params_(std::move(params)), order_(order), modulus_(std::move(modulus)) {
    const size_t deg = modulus_.size() - 1;
    // Rows for zeta^deg .. zeta^(2deg-2): enough to reduce any product of
    // two reduced elements.
    if (deg >= 1) {
        std::vector<mpz_class> row(deg, mpz_class(0));
        for (size_t i = 0; i < deg; ++i)
            row[i] = -modulus_[i];  // zeta^deg = -(lower part), Phi monic
        for (size_t k = deg; k + 1 <= 2 * deg - 1; ++k) {
            zeta_pow_.push_back(row);
            // next row = z * row, reduced
            std::vector<mpz_class> next(deg, mpz_class(0));
            mpz_class top = row[deg - 1];
            for (size_t i = deg - 1; i > 0; --i)
                next[i] = row[i - 1];
            next[0] = 0;
            if (top != 0)
                for (size_t i = 0; i < deg; ++i)
                    next[i] += top * zeta_pow_[0][i];
            row = std::move(next);
        }
    }
}

ContextPtr CycloContext::make(std::vector<std::string> params, unsigned order) {
    if (order == 0)
        throw std::domain_error("CycloContext: root order must be positive");
    auto ps = std::make_shared<const ParamSet>(std::move(params));
    return ContextPtr(new CycloContext(ps, order, cyclotomic_coeffs(order)));
}

const std::vector<mpz_class>& CycloContext::zeta_power(size_t k) const {
    const size_t deg = ext_degree();
    if (k < deg)
        throw std::invalid_argument("CycloContext::zeta_power: already reduced");
    if (k - deg >= zeta_pow_.size())
        throw std::invalid_argument("CycloContext::zeta_power: power out of table range");
    return zeta_pow_[k - deg];
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(ContextPtr ctx, std::vector<RatFunc> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

void Scalar::check_context(const Scalar& other) const {
    if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_))
        throw std::invalid_argument("Scalar: context mismatch");
}

Scalar Scalar::zero(const ContextPtr& ctx) {
    return Scalar(ctx, std::vector<RatFunc>(ctx->ext_degree(), RatFunc(ctx->params())));
}

Scalar Scalar::one(const ContextPtr& ctx) {
    return integer(ctx, mpz_class(1));
}

Scalar Scalar::integer(const ContextPtr& ctx, const mpz_class& n) {
    Scalar s = zero(ctx);
    s.coeffs_[0] = RatFunc(MultiPoly(ctx->params(), n));
    return s;
}

Scalar Scalar::rational(const ContextPtr& ctx, const mpz_class& num, const mpz_class& den) {
    Scalar s = zero(ctx);
    s.coeffs_[0] = RatFunc(MultiPoly(ctx->params(), num), MultiPoly(ctx->params(), den));
    return s;
}

Scalar Scalar::param(const ContextPtr& ctx, const std::string& name) {
    Scalar s = zero(ctx);
    s.coeffs_[0] = RatFunc(MultiPoly::variable(ctx->params(), ctx->param_index(name)));
    return s;
}

Scalar Scalar::from_ratfunc(const ContextPtr& ctx, RatFunc r) {
    if (!(*r.params() == *ctx->params()))
        throw std::invalid_argument("Scalar::from_ratfunc: parameter set mismatch");
    Scalar s = zero(ctx);
    s.coeffs_[0] = std::move(r);
    return s;
}

Scalar Scalar::zeta(const ContextPtr& ctx) {
    const size_t deg = ctx->ext_degree();
    Scalar s = zero(ctx);
    if (deg == 1) {
        // Phi_e linear: zeta is the rational root (1 for e=1, -1 for e=2).
        const auto& m = ctx->modulus();
        s.coeffs_[0] = RatFunc(MultiPoly(ctx->params(), -m[0]));
    } else {
        s.coeffs_[1] = RatFunc(MultiPoly(ctx->params(), mpz_class(1)));
    }
    return s;
}

bool Scalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatFunc& r) { return r.is_zero(); });
}

Scalar Scalar::operator-() const {
    std::vector<RatFunc> c;
    c.reserve(coeffs_.size());
    for (const auto& r : coeffs_)
        c.push_back(-r);
    return Scalar(ctx_, std::move(c));
}

Scalar Scalar::operator+(const Scalar& other) const {
    check_context(other);
    std::vector<RatFunc> c;
    c.reserve(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] + other.coeffs_[i]);
    return Scalar(ctx_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& other) const {
    check_context(other);
    std::vector<RatFunc> c;
    c.reserve(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] - other.coeffs_[i]);
    return Scalar(ctx_, std::move(c));
}

void Scalar::reduce(std::vector<RatFunc>& raw) const {
    const size_t deg = ctx_->ext_degree();
    for (size_t k = raw.size(); k-- > deg;) {
        if (raw[k].is_zero())
            continue;
        const auto& row = ctx_->zeta_power(k);
        for (size_t i = 0; i < deg; ++i)
            if (row[i] != 0)
                raw[i] = raw[i] + raw[k] * row[i];
        raw[k] = RatFunc(ctx_->params());
    }
    raw.resize(deg, RatFunc(ctx_->params()));
}

Scalar Scalar::operator*(const Scalar& other) const {
    check_context(other);
    const size_t deg = ctx_->ext_degree();
    std::vector<RatFunc> raw(2 * deg - 1, RatFunc(ctx_->params()));
    for (size_t i = 0; i < deg; ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < deg; ++j) {
            if (other.coeffs_[j].is_zero())
                continue;
            raw[i + j] = raw[i + j] + coeffs_[i] * other.coeffs_[j];
        }
    }
    reduce(raw);
    return Scalar(ctx_, std::move(raw));
}

Scalar Scalar::operator/(const Scalar& other) const {
    return *this * other.inverse();
}

namespace {

// Dense polynomials over the fraction field, used only for inversion in
// the cyclotomic quotient (degrees stay below deg Phi_e).
using QPoly = std::vector<RatFunc>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

QPoly qsub_scaled(const QPoly& a, const QPoly& b, const RatFunc& c, size_t shift) {
    // a - c * t^shift * b
    QPoly r = a;
    if (r.size() < b.size() + shift)
        r.resize(b.size() + shift, RatFunc(c.params()));
    for (size_t i = 0; i < b.size(); ++i)
        r[i + shift] = r[i + shift] - c * b[i];
    qtrim(r);
    return r;
}

}  // namespace

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::domain_error("Scalar: inverse of zero");
    const size_t deg = ctx_->ext_degree();
    if (deg == 1)
        return Scalar(ctx_, {coeffs_[0].inverse()});

    // Extended Euclid between this element and Phi_e over Q(params):
    // Phi_e is irreducible over Q and the parameters are transcendental,
    // so the gcd is a nonzero constant and u*a = 1 mod Phi_e.
    const RatFunc rf_zero{ctx_->params()};
    const RatFunc rf_one{MultiPoly(ctx_->params(), mpz_class(1))};

    QPoly r0;  // Phi_e
    for (const auto& m : ctx_->modulus())
        r0.push_back(RatFunc(MultiPoly(ctx_->params(), m)));
    QPoly r1(coeffs_);
    qtrim(r1);
    QPoly u0{rf_zero}, u1{rf_one};  // cofactors of the inverted element
    qtrim(u0);

    while (r1.size() > 1) {
        QPoly rem = r0;
        QPoly uq = u0;
        while (rem.size() >= r1.size()) {
            RatFunc c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            rem = qsub_scaled(rem, r1, c, shift);  // leading term cancels exactly
            uq = qsub_scaled(uq, u1, c, shift);
        }
        r0 = std::move(r1);
        u0 = std::move(u1);
        r1 = std::move(rem);
        u1 = std::move(uq);
    }
    if (r1.empty())
        throw std::domain_error("Scalar::inverse: element not invertible");
    // r1 is a nonzero constant: u1 / r1[0] is the inverse. The extended
    // Euclid keeps deg(u1) < deg(Phi_e) throughout.
    const RatFunc lead = r1[0];
    std::vector<RatFunc> inv(deg, rf_zero);
    if (u1.size() > deg)
        throw std::logic_error("Scalar::inverse: cofactor degree overflow");
    for (size_t i = 0; i < u1.size(); ++i)
        inv[i] = u1[i] / lead;
    return Scalar(ctx_, std::move(inv));
}

Scalar pow(const Scalar& a, long k) {
    if (k < 0)
        return pow(a.inverse(), -k);
    Scalar result = Scalar::one(a.context());
    Scalar base = a;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Scalar q_integer(const ContextPtr& ctx, unsigned n) {
    Scalar p = Scalar::param(ctx, "p");
    Scalar sum = Scalar::zero(ctx);
    Scalar pk = Scalar::one(ctx);
    for (unsigned k = 0; k < n; ++k) {
        sum = sum + pk;
        pk = pk * p;
    }
    return sum;
}

std::string Scalar::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    auto append = [&out](const std::string& part) {
        if (out.empty()) {
            out = part;
        } else if (!part.empty() && part[0] == '-') {
            out += " - " + part.substr(1);
        } else {
            out += " + " + part;
        }
    };
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        std::string zs;
        if (k == 1)
            zs = "zeta";
        else if (k > 1)
            zs = "zeta^" + std::to_string(k);
        std::string cs = coeffs_[k].to_string();
        if (zs.empty()) {
            append(cs);
            continue;
        }
        if (cs == "1") {
            append(zs);
        } else if (cs == "-1") {
            append("-" + zs);
        } else {
            const bool simple = cs.find('+') == std::string::npos &&
                                cs.find('-', 1) == std::string::npos &&
                                cs.find('/') == std::string::npos;
            append(simple ? cs + "*" + zs : "(" + cs + ")*" + zs);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace ncalg
