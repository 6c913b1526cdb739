#include "ncalg/ore.hpp"

#include <mutex>
#include <ostream>
#include <sstream>

namespace ncalg {

const char* presentation_name(Presentation p) {
    switch (p) {
        case Presentation::QuantumWeyl: return "qweyl";
        case Presentation::Jordanian: return "jordan";
        case Presentation::FirstWeyl: return "weyl1";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Context-free rewrite table
//
// Normal forms of y^m x^n have coefficients in Z[p] (Z for the Jordanian
// plane and first Weyl algebra), so the table is computed once per
// presentation and instantiated into whatever scalar context asks.

namespace {

using PPoly = std::map<unsigned, mpz_class>;     // power of p -> coefficient
using CFPoly = std::map<Monomial, PPoly>;        // context-free normal form

void cf_add(CFPoly& into, Monomial m, const PPoly& q, unsigned p_shift = 0) {
    PPoly& dst = into[m];
    for (const auto& [k, c] : q) {
        auto [it, inserted] = dst.emplace(k + p_shift, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                dst.erase(it);
        }
    }
    if (dst.empty())
        into.erase(m);
}

struct RewriteTable {
    std::mutex mutex;
    std::vector<CFPoly> swap_x;                    // swap_x[b] = NF(y^b x)
    std::map<std::pair<unsigned, unsigned>, CFPoly> yx;  // NF(y^m x^n)

    // NF(y^b x) via one application of the relation:
    //   QuantumWeyl  y^b x = p (y^(b-1) x) y + y^(b-1)
    //   Jordanian    y^b x =   (y^(b-1) x) y + y^(b+1)
    //   FirstWeyl    y^b x =   (y^(b-1) x) y + y^(b-1)
    const CFPoly& swap(Presentation pres, unsigned b) {
        if (swap_x.empty()) {
            CFPoly x_only;
            cf_add(x_only, Monomial{1, 0}, PPoly{{0, mpz_class(1)}});
            swap_x.push_back(std::move(x_only));
        }
        while (swap_x.size() <= b) {
            const unsigned bb = static_cast<unsigned>(swap_x.size());
            CFPoly nf;
            const unsigned p_shift = pres == Presentation::QuantumWeyl ? 1 : 0;
            for (const auto& [m, q] : swap_x[bb - 1])
                cf_add(nf, Monomial{m.i, m.j + 1}, q, p_shift);
            const unsigned tail_j = pres == Presentation::Jordanian ? bb + 1 : bb - 1;
            cf_add(nf, Monomial{0, tail_j}, PPoly{{0, mpz_class(1)}});
            swap_x.push_back(std::move(nf));
        }
        return swap_x[b];
    }

    const CFPoly& normal_form(Presentation pres, unsigned m, unsigned n) {
        auto key = std::make_pair(m, n);
        auto it = yx.find(key);
        if (it != yx.end())
            return it->second;
        CFPoly nf;
        if (m == 0 || n == 0) {
            cf_add(nf, Monomial{n, m}, PPoly{{0, mpz_class(1)}});
        } else {
            // y^m x^n = (y^m x^(n-1)) * x, one term swap at a time.
            const CFPoly prev = normal_form(pres, m, n - 1);
            for (const auto& [mono, q] : prev) {
                const CFPoly& sw = swap(pres, mono.j);
                for (const auto& [sm, sq] : sw) {
                    PPoly prod;
                    for (const auto& [ka, ca] : q)
                        for (const auto& [kb, cb] : sq) {
                            auto [pit, ins] = prod.emplace(ka + kb, ca * cb);
                            if (!ins) {
                                pit->second += ca * cb;
                                if (pit->second == 0)
                                    prod.erase(pit);
                            }
                        }
                    cf_add(nf, Monomial{sm.i + mono.i, sm.j}, prod);
                }
            }
        }
        return yx.emplace(key, std::move(nf)).first->second;
    }
};

RewriteTable& table_for(Presentation pres) {
    static RewriteTable tables[3];
    return tables[static_cast<size_t>(pres)];
}

Scalar instantiate(const PPoly& q, const ContextPtr& ctx) {
    MultiPoly num(ctx->params());
    MultiPoly::ExpVec e(ctx->params()->size(), 0);
    size_t p_index = 0;
    bool has_p = false;
    for (const auto& [k, c] : q) {
        if (k > 0 && !has_p) {
            p_index = ctx->param_index("p");
            has_p = true;
        }
        if (has_p)
            e[p_index] = k;
        num.add_term(e, c);
    }
    return Scalar::from_ratfunc(ctx, RatFunc(std::move(num)));
}

// Snapshot of NF(y^m x^n) under the table lock, then instantiate outside it.
CFPoly normal_form_copy(Presentation pres, unsigned m, unsigned n) {
    RewriteTable& t = table_for(pres);
    std::lock_guard<std::mutex> lock(t.mutex);
    return t.normal_form(pres, m, n);
}

}  // namespace

NcPoly rewrite_yx(Presentation pres, unsigned m, unsigned n, const ContextPtr& ctx) {
    NcPoly out(pres, ctx);
    for (const auto& [mono, q] : normal_form_copy(pres, m, n))
        out.add_term(mono, instantiate(q, ctx));
    return out;
}

NcPoly jordan_closed_rewrite(unsigned m, unsigned n, const ContextPtr& ctx) {
    NcPoly out(Presentation::Jordanian, ctx);
    if (m == 0) {
        out.add_term(Monomial{n, 0}, Scalar::one(ctx));
        return out;
    }
    for (unsigned l = 0; l <= n; ++l) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, l);
        // (m+n-l-1)! / (m-1)! as the rising product m * ... * (m+n-l-1).
        mpz_class ratio = 1;
        for (unsigned k = m; k + l < m + n; ++k)
            ratio *= k;
        out.add_term(Monomial{l, m + n - l}, Scalar::integer(ctx, binom * ratio));
    }
    return out;
}

// ---------------------------------------------------------------------------
// NcPoly

NcPoly::NcPoly(Presentation pres, ContextPtr ctx) : pres_(pres), ctx_(std::move(ctx)) {
    if (!ctx_)
        throw std::invalid_argument("NcPoly: null context");
    if (pres_ == Presentation::QuantumWeyl && !ctx_->has_param("p"))
        throw std::invalid_argument("NcPoly: quantum Weyl presentation requires parameter p");
}

NcPoly NcPoly::zero(Presentation pres, const ContextPtr& ctx) { return NcPoly(pres, ctx); }

NcPoly NcPoly::constant(Presentation pres, const Scalar& c) {
    NcPoly f(pres, c.context());
    f.add_term(Monomial{0, 0}, c);
    return f;
}

NcPoly NcPoly::monomial(Presentation pres, const ContextPtr& ctx, unsigned i, unsigned j) {
    NcPoly f(pres, ctx);
    f.add_term(Monomial{i, j}, Scalar::one(ctx));
    return f;
}

bool NcPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Scalar NcPoly::constant_term() const { return coeff(0, 0); }

bool NcPoly::is_x_univariate() const {
    for (const auto& [m, c] : terms_)
        if (m.j != 0)
            return false;
    return true;
}

bool NcPoly::is_y_univariate() const {
    for (const auto& [m, c] : terms_)
        if (m.i != 0)
            return false;
    return true;
}

unsigned NcPoly::deg_x() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.i);
    return d;
}

unsigned NcPoly::deg_y() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.j);
    return d;
}

unsigned NcPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.i + m.j);
    return d;
}

Scalar NcPoly::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find(Monomial{i, j});
    return it == terms_.end() ? Scalar::zero(ctx_) : it->second;
}

void NcPoly::check_compatible(const NcPoly& other) const {
    if (pres_ != other.pres_)
        throw std::invalid_argument("NcPoly: presentation mismatch");
    if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_))
        throw std::invalid_argument("NcPoly: context mismatch");
}

void NcPoly::add_term(Monomial m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NcPoly NcPoly::operator-() const {
    NcPoly r(pres_, ctx_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

NcPoly NcPoly::operator+(const NcPoly& other) const {
    check_compatible(other);
    NcPoly r = *this;
    for (const auto& [m, c] : other.terms_)
        r.add_term(m, c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& other) const {
    check_compatible(other);
    NcPoly r = *this;
    for (const auto& [m, c] : other.terms_)
        r.add_term(m, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& other) const {
    check_compatible(other);
    NcPoly r(pres_, ctx_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            const Scalar c = ca * cb;
            if (ma.j == 0 || mb.i == 0) {  // already in normal order
                r.add_term(Monomial{ma.i + mb.i, ma.j + mb.j}, c);
                continue;
            }
            // x^a y^b * x^c y^d = x^a (y^b x^c) y^d
            for (const auto& [mono, q] : normal_form_copy(pres_, ma.j, mb.i))
                r.add_term(Monomial{mono.i + ma.i, mono.j + mb.j}, c * instantiate(q, ctx_));
        }
    }
    return r;
}

NcPoly NcPoly::operator*(const Scalar& c) const {
    NcPoly r(pres_, ctx_);
    for (const auto& [m, coeff] : terms_)
        r.add_term(m, coeff * c);
    return r;
}

NcPoly NcPoly::pow(unsigned k) const {
    NcPoly r = NcPoly::constant(pres_, Scalar::one(ctx_));
    for (unsigned t = 0; t < k; ++t)
        r = r * *this;
    return r;
}

NcPoly h_element(const ContextPtr& ctx) {
    const auto pres = Presentation::QuantumWeyl;
    NcPoly one = NcPoly::constant(pres, Scalar::one(ctx));
    return one - NcPoly::y(pres, ctx) * NcPoly::x(pres, ctx);
}

NcPoly h_normalized(const ContextPtr& ctx) {
    const auto pres = Presentation::QuantumWeyl;
    const Scalar p = Scalar::param(ctx, "p");
    NcPoly one = NcPoly::constant(pres, Scalar::one(ctx));
    NcPoly xy = NcPoly::monomial(pres, ctx, 1, 1);
    return one + xy * (p - Scalar::one(ctx));
}

NcPoly substitute(const NcPoly& f, const NcPoly& arg) {
    if (!f.is_x_univariate())
        throw std::invalid_argument("substitute: polynomial must be univariate in x");
    NcPoly out = NcPoly::zero(arg.presentation(), arg.context());
    NcPoly power = NcPoly::constant(arg.presentation(), Scalar::one(arg.context()));
    unsigned reached = 0;
    for (const auto& [m, c] : f.terms()) {  // ascending x-degree
        while (reached < m.i) {
            power = power * arg;
            ++reached;
        }
        out = out + power * c;
    }
    return out;
}

std::string NcPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        if (m.i > 0) {
            mono = "x";
            if (m.i > 1)
                mono += "^" + std::to_string(m.i);
        }
        if (m.j > 0) {
            if (!mono.empty())
                mono += "*";
            mono += "y";
            if (m.j > 1)
                mono += "^" + std::to_string(m.j);
        }
        std::string cs = c.to_string();
        std::string part;
        if (mono.empty()) {
            const bool composite = cs.find('+') != std::string::npos ||
                                   cs.find('-', 1) != std::string::npos;
            part = composite ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            part = mono;
        } else if (cs == "-1") {
            part = "-" + mono;
        } else {
            const bool simple = cs.find('+') == std::string::npos &&
                                cs.find('-', 1) == std::string::npos &&
                                cs.find('/') == std::string::npos;
            part = (simple ? cs : "(" + cs + ")") + "*" + mono;
        }
        if (out.empty())
            out = part;
        else if (part[0] == '-')
            out += " - " + part.substr(1);
        else
            out += " + " + part;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const NcPoly& f) { return os << f.to_string(); }

}  // namespace ncalg
