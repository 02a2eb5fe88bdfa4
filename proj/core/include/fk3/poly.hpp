#pragma once

#include "fk3/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fk3 {

// Ordered list of parameter names.  Polynomials built over different lists
// cannot be combined.
class ParamContext {
public:
    explicit ParamContext(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    int index_of(const std::string& name) const;  // -1 if absent
    bool same_as(const ParamContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const ParamContext>;

ContextPtr make_context(std::vector<std::string> names);

// Standard contexts.
ContextPtr pointed_context();      // lambda, mu
ContextPtr copointed_context();    // c0, c1, c2
ContextPtr eta_pointed_context();  // eta0, eta2, eta3
ContextPtr eta_copointed_context();  // eta0, eta1, eta2, eta3

class ContextMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Packed exponent vector: variable i occupies bits [8i, 8i+8).
using Mono = std::uint32_t;
inline constexpr int kMaxVars = 4;

int mono_degree(Mono m);
int mono_exp(Mono m, int var);
Mono mono_var(int var, int exp = 1);

// Sparse polynomial with exact rational coefficients.  Terms are kept sorted
// in canonical order (total degree descending, then packed exponent vector
// descending) with no zero coefficients.  A polynomial without a context is a
// constant and combines with any context.
class Poly {
public:
    using Term = std::pair<Mono, Rational>;

    Poly() = default;
    Poly(long v);  // NOLINT(google-explicit-constructor)
    Poly(const Rational& v);  // NOLINT(google-explicit-constructor)
    Poly(ContextPtr ctx, const Rational& v);

    static Poly var(const ContextPtr& ctx, const std::string& name);
    static Poly var(const ContextPtr& ctx, int index);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial; throws if not constant.
    Rational constant_value() const;
    // Coefficient of the constant monomial.
    Rational constant_term() const;
    int total_degree() const;  // -1 for zero

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& q);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& q) { return a *= q; }
    friend Poly operator*(const Rational& q, Poly a) { return a *= q; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // this += a * b without temporaries where possible.
    void add_product(const Poly& a, const Poly& b);
    void add_scaled(const Poly& a, const Rational& q);

    Poly pow(int e) const;

    // Full substitution by rationals (one per context variable).
    Rational eval(const std::vector<Rational>& values) const;
    // Substitution by polynomials (one per variable, all in one target context).
    Poly substitute(const std::vector<Poly>& images) const;
    // Re-expresses a constant or same-named polynomial in another context.
    Poly with_context(const ContextPtr& ctx) const;

    std::string to_string() const;

private:
    friend class PolyBuilder;
    void check_ctx(const Poly& o) const;
    void adopt_ctx(const Poly& o);

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

bool mono_less_canonical(Mono a, Mono b);  // a before b in canonical order

// Parses expressions such as "mu^2 - 1/9*lambda^2", "2*lb*(lb-mu)",
// "(mu-lb)^2*(mu+2*lb)".  Names are resolved against ctx; aliases map extra
// names to polynomials (e.g. "lb" -> lambda/3).
Poly parse_poly(const std::string& text, const ContextPtr& ctx,
                const std::map<std::string, Poly>& aliases = {});

std::string to_string(const Poly& p);

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace fk3
