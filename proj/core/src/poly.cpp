#include "fk3/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fk3 {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
        std::size_t i = 0;
        while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
        t.erase(0, i);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    auto check_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    trim(num);
    trim(den);
    if (!check_int(num, true) || !check_int(den, false))
        throw std::invalid_argument("malformed rational literal: " + s);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

ParamContext::ParamContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > static_cast<std::size_t>(kMaxVars))
        throw std::invalid_argument("too many parameters in context");
}

int ParamContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const ParamContext>(std::move(names));
}

ContextPtr pointed_context() {
    static const ContextPtr ctx = make_context({"lambda", "mu"});
    return ctx;
}
ContextPtr copointed_context() {
    static const ContextPtr ctx = make_context({"c0", "c1", "c2"});
    return ctx;
}
ContextPtr eta_pointed_context() {
    static const ContextPtr ctx = make_context({"eta0", "eta2", "eta3"});
    return ctx;
}
ContextPtr eta_copointed_context() {
    static const ContextPtr ctx = make_context({"eta0", "eta1", "eta2", "eta3"});
    return ctx;
}

int mono_exp(Mono m, int var) { return static_cast<int>((m >> (8 * var)) & 0xffu); }

int mono_degree(Mono m) {
    int d = 0;
    for (int v = 0; v < kMaxVars; ++v) d += mono_exp(m, v);
    return d;
}

Mono mono_var(int var, int exp) { return static_cast<Mono>(exp) << (8 * var); }

bool mono_less_canonical(Mono a, Mono b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
}

namespace {

Mono mono_mul(Mono a, Mono b) {
    for (int v = 0; v < kMaxVars; ++v)
        if (mono_exp(a, v) + mono_exp(b, v) > 255) throw std::overflow_error("exponent overflow");
    return a + b;
}

void normalize(std::vector<Poly::Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Poly::Term& x, const Poly::Term& y) { return mono_less_canonical(x.first, y.first); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Mono m = terms[i].first;
        Rational c = terms[i].second;
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].first == m; ++j) c += terms[j].second;
        if (sgn(c) != 0) {
            terms[out].first = m;
            terms[out].second = c;
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

Poly::Poly(long v) {
    if (v != 0) terms_.emplace_back(0u, Rational(v));
}

Poly::Poly(const Rational& v) {
    if (sgn(v) != 0) terms_.emplace_back(0u, v);
}

Poly::Poly(ContextPtr ctx, const Rational& v) : ctx_(std::move(ctx)) {
    if (sgn(v) != 0) terms_.emplace_back(0u, v);
}

Poly Poly::var(const ContextPtr& ctx, const std::string& name) {
    int i = ctx->index_of(name);
    if (i < 0) throw std::invalid_argument("unknown parameter: " + name);
    return var(ctx, i);
}

Poly Poly::var(const ContextPtr& ctx, int index) {
    Poly p;
    p.ctx_ = ctx;
    p.terms_.emplace_back(mono_var(index), Rational(1));
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
    return Rational(0);
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.front().first);
}

void Poly::check_ctx(const Poly& o) const {
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_ && !ctx_->same_as(*o.ctx_)) {
        if (is_constant() && o.is_constant()) return;
        throw ContextMismatch("polynomials from different parameter contexts");
    }
}

void Poly::adopt_ctx(const Poly& o) {
    if (!ctx_ || (is_constant() && o.ctx_ && !o.is_constant())) ctx_ = o.ctx_;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) {
        if (!ctx_) ctx_ = o.ctx_;
        return *this;
    }
    check_ctx(o);
    adopt_ctx(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && mono_less_canonical(terms_[i].first, o.terms_[j].first))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || mono_less_canonical(o.terms_[j].first, terms_[i].first)) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (sgn(c) != 0) out.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    a.check_ctx(b);
    Poly r;
    r.ctx_ = a.ctx_ ? a.ctx_ : b.ctx_;
    if (a.ctx_ && b.ctx_ && a.is_constant() && !b.is_constant()) r.ctx_ = b.ctx_;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) r.terms_.emplace_back(mono_mul(x.first, y.first), x.second * y.second);
    if (a.terms_.size() > 1 && b.terms_.size() > 1) normalize(r.terms_);
    else {
        // A monomial times a polynomial keeps the order of the polynomial.
        std::vector<Poly::Term>& t = r.terms_;
        if (!std::is_sorted(t.begin(), t.end(), [](const Poly::Term& x, const Poly::Term& y) {
                return mono_less_canonical(x.first, y.first);
            }))
            normalize(t);
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& q) {
    if (sgn(q) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= q;
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty()) a.check_ctx(b);
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
    return true;
}

void Poly::add_product(const Poly& a, const Poly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return;
    if (a.is_constant()) {
        add_scaled(b, a.terms_[0].second);
        if (!ctx_) ctx_ = a.ctx_;
        return;
    }
    if (b.is_constant()) {
        add_scaled(a, b.terms_[0].second);
        if (!ctx_) ctx_ = b.ctx_;
        return;
    }
    *this += a * b;
}

void Poly::add_scaled(const Poly& a, const Rational& q) {
    if (a.terms_.empty() || sgn(q) == 0) return;
    Poly t = a;
    t *= q;
    *this += t;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly r(ctx_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational Poly::eval(const std::vector<Rational>& values) const {
    std::size_t n = ctx_ ? ctx_->size() : 0;
    if (values.size() < n) throw std::invalid_argument("not enough values for evaluation");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < n; ++v) {
            int e = mono_exp(m, static_cast<int>(v));
            for (int k = 0; k < e; ++k) t *= values[v];
        }
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    std::size_t n = ctx_ ? ctx_->size() : 0;
    if (images.size() < n) throw std::invalid_argument("not enough images for substitution");
    Poly acc;
    for (const auto& img : images)
        if (img.ctx_) {
            acc.ctx_ = img.ctx_;
            break;
        }
    for (const auto& [m, c] : terms_) {
        Poly t(acc.ctx_, c);
        for (std::size_t v = 0; v < n; ++v) {
            int e = mono_exp(m, static_cast<int>(v));
            for (int k = 0; k < e; ++k) t = t * images[v];
        }
        acc += t;
    }
    return acc;
}

Poly Poly::with_context(const ContextPtr& ctx) const {
    if (ctx_ == ctx) return *this;
    if (is_constant()) {
        Poly r = *this;
        r.ctx_ = ctx;
        return r;
    }
    std::vector<Poly> images;
    for (const auto& name : ctx_->names()) {
        int j = ctx->index_of(name);
        if (j < 0) throw ContextMismatch("parameter " + name + " missing from target context");
        images.push_back(Poly::var(ctx, j));
    }
    return substitute(images);
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mono;
        if (ctx_) {
            for (std::size_t v = 0; v < ctx_->size(); ++v) {
                int e = mono_exp(m, static_cast<int>(v));
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ctx_->names()[v];
                if (e > 1) mono += "^" + std::to_string(e);
            }
        }
        if (mono.empty()) {
            os << a.get_str();
        } else if (a == 1) {
            os << mono;
        } else {
            os << a.get_str() << "*" << mono;
        }
    }
    return os.str();
}

std::string to_string(const Poly& p) { return p.to_string(); }

namespace {

class Parser {
public:
    Parser(const std::string& s, const ContextPtr& ctx, const std::map<std::string, Poly>& aliases)
        : s_(s), ctx_(ctx), aliases_(aliases) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p.with_context(ctx_);
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse polynomial '" + s_ + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                Poly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                Rational q = 1 / d.constant_value();
                acc *= q;
            } else {
                return acc;
            }
        }
    }
    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }
    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly(ctx_, Rational(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = aliases_.find(name);
            if (it != aliases_.end()) return it->second;
            if (!ctx_ || ctx_->index_of(name) < 0) fail("unknown name " + name);
            return Poly::var(ctx_, name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    ContextPtr ctx_;
    const std::map<std::string, Poly>& aliases_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const ContextPtr& ctx, const std::map<std::string, Poly>& aliases) {
    return Parser(text, ctx, aliases).parse();
}

}  // namespace fk3
