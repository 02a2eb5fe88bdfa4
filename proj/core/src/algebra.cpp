#include "fk3/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace fk3 {

const std::array<Word, kDim>& basis_words() {
    static const std::array<Word, kDim> words = {
        Word{},        Word{0},       Word{1},       Word{2},       Word{2, 0},       Word{0, 2},
        Word{1, 0},    Word{0, 1},    Word{0, 1, 0}, Word{2, 0, 2}, Word{2, 0, 1},    Word{2, 0, 1, 0},
    };
    return words;
}

int basis_degree(int b) { return static_cast<int>(basis_words()[b].size()); }

int basis_index(const Word& w) {
    const auto& bw = basis_words();
    for (int i = 0; i < kDim; ++i)
        if (bw[i] == w) return i;
    return -1;
}

std::string word_name(const Word& w, char letter) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += letter;
        out += static_cast<char>('0' + w[i]);
    }
    return out;
}

std::string basis_name(int b, char letter) { return word_name(basis_words()[b], letter); }

Word parse_word(const std::string& text) {
    if (text == "1") return {};
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '*' || ch == ' ') {
            ++i;
            continue;
        }
        if ((ch == 'x' || ch == 'y') && i + 1 < text.size() && text[i + 1] >= '0' && text[i + 1] <= '2') {
            w.push_back(text[i + 1] - '0');
            i += 2;
            continue;
        }
        throw std::invalid_argument("cannot parse word: " + text);
    }
    if (w.empty()) throw std::invalid_argument("cannot parse word: " + text);
    return w;
}

int parse_basis_name(const std::string& text) {
    int b = basis_index(parse_word(text));
    if (b < 0) throw std::invalid_argument("not a basis word: " + text);
    return b;
}

Element Element::basis(int b, const Poly& coef) {
    Element e;
    e.c[b] = coef;
    return e;
}

bool Element::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

Element& Element::operator+=(const Element& o) {
    for (int i = 0; i < kDim; ++i)
        if (!o.c[i].is_zero()) c[i] += o.c[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (int i = 0; i < kDim; ++i)
        if (!o.c[i].is_zero()) c[i] -= o.c[i];
    return *this;
}

Element& Element::operator*=(const Poly& s) {
    for (auto& p : c)
        if (!p.is_zero()) p = p * s;
    return *this;
}

void Element::add_scaled(const Element& o, const Poly& s) {
    if (s.is_zero()) return;
    for (int i = 0; i < kDim; ++i)
        if (!o.c[i].is_zero()) c[i].add_product(o.c[i], s);
}

int Element::degree() const {
    int d = -1;
    for (int i = 0; i < kDim; ++i)
        if (!c[i].is_zero()) d = std::max(d, basis_degree(i));
    return d;
}

namespace {

// Writes "coef*name" into a signed sum.
void append_term(std::ostringstream& os, bool& first, const Poly& coef, const std::string& name) {
    std::string cs = coef.to_string();
    bool single = coef.terms().size() == 1;
    bool neg = single && sgn(coef.terms()[0].second) < 0;
    std::string body;
    if (single) {
        Poly a = neg ? -coef : coef;
        std::string as = a.to_string();
        if (name == "1") body = as;
        else if (as == "1") body = name;
        else body = as + "*" + name;
    } else {
        body = "(" + cs + ")";
        if (name != "1") body += "*" + name;
    }
    if (first) os << (neg ? "-" : "") << body;
    else os << (neg ? " - " : " + ") << body;
    first = false;
}

}  // namespace

std::string Element::to_string(char letter) const {
    std::ostringstream os;
    bool first = true;
    for (int i = kDim - 1; i >= 0; --i)
        if (!c[i].is_zero()) append_term(os, first, c[i], basis_name(i, letter));
    if (first) return "0";
    return os.str();
}

Tensor2 Tensor2::pure(const Element& a, const Element& b) {
    Tensor2 t;
    for (int i = 0; i < kDim; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j < kDim; ++j)
            if (!b.c[j].is_zero()) t.at(i, j) = a.c[i] * b.c[j];
    }
    return t;
}

bool Tensor2::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!o.c[i].is_zero()) c[i] += o.c[i];
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!o.c[i].is_zero()) c[i] -= o.c[i];
    return *this;
}

std::string Tensor2::to_string(char left, char right) const {
    std::ostringstream os;
    bool first = true;
    for (int i = kDim - 1; i >= 0; --i)
        for (int j = 0; j < kDim; ++j)
            if (!at(i, j).is_zero())
                append_term(os, first, at(i, j), basis_name(i, left) + " (x) " + basis_name(j, right));
    if (first) return "0";
    return os.str();
}

namespace {

bool occurs_at(const Word& w, const Word& pat, std::size_t pos) {
    if (pos + pat.size() > w.size()) return false;
    for (std::size_t k = 0; k < pat.size(); ++k)
        if (w[pos + k] != pat[k]) return false;
    return true;
}

}  // namespace

bool RewriteSystem::is_irreducible(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (const auto& r : rules_)
            if (occurs_at(w, r.lhs, pos)) return false;
    return true;
}

std::map<Word, Poly> RewriteSystem::normal_form(const Word& w, bool leftmost) const {
    return reduce(w, leftmost, 0);
}

std::map<Word, Poly> RewriteSystem::reduce(const Word& w, bool leftmost, int depth) const {
    if (depth > 200) throw std::logic_error("rewriting does not terminate on " + word_name(w));
    auto& memo = leftmost ? memo_left_ : memo_right_;
    if (auto it = memo.find(w); it != memo.end()) return it->second;

    const RewriteRule* hit = nullptr;
    std::size_t hit_pos = 0;
    if (leftmost) {
        for (std::size_t pos = 0; pos < w.size() && !hit; ++pos)
            for (const auto& r : rules_)
                if (occurs_at(w, r.lhs, pos)) {
                    hit = &r;
                    hit_pos = pos;
                    break;
                }
    } else {
        for (std::size_t pos = w.size(); pos-- > 0 && !hit;)
            for (const auto& r : rules_)
                if (occurs_at(w, r.lhs, pos)) {
                    hit = &r;
                    hit_pos = pos;
                    break;
                }
    }
    std::map<Word, Poly> out;
    if (!hit) {
        out.emplace(w, Poly(1));
    } else {
        for (const auto& [v, coef] : hit->rhs) {
            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(hit_pos));
            nw.insert(nw.end(), v.begin(), v.end());
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(hit_pos + hit->lhs.size()), w.end());
            for (const auto& [u, c] : reduce(nw, leftmost, depth + 1)) {
                Poly& slot = out[u];
                slot.add_product(c, coef);
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero()) it = out.erase(it);
            else ++it;
        }
    }
    memo.emplace(w, out);
    return out;
}

namespace {

Element to_element(const std::map<Word, Poly>& nf, const Word& src) {
    Element e;
    for (const auto& [u, c] : nf) {
        int b = basis_index(u);
        if (b < 0)
            throw std::logic_error("normal form of " + word_name(src) + " contains non-basis word " + word_name(u));
        e.c[b] += c;
    }
    return e;
}

}  // namespace

AlgebraTable::AlgebraTable(const RewriteSystem& rs, ContextPtr ctx) : ctx_(std::move(ctx)) {
    const auto& bw = basis_words();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Word w = bw[i];
            w.insert(w.end(), bw[j].begin(), bw[j].end());
            Element left = to_element(rs.normal_form(w, true), w);
            Element right = to_element(rs.normal_form(w, false), w);
            if (left != right)
                throw std::logic_error("rewriting is not confluent on " + word_name(w) + ": " + left.to_string() +
                                       " vs " + right.to_string());
            for (auto& p : left.c)
                if (!p.is_zero()) p = p.with_context(ctx_);
            table_[i * kDim + j] = left;
        }
}

Element AlgebraTable::multiply(const Element& a, const Element& b) const {
    Element out;
    for (int i = 0; i < kDim; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j < kDim; ++j) {
            if (b.c[j].is_zero()) continue;
            const Element& pij = product(i, j);
            if (pij.is_zero()) continue;
            Poly s = a.c[i] * b.c[j];
            out.add_scaled(pij, s);
        }
    }
    return out;
}

Element AlgebraTable::reduce_word(const Word& w) const {
    Element acc = Element::unit();
    for (int letter : w) acc = multiply(acc, Element::basis(1 + letter));
    return acc;
}

std::size_t certify_confluence(const RewriteSystem& rs, int max_len) {
    std::size_t checked = 0;
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int l = 0; l < 3; ++l) {
                Word v = w;
                v.push_back(l);
                next.push_back(v);
            }
        for (const auto& w : next) {
            if (rs.normal_form(w, true) != rs.normal_form(w, false))
                throw std::logic_error("leftmost and rightmost reduction disagree on " + word_name(w));
            ++checked;
        }
        layer = std::move(next);
    }
    return checked;
}

}  // namespace fk3
