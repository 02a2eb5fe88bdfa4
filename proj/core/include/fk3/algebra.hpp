#pragma once

#include "fk3/poly.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fk3 {

using Word = std::vector<int>;

inline constexpr int kDim = 12;

// 1, x0, x1, x2, x2x0, x0x2, x1x0, x0x1, x0x1x0, x2x0x2, x2x0x1, x2x0x1x0
const std::array<Word, kDim>& basis_words();
int basis_degree(int b);
int basis_index(const Word& w);  // -1 if w is not a basis word
inline constexpr int kTop = 11;  // x2x0x1x0

// "1", "x0", "x2*x0*x1*x0" (letter is 'x' or 'y').
std::string word_name(const Word& w, char letter = 'x');
std::string basis_name(int b, char letter = 'x');
// Accepts "x2*x0", "x2x0", "y2*y0", "1".
Word parse_word(const std::string& text);
int parse_basis_name(const std::string& text);  // throws if not a basis word

// Sparse-by-zero vector over the 12 basis words.
struct Element {
    std::array<Poly, kDim> c{};

    static Element basis(int b, const Poly& coef = Poly(1));
    static Element unit() { return basis(0); }

    bool is_zero() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Poly& s);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Poly& s) { return a *= s; }
    friend Element operator*(const Poly& s, Element a) { return a *= s; }
    friend bool operator==(const Element& a, const Element& b) { return a.c == b.c; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    void add_scaled(const Element& o, const Poly& s);

    // Highest degree with a nonzero coefficient; -1 for zero.
    int degree() const;
    std::string to_string(char letter = 'x') const;
};

// Element of the tensor square over the basis, dense 12 x 12.
struct Tensor2 {
    std::array<Poly, kDim * kDim> c{};

    Poly& at(int i, int j) { return c[i * kDim + j]; }
    const Poly& at(int i, int j) const { return c[i * kDim + j]; }
    static Tensor2 pure(const Element& a, const Element& b);
    bool is_zero() const;
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.c == b.c; }
    friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }
    std::string to_string(char left = 'x', char right = 'x') const;
};

using LinComb = std::vector<std::pair<Word, Poly>>;

struct RewriteRule {
    Word lhs;
    LinComb rhs;
};

// Word rewriting modulo a list of rules.  Normal forms are computed by
// repeatedly replacing the leftmost (or rightmost) occurrence of a rule's
// left-hand side.
class RewriteSystem {
public:
    explicit RewriteSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {}

    const std::vector<RewriteRule>& rules() const { return rules_; }
    // Irreducible words with coefficients.
    std::map<Word, Poly> normal_form(const Word& w, bool leftmost = true) const;
    bool is_irreducible(const Word& w) const;

private:
    std::map<Word, Poly> reduce(const Word& w, bool leftmost, int depth) const;

    std::vector<RewriteRule> rules_;
    mutable std::map<Word, std::map<Word, Poly>> memo_left_;
    mutable std::map<Word, std::map<Word, Poly>> memo_right_;
};

// A 12-dimensional algebra on the fixed basis, given by structure constants.
class AlgebraTable {
public:
    AlgebraTable() = default;
    // Derives the table from the rewriting system by reducing every
    // concatenation of two basis words (leftmost-first); throws if a normal
    // word is not a basis word or if leftmost and rightmost reduction disagree.
    AlgebraTable(const RewriteSystem& rs, ContextPtr ctx);

    const Element& product(int i, int j) const { return table_[i * kDim + j]; }
    Element& mutable_product(int i, int j) { return table_[i * kDim + j]; }
    Element multiply(const Element& a, const Element& b) const;
    // Value of the word x_{w0} x_{w1} ... computed with the table.
    Element reduce_word(const Word& w) const;
    const ContextPtr& context() const { return ctx_; }

private:
    std::array<Element, kDim * kDim> table_{};
    ContextPtr ctx_;
};

// Cross-checks leftmost and rightmost reduction on all words up to max_len;
// returns the number of words checked, throws std::logic_error on a mismatch.
std::size_t certify_confluence(const RewriteSystem& rs, int max_len);

}  // namespace fk3
