#include "fk3/fk3.hpp"

namespace fk3 {

RewriteSystem fk3_rewrite_system() {
    std::vector<RewriteRule> rules;
    for (int i = 0; i < 3; ++i) rules.push_back({{i, i}, {}});
    rules.push_back({{1, 2}, {{{0, 1}, Poly(-1)}, {{2, 0}, Poly(-1)}}});
    rules.push_back({{2, 1}, {{{1, 0}, Poly(-1)}, {{0, 2}, Poly(-1)}}});
    rules.push_back({{0, 2, 0}, {{{2, 0, 2}, Poly(1)}}});
    rules.push_back({{1, 0, 1}, {{{0, 1, 0}, Poly(1)}}});
    rules.push_back({{1, 0, 2}, {{{2, 0, 1}, Poly(1)}}});
    return RewriteSystem(std::move(rules));
}

const AlgebraTable& fk3_table() {
    static const AlgebraTable table(fk3_rewrite_system(), nullptr);
    return table;
}

Element fk3_multiply(const Element& a, const Element& b) { return fk3_table().multiply(a, b); }

Poly counit(const Element& a) { return a.c[0]; }

std::vector<LinComb> fk3_quadratic_relations() {
    std::vector<LinComb> rels;
    for (int i = 0; i < 3; ++i) rels.push_back({{{i, i}, Poly(1)}});
    rels.push_back({{{0, 1}, Poly(1)}, {{1, 2}, Poly(1)}, {{2, 0}, Poly(1)}});
    rels.push_back({{{1, 0}, Poly(1)}, {{2, 1}, Poly(1)}, {{0, 2}, Poly(1)}});
    return rels;
}

}  // namespace fk3
