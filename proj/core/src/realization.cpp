#include "fk3/realization.hpp"

#include "fk3/fk3.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace fk3 {

Realization Realization::pointed(int ell, int k) {
    if (ell < 1 || k < 0 || k >= ell) throw std::invalid_argument("pointed realization needs 0 <= k < ell");
    return {RealizationKind::Pointed, ell, k};
}

Realization Realization::copointed() { return {RealizationKind::Copointed, 1, 0}; }

std::string Realization::h_name(int h) const {
    if (is_pointed()) {
        DihedralLikeElt g = DihedralLikeElt::from_index(h, ell);
        if (ell == 1) return to_string(to_perm3(g));
        return to_string(g);
    }
    return "delta" + (h == 0 ? std::string("_e") : to_string(Perm3::from_index(h)));
}

std::string Realization::describe() const {
    if (is_pointed()) return "pointed(ell=" + std::to_string(ell) + ", k=" + std::to_string(k) + ")";
    return "copointed";
}

std::vector<std::pair<int, Rational>> constant_terms(const Element& e) {
    std::vector<std::pair<int, Rational>> out;
    for (int i = 0; i < kDim; ++i)
        if (!e.c[i].is_zero()) out.emplace_back(i, e.c[i].constant_value());
    return out;
}

Tensor2 to_tensor(const SparseT2& t) {
    Tensor2 out;
    for (const auto& term : t) out.at(term.i, term.j) += Poly(term.c);
    return out;
}

SparseT2 to_sparse(const Tensor2& t) {
    SparseT2 out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (!t.at(i, j).is_zero()) out.push_back({i, j, t.at(i, j).constant_value()});
    return out;
}

YD::YD(const Realization& r) : r_(r) { build(); }

int YD::h_mult(int a, int b) const {
    if (r_.is_pointed())
        return g_mul(DihedralLikeElt::from_index(a, r_.ell), DihedralLikeElt::from_index(b, r_.ell)).index();
    return a == b ? a : -1;
}

int YD::h_counit(int h) const {
    if (r_.is_pointed()) return 1;
    return h == 0 ? 1 : 0;
}

int YD::h_identity() const { return 0; }

DihedralLikeElt YD::group_degree(const Word& w) const {
    DihedralLikeElt g = DihedralLikeElt::identity(r_.ell);
    for (int l : w) g = g_mul(g, DihedralLikeElt::g(l, r_.k, r_.ell));
    return g;
}

Perm3 YD::s3_degree(const Word& w) {
    Perm3 p;
    for (int l : w) p = p * transposition_of(l);
    return p;
}

std::pair<int, Word> YD::act_word(int h, const Word& w) const {
    if (r_.is_pointed()) {
        DihedralLikeElt g = DihedralLikeElt::from_index(h, r_.ell);
        int sign = 1;
        Word out;
        out.reserve(w.size());
        for (int l : w) {
            auto [s, i] = act_on_generator(g, l, r_.k);
            sign *= s;
            out.push_back(i);
        }
        return {sign, out};
    }
    if (s3_degree(w).index() == h) return {1, w};
    return {0, {}};
}

std::vector<std::tuple<int, int, Word>> YD::coact_word(const Word& w) const {
    std::vector<std::tuple<int, int, Word>> out;
    if (r_.is_pointed()) {
        out.emplace_back(group_degree(w).index(), 1, w);
        return out;
    }
    for (int h = 0; h < 6; ++h) {
        Perm3 om = Perm3::from_index(h);
        Perm3 inv = om.inverse();
        int sign = 1;
        Word conj;
        conj.reserve(w.size());
        for (int l : w) {
            sign *= om.sign();
            conj.push_back(index_of_transposition(inv * transposition_of(l) * om));
        }
        out.emplace_back(h, sign, conj);
    }
    return out;
}

Element YD::act(int h, const Element& a) const {
    Element out;
    for (int b = 0; b < kDim; ++b)
        if (!a.c[b].is_zero()) out.add_scaled(act(h, b), a.c[b]);
    return out;
}

Tensor2 YD::braid(const Tensor2& t) const {
    Tensor2 out;
    for (int u = 0; u < kDim; ++u)
        for (int v = 0; v < kDim; ++v) {
            if (t.at(u, v).is_zero()) continue;
            for (const auto& term : braiding(u, v)) out.at(term.i, term.j).add_scaled(t.at(u, v), term.c);
        }
    return out;
}

Tensor2 YD::braided_product(const Tensor2& a, const Tensor2& b) const {
    const AlgebraTable& m = fk3_table();
    Tensor2 out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Poly& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < kDim; ++k)
                for (int l = 0; l < kDim; ++l) {
                    const Poly& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    Poly s = aij * bkl;
                    for (const auto& br : braiding(j, k)) {
                        const Element& left = m.product(i, br.i);
                        const Element& right = m.product(br.j, l);
                        if (left.is_zero() || right.is_zero()) continue;
                        for (const auto& [p, cp] : constant_terms(left))
                            for (const auto& [q, cq] : constant_terms(right))
                                out.at(p, q).add_scaled(s, br.c * cp * cq);
                    }
                }
        }
    return out;
}

Tensor2 YD::coproduct(const Element& a) const {
    Tensor2 out;
    for (int b = 0; b < kDim; ++b) {
        if (a.c[b].is_zero()) continue;
        for (const auto& t : coproduct(b)) out.at(t.i, t.j).add_scaled(a.c[b], t.c);
    }
    return out;
}

SparseT2 YD::reduced_coproduct(int b) const {
    if (b == 0) return {{0, 0, Rational(1)}};
    SparseT2 out;
    for (const auto& t : coproduct(b)) {
        if ((t.i == b && t.j == 0) || (t.i == 0 && t.j == b)) {
            Rational c = t.c - 1;
            if (sgn(c) != 0) out.push_back({t.i, t.j, c});
            continue;
        }
        out.push_back(t);
    }
    return out;
}

void YD::build() {
    const AlgebraTable& m = fk3_table();
    const auto& bw = basis_words();
    int hd = h_dim();

    h_coproduct_.assign(hd, {});
    h_unit_.clear();
    if (r_.is_pointed()) {
        for (int h = 0; h < hd; ++h) h_coproduct_[h].emplace_back(h, h);
        h_unit_.push_back(0);
    } else {
        for (int u = 0; u < 6; ++u)
            for (int v = 0; v < 6; ++v) {
                int s = (Perm3::from_index(u) * Perm3::from_index(v)).index();
                h_coproduct_[s].emplace_back(u, v);
            }
        for (int h = 0; h < 6; ++h) h_unit_.push_back(h);
    }

    act_.assign(static_cast<std::size_t>(hd) * kDim, Element{});
    for (int h = 0; h < hd; ++h)
        for (int b = 0; b < kDim; ++b) {
            auto [sign, w] = act_word(h, bw[b]);
            if (sign == 0) continue;
            Element e = m.reduce_word(w);
            if (sign < 0) e *= Poly(-1);
            act_[h * kDim + b] = e;
        }

    coaction_.assign(kDim, {});
    for (int b = 0; b < kDim; ++b)
        for (const auto& [h, sign, w] : coact_word(bw[b])) {
            Element e = m.reduce_word(w);
            if (sign < 0) e *= Poly(-1);
            if (!e.is_zero()) coaction_[b].emplace_back(h, e);
        }

    braiding_.assign(kDim * kDim, {});
    for (int u = 0; u < kDim; ++u)
        for (int v = 0; v < kDim; ++v) {
            Tensor2 t;
            for (const auto& [h, eu] : coaction_[u]) t += Tensor2::pure(act(h, v), eu);
            braiding_[u * kDim + v] = to_sparse(t);
        }

    coproduct_.assign(kDim, {});
    for (int b = 0; b < kDim; ++b) {
        Tensor2 acc;
        acc.at(0, 0) = Poly(1);
        for (int l : bw[b]) {
            Tensor2 gen;
            gen.at(1 + l, 0) = Poly(1);
            gen.at(0, 1 + l) = Poly(1);
            acc = braided_product(acc, gen);
        }
        coproduct_[b] = to_sparse(acc);
    }

    coproduct3_.assign(kDim, {});
    for (int b = 0; b < kDim; ++b) {
        std::map<std::tuple<int, int, int>, Rational> acc;
        for (const auto& t : coproduct_[b])
            for (const auto& s : coproduct_[t.i]) acc[{s.i, s.j, t.j}] += t.c * s.c;
        for (const auto& [key, c] : acc)
            if (sgn(c) != 0) coproduct3_[b].push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    }
}

const YD& yd_for(const Realization& r) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<YD>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(r.kind), r.is_pointed() ? r.ell : 0, r.is_pointed() ? r.k : 0);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<YD>(r)).first;
    return *it->second;
}

}  // namespace fk3
