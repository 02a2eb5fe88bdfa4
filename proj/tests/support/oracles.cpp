#include "oracles.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fk3::testing {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_bars(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, '|')) out.push_back(trim(item));
    return out;
}

// Relations written out by hand: x_i x_i, x0x1 + x1x2 + x2x0, x1x0 + x2x1 + x0x2.
std::vector<std::vector<std::pair<Word, int>>> relations() {
    return {{{{0, 0}, 1}},
            {{{1, 1}, 1}},
            {{{2, 2}, 1}},
            {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 0}, 1}},
            {{{1, 0}, 1}, {{2, 1}, 1}, {{0, 2}, 1}}};
}

std::size_t encode(const Word& w) {
    std::size_t k = 0;
    for (int x : w) k = 3 * k + static_cast<std::size_t>(x);
    return k;
}

Word decode(std::size_t k, int n) {
    Word w(n);
    for (int i = n - 1; i >= 0; --i) {
        w[i] = static_cast<int>(k % 3);
        k /= 3;
    }
    return w;
}

std::size_t power3(int n) {
    std::size_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

// Reduced row echelon form of the degree-n part of the ideal, with columns
// permuted so that words that are not basis words are pivoted first.
struct IdealEchelon {
    int n = 0;
    std::vector<std::size_t> order;              // column order (word codes)
    std::vector<std::vector<Rational>> rows;     // in permuted column coordinates
    std::vector<std::size_t> pivots;             // permuted column of each row
};

IdealEchelon ideal_echelon(int n) {
    IdealEchelon e;
    e.n = n;
    const std::size_t m = power3(n);
    std::vector<std::size_t> basis_cols, other_cols;
    for (std::size_t c = 0; c < m; ++c) (basis_index(decode(c, n)) >= 0 ? basis_cols : other_cols).push_back(c);
    e.order = other_cols;
    e.order.insert(e.order.end(), basis_cols.begin(), basis_cols.end());
    std::vector<std::size_t> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[e.order[i]] = i;

    std::vector<std::vector<Rational>> gens;
    if (n >= 2) {
        const std::size_t outer = power3(n - 2);
        for (const auto& rel : relations())
            for (int split = 0; split <= n - 2; ++split)
                for (std::size_t uv = 0; uv < outer; ++uv) {
                    Word both = decode(uv, n - 2);
                    Word u(both.begin(), both.begin() + split), v(both.begin() + split, both.end());
                    std::vector<Rational> row(m);
                    for (const auto& [mid, c] : rel) {
                        Word w = u;
                        w.insert(w.end(), mid.begin(), mid.end());
                        w.insert(w.end(), v.begin(), v.end());
                        row[pos[encode(w)]] += c;
                    }
                    gens.push_back(row);
                }
    }
    // Gauss-Jordan elimination.
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < gens.size(); ++col) {
        std::size_t piv = r;
        while (piv < gens.size() && gens[piv][col] == 0) ++piv;
        if (piv == gens.size()) continue;
        std::swap(gens[r], gens[piv]);
        const Rational inv = 1 / gens[r][col];
        for (auto& x : gens[r]) x *= inv;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i == r || gens[i][col] == 0) continue;
            const Rational f = gens[i][col];
            for (std::size_t j = 0; j < m; ++j) gens[i][j] -= f * gens[r][j];
        }
        e.pivots.push_back(col);
        ++r;
    }
    gens.resize(r);
    e.rows = std::move(gens);
    return e;
}

const IdealEchelon& echelon(int n) {
    static std::map<int, IdealEchelon> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, ideal_echelon(n)).first;
    return it->second;
}

}  // namespace

std::string fixture_path(const std::string& name) { return std::string(FK3_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

BiFunctional load_table_fixture(const std::string& name, const ContextPtr& ctx,
                                const std::map<std::string, Poly>& aliases, const Poly& unit_value) {
    std::istringstream in(read_file(fixture_path(name)));
    BiFunctional f;
    f.at(0, 0) = unit_value;
    std::vector<int> cols;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == '[') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad fixture line: " + line);
        const std::string head = trim(line.substr(0, colon));
        const std::vector<std::string> cells = split_bars(line.substr(colon + 1));
        if (head == "cols") {
            cols.clear();
            for (const std::string& c : cells) cols.push_back(parse_basis_name(c));
            continue;
        }
        if (cells.size() != cols.size()) throw std::runtime_error("ragged fixture row: " + line);
        const int row = parse_basis_name(head);
        for (std::size_t i = 0; i < cells.size(); ++i) f.at(row, cols[i]) = parse_poly(cells[i], ctx, aliases);
    }
    return f;
}

std::map<std::string, Poly> pointed_aliases() {
    const ContextPtr ctx = pointed_context();
    const Poly lambda = Poly::var(ctx, "lambda"), mu = Poly::var(ctx, "mu");
    const Poly lb = lambda * Rational(1, 3);
    const Poly p = (mu - lb) * (mu - lb) * (mu + lb * Rational(2));
    const Poly q = -(mu * (p + lb * lb * lb * Rational(4)));
    return {{"lb", lb}, {"p", p}, {"q", q}};
}

Element free_algebra_reduce(const Word& w) {
    const int n = static_cast<int>(w.size());
    const IdealEchelon& e = echelon(n);
    const std::size_t m = e.order.size();
    std::vector<Rational> v(m);
    for (std::size_t i = 0; i < m; ++i)
        if (e.order[i] == encode(w)) v[i] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        const Rational f = v[e.pivots[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < m; ++j) v[j] -= f * e.rows[r][j];
    }
    Element out;
    for (std::size_t i = 0; i < m; ++i) {
        if (v[i] == 0) continue;
        const int b = basis_index(decode(e.order[i], n));
        if (b < 0) throw std::logic_error("basis words do not span the quotient");
        out.c[b] = Poly(v[i]);
    }
    return out;
}

std::size_t quotient_dimension(int n) { return power3(n) - echelon(n).rows.size(); }

std::array<int, 3> compose(const std::array<int, 3>& p, const std::array<int, 3>& q) {
    return {p[q[0] - 1], p[q[1] - 1], p[q[2] - 1]};
}

std::array<int, 3> invert(const std::array<int, 3>& p) {
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) out[p[i] - 1] = i + 1;
    return out;
}

int perm_sign(const std::array<int, 3>& p) {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace fk3::testing
