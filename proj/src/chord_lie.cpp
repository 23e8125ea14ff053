#include "chordlie/chord_lie.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace chordlie {

namespace {

template <class Map, class Key>
void accumulate(Map& v, const Key& k, const Rat& c) {
    if (c == 0) return;
    auto it = v.find(k);
    if (it == v.end()) {
        v.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) v.erase(it);
}

}  // namespace

void add_term(CVector& v, const CyclicClass& k, const Rat& c) { accumulate(v, k, c); }
void add_term(LCVector& v, const StandardDiagram& k, const Rat& c) { accumulate(v, k, c); }
void add_term(PolyVectorField& v, int degree, const Rat& c) { accumulate(v, degree, c); }

void add_canonical(CVector& v, const LinearDiagram& d, const Rat& c) {
    auto r = canonical_cyclic(d);
    if (r) add_term(v, r->cls, c * r->sign);
}

CVector cvec(const CyclicClass& k, const Rat& c) {
    CVector v;
    add_term(v, k, c);
    return v;
}

CVector cvec(const std::optional<SignedClass>& s, const Rat& c) {
    CVector v;
    if (s) add_term(v, s->cls, c * s->sign);
    return v;
}

LCVector lcvec(const StandardDiagram& d, const Rat& c) {
    LCVector v;
    add_term(v, d, c);
    return v;
}

LinearDiagram linear_amalgamate(const LinearDiagram& c, const LinearDiagram& cp) {
    auto front = [](const LinearDiagram& d) {
        LinearDiagram out;
        out.reserve(d.size());
        std::size_t k = 0;
        while (k < d.size() && d[k].first != 1 && d[k].second != 1) ++k;
        if (k == d.size()) throw std::invalid_argument("amalgamation input has no chord at vertex 1");
        out.push_back(d[k]);
        for (std::size_t i = 0; i < d.size(); ++i)
            if (i != k) out.push_back(d[i]);
        return out;
    };
    const LinearDiagram cf = front(c), cpf = front(cp);
    const int m = static_cast<int>(cf.size());
    const auto [i1, j1] = cf[0];
    const auto [a1, b1] = cpf[0];

    Chord xy;
    if (i1 == 1 && a1 == 1)
        xy = {b1 + 2 * m - 2, j1 - 1};
    else if (i1 == 1 && b1 == 1)
        xy = {j1 - 1, a1 + 2 * m - 2};
    else if (j1 == 1 && a1 == 1)
        xy = {i1 - 1, b1 + 2 * m - 2};
    else
        xy = {a1 + 2 * m - 2, i1 - 1};

    LinearDiagram out;
    out.reserve(cf.size() + cpf.size() - 1);
    out.push_back(xy);
    for (std::size_t k = 1; k < cf.size(); ++k)
        out.emplace_back(cf[k].first - 1, cf[k].second - 1);
    for (std::size_t k = 1; k < cpf.size(); ++k)
        out.emplace_back(cpf[k].first + 2 * m - 2, cpf[k].second + 2 * m - 2);
    validate(out);
    return out;
}

StandardDiagram t_amalgamate(const StandardDiagram& c, int t, const StandardDiagram& cp) {
    const int m = c.m(), l = cp.m();
    if (t < 2 || t > 2 * l)
        throw std::invalid_argument("t_amalgamate: t=" + std::to_string(t) +
                                    " outside 2.." + std::to_string(2 * l));
    auto involution = [](const StandardDiagram& d) {
        std::vector<int> s(static_cast<std::size_t>(2 * d.m()) + 1, 0);
        for (const auto& [i, j] : d.chords) {
            s[static_cast<std::size_t>(i)] = j;
            s[static_cast<std::size_t>(j)] = i;
        }
        return s;
    };
    const auto s = involution(c), sp = involution(cp);
    const int n = 2 * m + 2 * l - 2;
    auto f = [&](int k) { return k <= t - 1 ? k : k + 2 * m - 2; };

    std::vector<int> spp(static_cast<std::size_t>(n) + 1, 0);
    spp[static_cast<std::size_t>(s[1] + t - 2)] = f(sp[static_cast<std::size_t>(t)]);
    spp[static_cast<std::size_t>(f(sp[static_cast<std::size_t>(t)]))] = s[1] + t - 2;
    for (int k = 1; k <= n; ++k) {
        if (spp[static_cast<std::size_t>(k)]) continue;
        if (k <= t - 1 && k != sp[static_cast<std::size_t>(t)])
            spp[static_cast<std::size_t>(k)] = f(sp[static_cast<std::size_t>(k)]);
        else if (t <= k && k <= t + 2 * m - 2 && k != s[1] + t - 2)
            spp[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k - t + 2)] + t - 2;
        else if (t + 2 * m - 1 <= k && k - 2 * m + 2 != sp[static_cast<std::size_t>(t)])
            spp[static_cast<std::size_t>(k)] = f(sp[static_cast<std::size_t>(k - 2 * m + 2)]);
    }

    StandardDiagram out;
    out.chords.reserve(static_cast<std::size_t>(m + l - 1));
    for (int k = 1; k <= n; ++k)
        if (k < spp[static_cast<std::size_t>(k)]) out.chords.emplace_back(k, spp[static_cast<std::size_t>(k)]);
    assert(static_cast<int>(out.chords.size()) == m + l - 1);
    validate(out.chords);
    return out;
}

CVector bracket_cyclic(const CVector& x, const CVector& y) {
    CVector out;
    for (const auto& [kx, cx] : x) {
        for (const auto& [ky, cy] : y) {
            const Rat c = cx * cy;
            LinearDiagram rx = kx.rep.chords;
            for (int s = 0; s < 2 * kx.m(); ++s) {
                LinearDiagram ry = ky.rep.chords;
                for (int t = 0; t < 2 * ky.m(); ++t) {
                    add_canonical(out, linear_amalgamate(rx, ry), c);
                    ry = rotate_raw(ry);
                }
                rx = rotate_raw(rx);
            }
        }
    }
    return out;
}

LCVector bracket_linear(const LCVector& x, const LCVector& y) {
    LCVector out;
    for (const auto& [dx, cx] : x) {
        for (const auto& [dy, cy] : y) {
            const Rat c = cx * cy;
            for (int t = 2; t <= 2 * dy.m(); ++t) add_term(out, t_amalgamate(dx, t, dy), -c);
            for (int s = 2; s <= 2 * dx.m(); ++s) add_term(out, t_amalgamate(dy, s, dx), c);
        }
    }
    return out;
}

CVector n_map(const LCVector& x) {
    CVector out;
    for (const auto& [d, c] : x) {
        auto r = canonical_cyclic(d.chords);
        if (!r) continue;
        Rat factor(2 * d.m(), r->cls.index);
        factor.canonicalize();
        add_term(out, r->cls, c * r->sign * factor);
    }
    return out;
}

PolyVectorField kappa(const LCVector& x) {
    PolyVectorField out;
    for (const auto& [d, c] : x) add_term(out, d.m(), -2 * c);
    return out;
}

PolyVectorField pvf_bracket(const PolyVectorField& x, const PolyVectorField& y) {
    PolyVectorField out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) add_term(out, a + b - 1, Rat(b - a) * ca * cb);
    return out;
}

LCVector e0() {
    StandardDiagram d;
    d.chords.emplace_back(1, 2);
    return lcvec(d, Rat(-1, 2));
}

CAdMatrix ad_matrix(const CVector& z, int source_degree, int cap) {
    CAdMatrix out;
    out.cols = enumerate_cyclic_basis(source_degree, cap);
    std::map<CyclicClass, int> row_index;
    std::vector<std::map<int, Rat>> col_entries;
    for (const auto& b : out.cols) {
        const CVector img = bracket_cyclic(z, cvec(b));
        std::map<int, Rat> col;
        for (const auto& [k, v] : img) {
            auto [it, fresh] = row_index.emplace(k, static_cast<int>(out.rows.size()));
            if (fresh) out.rows.push_back(k);
            col[it->second] = v;
        }
        col_entries.push_back(std::move(col));
    }
    out.mat = SparseRationalMatrix(static_cast<int>(out.rows.size()),
                                   static_cast<int>(out.cols.size()));
    for (int c = 0; c < out.mat.cols; ++c)
        for (const auto& [r, v] : col_entries[static_cast<std::size_t>(c)]) out.mat.set(r, c, v);
    return out;
}

LCAdMatrix ad_matrix(const LCVector& z, int source_degree, int cap) {
    LCAdMatrix out;
    out.cols = enumerate_linear(source_degree, cap);
    std::map<StandardDiagram, int> row_index;
    std::vector<std::map<int, Rat>> col_entries;
    for (const auto& b : out.cols) {
        const LCVector img = bracket_linear(z, lcvec(b));
        std::map<int, Rat> col;
        for (const auto& [k, v] : img) {
            auto [it, fresh] = row_index.emplace(k, static_cast<int>(out.rows.size()));
            if (fresh) out.rows.push_back(k);
            col[it->second] = v;
        }
        col_entries.push_back(std::move(col));
    }
    out.mat = SparseRationalMatrix(static_cast<int>(out.rows.size()),
                                   static_cast<int>(out.cols.size()));
    for (int c = 0; c < out.mat.cols; ++c)
        for (const auto& [r, v] : col_entries[static_cast<std::size_t>(c)]) out.mat.set(r, c, v);
    return out;
}

}  // namespace chordlie
