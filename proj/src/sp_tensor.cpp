#include "chordlie/sp_tensor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "chordlie/linalg.hpp"

namespace chordlie {

SymplecticSpace::SymplecticSpace(int genus) : g(genus) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (g > 60) throw cap_exceeded("genus " + std::to_string(g) + " beyond symbol alphabet");
}

int pairing(int x, int y) {
    if ((x ^ 1) != y) return 0;
    return (x & 1) == 0 ? 1 : -1;
}

std::string symbol_name(int s) {
    return ((s & 1) == 0 ? "A" : "B") + std::to_string(s / 2 + 1);
}

void add_term(Tensor& t, const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = t.terms.find(w);
    if (it == t.terms.end()) {
        t.terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t.terms.erase(it);
}

Tensor tensor_add(const Tensor& a, const Tensor& b) {
    assert(a.g == b.g || a.is_zero() || b.is_zero());
    Tensor out = a;
    out.g = a.is_zero() ? b.g : a.g;
    for (const auto& [w, c] : b.terms) add_term(out, w, c);
    return out;
}

Tensor tensor_sub(const Tensor& a, const Tensor& b) {
    assert(a.g == b.g || a.is_zero() || b.is_zero());
    Tensor out = a;
    out.g = a.is_zero() ? b.g : a.g;
    for (const auto& [w, c] : b.terms) add_term(out, w, -c);
    return out;
}

Tensor tensor_scale(const Tensor& a, const Rat& c) {
    Tensor out;
    out.g = a.g;
    if (c == 0) return out;
    for (const auto& [w, v] : a.terms) out.terms.emplace(w, v * c);
    return out;
}

int homogeneous_degree(const Tensor& t) {
    int deg = -1;
    for (const auto& [w, c] : t.terms) {
        if (deg == -1)
            deg = static_cast<int>(w.size());
        else if (deg != static_cast<int>(w.size()))
            return -1;
    }
    return deg;
}

Tensor omega_tensor(const SymplecticSpace& s) {
    Tensor out;
    out.g = s.g;
    for (int i = 0; i < s.g; ++i) {
        Word ab{static_cast<char>(2 * i), static_cast<char>(2 * i + 1)};
        Word ba{static_cast<char>(2 * i + 1), static_cast<char>(2 * i)};
        add_term(out, ab, 1);
        add_term(out, ba, -1);
    }
    return out;
}

Tensor tensor_rotate(const Tensor& t) {
    Tensor out;
    out.g = t.g;
    for (const auto& [w, c] : t.terms) {
        if (w.empty()) {
            add_term(out, w, c);
            continue;
        }
        Word r;
        r.reserve(w.size());
        r.push_back(w.back());
        r.append(w, 0, w.size() - 1);
        add_term(out, r, c);
    }
    return out;
}

Tensor n_tensor(const Tensor& t) {
    Tensor out;
    out.g = t.g;
    for (const auto& [w, c] : t.terms) {
        if (w.empty()) continue;  // the symmetrizer kills degree 0
        Word r = w;
        for (std::size_t k = 0; k < w.size(); ++k) {
            add_term(out, r, c);
            std::rotate(r.begin(), r.end() - 1, r.end());
        }
    }
    return out;
}

Tensor a_linear(const LinearDiagram& c, const SymplecticSpace& s) {
    validate(c);
    Tensor out;
    out.g = s.g;
    const std::size_t n = 2 * c.size();
    Word w(n, '\0');
    Rat coeff(1);
    // Depth-first product over chords: each chord picks a symplectic index
    // and an orientation of the form's two legs.
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == c.size()) {
            add_term(out, w, coeff);
            return;
        }
        const auto [i, j] = c[k];
        for (int idx = 0; idx < s.g; ++idx) {
            w[static_cast<std::size_t>(i - 1)] = static_cast<char>(2 * idx);
            w[static_cast<std::size_t>(j - 1)] = static_cast<char>(2 * idx + 1);
            rec(k + 1);
            w[static_cast<std::size_t>(i - 1)] = static_cast<char>(2 * idx + 1);
            w[static_cast<std::size_t>(j - 1)] = static_cast<char>(2 * idx);
            coeff = -coeff;
            rec(k + 1);
            coeff = -coeff;
        }
    };
    rec(0);
    return out;
}

Tensor a_lc(const LCVector& x, const SymplecticSpace& s) {
    Tensor out;
    out.g = s.g;
    for (const auto& [d, c] : x)
        out = tensor_add(out, tensor_scale(a_linear(d.chords, s), c));
    return out;
}

Tensor a_cyclic(const CVector& x, const SymplecticSpace& s) {
    Tensor out;
    out.g = s.g;
    for (const auto& [k, c] : x)
        out = tensor_add(out, tensor_scale(n_tensor(a_linear(k.rep.chords, s)), c));
    return out;
}

Tensor derivation_on_generator(const Derivation& d, int symbol) {
    Tensor out;
    out.g = d.g;
    for (const auto& [w, c] : d.terms) {
        assert(!w.empty());
        const int p = pairing(symbol, w[0]);
        if (p == 0) continue;
        add_term(out, w.substr(1), c * p);
    }
    return out;
}

Tensor derivation_apply(const Derivation& d, const Tensor& t, int degree_cap) {
    // Per-symbol action table: symbol -> list of (tail word, coefficient).
    std::vector<std::vector<std::pair<Word, Rat>>> act(
        static_cast<std::size_t>(2 * d.g));
    for (const auto& [w, c] : d.terms) {
        assert(!w.empty());
        const int partner = w[0] ^ 1;
        const int p = pairing(partner, w[0]);
        act[static_cast<std::size_t>(partner)].emplace_back(w.substr(1), c * p);
    }
    Tensor out;
    out.g = t.g;
    for (const auto& [w, c] : t.terms) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const auto& moves = act[static_cast<std::size_t>(w[pos])];
            if (moves.empty()) continue;
            for (const auto& [tail, cu] : moves) {
                if (w.size() - 1 + tail.size() > static_cast<std::size_t>(degree_cap))
                    throw cap_exceeded("derivation_apply: word degree beyond cap " +
                                       std::to_string(degree_cap));
                Word nw;
                nw.reserve(w.size() - 1 + tail.size());
                nw.append(w, 0, pos);
                nw.append(tail);
                nw.append(w, pos + 1, w.size() - pos - 1);
                add_term(out, nw, c * cu);
            }
        }
    }
    return out;
}

Derivation derivation_reconstruct(const SymplecticSpace& s,
                                  const std::vector<Tensor>& action_on_symbol) {
    assert(static_cast<int>(action_on_symbol.size()) == s.symbols());
    Derivation out;
    out.g = s.g;
    for (int i = 0; i < s.g; ++i) {
        const int a = 2 * i, b = 2 * i + 1;
        for (const auto& [w, c] : action_on_symbol[static_cast<std::size_t>(a)].terms) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(static_cast<char>(b));
            nw.append(w);
            add_term(out, nw, c);
        }
        for (const auto& [w, c] : action_on_symbol[static_cast<std::size_t>(b)].terms) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(static_cast<char>(a));
            nw.append(w);
            add_term(out, nw, -c);
        }
    }
    return out;
}

Derivation derivation_commutator(const Derivation& d1, const Derivation& d2,
                                 int degree_cap) {
    assert(d1.g == d2.g);
    SymplecticSpace s(d1.g);
    std::vector<Tensor> action(static_cast<std::size_t>(s.symbols()));
    for (int z = 0; z < s.symbols(); ++z) {
        const Tensor t12 = derivation_apply(d1, derivation_on_generator(d2, z), degree_cap);
        const Tensor t21 = derivation_apply(d2, derivation_on_generator(d1, z), degree_cap);
        action[static_cast<std::size_t>(z)] = tensor_sub(t12, t21);
    }
    return derivation_reconstruct(s, action);
}

bool commutator_acts_like(const Tensor& lhs, const Derivation& d1,
                          const Derivation& d2, int degree_cap) {
    assert(lhs.g == d1.g && d1.g == d2.g);
    for (int z = 0; z < 2 * d1.g; ++z) {
        const Tensor t12 = derivation_apply(d1, derivation_on_generator(d2, z), degree_cap);
        const Tensor t21 = derivation_apply(d2, derivation_on_generator(d1, z), degree_cap);
        if (!(derivation_on_generator(lhs, z) == tensor_sub(t12, t21))) return false;
    }
    return true;
}

Tensor bracket_formula(const Tensor& u, const Tensor& v) {
    const int n = homogeneous_degree(u), m = homogeneous_degree(v);
    if (n < 2 || m < 2)
        throw std::invalid_argument("bracket_formula requires homogeneous degrees >= 2");
    assert(u.g == v.g);
    Tensor pre;
    pre.g = u.g;
    for (const auto& [x, cx] : u.terms) {
        for (const auto& [y, cy] : v.terms) {
            for (int sp = 0; sp < n; ++sp) {
                for (int tp = 0; tp < m; ++tp) {
                    const int p = pairing(x[static_cast<std::size_t>(sp)],
                                          y[static_cast<std::size_t>(tp)]);
                    if (p == 0) continue;
                    Word w;
                    w.reserve(static_cast<std::size_t>(n + m - 2));
                    for (int k = 1; k < n; ++k)
                        w.push_back(x[static_cast<std::size_t>((sp + k) % n)]);
                    for (int k = 1; k < m; ++k)
                        w.push_back(y[static_cast<std::size_t>((tp + k) % m)]);
                    add_term(pre, w, -cx * cy * p);
                }
            }
        }
    }
    return n_tensor(pre);
}

Tensor b_prime(const Tensor& u, const Tensor& v) {
    if (homogeneous_degree(u) != 2 || homogeneous_degree(v) != 2)
        throw std::invalid_argument("b_prime requires degree-2 tensors");
    Tensor out;
    out.g = u.g;
    for (const auto& [x, cx] : u.terms)
        for (const auto& [y, cy] : v.terms) {
            const int p = pairing(x[0], y[0]);
            if (p == 0) continue;
            Word w{x[1], y[1]};
            add_term(out, w, -cx * cy * p);
        }
    return out;
}

std::vector<Word> all_words(int n, const SymplecticSpace& s) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), '\0');
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            out.push_back(w);
            return;
        }
        for (int sym = 0; sym < s.symbols(); ++sym) {
            w[static_cast<std::size_t>(pos)] = static_cast<char>(sym);
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Tensor> kernel_of_n(int n, const SymplecticSpace& s, long long cap_entries) {
    if (n < 1) throw std::invalid_argument("kernel_of_n requires degree >= 1");
    long long dim = 1;
    for (int k = 0; k < n; ++k) dim *= s.symbols();
    if (n * dim > cap_entries)
        throw cap_exceeded("kernel_of_n: " + std::to_string(n * dim) + " entries beyond cap");

    const std::vector<Word> words = all_words(n, s);
    std::unordered_map<Word, int> idx;
    idx.reserve(words.size());
    for (std::size_t k = 0; k < words.size(); ++k) idx.emplace(words[k], static_cast<int>(k));

    SparseRationalMatrix mat(static_cast<int>(words.size()), static_cast<int>(words.size()));
    for (std::size_t k = 0; k < words.size(); ++k) {
        Word r = words[k];
        for (int rot = 0; rot < n; ++rot) {
            mat.add(idx.at(r), static_cast<int>(k), 1);
            std::rotate(r.begin(), r.end() - 1, r.end());
        }
    }

    std::vector<Tensor> out;
    for (const auto& v : kernel_basis(mat)) {
        Tensor t;
        t.g = s.g;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) t.terms.emplace(words[k], v[k]);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace chordlie
