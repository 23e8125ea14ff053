#include "chordlie/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace chordlie {

std::vector<CVector> center_of_C(int m, int cap) {
    if (m < 2) throw std::invalid_argument("center_of_C requires m >= 2");
    if (m > cap)
        throw cap_exceeded("center_of_C: m=" + std::to_string(m) + " exceeds cap " +
                           std::to_string(cap));
    const CVector test = cvec(d_ab(m, 2 * m + 1));
    const CAdMatrix ad = ad_matrix(test, m);
    std::vector<CVector> out;
    for (const auto& v : kernel_basis(ad.mat)) {
        CVector x;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) add_term(x, ad.cols[i], v[i]);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<LCVector> center_probe_LC(int max_degree) {
    if (max_degree < 1 || max_degree > 4)
        throw cap_exceeded("center_probe_LC: max_degree must be within 1..4");
    std::vector<StandardDiagram> cand;
    for (int m = 1; m <= max_degree; ++m)
        for (const auto& d : enumerate_linear(m)) cand.push_back(d);
    std::vector<StandardDiagram> probes;
    for (int m = 1; m <= 2; ++m)
        for (const auto& d : enumerate_linear(m)) probes.push_back(d);

    // Rows are (probe, image diagram) pairs, first-seen order.
    std::map<std::pair<int, StandardDiagram>, int> row_index;
    std::vector<std::map<int, Rat>> cols(cand.size());
    for (std::size_t ci = 0; ci < cand.size(); ++ci) {
        for (std::size_t pi = 0; pi < probes.size(); ++pi) {
            const LCVector img = bracket_linear(lcvec(cand[ci]), lcvec(probes[pi]));
            for (const auto& [d, v] : img) {
                auto [it, fresh] = row_index.emplace(
                    std::make_pair(static_cast<int>(pi), d), static_cast<int>(row_index.size()));
                (void)fresh;
                cols[ci][it->second] = v;
            }
        }
    }
    SparseRationalMatrix mat(static_cast<int>(row_index.size()), static_cast<int>(cand.size()));
    for (std::size_t ci = 0; ci < cand.size(); ++ci)
        for (const auto& [r, v] : cols[ci]) mat.set(r, static_cast<int>(ci), v);

    std::vector<LCVector> out;
    for (const auto& v : kernel_basis(mat)) {
        LCVector x;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) add_term(x, cand[i], v[i]);
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

int min_degree(Algebra a) { return a == Algebra::LC ? 1 : 2; }

// Graded basis of degree m for the chain complex, ascending.
std::vector<GradedDiagram> graded_basis(Algebra a, int m) {
    std::vector<GradedDiagram> out;
    if (a == Algebra::C) {
        for (const auto& c : enumerate_cyclic_basis(m)) out.push_back({m, c.rep});
    } else {
        for (const auto& d : enumerate_linear(m)) out.push_back({m, d});
    }
    return out;
}

std::vector<GradedDiagram> build_pool(Algebra a, int w) {
    std::vector<GradedDiagram> pool;
    for (int m = min_degree(a); m - 1 <= w; ++m) {
        if (m - 1 == 0 || m - 1 <= w)
            for (const auto& e : graded_basis(a, m)) pool.push_back(e);
    }
    return pool;  // ascending in (m, d): degrees ascend, bases are sorted
}

std::map<GradedDiagram, Rat> pair_bracket(Algebra a, const GradedDiagram& x,
                                          const GradedDiagram& y) {
    std::map<GradedDiagram, Rat> out;
    if (a == Algebra::C) {
        const CyclicClass cx{x.d, index_of(x.d)}, cy{y.d, index_of(y.d)};
        for (const auto& [k, v] : bracket_cyclic(cvec(cx), cvec(cy)))
            out.emplace(GradedDiagram{k.m(), k.rep}, v);
    } else {
        for (const auto& [d, v] : bracket_linear(lcvec(x.d), lcvec(y.d)))
            out.emplace(GradedDiagram{d.m(), d}, v);
    }
    return out;
}

void chains_rec(const std::vector<GradedDiagram>& pool, std::size_t start, int k, int wleft,
                Chain& acc, std::vector<Chain>& out) {
    if (k == 0) {
        if (wleft == 0) out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        const int wi = pool[i].m - 1;
        if (wi > wleft) break;  // pool weights ascend
        acc.push_back(pool[i]);
        chains_rec(pool, i + 1, k - 1, wleft - wi, acc, out);
        acc.pop_back();
    }
}

}  // namespace

WeightedChainBasis weighted_chain_basis(Algebra a, int k, int w, int weight_cap) {
    if (k < 0 || w < 0) throw std::invalid_argument("chain degree and weight must be >= 0");
    if (w > weight_cap)
        throw cap_exceeded("weight " + std::to_string(w) + " exceeds cap " +
                           std::to_string(weight_cap));
    WeightedChainBasis out;
    out.k = k;
    out.w = w;
    const auto pool = build_pool(a, w);
    Chain acc;
    chains_rec(pool, 0, k, w, acc, out.basis);
    return out;
}

SparseRationalMatrix ce_differential(Algebra a, int k, int w, int weight_cap) {
    if (k < 1) throw std::invalid_argument("ce_differential requires k >= 1");
    const auto domain = weighted_chain_basis(a, k, w, weight_cap);
    const auto codomain = weighted_chain_basis(a, k - 1, w, weight_cap);
    std::map<Chain, int> row_of;
    for (std::size_t i = 0; i < codomain.basis.size(); ++i)
        row_of.emplace(codomain.basis[i], static_cast<int>(i));

    SparseRationalMatrix mat(static_cast<int>(codomain.basis.size()),
                             static_cast<int>(domain.basis.size()));
    for (std::size_t col = 0; col < domain.basis.size(); ++col) {
        const Chain& ch = domain.basis[col];
        for (std::size_t i = 0; i < ch.size(); ++i) {
            for (std::size_t j = i + 1; j < ch.size(); ++j) {
                const auto br = pair_bracket(a, ch[i], ch[j]);
                if (br.empty()) continue;
                Chain rest;
                rest.reserve(ch.size() - 2);
                for (std::size_t p = 0; p < ch.size(); ++p)
                    if (p != i && p != j) rest.push_back(ch[p]);
                for (const auto& [item, c] : br) {
                    const auto pos = std::lower_bound(rest.begin(), rest.end(), item);
                    if (pos != rest.end() && *pos == item) continue;  // repeated factor
                    Chain merged;
                    merged.reserve(rest.size() + 1);
                    merged.insert(merged.end(), rest.begin(), pos);
                    merged.push_back(item);
                    merged.insert(merged.end(), pos, rest.end());
                    const int perm = static_cast<int>(pos - rest.begin());
                    const int sgn = (((i + j) % 2 == 0 ? 1 : -1)) * (perm % 2 == 0 ? 1 : -1);
                    auto it = row_of.find(merged);
                    assert(it != row_of.end());
                    mat.add(it->second, static_cast<int>(col), c * sgn);
                }
            }
        }
    }
    return mat;
}

std::vector<int> homology_dims(Algebra a, int w, int k_max, int weight_cap) {
    std::vector<int> dims;   // dim C_k(w), k = 0..k_max+1
    std::vector<int> ranks;  // rank of d_k, k = 1..k_max+1
    for (int k = 0; k <= k_max + 1; ++k)
        dims.push_back(static_cast<int>(weighted_chain_basis(a, k, w, weight_cap).basis.size()));
    for (int k = 1; k <= k_max + 1; ++k) {
        if (dims[static_cast<std::size_t>(k)] == 0 || dims[static_cast<std::size_t>(k - 1)] == 0)
            ranks.push_back(0);
        else
            ranks.push_back(rank(ce_differential(a, k, w, weight_cap)));
    }
    std::vector<int> betti;
    for (int k = 0; k <= k_max; ++k) {
        const int rk = k >= 1 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
        const int rk1 = ranks[static_cast<std::size_t>(k)];
        betti.push_back(dims[static_cast<std::size_t>(k)] - rk - rk1);
    }
    return betti;
}

std::vector<long long> chain_dims_closed_form(int w) {
    // dim LC_m as mpz to stay exact; weights are m-1 >= 1.
    std::vector<mpz_class> df{1};  // df[m] = (2m-1)!!
    for (int m = 1; m - 1 <= w; ++m) df.push_back(df.back() * (2 * m - 1));

    std::vector<long long> out;
    for (int k = 1; k <= w; ++k) {
        // Partitions of w into k parts >= 1; a part v means degree m = v + 1
        // with multiplicity r contributing binomial(df[m], r).
        mpz_class total = 0;
        std::vector<int> part;
        std::function<void(int, int, int)> rec = [&](int left, int parts, int minv) {
            if (parts == 0) {
                if (left != 0) return;
                mpz_class prod = 1;
                for (std::size_t i = 0; i < part.size();) {
                    std::size_t j = i;
                    while (j < part.size() && part[j] == part[i]) ++j;
                    const unsigned long r = static_cast<unsigned long>(j - i);
                    mpz_class binom;
                    mpz_bin_ui(binom.get_mpz_t(), df[static_cast<std::size_t>(part[i] + 1)].get_mpz_t(), r);
                    prod *= binom;
                    i = j;
                }
                total += prod;
                return;
            }
            for (int v = minv; v <= left - (parts - 1); ++v) {
                part.push_back(v);
                rec(left - v, parts - 1, v);
                part.pop_back();
            }
        };
        rec(w, k, 1);
        if (!total.fits_slong_p())
            throw cap_exceeded("chain dimension beyond integer range at weight " +
                               std::to_string(w));
        out.push_back(total.get_si());
    }
    return out;
}

long long euler_char_dims(int w, int cap) {
    if (w < 1) throw std::invalid_argument("euler_char_dims requires w >= 1");
    if (w > cap)
        throw cap_exceeded("euler_char_dims: w=" + std::to_string(w) + " exceeds cap " +
                           std::to_string(cap));
    long long chi = 0;
    const auto dims = chain_dims_closed_form(w);
    for (int k = 1; k <= w; ++k)
        chi += (k % 2 == 0 ? 1 : -1) * dims[static_cast<std::size_t>(k - 1)];
    return chi;
}

long long euler_char_ranks(int w, int weight_cap) {
    if (w < 1) throw std::invalid_argument("euler_char_ranks requires w >= 1");
    long long chi = 0;
    const auto betti = homology_dims(Algebra::LC1, w, w, weight_cap);
    for (int k = 0; k < static_cast<int>(betti.size()); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * betti[static_cast<std::size_t>(k)];
    return chi;
}

}  // namespace chordlie
