#include "chordlie/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace chordlie {

void SparseRationalMatrix::set(int r, int c, const Rat& v) {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    if (v == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = v;
}

void SparseRationalMatrix::add(int r, int c, const Rat& v) {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    auto it = entries.find({r, c});
    if (it == entries.end()) {
        if (v != 0) entries.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second == 0) entries.erase(it);
}

const Rat* SparseRationalMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? nullptr : &it->second;
}

std::string SparseRationalMatrix::dump() const {
    std::ostringstream os;
    for (const auto& [rc, v] : entries)
        os << rc.first + 1 << ' ' << rc.second + 1 << ' ' << rat_str(v) << '\n';
    return os.str();
}

namespace {

int g_elim_cap = 100000;

using IntRow = std::vector<std::pair<int, mpz_class>>;  // sorted by column

// r := (piv * r - f * p) / content, a fraction-free cross-multiplication with
// the integer content (gcd of the entries) stripped afterwards to keep growth
// in check.  Row scaling never changes rank or kernel.
IntRow combine(const IntRow& r, const IntRow& p, const mpz_class& piv, const mpz_class& f) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t a = 0, b = 0;
    mpz_class t;
    while (a < r.size() || b < p.size()) {
        int col;
        if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
            col = r[a].first;
            t = piv * r[a].second;
            ++a;
        } else if (a == r.size() || p[b].first < r[a].first) {
            col = p[b].first;
            t = -f * p[b].second;
            ++b;
        } else {
            col = r[a].first;
            t = piv * r[a].second - f * p[b].second;
            ++a;
            ++b;
        }
        if (t != 0) out.emplace_back(col, t);
    }
    if (!out.empty()) {
        mpz_class g = 0;
        for (const auto& [c, v] : out) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (g > 1)
            for (auto& [c, v] : out)
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return out;
}

}  // namespace

int elimination_dimension_cap() { return g_elim_cap; }

void set_elimination_dimension_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("elimination cap must be positive");
    g_elim_cap = cap;
}

EliminationResult eliminate(const SparseRationalMatrix& m, bool want_kernel) {
    if (m.rows > g_elim_cap || m.cols > g_elim_cap)
        throw cap_exceeded("matrix exceeds the elimination dimension cap");
    // Clear denominators row by row (rank and kernel are unaffected).
    std::vector<IntRow> active(static_cast<std::size_t>(m.rows));
    {
        std::vector<mpz_class> lcm(static_cast<std::size_t>(m.rows), 1);
        for (const auto& [rc, v] : m.entries) {
            auto& l = lcm[static_cast<std::size_t>(rc.first)];
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        }
        for (const auto& [rc, v] : m.entries) {
            mpz_class num = v.get_num() * (lcm[static_cast<std::size_t>(rc.first)] / v.get_den());
            active[static_cast<std::size_t>(rc.first)].emplace_back(rc.second, num);
        }
    }
    std::erase_if(active, [](const IntRow& r) { return r.empty(); });

    std::vector<int> colcount(static_cast<std::size_t>(m.cols), 0);
    for (const auto& r : active)
        for (const auto& [c, v] : r) ++colcount[static_cast<std::size_t>(c)];

    std::vector<IntRow> done;       // pivot rows in elimination order
    std::vector<int> pivot_cols;    // matching pivot column per done row

    while (!active.empty()) {
        // Markowitz pivot: minimize (row nnz - 1) * (col nnz - 1).
        std::size_t best_row = 0;
        int best_col = -1;
        long long best_cost = -1;
        for (std::size_t i = 0; i < active.size(); ++i) {
            const long long rw = static_cast<long long>(active[i].size()) - 1;
            for (const auto& [c, v] : active[i]) {
                const long long cost = rw * (colcount[static_cast<std::size_t>(c)] - 1);
                if (best_cost < 0 || cost < best_cost ||
                    (cost == best_cost && c < best_col)) {
                    best_cost = cost;
                    best_row = i;
                    best_col = c;
                }
            }
        }
        IntRow prow = std::move(active[best_row]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_row));
        for (const auto& [c, v] : prow) --colcount[static_cast<std::size_t>(c)];

        const auto pit = std::lower_bound(prow.begin(), prow.end(), best_col,
                                          [](const auto& e, int c) { return e.first < c; });
        assert(pit != prow.end() && pit->first == best_col);
        const mpz_class piv = pit->second;

        for (std::size_t i = 0; i < active.size();) {
            auto it = std::lower_bound(active[i].begin(), active[i].end(), best_col,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == active[i].end() || it->first != best_col) {
                ++i;
                continue;
            }
            for (const auto& [c, v] : active[i]) --colcount[static_cast<std::size_t>(c)];
            IntRow next = combine(active[i], prow, piv, it->second);
            if (next.empty()) {
                active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            for (const auto& [c, v] : next) ++colcount[static_cast<std::size_t>(c)];
            active[i] = std::move(next);
            ++i;
        }
        done.push_back(std::move(prow));
        pivot_cols.push_back(best_col);
    }

    EliminationResult res;
    res.rank = static_cast<int>(done.size());
    if (!want_kernel) return res;

    // Back substitution: done row k has zeros in pivot columns 0..k-1, so the
    // system is triangular in elimination order.
    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(m.cols), Rat(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (int k = res.rank - 1; k >= 0; --k) {
            const int pc = pivot_cols[static_cast<std::size_t>(k)];
            Rat sum = 0;
            Rat diag = 0;
            for (const auto& [c, val] : done[static_cast<std::size_t>(k)]) {
                if (c == pc)
                    diag = Rat(val);
                else if (v[static_cast<std::size_t>(c)] != 0)
                    sum += Rat(val) * v[static_cast<std::size_t>(c)];
            }
            v[static_cast<std::size_t>(pc)] = -sum / diag;
        }
        // Clear denominators for readability; keep the free coordinate positive.
        mpz_class l = 1;
        for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        for (auto& x : v) {
            x *= Rat(l);
            x.canonicalize();
        }
        res.kernel.push_back(std::move(v));
    }
    return res;
}

int rank(const SparseRationalMatrix& m) { return eliminate(m, false).rank; }

std::vector<std::vector<Rat>> kernel_basis(const SparseRationalMatrix& m) {
    return eliminate(m, true).kernel;
}

}  // namespace chordlie
