#include "chordlie/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace chordlie {

void validate(const LinearDiagram& d) {
    const int n = 2 * static_cast<int>(d.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [i, j] : d) {
        if (i == j) throw std::invalid_argument("degenerate chord " + std::to_string(i));
        for (int v : {i, j}) {
            if (v < 1 || v > n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                            std::to_string(n));
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("vertex " + std::to_string(v) + " used twice");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
}

SignedStandard standardize(const LinearDiagram& d) {
    validate(d);
    SignedStandard out;
    out.diagram.chords.reserve(d.size());
    for (auto [i, j] : d) {
        if (i > j) {
            std::swap(i, j);
            out.sign = -out.sign;
        }
        out.diagram.chords.emplace_back(i, j);
    }
    std::sort(out.diagram.chords.begin(), out.diagram.chords.end());
    return out;
}

LinearDiagram rotate_raw(const LinearDiagram& d) {
    const int n = 2 * static_cast<int>(d.size());
    LinearDiagram out;
    out.reserve(d.size());
    for (const auto& [i, j] : d) out.emplace_back(i % n + 1, j % n + 1);
    return out;
}

SignedStandard rotate(const StandardDiagram& d) {
    SignedStandard out = standardize(rotate_raw(d.chords));
    assert(out.sign == -1);  // exactly one chord wraps per step
    return out;
}

std::vector<SignedStandard> rotation_orbit(const StandardDiagram& d) {
    std::vector<SignedStandard> out;
    out.reserve(2 * static_cast<std::size_t>(d.m()));
    SignedStandard cur{1, d};
    for (int s = 0; s < 2 * d.m(); ++s) {
        out.push_back(cur);
        SignedStandard next = rotate(cur.diagram);
        cur.sign *= next.sign;
        cur.diagram = std::move(next.diagram);
    }
    return out;
}

int index_of(const StandardDiagram& d) {
    std::set<StandardDiagram> seen;
    for (const auto& s : rotation_orbit(d)) seen.insert(s.diagram);
    return static_cast<int>(seen.size());
}

std::optional<SignedClass> canonical_cyclic(const LinearDiagram& d) {
    SignedStandard s0 = standardize(d);
    const auto orb = rotation_orbit(s0.diagram);
    std::set<StandardDiagram> distinct;
    for (const auto& s : orb) distinct.insert(s.diagram);
    if (distinct.size() % 2 == 1) return std::nullopt;

    const SignedStandard* best = &orb[0];
    for (const auto& s : orb)
        if (s.diagram < best->diagram) best = &s;
#ifndef NDEBUG
    for (const auto& s : orb)  // even index makes the orbit sign-consistent
        assert(s.diagram != best->diagram || s.sign == best->sign);
#endif

    SignedClass out;
    out.sign = s0.sign * best->sign;
    out.cls.rep = best->diagram;
    out.cls.index = static_cast<int>(distinct.size());
    return out;
}

LinearDiagram isolated_chords(int m) {
    LinearDiagram d;
    d.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) d.emplace_back(2 * k + 1, 2 * k + 2);
    return d;
}

CyclicClass omega_diagram(int m) {
    if (m <= 1) throw std::invalid_argument("omega_diagram requires m >= 2; the m=1 class is zero");
    auto r = canonical_cyclic(isolated_chords(m));
    assert(r && r->sign == 1);
    return r->cls;
}

LinearDiagram d_ab_linear(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("d_ab requires a, b >= 1");
    LinearDiagram d;
    d.reserve(static_cast<std::size_t>(a + b + 1));
    for (int k = 0; k < a; ++k) d.emplace_back(2 * k + 1, 2 * k + 2);
    d.emplace_back(2 * a + 1, 2 * a + 2 * b + 2);
    for (int k = 1; k <= b; ++k) d.emplace_back(2 * a + 2 * k, 2 * a + 2 * k + 1);
    return d;
}

std::optional<SignedClass> d_ab(int a, int b) { return canonical_cyclic(d_ab_linear(a, b)); }

namespace {

void matchings_rec(std::vector<int>& free, StandardDiagram& acc,
                   std::vector<StandardDiagram>& out) {
    if (free.empty()) {
        out.push_back(acc);
        return;
    }
    std::vector<int> rest(free.begin() + 1, free.end());
    const int a = free[0];
    for (std::size_t k = 0; k < rest.size(); ++k) {
        const int b = rest[k];
        std::vector<int> next = rest;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(k));
        acc.chords.emplace_back(a, b);
        matchings_rec(next, acc, out);
        acc.chords.pop_back();
    }
}

}  // namespace

std::vector<StandardDiagram> enumerate_linear(int m, int cap) {
    if (m < 1) throw std::invalid_argument("enumerate_linear requires m >= 1");
    if (m > cap)
        throw cap_exceeded("enumerate_linear: m=" + std::to_string(m) + " exceeds cap " +
                           std::to_string(cap));
    std::vector<int> free;
    for (int v = 1; v <= 2 * m; ++v) free.push_back(v);
    std::vector<StandardDiagram> out;
    StandardDiagram acc;
    matchings_rec(free, acc, out);
    return out;
}

std::vector<CyclicClass> enumerate_cyclic_basis(int m, int cap) {
    std::vector<CyclicClass> out;
    std::set<StandardDiagram> seen;
    for (const auto& d : enumerate_linear(m, cap)) {
        auto r = canonical_cyclic(d.chords);
        if (r && seen.insert(r->cls.rep).second) out.push_back(r->cls);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, int> index_histogram(int m, int cap) {
    std::map<int, int> hist;
    std::set<StandardDiagram> seen;
    for (const auto& d : enumerate_linear(m, cap)) {
        bool fresh = true;
        for (const auto& s : rotation_orbit(d))
            if (seen.count(s.diagram)) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        for (const auto& s : rotation_orbit(d)) seen.insert(s.diagram);
        ++hist[index_of(d)];
    }
    return hist;
}

}  // namespace chordlie
