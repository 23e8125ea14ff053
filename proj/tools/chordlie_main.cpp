// chordlie: batch CLI over the chord-diagram Lie algebra workbench.
//
// Subcommands: dims, bracket, center, center-probe, euler, homology,
// verify-oracle.  Results go to stdout (JSON by default, --format text for
// human-readable output); diagnostics go to stderr.  Every flag can also be
// set through an environment variable with the CHORDLIE_ prefix.
//
// Exit codes: 0 success, 2 usage or parse error, 3 verification failure,
// 4 cap exceeded.

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chordlie/analysis.hpp"
#include "chordlie/chord_lie.hpp"
#include "chordlie/diagram.hpp"
#include "chordlie/linalg.hpp"
#include "chordlie/literals.hpp"
#include "chordlie/rational.hpp"
#include "chordlie/sp_tensor.hpp"

namespace {

using chordlie::Algebra;
using chordlie::CVector;
using chordlie::LCVector;
using chordlie::Rat;
using chordlie::SymplecticSpace;
using chordlie::Tensor;
using ojson = nlohmann::ordered_json;

struct VerificationFailure {
    std::string what;
};

bool want_json(const std::string& format, bool default_json) {
    if (format == "json") return true;
    if (format == "text") return false;
    return default_json;
}

void emit(const ojson& j) { std::cout << j.dump() << '\n'; }

// ---- dims ----------------------------------------------------------------

void run_dims(int m_max, const std::string& format) {
    ojson rows = ojson::array();
    for (int m = 1; m <= m_max; ++m) {
        const auto lc = chordlie::enumerate_linear(m);
        const auto cy = chordlie::enumerate_cyclic_basis(m);
        const auto hist = chordlie::index_histogram(m);
        if (want_json(format, false)) {
            ojson h;
            for (const auto& [idx, count] : hist) h[std::to_string(idx)] = count;
            rows.push_back({{"m", m},
                            {"dim_lc", lc.size()},
                            {"dim_c", cy.size()},
                            {"index_histogram", h}});
        } else {
            std::cout << "m=" << m << " dim_LC=" << lc.size() << " dim_C=" << cy.size()
                      << " index_histogram=";
            bool sep = false;
            for (const auto& [idx, count] : hist) {
                if (sep) std::cout << ',';
                std::cout << idx << ':' << count;
                sep = true;
            }
            std::cout << '\n';
        }
    }
    if (want_json(format, false)) emit(ojson{{"dims", rows}});
}

// ---- bracket ---------------------------------------------------------------

void run_bracket(const std::string& algebra, const std::string& x, const std::string& y,
                 const std::string& format) {
    if (algebra == "C") {
        CVector r = chordlie::bracket_cyclic(chordlie::parse_c_vector(x),
                                             chordlie::parse_c_vector(y));
        if (want_json(format, true))
            std::cout << chordlie::vector_json(r).dump() << '\n';
        else
            std::cout << chordlie::format_c_vector(r) << '\n';
    } else {
        LCVector r = chordlie::bracket_linear(chordlie::parse_lc_vector(x),
                                              chordlie::parse_lc_vector(y));
        if (want_json(format, true))
            std::cout << chordlie::vector_json(r).dump() << '\n';
        else
            std::cout << chordlie::format_lc_vector(r) << '\n';
    }
}

// ---- center ----------------------------------------------------------------

void run_center(int m, const std::string& format) {
    const auto kernel = chordlie::center_of_C(m);
    const bool is_omega =
        kernel.size() == 1 && kernel[0].size() == 1 &&
        kernel[0].begin()->first == chordlie::omega_diagram(m);
    if (want_json(format, true))
        emit(ojson{{"kernel_dim", kernel.size()}, {"is_omega", is_omega}});
    else
        std::cout << "kernel_dim=" << kernel.size() << " is_omega=" << (is_omega ? "true" : "false")
                  << '\n';
}

void run_center_probe(int max_degree, const std::string& format) {
    int candidate_dim = 0;
    for (int m = 1; m <= max_degree; ++m)
        candidate_dim += static_cast<int>(chordlie::enumerate_linear(m).size());
    const auto kernel = chordlie::center_probe_LC(max_degree);
    if (want_json(format, true))
        emit(ojson{{"candidate_dim", candidate_dim}, {"kernel_dim", kernel.size()}});
    else
        std::cout << "candidate_dim=" << candidate_dim << " kernel_dim=" << kernel.size() << '\n';
}

// ---- euler -----------------------------------------------------------------

void run_euler(int w, const std::string& route, const std::string& format) {
    const long long e =
        route == "ranks" ? chordlie::euler_char_ranks(w) : chordlie::euler_char_dims(w);
    if (want_json(format, true))
        emit(ojson{{"euler", e}});
    else
        std::cout << e << '\n';
}

// ---- homology --------------------------------------------------------------

Algebra parse_algebra(const std::string& s) {
    if (s == "LC") return Algebra::LC;
    if (s == "LC1") return Algebra::LC1;
    if (s == "C") return Algebra::C;
    throw chordlie::parse_error("unknown algebra '" + s + "'", 0);
}

void run_homology(const std::string& algebra, int w, const std::string& format) {
    const Algebra a = parse_algebra(algebra);
    // Longest possible chain: w factors of weight 1, plus the weight-0
    // element when the algebra includes degree 1.
    const int k_max = a == Algebra::LC ? w + 2 : w + 1;
    std::vector<long long> chain_dims;
    long long euler = 0;
    for (int k = 0; k <= k_max; ++k) {
        const auto basis = chordlie::weighted_chain_basis(a, k, w);
        chain_dims.push_back(static_cast<long long>(basis.basis.size()));
        euler += (k % 2 == 0 ? 1 : -1) * chain_dims.back();
    }
    const std::vector<int> betti = chordlie::homology_dims(a, w, k_max);
    if (want_json(format, true)) {
        emit(ojson{{"weight", w}, {"chain_dims", chain_dims}, {"betti", betti}, {"euler", euler}});
    } else {
        std::cout << "weight=" << w << " chain_dims=";
        for (std::size_t i = 0; i < chain_dims.size(); ++i)
            std::cout << (i ? "," : "") << chain_dims[i];
        std::cout << " betti=";
        for (std::size_t i = 0; i < betti.size(); ++i) std::cout << (i ? "," : "") << betti[i];
        std::cout << " euler=" << euler << '\n';
    }
}

// ---- verify-oracle ----------------------------------------------------------

struct PairCheck {
    Tensor lhs;  // image of the combinatorial bracket
    Tensor d1;
    Tensor d2;
};

// Checks a(bracket(x, y)) == [a(x), a(y)] over basis pairs.  With sample > 0,
// checks a seeded random subset of that size per degree pair.
void run_verify_oracle(const std::string& algebra, int genus, int max_m, int sample,
                       unsigned seed, const std::string& format, int& exit_code) {
    long long checked = 0, mismatches = 0;
    std::mt19937 rng(seed);

    auto run_block = [&](int g_use, auto&& pairs) {
        std::vector<int> order(pairs.size());
        std::iota(order.begin(), order.end(), 0);
        if (sample > 0 && static_cast<std::size_t>(sample) < pairs.size()) {
            std::shuffle(order.begin(), order.end(), rng);
            order.resize(static_cast<std::size_t>(sample));
        }
        for (int i : order) {
            const PairCheck& pc = pairs[static_cast<std::size_t>(i)];
            ++checked;
            if (!chordlie::commutator_acts_like(pc.lhs, pc.d1, pc.d2)) {
                ++mismatches;
                std::cerr << "mismatch at genus " << g_use << ", pair #" << i << '\n';
            }
        }
    };

    if (algebra == "C" || algebra == "both") {
        for (int m = 2; m <= max_m; ++m) {
            for (int l = 2; l <= max_m; ++l) {
                const int g_use = genus > 0 ? genus : m + l - 1;
                SymplecticSpace s(g_use);
                const auto bm = chordlie::enumerate_cyclic_basis(m);
                const auto bl = chordlie::enumerate_cyclic_basis(l);
                std::vector<PairCheck> pairs;
                for (const auto& x : bm) {
                    for (const auto& y : bl) {
                        const CVector vx = chordlie::cvec(x), vy = chordlie::cvec(y);
                        pairs.push_back({chordlie::a_cyclic(chordlie::bracket_cyclic(vx, vy), s),
                                         chordlie::a_cyclic(vx, s), chordlie::a_cyclic(vy, s)});
                    }
                }
                run_block(g_use, pairs);
            }
        }
    }
    if (algebra == "LC" || algebra == "both") {
        for (int m = 1; m <= max_m; ++m) {
            for (int l = 1; l <= max_m; ++l) {
                const int g_use = genus > 0 ? genus : m + l - 1;
                SymplecticSpace s(g_use);
                const auto bm = chordlie::enumerate_linear(m);
                const auto bl = chordlie::enumerate_linear(l);
                std::vector<PairCheck> pairs;
                for (const auto& x : bm) {
                    for (const auto& y : bl) {
                        const LCVector vx = chordlie::lcvec(x), vy = chordlie::lcvec(y);
                        pairs.push_back({chordlie::a_lc(chordlie::bracket_linear(vx, vy), s),
                                         chordlie::a_lc(vx, s), chordlie::a_lc(vy, s)});
                    }
                }
                run_block(g_use, pairs);
            }
        }
    }

    if (want_json(format, true))
        emit(ojson{{"checked", checked}, {"mismatches", mismatches}});
    else
        std::cout << "checked=" << checked << " mismatches=" << mismatches << '\n';
    if (mismatches > 0) exit_code = 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordlie: exact workbench for the Lie algebras of chord diagrams"};
    app.require_subcommand(1);

    std::string format;
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("CHORDLIE_FORMAT");
    int cap_linalg = chordlie::elimination_dimension_cap();
    app.add_option("--cap-linalg", cap_linalg, "max rows/cols for exact elimination")
        ->check(CLI::PositiveNumber)
        ->envname("CHORDLIE_CAP_LINALG");
    unsigned seed = 0;
    app.add_option("--seed", seed, "seed for randomized sweeps")->envname("CHORDLIE_SEED");

    auto* dims = app.add_subcommand("dims", "dimensions and index histograms per degree");
    int m_max = 4;
    dims->add_option("--max-degree,--m", m_max, "largest chord count")
        ->check(CLI::PositiveNumber)
        ->envname("CHORDLIE_MAX_DEGREE");

    auto* bracket = app.add_subcommand("bracket", "bracket of two vector literals");
    std::string algebra = "LC", xlit, ylit;
    bracket->add_option("--algebra", algebra, "C (cyclic) or LC (linear)")
        ->check(CLI::IsMember({"C", "LC"}))
        ->envname("CHORDLIE_ALGEBRA");
    bracket->add_option("x", xlit, "left vector literal")->required();
    bracket->add_option("y", ylit, "right vector literal")->required();

    auto* center = app.add_subcommand("center", "center of the cyclic algebra in one degree");
    int center_m = 2;
    center->add_option("--m", center_m, "chord count")->check(CLI::PositiveNumber)->envname("CHORDLIE_M");

    auto* probe = app.add_subcommand("center-probe", "central elements of the linear algebra");
    int probe_deg = 4;
    probe->add_option("--max-degree", probe_deg, "largest chord count in the candidate space")
        ->check(CLI::PositiveNumber)
        ->envname("CHORDLIE_MAX_DEGREE");

    auto* euler = app.add_subcommand("euler", "Euler characteristic at one weight");
    int euler_w = 1;
    std::string route = "dims";
    euler->add_option("--weight,--w", euler_w, "weight")
        ->check(CLI::PositiveNumber)
        ->envname("CHORDLIE_WEIGHT");
    euler->add_option("--route", route, "dims (closed form) or ranks (computed Betti)")
        ->check(CLI::IsMember({"dims", "ranks"}));

    auto* homology = app.add_subcommand("homology", "chain dimensions and Betti numbers at one weight");
    std::string hom_algebra = "LC";
    int hom_w = 1;
    homology->add_option("--algebra", hom_algebra, "LC (with degree 1) or LC1 (degrees >= 2)")
        ->check(CLI::IsMember({"LC", "LC1"}))
        ->envname("CHORDLIE_ALGEBRA");
    homology->add_option("--weight,--w", hom_w, "weight")
        ->check(CLI::NonNegativeNumber)
        ->envname("CHORDLIE_WEIGHT");

    auto* verify = app.add_subcommand("verify-oracle",
                                      "check the brackets against derivation commutators");
    // Let --format/--cap-linalg/--seed appear after the subcommand name too.
    for (CLI::App* sub : {dims, bracket, center, probe, euler, homology, verify})
        sub->fallthrough();
    std::string v_algebra = "both";
    int v_genus = 0, v_max_m = 2, v_sample = 0;
    verify->add_option("--algebra", v_algebra, "C, LC, or both")
        ->check(CLI::IsMember({"C", "LC", "both"}))
        ->envname("CHORDLIE_ALGEBRA");
    verify->add_option("--genus,--g", v_genus, "genus (0 = smallest faithful per pair)")
        ->check(CLI::NonNegativeNumber)
        ->envname("CHORDLIE_GENUS");
    verify->add_option("--max-m", v_max_m, "largest chord count per factor")
        ->check(CLI::PositiveNumber)
        ->envname("CHORDLIE_MAX_M");
    verify->add_option("--sample", v_sample, "random pairs per degree pair (0 = all)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    int exit_code = 0;
    try {
        chordlie::set_elimination_dimension_cap(cap_linalg);
        if (dims->parsed()) run_dims(m_max, format);
        if (bracket->parsed()) run_bracket(algebra, xlit, ylit, format);
        if (center->parsed()) run_center(center_m, format);
        if (probe->parsed()) run_center_probe(probe_deg, format);
        if (euler->parsed()) run_euler(euler_w, route, format);
        if (homology->parsed()) run_homology(hom_algebra, hom_w, format);
        if (verify->parsed())
            run_verify_oracle(v_algebra, v_genus, v_max_m, v_sample, seed, format, exit_code);
    } catch (const chordlie::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const chordlie::cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}
