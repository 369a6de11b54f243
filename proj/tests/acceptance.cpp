// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Indented lines underneath a criterion are diagnostics.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "mlt/bench.hpp"
#include "mlt/converse.hpp"
#include "mlt/errors.hpp"
#include "mlt/linalg.hpp"
#include "mlt/symmetrizer.hpp"
#include "support/oracles.hpp"

using namespace mlt;
namespace t = mlt::testing;

namespace {

constexpr TransitionKind kKinds[] = {TransitionKind::ParityU, TransitionKind::ExchangeV};

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

LevelDims binary_dims(std::size_t p) { return LevelDims(std::vector<std::size_t>(p, 2)); }

MultilevelToeplitz fixture_toeplitz(const char* name, std::vector<std::size_t> dims) {
    return from_dense(t::load_dense_fixture(name), LevelDims(std::move(dims)));
}

void compare_fixture(Outcome& o, const ComplexMatrix& got, const char* fixture) {
    const double d = max_abs_diff(got, t::load_dense_fixture(fixture));
    o.note(std::string(fixture) + ": max deviation " + sci(d));
    o.require(d <= 1e-9, std::string(fixture) + " within 1e-9");
}

void anchor(Outcome& o, const ComplexMatrix& m, std::size_t r, std::size_t c, Complex want) {
    const double d = std::abs(m(r - 1, c - 1) - want);
    o.require(d <= 1e-9, "entry (" + std::to_string(r) + "," + std::to_string(c) + ") off by " + sci(d));
}

bool rejected(const ComplexMatrix& s) {
    try {
        desymmetrize(s);
        return false;
    } catch (const NotSymmetric&) {
    } catch (const NotConstantAntidiagonal&) {
    } catch (const NotBlockSymmetric&) {
    }
    return true;
}

Outcome criterion1() {
    Outcome o;
    const auto s = symmetrize(fixture_toeplitz("example41_t.json", {3, 2}), TransitionKind::ParityU);
    compare_fixture(o, s, "example41_symmetric_u.json");
    anchor(o, s, 1, 1, Complex(27.0, 5.0) / 4.0);
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto s = symmetrize_partial(fixture_toeplitz("example41_t.json", {3, 2}), TransitionKind::ParityU, 1);
    compare_fixture(o, s, "example41_intermediate_u.json");
    anchor(o, s, 1, 1, Complex(3.0, 2.0) / 2.0);
    anchor(o, s, 1, 4, 5.0);
    anchor(o, s, 4, 1, Complex(11.0, 1.0) / 2.0);
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto s = symmetrize(fixture_toeplitz("example41_t.json", {3, 2}), TransitionKind::ExchangeV);
    compare_fixture(o, s, "example41_symmetric_v.json");
    anchor(o, s, 1, 1, Complex(-0.25, -0.75));
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto tt = fixture_toeplitz("example42_t.json", {2, 2, 2});
    const auto su = symmetrize(tt, TransitionKind::ParityU);
    const auto sv = symmetrize(tt, TransitionKind::ExchangeV);
    compare_fixture(o, su, "example42_symmetric_u.json");
    compare_fixture(o, sv, "example42_symmetric_v.json");
    o.require(is_symmetric(su).holds, "parity result symmetric");
    o.require(is_symmetric(sv).holds, "exchange result symmetric");
    const double gap = max_abs_diff(su, sv);
    o.note("parity vs exchange results differ by up to " + sci(gap));
    o.require(gap > 1e-6, "the two results differ");
    return o;
}

Outcome criterion5() {
    Outcome o;
    double worst = 0.0;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto tt = random_mltoeplitz(LevelDims({n}), 10'000 * n + seed);
            worst = std::max(worst, max_abs_diff(symmetrize_single_level(tt), symmetrize(tt, TransitionKind::ExchangeV)));
        }
    }
    o.note("1600 matrices, worst deviation " + sci(worst));
    o.require(worst <= 1e-12, "closed form within 1e-12");
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto shapes = t::enumerate_shapes(3, 4, 64);
    double sym = 0.0, unit = 0.0, frob = 0.0, spectral = 0.0;
    std::size_t cases = 0;
    std::uint64_t seed = 0;
    for (const auto& shape : shapes) {
        for (auto kind : kKinds) {
            for (std::size_t level = 1; level <= shape.levels(); ++level) {
                unit = std::max(unit, is_unitary(level_factor(shape, level, kind), 1e-12).defect);
            }
            unit = std::max(unit, is_unitary(build_transition(shape, kind).dense(), 1e-12).defect);
            for (int rep = 0; rep < 50; ++rep) {
                const auto tt = random_mltoeplitz(shape, ++seed);
                const auto dense = to_dense(tt);
                const auto s = symmetrize(tt, kind);
                const auto v = is_symmetric(s, 1e-10);
                sym = std::max(sym, v.defect / v.tol * 1e-10);
                const double f0 = frobenius_norm(dense);
                frob = std::max(frob, std::abs(frobenius_norm(s) - f0) / f0);
                if (shape.side() <= 16) {
                    spectral = std::max(spectral, t::spectrum_distance(t::eigenvalues(s), t::eigenvalues(dense)));
                }
                ++cases;
            }
        }
    }
    o.note(std::to_string(shapes.size()) + " shapes, " + std::to_string(cases) + " symmetrizations");
    o.note("symmetry defect (relative) " + sci(sym) + ", unitarity defect " + sci(unit) + ", Frobenius drift " +
           sci(frob) + ", eigenvalue drift " + sci(spectral));
    o.require(sym <= 1e-10, "symmetric at 1e-10");
    o.require(unit <= 1e-12, "unitary at 1e-12");
    o.require(frob <= 1e-10, "Frobenius norm within 1e-10");
    o.require(spectral <= 1e-8, "eigenvalues within 1e-8");
    return o;
}

Outcome criterion7() {
    Outcome o;
    constexpr int kSeeds = 50;
    constexpr double kEps = 1e-3;

    // (a) Toeplitz -> symmetric -> Toeplitz.
    double round = 0.0;
    for (std::size_t p = 1; p <= 5; ++p) {
        for (int seed = 0; seed < kSeeds; ++seed) {
            const auto tt = random_mltoeplitz(binary_dims(p), 500 * p + seed);
            const auto back = desymmetrize(symmetrize(tt, TransitionKind::ParityU));
            for (std::size_t i = 0; i < tt.coeffs().size(); ++i)
                round = std::max(round, std::abs(back.coeffs()[i] - tt.coeffs()[i]));
        }
    }
    o.note("(a) desymmetrize(symmetrize(t)): worst coefficient error " + sci(round));
    o.require(round <= 1e-10, "(a) coefficients recovered within 1e-10");

    // (b) symmetric -> Toeplitz -> symmetric over the anti-diagonal orbit
    // sampler, and over the block-symmetric sampler for comparison.
    auto inverse_round_trip = [&](const char* label, auto sampler, bool counts) {
        for (std::size_t p = 1; p <= 5; ++p) {
            int ok = 0;
            double worst = 0.0;
            for (int seed = 0; seed < kSeeds; ++seed) {
                const auto s = sampler(p, 900 * p + seed);
                try {
                    const double d = max_abs_diff(symmetrize(desymmetrize(s), TransitionKind::ParityU), s);
                    worst = std::max(worst, d);
                    ok += d <= 1e-10;
                } catch (const Error&) {
                }
            }
            o.note(std::string(label) + " p=" + std::to_string(p) + ": " + std::to_string(ok) + "/" +
                   std::to_string(kSeeds) + " round-trip" + (ok ? ", worst " + sci(worst) : ""));
            if (counts) o.require(ok == kSeeds, std::string(label) + " p=" + std::to_string(p));
        }
    };
    inverse_round_trip("(b) anti-diagonal orbit samples", [](std::size_t p, std::uint64_t s) {
        return t::sample_constant_antidiagonal(p, s);
    }, true);
    inverse_round_trip("    block-symmetric samples", [](std::size_t p, std::uint64_t s) {
        return t::sample_block_symmetric(p, s);
    }, false);

    // (c) every single-entry perturbation of a qualifying matrix.
    for (std::size_t p = 1; p <= 5; ++p) {
        std::size_t total = 0, caught = 0, off_total = 0, off_caught = 0;
        for (int seed = 0; seed < kSeeds; ++seed) {
            const auto s = symmetrize(random_mltoeplitz(binary_dims(p), 1300 * p + seed), TransitionKind::ParityU);
            for (std::size_t r = 0; r < s.rows(); ++r) {
                for (std::size_t c = 0; c < s.cols(); ++c) {
                    auto bumped = s;
                    bumped(r, c) += kEps;
                    const bool hit = rejected(bumped);
                    ++total;
                    caught += hit;
                    if (r != c) {
                        ++off_total;
                        off_caught += hit;
                    }
                }
            }
        }
        o.note("(c) p=" + std::to_string(p) + ": " + std::to_string(caught) + "/" + std::to_string(total) +
               " perturbations rejected; off-diagonal " + std::to_string(off_caught) + "/" +
               std::to_string(off_total));
        o.require(caught == total, "(c) every perturbation rejected at p=" + std::to_string(p));
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    double worst = 0.0;
    std::uint64_t seed = 0;
    for (const auto& shape : t::enumerate_shapes(3, 4, 64)) {
        for (auto kind : kKinds) {
            const auto plan = build_transition(shape, kind);
            const auto p = plan.dense();
            const auto x = t::random_matrix(shape.side(), 4, ++seed);
            const auto y = t::random_matrix(4, shape.side(), ++seed);
            worst = std::max(worst, max_abs_diff(plan.apply(x, Side::Left, false), t::naive_matmul(p, x)));
            worst = std::max(worst, max_abs_diff(plan.apply(x, Side::Left, true), t::naive_matmul(adjoint(p), x)));
            worst = std::max(worst, max_abs_diff(plan.apply(y, Side::Right, false), t::naive_matmul(y, p)));
            worst = std::max(worst, max_abs_diff(plan.apply(y, Side::Right, true), t::naive_matmul(y, adjoint(p))));
        }
    }
    o.note("apply vs dense on all small shapes: worst " + sci(worst));
    o.require(worst <= 1e-12, "apply within 1e-12");

    const LevelDims big(std::vector<std::size_t>(10, 2));
    const auto r = bench_symmetrize(big, TransitionKind::ParityU, 3, 1);
    const double per_column = static_cast<double>(r.fast_multiply_adds) / (2.0 * 1024.0);
    o.note("dims 2x10: dense " + sci(r.dense_seconds) + " s, fast " + sci(r.fast_seconds) + " s, deviation " +
           sci(r.deviation) + ", multiply-adds per column " + std::to_string(static_cast<long>(per_column)));
    o.require(r.fast_seconds < r.dense_seconds, "fast path faster than dense");
    o.require(r.deviation <= 1e-10, "benchmark deviation within 1e-10");
    o.require(per_column <= 1024.0 * 20.0, "at most 1024*20 multiply-adds per column");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"six by six two-level example, parity family", criterion1},
        {"six by six example, level-one intermediate", criterion2},
        {"six by six example, exchange family", criterion3},
        {"eight by eight three-level example, both families", criterion4},
        {"single-level closed form vs explicit conjugation", criterion5},
        {"symmetry, unitarity and similarity invariants over small shapes", criterion6},
        {"binary converse round trip and rejection", criterion7},
        {"matrix-free apply oracle and 1024-side benchmark", criterion8},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs);
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
