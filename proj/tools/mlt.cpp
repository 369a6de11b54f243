// mlt: generate, symmetrize, check and recover multilevel Toeplitz matrices.
//
// Exit codes: 0 success, 1 internal postcondition violated, 2 usage or input
// error, 3 I/O failure, 4 structure condition rejected.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlt/bench.hpp"
#include "mlt/converse.hpp"
#include "mlt/errors.hpp"
#include "mlt/linalg.hpp"
#include "mlt/matrix_file.hpp"
#include "mlt/mltoeplitz.hpp"
#include "mlt/symmetrizer.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kPostcondition = 1,
    kUsage = 2,
    kIo = 3,
    kRejected = 4,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mlt::LevelDims parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long n = 0;
        try {
            n = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError("invalid dims entry \"" + item + "\"");
        }
        if (used != item.size() || n < 1) {
            throw UsageError("dims entries must be positive integers, got \"" + item + "\"");
        }
        dims.push_back(static_cast<std::size_t>(n));
    }
    if (dims.empty() || text.empty() || text.back() == ',') {
        throw UsageError("dims must be a comma-separated list such as 3,2");
    }
    return mlt::LevelDims(std::move(dims));
}

std::string format_dims(const mlt::LevelDims& shape) {
    std::string out;
    for (auto n : shape.dims()) out += (out.empty() ? "" : ",") + std::to_string(n);
    return out;
}

mlt::TransitionKind parse_kind(const std::string& k) {
    if (k == "u") return mlt::TransitionKind::ParityU;
    if (k == "v") return mlt::TransitionKind::ExchangeV;
    throw UsageError("kind must be u or v");
}

void emit(const std::string& out_path, const mlt::MatrixFile& f) {
    if (out_path.empty() || out_path == "-") {
        std::cout << mlt::serialize(f) << std::flush;
        if (!std::cout) throw mlt::IoError("error writing to stdout");
    } else {
        mlt::write_matrix_file(out_path, f);
    }
}

const char* verdict_word(bool ok) { return ok ? "pass" : "fail"; }

void print_verdict(const std::string& label, const mlt::StructureVerdict& v) {
    std::printf("%-28s %s (defect %.3e, tol %.3e)\n", label.c_str(), verdict_word(v.holds), v.defect, v.tol);
}

struct GenArgs {
    std::string dims;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    const mlt::LevelDims shape = parse_dims(a.dims);
    emit(a.out, mlt::random_mltoeplitz(shape, a.seed));
    return kOk;
}

struct SymmetrizeArgs {
    std::string in;
    std::string kind = "u";
    std::string out;
    std::optional<std::size_t> intermediate;
    double tol = mlt::kDefaultTol;
};

int run_symmetrize(const SymmetrizeArgs& a) {
    const mlt::TransitionKind kind = parse_kind(a.kind);
    const mlt::MatrixFile file = mlt::read_matrix_file(a.in);
    const auto* t = std::get_if<mlt::MultilevelToeplitz>(&file);
    if (!t) throw UsageError("symmetrize expects an mltoeplitz input file");
    const std::size_t p = t->shape().levels();
    const std::size_t k = a.intermediate.value_or(p);
    if (k > p) {
        throw UsageError("--intermediate " + std::to_string(k) + " exceeds level count " + std::to_string(p));
    }
    const mlt::ComplexMatrix s = mlt::symmetrize_partial(*t, kind, k);
    emit(a.out, s);

    // After k levels each s_k x s_k block is symmetric; k = p is the whole matrix.
    const std::size_t block = t->shape().block_side(k);
    const mlt::StructureVerdict v = mlt::is_blockwise_symmetric(s, block, a.tol);
    std::fprintf(stderr, "levels applied: %zu of %zu\n", k, p);
    std::fprintf(stderr, "symmetry defect (blocks of side %zu): %.3e (tol %.3e) %s\n", block, v.defect, v.tol,
                 verdict_word(v.holds));
    return v.holds ? kOk : kPostcondition;
}

struct CheckArgs {
    std::string in;
    std::string dims;
    double tol = mlt::kDefaultTol;
};

int run_check(const CheckArgs& a) {
    const mlt::MatrixFile file = mlt::read_matrix_file(a.in);
    std::optional<mlt::LevelDims> shape;
    if (!a.dims.empty()) shape = parse_dims(a.dims);
    mlt::ComplexMatrix s = std::visit(
        [&shape](const auto& m) -> mlt::ComplexMatrix {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, mlt::MultilevelToeplitz>) {
                if (!shape) shape = m.shape();
                return mlt::to_dense(m);
            } else {
                return m;
            }
        },
        file);
    if (!s.is_square()) throw UsageError("check expects a square matrix");
    if (shape && shape->side() != s.rows()) {
        throw UsageError("dims " + format_dims(*shape) + " describe side " + std::to_string(shape->side()) +
                         ", matrix side is " + std::to_string(s.rows()));
    }

    bool all = true;
    std::printf("side %zu, tol %.3e (scaled by max(1, max|entry|))\n", s.rows(), a.tol);
    const auto sym = mlt::is_symmetric(s, a.tol);
    print_verdict("symmetric", sym);
    all &= sym.holds;
    if (shape) {
        const auto toe = mlt::is_multilevel_toeplitz(s, *shape, a.tol);
        print_verdict("toeplitz dims=" + format_dims(*shape), toe);
        all &= toe.holds;
    }
    if (s.rows() >= 2 && (s.rows() & (s.rows() - 1)) == 0) {
        const std::size_t p = mlt::binary_levels(s.rows());
        for (std::size_t q = 1; q <= p; ++q) {
            const auto v = mlt::has_q_level_constant_antidiagonals(s, q, a.tol);
            print_verdict("antidiagonal q=" + std::to_string(q), v);
            all &= v.holds;
        }
        for (std::size_t q = 1; q < p; ++q) {
            const auto v = mlt::has_symmetric_q_level_blocks(s, q, a.tol);
            print_verdict("block-symmetric q=" + std::to_string(q), v);
            all &= v.holds;
        }
    }
    std::printf("overall: %s\n", verdict_word(all));
    return all ? kOk : kRejected;
}

struct DesymmetrizeArgs {
    std::string in;
    std::string out;
    double tol = mlt::kDefaultTol;
};

int run_desymmetrize(const DesymmetrizeArgs& a) {
    const mlt::MatrixFile file = mlt::read_matrix_file(a.in);
    const auto* s = std::get_if<mlt::ComplexMatrix>(&file);
    if (!s) throw UsageError("desymmetrize expects a dense input file");
    if (!s->is_square()) throw UsageError("desymmetrize expects a square matrix");
    try {
        emit(a.out, mlt::desymmetrize(*s, a.tol));
    } catch (const mlt::NotPowerOfTwo& e) {
        throw UsageError(e.what());
    } catch (const mlt::NotSymmetric& e) {
        std::fprintf(stderr, "rejected: %s\n", e.what());
        return kRejected;
    } catch (const mlt::NotConstantAntidiagonal& e) {
        std::fprintf(stderr, "rejected at level q=%zu: %s\n", e.level(), e.what());
        return kRejected;
    } catch (const mlt::NotBlockSymmetric& e) {
        std::fprintf(stderr, "rejected at level q=%zu: %s\n", e.level(), e.what());
        return kRejected;
    } catch (const mlt::NotToeplitz& e) {
        std::fprintf(stderr, "recovered matrix failed the Toeplitz check: %s\n", e.what());
        return kPostcondition;
    }
    return kOk;
}

struct BenchArgs {
    std::string dims;
    std::size_t reps = 3;
    std::uint64_t seed = 1;
    std::string kind = "u";
};

int run_bench(const BenchArgs& a) {
    const mlt::LevelDims shape = parse_dims(a.dims);
    if (a.reps == 0) throw UsageError("--reps must be positive");
    const mlt::TransitionKind kind = parse_kind(a.kind);
    const mlt::BenchResult r = mlt::bench_symmetrize(shape, kind, a.reps, a.seed);
    constexpr double kMaxDeviation = 1e-10;
    std::printf("dims %s (side %zu), kind %s, reps %zu\n", format_dims(shape).c_str(), shape.side(),
                a.kind.c_str(), a.reps);
    std::printf("dense_seconds %.6f\n", r.dense_seconds);
    std::printf("fast_seconds %.6f\n", r.fast_seconds);
    std::printf("speedup %.2f\n", r.fast_seconds > 0 ? r.dense_seconds / r.fast_seconds : 0.0);
    std::printf("fast_multiply_adds_per_column %.1f\n",
                static_cast<double>(r.fast_multiply_adds) / (2.0 * static_cast<double>(shape.side())));
    std::printf("max_deviation %.3e (limit %.0e) %s\n", r.deviation, kMaxDeviation,
                verdict_word(r.deviation <= kMaxDeviation));
    return r.deviation <= kMaxDeviation ? kOk : kPostcondition;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multilevel Toeplitz symmetrization toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a random mltoeplitz matrix file");
    gen_cmd->add_option("--dims", gen.dims, "Level sizes n1,...,np (innermost first)")->required();
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("-o,--out", gen.out, "Output path (default stdout)");

    SymmetrizeArgs sym;
    auto* sym_cmd = app.add_subcommand("symmetrize", "Conjugate an mltoeplitz matrix into complex symmetric form");
    sym_cmd->add_option("input", sym.in, "Input mltoeplitz file")->required();
    sym_cmd->add_option("--kind", sym.kind, "Transition family: u (parity) or v (exchange)");
    sym_cmd->add_option("-o,--out", sym.out, "Output path (default stdout)");
    sym_cmd->add_option("--intermediate", sym.intermediate, "Apply only the factors of levels 1..k");
    sym_cmd->add_option("--tol", sym.tol, "Structure tolerance");

    CheckArgs chk;
    auto* chk_cmd = app.add_subcommand("check", "Report symmetry, Toeplitz and anti-diagonal structure");
    chk_cmd->add_option("input", chk.in, "Input matrix file")->required();
    chk_cmd->add_option("--dims", chk.dims, "Level sizes for the Toeplitz check");
    chk_cmd->add_option("--tol", chk.tol, "Structure tolerance");

    DesymmetrizeArgs des;
    auto* des_cmd = app.add_subcommand("desymmetrize", "Recover the 2x...x2 Toeplitz matrix behind a symmetric matrix");
    des_cmd->add_option("input", des.in, "Input dense file with power-of-two side")->required();
    des_cmd->add_option("-o,--out", des.out, "Output path (default stdout)");
    des_cmd->add_option("--tol", des.tol, "Structure tolerance");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time dense vs Kronecker-factored conjugation");
    bench_cmd->add_option("--dims", bench.dims, "Level sizes n1,...,np")->required();
    bench_cmd->add_option("--reps", bench.reps, "Repetitions (best time is reported)");
    bench_cmd->add_option("--seed", bench.seed, "Generator seed");
    bench_cmd->add_option("--kind", bench.kind, "Transition family: u or v");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (sym_cmd->parsed()) return run_symmetrize(sym);
        if (chk_cmd->parsed()) return run_check(chk);
        if (des_cmd->parsed()) return run_desymmetrize(des);
        if (bench_cmd->parsed()) return run_bench(bench);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const mlt::IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kIo;
    } catch (const mlt::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    }
    return kUsage;
}
