#include "hmx/cli.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "hmx/bm_algebra.hpp"
#include "hmx/elimination.hpp"
#include "hmx/errors.hpp"
#include "hmx/fixtures.hpp"
#include "hmx/hermitian_bounds.hpp"
#include "hmx/hyper_spectral.hpp"
#include "hmx/io.hpp"
#include "hmx/linalg.hpp"
#include "hmx/matrix_spectral.hpp"

namespace hmx {

namespace {

namespace fs = std::filesystem;

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty complex literal");
    auto to_double = [&](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size()) throw DomainError("malformed complex literal '" + text + "'");
        return v;
    };
    try {
        if (s.back() != 'i') return {to_double(s), 0.0};
        s.pop_back();
        std::size_t split = std::string::npos;
        for (std::size_t k = s.size(); k-- > 1;)
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                split = k;
                break;
            }
        if (split == std::string::npos) return {0.0, to_double(s)};
        return {to_double(s.substr(0, split)), to_double(s.substr(split))};
    } catch (const std::logic_error&) {
        throw DomainError("malformed complex literal '" + text + "'");
    }
}

struct Context {
    ReportFile report;
    std::ostream* out = nullptr;

    Hypermatrix load(const std::string& path) {
        const std::string text = read_text(path);
        report.inputs.emplace_back(path, fnv1a_hex(text));
        try {
            return parse(text);
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what(), e.line(), e.offset());
        }
    }

    Matrix load_matrix(const std::string& path) { return to_matrix(load(path)); }

    void emit(const std::string& out_path, const Hypermatrix& h, const std::string& label) {
        const std::string text = serialize(h);
        report.note(label + ".shape", shape_text(h.shape()));
        report.note(label + ".fnv1a", fnv1a_hex(text));
        if (!out_path.empty()) write_text(out_path, text);
    }

    static std::string shape_text(const Shape& s) {
        std::string t;
        for (std::size_t a = 0; a < s.size(); ++a) t += (a ? "x" : "") + std::to_string(s[a]);
        return t;
    }
};

/// Tolerance flags --tol.<name>, registered per subcommand with a default.
class Tolerances {
public:
    void add(CLI::App* sub, const std::string& name, double def) {
        auto& slot = values_[sub->get_name() + "/" + name];
        slot = def;
        sub->add_option("--tol." + name, slot, "tolerance for " + name)->capture_default_str();
    }
    double get(const CLI::App* sub, const std::string& name) const {
        return values_.at(sub->get_name() + "/" + name);
    }

private:
    std::map<std::string, double> values_;
};

struct Options {
    std::vector<std::string> ops;
    std::string background;
    std::string weights;
    std::string matrix;
    std::string input;
    std::vector<std::string> decomposition;
    std::string seed;
    std::string out;
    std::string report;
    std::size_t steps = 2;
    std::size_t depth_floor = 2;
    std::size_t times = 1;
    std::size_t trials = 100;
    std::string method = "truncate";
    std::string kind = "tau";
    std::string direction = "left";
    std::string evaluator = "optimized";
    std::string lambda;
    double mu = 1.0;
    double nu = 1.0;
};

std::uint64_t require_seed(const Options& o, const char* cmd) {
    if (o.seed.empty()) throw CLI::RequiredError(std::string("--seed (required by ") + cmd + ")");
    std::size_t used = 0;
    const unsigned long long v = std::stoull(o.seed, &used);
    if (used != o.seed.size()) throw CLI::ValidationError("--seed", "expects an unsigned integer");
    return v;
}

EvalOptions eval_options(const Options& o) {
    EvalOptions e;
    e.evaluator = o.evaluator == "reference" ? Evaluator::Reference : Evaluator::Optimized;
    return e;
}

OperandList load_ops(Context& ctx, const Options& o) {
    std::vector<Hypermatrix> ops;
    for (const auto& p : o.ops) ops.push_back(ctx.load(p));
    return OperandList(std::move(ops));
}

Hypermatrix load_background(Context& ctx, const Options& o, const OperandList& ops) {
    if (o.background == "delta") return kronecker_delta(ops.arity(), ops.inner_dim());
    return ctx.load(o.background);
}

double relative(double diff, double scale) { return scale > 0.0 ? diff / scale : diff; }

SpectralPair load_pair(Context& ctx, const Options& o, const Matrix& A) {
    if (o.decomposition.empty()) return eigen_decompose(A);
    if (o.decomposition.size() != 4)
        throw CLI::ValidationError("--decomposition", "expects U V mu nu files");
    SpectralPair p;
    p.U = ctx.load_matrix(o.decomposition[0]);
    p.V = ctx.load_matrix(o.decomposition[1]);
    p.mu = to_vector(hypermatrix_vector(ctx.load(o.decomposition[2])));
    p.nu = to_vector(hypermatrix_vector(ctx.load(o.decomposition[3])));
    return p;
}

LiftedPair lift_for(const Options& o, const Matrix& A) {
    return o.kind == "pair" ? lift_pair_minors(A) : lift_tau_minors(A);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypermatrix spectral toolkit"};
    app.require_subcommand(1);
    Options o;
    Tolerances tol;
    std::map<CLI::App*, std::function<void(Context&, CLI::App*)>> handlers;

    auto common = [&](CLI::App* s) {
        s->add_option("--report", o.report, "write the JSON report to this file");
        s->add_option("--out", o.out, "output file or directory");
    };
    auto add = [&](const char* name, const char* help,
                   std::function<void(Context&, CLI::App*)> fn) {
        CLI::App* s = app.add_subcommand(name, help);
        common(s);
        handlers[s] = std::move(fn);
        return s;
    };
    auto ops_opt = [&](CLI::App* s) {
        s->add_option("--ops", o.ops, "operand files")->required()->expected(2, 64);
        s->add_option("--evaluator", o.evaluator)
            ->check(CLI::IsMember({"optimized", "reference"}));
    };
    auto matrix_opt = [&](CLI::App* s) {
        s->add_option("--matrix", o.matrix, "input hypermatrix file")->required();
    };

    auto* prod_cmd = add("prod", "BM product of the operands", [&](Context& c, CLI::App*) {
        c.emit(o.out, bm_product(load_ops(c, o), eval_options(o)), "product");
    });
    ops_opt(prod_cmd);

    auto* gprod_cmd = add("gprod", "general BM product with a background",
                          [&](Context& c, CLI::App*) {
                              const OperandList ops = load_ops(c, o);
                              const Hypermatrix bg = load_background(c, o, ops);
                              c.emit(o.out, general_bm_product(ops, bg, eval_options(o)), "product");
                          });
    ops_opt(gprod_cmd);
    gprod_cmd->add_option("--background", o.background, "background file or 'delta'")->required();

    auto* dual_cmd = add("dualprod", "dual product", [&](Context& c, CLI::App*) {
        const OperandList ops = load_ops(c, o);
        const Hypermatrix bg = load_background(c, o, ops);
        const Hypermatrix w = c.load(o.weights);
        c.emit(o.out, dual_product(bg, ops, w, eval_options(o)), "product");
    });
    ops_opt(dual_cmd);
    dual_cmd->add_option("--background", o.background, "background file or 'delta'")->required();
    dual_cmd->add_option("--weights", o.weights, "weight hypermatrix file")->required();

    auto* tr_cmd = add("transpose", "cyclic transpose", [&](Context& c, CLI::App*) {
        const auto dir = o.direction == "right" ? RotationDirection::Right : RotationDirection::Left;
        c.emit(o.out, cyclic_transpose(c.load(o.input), o.times, dir), "transpose");
    });
    tr_cmd->add_option("--input", o.input)->required();
    tr_cmd->add_option("--times", o.times)->capture_default_str();
    tr_cmd->add_option("--direction", o.direction)->check(CLI::IsMember({"left", "right"}));

    auto* eig_cmd = add("eig", "eigenpair decomposition", [&](Context& c, CLI::App* s) {
        const Matrix A = c.load_matrix(o.matrix);
        const SpectralPair p = eigen_decompose(A);
        c.report.add(spectral_residuals(p, A, tol.get(s, "biorthogonality"),
                                        tol.get(s, "reconstruction")));
        const Vector ev = p.eigenvalues();
        for (Eigen::Index k = 0; k < ev.size(); ++k)
            c.report.note("eigenvalue." + std::to_string(k), format_complex(ev(k)));
        c.report.note("near_defective", p.near_defective ? "true" : "false");
        if (!o.out.empty()) {
            fs::create_directories(o.out);
            write_hypermatrix(fs::path(o.out) / "U.hm", from_matrix(p.U));
            write_hypermatrix(fs::path(o.out) / "V.hm", from_matrix(p.V));
            write_hypermatrix(fs::path(o.out) / "mu.hm", vector_hypermatrix(from_vector(p.mu)));
            write_hypermatrix(fs::path(o.out) / "nu.hm", vector_hypermatrix(from_vector(p.nu)));
        }
    });
    matrix_opt(eig_cmd);
    tol.add(eig_cmd, "reconstruction", kDefaultReconstructionTol);
    tol.add(eig_cmd, "biorthogonality", kDefaultBiorthogonalityTol);

    auto* minors_cmd = add("minors", "minor partition checks", [&](Context& c, CLI::App* s) {
        const Hypermatrix H = c.load(o.matrix);
        if (H.order() == 3) {
            const TriplePartitionCheck t = check_triple_partition(H);
            c.report.add("triple_partition", t.max_deviation, tol.get(s, "partition"));
            c.report.note("uncovered", std::to_string(t.uncovered.size()));
            return;
        }
        const Matrix A = to_matrix(H);
        const auto n = static_cast<std::size_t>(A.rows());
        if (n >= 3) {
            Matrix sum = Matrix::Zero(A.rows(), A.cols());
            for (std::size_t t = 0; t < n; ++t) sum += tau_minor(A, t);
            c.report.add("tau_partition", relative((sum - A).norm(), A.norm()),
                         tol.get(s, "tau"));
        }
        const PartitionCheck pc = check_pair_partition(A);
        double off = 0.0;
        std::size_t diag = 0;
        for (const auto& [i, j] : pc.uncovered) {
            if (i == j) {
                ++diag;
            } else {
                off = std::max(off, std::abs(A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
            }
        }
        c.report.add("pair_partition_offdiagonal", off, tol.get(s, "partition"));
        c.report.note("pair_partition_uncovered_diagonal", std::to_string(diag));
    });
    matrix_opt(minors_cmd);
    tol.add(minors_cmd, "tau", 1e-14);
    tol.add(minors_cmd, "partition", 0.0);

    auto* lift_cmd = add("lift", "lift of minor decompositions", [&](Context& c, CLI::App* s) {
        const Matrix A = c.load_matrix(o.matrix);
        const LiftedPair lp = lift_for(o, A);
        c.report.add("leading_block", relative((lp.leading_block() - A).norm(), A.norm()),
                     tol.get(s, "reconstruction"));
        c.report.add("biorthogonality", biorthogonality_residual(lp.U, lp.V),
                     tol.get(s, "biorthogonality"));
        c.report.note("size", std::to_string(lp.size()));
    });
    matrix_opt(lift_cmd);
    lift_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"tau", "pair"}));
    tol.add(lift_cmd, "reconstruction", 1e-10);
    tol.add(lift_cmd, "biorthogonality", 1e-9);

    auto* trunc_cmd = add("truncate", "truncation of the lifted decomposition",
                          [&](Context& c, CLI::App* s) {
                              const Matrix A = c.load_matrix(o.matrix);
                              const Truncation t = truncate(lift_for(o, A));
                              c.report.add("error_bound_sq", t.error_bound_sq);
                              c.report.add("error_bound", t.error_bound);
                              c.report.add("distance_sq", t.distance_sq);
                              c.report.add("error_identity",
                                           relative(std::abs(t.error_bound_sq - t.distance_sq),
                                                    t.distance_sq),
                                           tol.get(s, "identity"));
                              c.report.add("approximation", relative((t.approx - A).norm(), A.norm()));
                              c.emit(o.out, from_matrix(t.approx), "approximation");
                          });
    matrix_opt(trunc_cmd);
    trunc_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"tau", "pair"}));
    tol.add(trunc_cmd, "identity", 1e-10);

    auto* infl_cmd = add("inflate", "inflation of the lifted decomposition",
                         [&](Context& c, CLI::App* s) {
                             const Matrix A = c.load_matrix(o.matrix);
                             const InflationResult r = inflate(lift_for(o, A));
                             c.report.add("objective", r.objective);
                             c.report.add("biorthogonality_drift", r.max_biorthogonality_drift,
                                          tol.get(s, "biorthogonality"));
                             bool monotone = true;
                             for (std::size_t k = 1; k < r.trace.size(); ++k)
                                 monotone = monotone && r.trace[k] <= r.trace[k - 1];
                             c.report.add("monotone_violation", monotone ? 0.0 : 1.0, 0.0);
                             c.report.add("reconstruction", reconstruction_residual(r.pair, A));
                             c.report.note("iterations", std::to_string(r.iterations));
                             c.report.note("converged", r.converged ? "true" : "false");
                         });
    matrix_opt(infl_cmd);
    infl_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"tau", "pair"}));
    tol.add(infl_cmd, "biorthogonality", 1e-8);

    auto* rec_cmd = add("recursive", "recursive approximation", [&](Context& c, CLI::App* s) {
        const Matrix A = c.load_matrix(o.matrix);
        RecursiveOptions ro;
        ro.depth_floor = o.depth_floor;
        ro.method = o.method == "inflate" ? ApproximationMethod::Inflate : ApproximationMethod::Truncate;
        const Approximation ap = recursive_approximate(A, ro);
        c.report.add("reconstruction", ap.report.value("reconstruction"));
        c.report.add("biorthogonality", ap.report.value("biorthogonality"),
                     tol.get(s, "biorthogonality"));
    });
    matrix_opt(rec_cmd);
    rec_cmd->add_option("--depth-floor", o.depth_floor)->capture_default_str();
    rec_cmd->add_option("--method", o.method)->check(CLI::IsMember({"truncate", "inflate"}));
    tol.add(rec_cmd, "biorthogonality", 1e-6);

    auto* cp2_cmd = add("charpoly2", "2 x 2 characteristic polynomial", [&](Context& c, CLI::App*) {
        const Complex v = char_poly_2x2(c.load_matrix(o.matrix), parse_complex(o.lambda));
        c.report.note("value", format_complex(v));
        c.report.add("magnitude", std::abs(v));
    });
    matrix_opt(cp2_cmd);
    cp2_cmd->add_option("--lambda", o.lambda, "complex value, e.g. 3+0i")->required();

    auto* cp222_cmd = add("charpoly222", "2 x 2 x 2 characteristic polynomial at solved scaling",
                          [&](Context& c, CLI::App* s) {
                              const Hypermatrix A = c.load(o.matrix);
                              ScalingSolveOptions so;
                              so.seed = require_seed(o, "charpoly222");
                              so.tolerance = tol.get(s, "constraints");
                              const ScalingSolution sol = solve_scaling_222(A, so);
                              c.report.add("constraint_residual", sol.residual, so.tolerance);
                              const ComplexVector cp = char_poly_222(A, sol.scaling);
                              c.report.add("char_poly_norm",
                                           std::hypot(std::abs(cp[0]), std::abs(cp[1])),
                                           tol.get(s, "charpoly"));
                              c.report.note("component.0", format_complex(cp[0]));
                              c.report.note("component.1", format_complex(cp[1]));
                          });
    matrix_opt(cp222_cmd);
    cp222_cmd->add_option("--seed", o.seed);
    tol.add(cp222_cmd, "constraints", 1e-8);
    tol.add(cp222_cmd, "charpoly", 1e-6);

    auto* pars_cmd = add("parseval", "Parseval system and Cramer generators",
                         [&](Context& c, CLI::App* s) {
                             const Matrix A = c.load_matrix(o.matrix);
                             const SpectralPair p = load_pair(c, o, A);
                             const ParsevalSystem ps = build_parseval_system(p.U, p.V, A);
                             const Vector x = parseval_unknowns(p.mu, p.nu);
                             c.report.add("parseval_identity",
                                          relative((ps.F * x - ps.a_vec).norm(), ps.a_vec.norm()),
                                          tol.get(s, "identity"));
                             for (std::size_t i = 0; i < ps.n; ++i)
                                 for (std::size_t j = i + 1; j < ps.n; ++j) {
                                     const UVResidual r = uv_generator_evaluate(ps, i, j);
                                     const std::string tag = std::to_string(i) + "_" + std::to_string(j);
                                     c.report.add("uv_numerator." + tag, std::abs(r.numerator));
                                     if (r.value)
                                         c.report.add("uv_residual." + tag, std::abs(*r.value),
                                                      tol.get(s, "uv"));
                                     else
                                         c.report.note("uv_residual." + tag,
                                                       "singular system, |det F| = " +
                                                           format_double(std::abs(r.det_F)));
                                 }
                         });
    matrix_opt(pars_cmd);
    pars_cmd->add_option("--decomposition", o.decomposition, "U V mu nu files");
    tol.add(pars_cmd, "identity", 1e-10);
    tol.add(pars_cmd, "uv", 1e-8);

    auto* sym_cmd = add("symelim", "symmetric 2 x 2 x 2 elimination residuals",
                        [&](Context& c, CLI::App* s) {
                            const Hypermatrix A = c.load(o.matrix);
                            if (o.decomposition.size() != 1)
                                throw CLI::ValidationError("--decomposition", "expects one Q file");
                            const Hypermatrix Q = c.load(o.decomposition[0]);
                            const double t = tol.get(s, "symelim");
                            const ResidualReport rep = symmetric_elimination_residual(A, Q, o.steps);
                            for (const auto& r : rep.items()) c.report.add(r.name, r.value, t);
                        });
    matrix_opt(sym_cmd);
    sym_cmd->add_option("--decomposition", o.decomposition, "Q file");
    sym_cmd->add_option("--steps", o.steps, "recurrence levels")->capture_default_str();
    tol.add(sym_cmd, "symelim", 1e-6);

    auto* herm_cmd = add("hermitian", "Hermicity check", [&](Context& c, CLI::App*) {
        const Hypermatrix A = c.load(o.matrix);
        const HermitianCheck h = is_hermitian(A);
        c.report.add("hermitian", h.residual, 1e-12 * std::max(1.0, frobenius_norm(A)));
    });
    matrix_opt(herm_cmd);

    auto* bounds_cmd = add("bounds", "l4 eigenvalue bounds on random unit vectors",
                           [&](Context& c, CLI::App*) {
                               const Hypermatrix A = c.load(o.matrix);
                               Rng rng(require_seed(o, "bounds"));
                               std::size_t violations = 0;
                               double worst_lower = 0.0, worst_upper = 0.0;
                               for (std::size_t k = 0; k < o.trials; ++k) {
                                   const RayleighBounds b = rayleigh_bounds(
                                       A, random_unit_vector(A.extent(0), rng), o.mu, o.nu);
                                   if (!b.holds) ++violations;
                                   worst_lower = std::max(worst_lower, b.lower - b.value);
                                   worst_upper = std::max(worst_upper, b.value - b.upper);
                               }
                               c.report.add("violations", static_cast<double>(violations), 0.0);
                               c.report.add("lower_excess", worst_lower);
                               c.report.add("upper_excess", worst_upper);
                           });
    matrix_opt(bounds_cmd);
    bounds_cmd->add_option("--mu", o.mu)->required();
    bounds_cmd->add_option("--nu", o.nu)->required();
    bounds_cmd->add_option("--seed", o.seed);
    bounds_cmd->add_option("--trials", o.trials)->capture_default_str();

    auto* gen_cmd = add("gen", "write the fixture corpus", [&](Context& c, CLI::App*) {
        const std::uint64_t seed = require_seed(o, "gen");
        if (o.out.empty()) throw CLI::RequiredError("--out (required by gen)");
        fs::create_directories(o.out);
        const auto corpus = fixture_corpus(seed);
        for (const auto& e : corpus) {
            const std::string text = serialize(e.value, Metadata{seed, e.description});
            write_text(fs::path(o.out) / (e.name + ".hm"), text);
            c.report.note("file." + e.name, fnv1a_hex(text));
        }
        c.report.note("count", std::to_string(corpus.size()));
    });
    gen_cmd->add_option("--seed", o.seed);

    auto* verify_cmd = add("verify", "verify a decomposition against its hypermatrix",
                           [&](Context& c, CLI::App* s) {
                               const Hypermatrix H = c.load(o.matrix);
                               const double rt = tol.get(s, "reconstruction");
                               if (H.order() == 2) {
                                   const Matrix A = to_matrix(H);
                                   if (o.decomposition.size() != 4)
                                       throw CLI::ValidationError("--decomposition",
                                                                  "expects U V mu nu files");
                                   const SpectralPair p = load_pair(c, o, A);
                                   c.report.add(spectral_residuals(
                                       p, A, tol.get(s, "biorthogonality"), rt));
                                   return;
                               }
                               if (o.decomposition.size() != 6)
                                   throw CLI::ValidationError("--decomposition",
                                                              "expects Q U V D1 D2 D3 files");
                               HyperSpectralTriple t;
                               Hypermatrix* slots[] = {&t.Q, &t.U, &t.V, &t.D1, &t.D2, &t.D3};
                               for (std::size_t k = 0; k < 6; ++k)
                                   *slots[k] = c.load(o.decomposition[k]);
                               const ResidualReport r = decomposition_residual(H, t);
                               const double scale = std::max(1.0, frobenius_norm(H));
                               c.report.add("reconstruction", r.value("reconstruction") / scale, rt);
                               c.report.add("non_correlation", r.value("non_correlation"));
                           });
    matrix_opt(verify_cmd);
    verify_cmd->add_option("--decomposition", o.decomposition, "decomposition files")->required();
    tol.add(verify_cmd, "reconstruction", 1e-10);
    tol.add(verify_cmd, "biorthogonality", 1e-10);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    Context ctx;
    ctx.out = &out;
    ctx.report.command = args.size() > 1 ? std::vector<std::string>(args.begin() + 1, args.end())
                                         : std::vector<std::string>{};
    CLI::App* chosen = app.get_subcommands().front();
    const auto start = std::chrono::steady_clock::now();
    try {
        handlers.at(chosen)(ctx, chosen);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const SingularSystemError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    ctx.report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const auto& v : ctx.report.values) {
        out << v.name << " = " << format_double(v.value);
        if (v.tolerance) out << " (tol " << format_double(*v.tolerance) << (v.pass() ? ", pass)" : ", FAIL)");
        out << "\n";
    }
    for (const auto& [k, t] : ctx.report.results) out << k << " = " << t << "\n";
    try {
        if (!o.report.empty()) write_text(o.report, ctx.report.to_json());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return ctx.report.all_pass() ? kExitPass : kExitNumeric;
}

int cli_dispatch(int argc, const char* const* argv) {
    return cli_dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace hmx
