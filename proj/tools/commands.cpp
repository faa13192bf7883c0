#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "trpca/trpca.hpp"

namespace trpca::cli {

namespace {

struct Outputs {
    std::string report;
    std::string csv;
};

void add_outputs(CLI::App* cmd, Outputs& o) {
    cmd->add_option("--report", o.report, "JSON report path (stdout when no output is given)");
    cmd->add_option("--csv", o.csv, "CSV report path");
}

void write_text(const std::string& path, const std::string& text) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(text.data());
    write_file_bytes(path, std::span<const std::uint8_t>(p, text.size()));
}

void emit(const Report& r, const Outputs& o, std::ostream& out) {
    if (!o.report.empty()) write_text(o.report, r.to_json());
    if (!o.csv.empty()) write_text(o.csv, r.to_csv());
    if (o.report.empty() && o.csv.empty()) out << r.to_json();
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw InvalidArgument("not a number: '" + s + "'");
    return v;
}

struct SolverFlags {
    std::string lambda = "auto";
    double eps = 1e-8;
    std::size_t max_iters = 500;
    std::uint64_t seed = 0;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
    cmd->add_option("--lambda", f.lambda, "l1 weight, a number or 'auto'");
    cmd->add_option("--eps", f.eps, "stopping tolerance");
    cmd->add_option("--max-iters", f.max_iters, "iteration cap");
}

SolverConfig solver_config(const SolverFlags& f) {
    SolverConfig cfg;
    if (f.lambda != "auto") cfg.lambda = parse_double(f.lambda);
    cfg.eps = f.eps;
    cfg.max_iters = f.max_iters;
    cfg.validate();
    return cfg;
}

void put_solution(Report& r, const TrpcaSolution& sol) {
    r.set("lambda", sol.lambda)
        .set("iters", sol.iters)
        .set("converged", sol.converged)
        .set("residual", sol.final_residual);
}

void put_shape(Report& r, Shape s) {
    r.set("n1", s.n1).set("n2", s.n2).set("n3", s.n3);
}

int solver_exit(const TrpcaSolution& sol, std::ostream& err) {
    if (sol.converged) return kExitOk;
    err << "trpca: solver did not converge in " << sol.iters << " iterations (residual "
        << sol.final_residual << ")\n";
    return kExitNotConverged;
}

// decompose

struct DecomposeArgs {
    std::string input, out_l, out_e;
    SolverFlags solver;
    Outputs outputs;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
    const SolverConfig cfg = solver_config(a.solver);
    const Tensor3 x = read_tensor(a.input);
    const TrpcaSolution sol = solve(x, cfg);
    if (!a.out_l.empty()) write_tensor(a.out_l, sol.l_hat);
    if (!a.out_e.empty()) write_tensor(a.out_e, sol.e_hat);

    Report r;
    put_shape(r, x.shape());
    put_solution(r, sol);
    r.set("tubal_rank", tubal_rank(sol.l_hat, kSolutionRankTol))
        .set("tnn", tnn(sol.l_hat))
        .set("l1", l1_norm(sol.e_hat));
    emit(r, a.outputs, out);
    return solver_exit(sol, err);
}

// synth

struct SynthArgs {
    std::size_t n1 = 0, n2 = 0, n3 = 0, rank = 0;
    std::optional<double> count;
    std::optional<double> rho;
    SolverFlags solver;
    Outputs outputs;
};

int cmd_synth(const SynthArgs& a, std::ostream& out, std::ostream& err) {
    const SolverConfig cfg = solver_config(a.solver);
    const Rng root(a.solver.seed);
    const Tensor3 l0 = gen_low_tubal_rank(a.n1, a.n2, a.n3, a.rank, root.child(0).seed());
    const Tensor3 e0 =
        a.count ? gen_sparse_bernoulli(a.n1, a.n2, a.n3, *a.count, SparseMode::CountUniform,
                                       root.child(1).seed())
                : gen_sparse_bernoulli(a.n1, a.n2, a.n3, *a.rho, SparseMode::BernoulliRho,
                                       root.child(1).seed());
    const TrpcaSolution sol = solve(l0 + e0, cfg);

    Report r;
    put_shape(r, l0.shape());
    r.set("r", a.rank).set("m", l0_norm(e0));
    r.set("tubal_rank", tubal_rank(sol.l_hat, kSolutionRankTol))
        .set("l0_e", l0_norm(sol.e_hat))
        .set("rel_err_l", relative_error(sol.l_hat, l0))
        .set("rel_err_e", relative_error(sol.e_hat, e0));
    put_solution(r, sol);
    emit(r, a.outputs, out);
    return solver_exit(sol, err);
}

// phase

struct PhaseArgs {
    std::size_t n = 0, n3 = 0, trials = 1;
    std::string r_grid, rho_grid, out_csv, out_json;
    double tol = 1e-3;
    SolverFlags solver;
};

int cmd_phase(const PhaseArgs& a, std::ostream& out, std::ostream&) {
    PhaseGridSpec spec;
    spec.n = a.n;
    spec.n3 = a.n3;
    spec.r_fracs = parse_range(a.r_grid);
    spec.rho_ss = parse_range(a.rho_grid);
    spec.trials = a.trials;
    spec.success_tol = a.tol;
    spec.seed = a.solver.seed;
    SolverFlags f = a.solver;
    f.lambda = "auto";
    spec.solver = solver_config(f);
    for (double v : spec.r_fracs)
        if (v <= 0.0 || v > 1.0) throw InvalidArgument("rank fractions must lie in (0, 1]");
    for (double v : spec.rho_ss)
        if (v < 0.0 || v > 1.0) throw InvalidArgument("sparsity rates must lie in [0, 1]");
    if (a.n == 0 || a.n3 == 0 || a.trials == 0) throw InvalidArgument("n, n3 and trials must be positive");

    const PhaseGrid grid = phase_grid(spec);
    const std::string csv = grid_to_csv(grid);
    if (!a.out_csv.empty()) write_text(a.out_csv, csv);
    if (!a.out_json.empty()) write_text(a.out_json, grid_to_json(grid));
    if (a.out_csv.empty() && a.out_json.empty()) out << csv;
    return kExitOk;
}

// image

struct ImageArgs {
    std::string input, output;
    double corrupt = 0.1;
    SolverFlags solver;
    Outputs outputs;
};

void put_psnr(Report& r, const std::string& key, double value) {
    if (std::isinf(value))
        r.set(key, "exact");
    else
        r.set(key, value);
}

int cmd_image(const ImageArgs& a, std::ostream& out, std::ostream& err) {
    if (!(a.corrupt >= 0.0 && a.corrupt <= 1.0)) throw InvalidArgument("--corrupt must lie in [0, 1]");
    SolverConfig cfg = solver_config(a.solver);
    const Tensor3 img = image_to_tensor(read_file_bytes(a.input));
    const Shape s = img.shape();
    if (!cfg.lambda) cfg.lambda = 1.0 / std::sqrt(3.0 * double(std::max(s.n1, s.n2)));

    const CorruptedImage c = corrupt_pixels(img, a.corrupt, a.solver.seed);
    const TrpcaSolution sol = solve(c.corrupted, cfg);
    if (!a.output.empty()) write_file_bytes(a.output, tensor_to_image(sol.l_hat));

    // Score the image as written: clamped to the pixel range.
    Tensor3 recovered = sol.l_hat;
    recovered.array() = recovered.array().max(0.0).min(1.0);

    Report r;
    put_shape(r, s);
    r.set("corrupt", a.corrupt).set("corrupted_pixels", c.mask.size());
    put_solution(r, sol);
    put_psnr(r, "psnr_corrupted", psnr(img, c.corrupted));
    put_psnr(r, "psnr_recovered", psnr(img, recovered));
    emit(r, a.outputs, out);
    return solver_exit(sol, err);
}

bool is_io_error(const Error& e) {
    return dynamic_cast<const IoError*>(&e) || dynamic_cast<const BadMagic*>(&e) ||
           dynamic_cast<const Truncated*>(&e) || dynamic_cast<const DimensionOverflow*>(&e) ||
           dynamic_cast<const UnsupportedFormat*>(&e) || dynamic_cast<const MalformedHeader*>(&e) ||
           dynamic_cast<const ZeroReference*>(&e) || dynamic_cast<const NumericalFailure*>(&e);
}

}  // namespace

std::vector<double> parse_range(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (spec.empty() || parts.size() > 3) throw InvalidArgument("grid must be a, a:b or a:step:b");

    const double a = parse_double(parts[0]);
    if (parts.size() == 1) return {a};
    const double step = parts.size() == 3 ? parse_double(parts[1]) : 1.0;
    const double b = parse_double(parts.back());
    if (step <= 0.0 || b < a) throw InvalidArgument("empty grid '" + spec + "'");

    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = a + double(i) * step;
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Low-rank plus sparse tensor decomposition", "trpca"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    auto* d = app.add_subcommand("decompose", "split a T3F1 tensor into low-rank and sparse parts");
    d->add_option("--input", dec.input, "input T3F1 file")->required();
    d->add_option("--out-l", dec.out_l, "low-rank part, T3F1");
    d->add_option("--out-e", dec.out_e, "sparse part, T3F1");
    d->add_option("--seed", dec.solver.seed, "accepted, unused");
    add_solver_flags(d, dec.solver);
    add_outputs(d, dec.outputs);

    SynthArgs syn;
    auto* s = app.add_subcommand("synth", "generate a random instance, solve it and score the result");
    s->add_option("--n1", syn.n1)->required();
    s->add_option("--n2", syn.n2)->required();
    s->add_option("--n3", syn.n3)->required();
    s->add_option("--rank", syn.rank)->required();
    auto* cnt = s->add_option("--sparsity-count", syn.count, "exact number of corrupted entries");
    auto* rho = s->add_option("--sparsity-rho", syn.rho, "Bernoulli corruption rate");
    cnt->excludes(rho);
    s->add_option("--seed", syn.solver.seed)->required();
    add_solver_flags(s, syn.solver);
    add_outputs(s, syn.outputs);

    PhaseArgs ph;
    auto* p = app.add_subcommand("phase", "success counts over a rank/sparsity grid");
    p->add_option("--n", ph.n)->required();
    p->add_option("--n3", ph.n3)->required();
    p->add_option("--r-grid", ph.r_grid, "rank fractions a:step:b")->required();
    p->add_option("--rho-grid", ph.rho_grid, "sparsity rates a:step:b")->required();
    p->add_option("--trials", ph.trials);
    p->add_option("--tol", ph.tol, "relative error counted as success");
    p->add_option("--seed", ph.solver.seed)->required();
    p->add_option("--eps", ph.solver.eps);
    p->add_option("--max-iters", ph.solver.max_iters);
    p->add_option("--out", ph.out_csv, "CSV path (stdout when no output is given)");
    p->add_option("--json", ph.out_json, "JSON path");

    ImageArgs im;
    auto* i = app.add_subcommand("image", "corrupt a PPM image and recover it");
    i->add_option("--input", im.input, "binary PPM (P6)")->required();
    i->add_option("--corrupt", im.corrupt, "fraction of pixels replaced");
    i->add_option("--seed", im.solver.seed)->required();
    i->add_option("--out", im.output, "recovered image, PPM");
    add_solver_flags(i, im.solver);
    add_outputs(i, im.outputs);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (s->parsed() && !syn.count && !syn.rho) {
        err << "trpca synth: one of --sparsity-count or --sparsity-rho is required\n";
        return kExitUsage;
    }

    try {
        if (d->parsed()) return cmd_decompose(dec, out, err);
        if (s->parsed()) return cmd_synth(syn, out, err);
        if (p->parsed()) return cmd_phase(ph, out, err);
        return cmd_image(im, out, err);
    } catch (const Error& e) {
        err << "trpca: " << e.what() << "\n";
        return is_io_error(e) ? kExitIo : kExitUsage;
    } catch (const std::exception& e) {
        err << "trpca: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace trpca::cli
