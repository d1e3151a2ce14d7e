#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nckernel/certificates.hpp"
#include "nckernel/error.hpp"
#include "nckernel/evaluation.hpp"
#include "nckernel/linalg.hpp"
#include "nckernel/parse.hpp"
#include "nckernel/random.hpp"
#include "nckernel/serialize.hpp"
#include "nckernel/simd/kernels.hpp"
#include "nckernel/witnesses.hpp"

namespace {

using namespace nckernel;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;

struct KernelInput {
  std::string file;
  std::string expr;
  std::size_t arity = 0;
  std::size_t dim = 1;
  std::optional<std::size_t> degree_bound;
};

struct Common {
  double tol = kDefaultTolerance;
  std::string out;
  std::uint64_t seed = 0;
};

// The witness subcommand owns --N and --m for its construction, so it takes
// only the kernel source.
void add_kernel_options(CLI::App* cmd, KernelInput& in, bool required) {
  auto* file = cmd->add_option("kernel", in.file, "kernel JSON file (or a factor JSON with \"q\")");
  auto* expr = cmd->add_option("--expr", in.expr, "hereditary expression, e.g. \"1 - z1*z1'\"");
  file->excludes(expr);
  expr->excludes(file);
  if (required) {
    cmd->add_option("--N", in.arity, "arity (required with --expr)");
    cmd->add_option("--p", in.dim, "coefficient dimension (expressions support p = 1)");
    cmd->add_option("--m", in.degree_bound, "degree bound; widens the word window");
    cmd->callback([&in] {
      if (in.file.empty() && in.expr.empty()) throw CLI::ValidationError("a kernel file or --expr is required");
    });
  }
}

void add_common_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--tol", c.tol, "relative tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "write JSON here instead of stdout");
  cmd->add_option("--seed", c.seed, "seed for randomized steps");
}

HereditaryKernel load_kernel(const KernelInput& in) {
  HereditaryKernel k = [&] {
    if (!in.expr.empty()) {
      if (in.arity == 0) throw Error(ErrorKind::InvalidArgument, "--expr needs --N");
      return parse_kernel(in.expr, in.arity, in.dim);
    }
    const Json j = read_json_file(in.file);
    HereditaryKernel parsed =
        j.contains("q") ? kernel_from_factor(polynomial_from_json(j)) : kernel_from_json(j);
    if (in.arity != 0 && parsed.arity() != in.arity) {
      throw Error(ErrorKind::ArityMismatch, "--N disagrees with the file");
    }
    return parsed;
  }();
  if (in.degree_bound) k = k.with_degree_bound(*in.degree_bound);
  return k;
}

void emit(const Json& j, const Common& c) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + c.out);
  f << text;
}

int cmd_check(const KernelInput& in, const Common& c) {
  const auto k = load_kernel(in);
  const auto cert = check_nc_positivity(k, c.tol);
  emit(to_json(cert), c);
  const bool positive = cert.verdict == Verdict::PositiveKernel;
  std::cerr << (positive ? "PositiveKernel" : "NotPositive")
            << ": min Gram eigenvalue " << cert.min_gram_eigenvalue;
  if (positive) std::cerr << ", inner dimension " << *cert.inner_dimension;
  std::cerr << "\n";
  return positive ? kExitOk : kExitVerdict;
}

int cmd_factor(const KernelInput& in, const Common& c) {
  const auto k = load_kernel(in);
  NCPolynomial h(1, 1, 1);
  try {
    h = factor_kernel(k, c.tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPsd) throw;
    std::cerr << e.what() << "\n";
    return kExitVerdict;
  }
  emit(to_json(h), c);
  std::cerr << "factor: inner dimension " << h.inner() << " (bound " << factor_dimension_bound(k)
            << "), residual " << residual(k, h) << "\n";
  return kExitOk;
}

struct EvalArgs {
  std::vector<std::string> tuples;
  std::size_t random_points = 0;
  std::size_t size = 2;
};

int cmd_eval(const KernelInput& in, const EvalArgs& a, const Common& c) {
  const auto k = load_kernel(in);
  std::vector<MatrixTuple> points;
  for (const auto& path : a.tuples) points.push_back(tuple_from_json(read_json_file(path)));
  Rng rng(c.seed);
  for (std::size_t i = 0; i < a.random_points; ++i) {
    points.push_back(random_strictly_upper_tuple(rng, k.arity(), a.size));
  }
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "give --tuple files or --random-points");
  const auto block = block_eval_matrix(k, points);
  const auto report = hermitian_min_eig(block, c.tol);
  Json j;
  j["points"] = points.size();
  j["n"] = points.front().size();
  j["report"] = to_json(report);
  j["matrix"] = to_json(block);
  emit(j, c);
  std::cerr << (report.is_psd ? "PSD" : "not PSD") << ": min eigenvalue " << report.min_eigenvalue
            << " over " << points.size() << " point(s)\n";
  return report.is_psd ? kExitOk : kExitVerdict;
}

struct WitnessArgs {
  std::string construction;
  std::size_t arity = 1;
  std::size_t order = 1;
  std::vector<double> lambda;
  bool random_lambda = false;
  double weight = 1.0;
  std::vector<double> s_grid = kDefaultShiftGrid;
};

int cmd_witness(const KernelInput& in, const WitnessArgs& a, const Common& c) {
  Json j;
  j["construction"] = a.construction;
  j["N"] = a.arity;
  j["m"] = a.order;
  std::optional<MatrixTuple> tuple;
  if (a.construction == "theorem1") {
    std::vector<Complex> lambda;
    if (a.random_lambda) {
      Rng rng(c.seed);
      for (std::size_t k = 0; k < a.arity; ++k) lambda.push_back(random_complex(rng));
      j["seed"] = c.seed;
    } else if (a.lambda.empty()) {
      lambda.assign(a.arity, Complex(1.0));
    } else if (a.lambda.size() == 1) {
      lambda.assign(a.arity, Complex(a.lambda.front()));
    } else {
      lambda.assign(a.lambda.begin(), a.lambda.end());
    }
    Json lj = Json::array();
    for (auto v : lambda) lj.push_back(to_json(v));
    j["lambda"] = std::move(lj);
    tuple = tensor_nilpotent_tuple(a.arity, a.order, lambda);
  } else {
    if (!(a.weight > 0.0)) throw Error(ErrorKind::InvalidArgument, "--s must be positive");
    j["s"] = a.weight;
    tuple = weighted_shift_tuple(a.arity, a.order, a.weight);
  }
  const auto nil = joint_nilpotency_rank(*tuple);
  const bool verified = nil.rank && *nil.rank == a.order + 1;
  j["tuple"] = to_json(*tuple);
  j["nilpotency"] = to_json(nil);
  j["expected_rank"] = a.order + 1;
  j["verified"] = verified;

  if (!in.file.empty() || !in.expr.empty()) {
    auto k = load_kernel(in);
    if (k.arity() != a.arity) throw Error(ErrorKind::ArityMismatch, "kernel arity differs from --N");
    const auto result = shift_witness_test(k, a.s_grid, c.tol);
    j["witness_test"] = to_json(result);
    std::cerr << "shift witness test: " << (result.witness_found ? "WitnessFound" : "NoWitnessInGrid");
    if (result.witness_eigenvalue) std::cerr << " (min eigenvalue " << *result.witness_eigenvalue << ")";
    std::cerr << "\n";
  }
  emit(j, c);
  std::cerr << a.construction << " tuple of size " << tuple->size() << ": nilpotency rank "
            << (nil.rank ? std::to_string(*nil.rank) : "none") << ", expected " << a.order + 1 << "\n";
  return verified ? kExitOk : kExitVerdict;
}

struct DemoArgs {
  std::size_t samples = 100;
  double radius = 0.5;
};

int cmd_demo(const DemoArgs& a, const Common& c) {
  const auto report = counterexample_demo(a.samples, a.radius, c.seed);
  emit(to_json(report), c);
  std::cerr << "Gram indefinite: " << (report.gram_indefinite ? "yes" : "NO")
            << "; diagonal PSD on " << report.samples << " samples: " << (report.diagonal_positive ? "yes" : "NO")
            << " (min " << report.min_diagonal_eigenvalue << "); two-point min eigenvalue "
            << report.two_point_min_eigenvalue << "\n";
  return report.all_pass() ? kExitOk : kExitVerdict;
}

int cmd_extract(const KernelInput& in, const Common& c) {
  const auto k = load_kernel(in);
  const std::size_t order = std::max<std::size_t>(k.degree_bound(), 1);
  const std::vector<Complex> unit(k.arity(), Complex(1.0));
  const auto direct = abelianized_coefficients(k, tensor_nilpotent_tuple(k.arity(), order, unit));
  const TorusSampler sampler = [&](std::span<const Complex> l, std::span<const Complex> lp) {
    return eval_kernel(k, tensor_nilpotent_tuple(k.arity(), order, l),
                       tensor_nilpotent_tuple(k.arity(), order, lp));
  };
  const auto extracted = torus_extract(sampler, k.arity(), k.degree_bound(), direct.block_dim);
  const auto report = commutative_gram_check(extracted, c.tol);
  const double gap = max_coefficient_gap(extracted, direct);
  Json j;
  j["N"] = k.arity();
  j["m"] = k.degree_bound();
  j["tensor_order"] = order;
  j["coefficients"] = to_json(extracted);
  j["gram"] = to_json(report);
  j["max_gap_to_direct"] = gap;
  emit(j, c);
  std::cerr << "commutative Gram " << (report.is_psd ? "PSD" : "not PSD") << ": min eigenvalue "
            << report.min_eigenvalue << "; extraction gap " << gap << "\n";
  return report.is_psd ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hereditary non-commutative kernels: positivity certificates, evaluation, witnesses"};
  app.require_subcommand(1);
  std::string simd_backend;
  app.add_option("--simd", simd_backend, "force the inner-loop backend (scalar|avx2)");

  KernelInput kin;
  Common common;
  EvalArgs eval_args;
  WitnessArgs witness_args;
  DemoArgs demo_args;

  auto* check = app.add_subcommand("check", "certify positivity via the Gram matrix");
  add_kernel_options(check, kin, true);
  add_common_options(check, common);

  auto* factor = app.add_subcommand("factor", "factor K = H H^*");
  add_kernel_options(factor, kin, true);
  add_common_options(factor, common);

  auto* eval = app.add_subcommand("eval", "block evaluation matrix over sample points");
  add_kernel_options(eval, kin, true);
  add_common_options(eval, common);
  eval->add_option("--tuple", eval_args.tuples, "matrix tuple JSON file (repeatable)")->check(CLI::ExistingFile);
  eval->add_option("--random-points", eval_args.random_points, "add L random strictly upper-triangular tuples");
  eval->add_option("--n", eval_args.size, "size of the random tuples")->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "build a jointly nilpotent witness tuple");
  add_kernel_options(witness, kin, false);
  add_common_options(witness, common);
  witness->add_option("--construction", witness_args.construction)
      ->required()
      ->check(CLI::IsMember({"theorem1", "shift"}));
  witness->add_option("--N", witness_args.arity, "arity")->check(CLI::PositiveNumber);
  witness->add_option("--m", witness_args.order, "tensor order / word window");
  witness->add_option("--lambda", witness_args.lambda, "scalars (one value is broadcast)");
  witness->add_flag("--random-lambda", witness_args.random_lambda, "draw lambda from --seed");
  witness->add_option("--s", witness_args.weight, "shift weight")->check(CLI::PositiveNumber);
  witness->add_option("--s-grid", witness_args.s_grid, "weights for the kernel witness test")
      ->check(CLI::PositiveNumber);

  auto* demo = app.add_subcommand("demo-counterexample", "K = 1 - z z' is diagonally positive but not positive");
  add_common_options(demo, common);
  demo->add_option("--samples", demo_args.samples, "random diagonal samples");
  demo->add_option("--radius", demo_args.radius, "norm bound, in (0, 1)");

  auto* extract = app.add_subcommand("extract", "torus coefficient extraction of the abelianized kernel");
  add_kernel_options(extract, kin, true);
  add_common_options(extract, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (!simd_backend.empty()) {
      const auto backend = simd::parse_backend(simd_backend);
      if (!backend) throw Error(ErrorKind::InvalidArgument, "unknown --simd backend " + simd_backend);
      simd::select(*backend);
    }
    if (check->parsed()) return cmd_check(kin, common);
    if (factor->parsed()) return cmd_factor(kin, common);
    if (eval->parsed()) return cmd_eval(kin, eval_args, common);
    if (witness->parsed()) {
      kin.arity = witness_args.arity;
      kin.degree_bound = witness_args.order;
      return cmd_witness(kin, witness_args, common);
    }
    if (demo->parsed()) return cmd_demo(demo_args, common);
    if (extract->parsed()) return cmd_extract(kin, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
