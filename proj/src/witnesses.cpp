#include "nckernel/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nckernel/certificates.hpp"
#include "nckernel/error.hpp"
#include "nckernel/parse.hpp"
#include "nckernel/random.hpp"

namespace nckernel {

namespace {

std::size_t tensor_side(std::size_t arity, std::size_t order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "tensor order must be >= 1");
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < order; ++i) {
    n *= arity + 1;
    if (n > kMaxWitnessSize) {
      throw Error(ErrorKind::SizeCap, "(N+1)^m exceeds " + std::to_string(kMaxWitnessSize));
    }
  }
  return n;
}

// Digits of a tensor basis index, most significant first.
std::vector<std::size_t> digits_of(std::size_t index, std::size_t base, std::size_t count) {
  std::vector<std::size_t> d(count);
  for (std::size_t k = count; k-- > 0;) {
    d[k] = index % base;
    index /= base;
  }
  return d;
}

std::size_t index_of(std::span<const std::size_t> digits, std::size_t base) {
  std::size_t idx = 0;
  for (auto d : digits) idx = idx * base + d;
  return idx;
}

Complex monomial(std::span<const Complex> lambda, const MultiDegree& t) {
  Complex v{1.0, 0.0};
  for (std::size_t k = 0; k < t.counts.size(); ++k) {
    for (int e = 0; e < t.counts[k]; ++e) v *= lambda[k];
  }
  return v;
}

}  // namespace

ComplexMatrix cyclic_shift_matrix(std::size_t arity, std::size_t order) {
  const std::size_t n = tensor_side(arity, order);
  const std::size_t base = arity + 1;
  ComplexMatrix s(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    auto d = digits_of(col, base, order);
    std::rotate(d.rbegin(), d.rbegin() + 1, d.rend());
    s(index_of(d, base), col) = 1.0;
  }
  return s;
}

MatrixTuple tensor_nilpotent_tuple(std::size_t arity, std::size_t order,
                                   std::span<const Complex> lambda) {
  if (lambda.size() != arity) {
    throw Error(ErrorKind::ArityMismatch, "need one scalar per generator");
  }
  const std::size_t n = tensor_side(arity, order);
  const std::size_t base = arity + 1;
  std::vector<ComplexMatrix> mats;
  mats.reserve(arity);
  for (std::size_t k = 1; k <= arity; ++k) {
    ComplexMatrix z(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      auto d = digits_of(col, base, order);
      // S moves the last slot to the front; E_{k+1,1} then needs that slot at e_1.
      if (d.back() != 0) continue;
      std::rotate(d.rbegin(), d.rbegin() + 1, d.rend());
      d.front() = k;
      z(index_of(d, base), col) = lambda[k - 1];
    }
    mats.push_back(std::move(z));
  }
  return MatrixTuple(std::move(mats));
}

ComplexMatrix CommutativePolyKernel::coefficient(const MultiDegree& t, const MultiDegree& tp) const {
  auto it = coeffs.find({t, tp});
  if (it != coeffs.end()) return it->second;
  return ComplexMatrix(block_dim, block_dim);
}

void CommutativePolyKernel::add(const MultiDegree& t, const MultiDegree& tp, const ComplexMatrix& c) {
  if (t.arity() != arity || tp.arity() != arity) {
    throw Error(ErrorKind::ArityMismatch, "multidegree arity");
  }
  if (static_cast<std::size_t>(t.total()) > degree || static_cast<std::size_t>(tp.total()) > degree) {
    throw Error(ErrorKind::InvalidArgument, "multidegree above the degree bound");
  }
  if (c.rows() != block_dim || c.cols() != block_dim) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient block size");
  }
  auto [it, inserted] = coeffs.try_emplace({t, tp}, c);
  if (!inserted) it->second += c;
}

ComplexMatrix evaluate(const CommutativePolyKernel& p, std::span<const Complex> lambda,
                       std::span<const Complex> lambda_p) {
  if (lambda.size() != p.arity || lambda_p.size() != p.arity) {
    throw Error(ErrorKind::ArityMismatch, "evaluation point arity");
  }
  std::vector<Complex> conj_p(lambda_p.begin(), lambda_p.end());
  for (auto& v : conj_p) v = std::conj(v);
  ComplexMatrix out(p.block_dim, p.block_dim);
  for (const auto& [key, c] : p.coeffs) {
    out += (monomial(lambda, key.first) * monomial(conj_p, key.second)) * c;
  }
  return out;
}

CommutativePolyKernel abelianized_coefficients(const HereditaryKernel& k, const MatrixTuple& z) {
  if (k.arity() != z.arity()) throw Error(ErrorKind::ArityMismatch, "abelianized_coefficients");
  CommutativePolyKernel p{k.arity(), k.degree_bound(), k.dim() * z.size(), {}};
  WordPowers powers(z);
  for (const auto& [key, coeff] : k.entries()) {
    const ComplexMatrix product = multiply_adjoint(powers.get(key.first), powers.get(key.second));
    p.add(abelianize(key.first, k.arity()), abelianize(key.second, k.arity()),
          kron(coeff, product));
  }
  return p;
}

CommutativePolyKernel torus_extract(const TorusSampler& sampler, std::size_t arity,
                                    std::size_t degree, std::size_t block_dim) {
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  const std::size_t side = degree + 1;
  std::vector<Complex> roots(side);
  for (std::size_t j = 0; j < side; ++j) {
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(side));
  }
  const auto degrees = enumerate_multidegrees(arity, degree);
  std::vector<ComplexMatrix> acc(degrees.size() * degrees.size(), ComplexMatrix(block_dim, block_dim));

  std::size_t grid = 1;
  for (std::size_t v = 0; v < 2 * arity; ++v) {
    if (grid > std::numeric_limits<std::size_t>::max() / side) {
      throw Error(ErrorKind::SizeCap, "torus grid too large");
    }
    grid *= side;
  }
  std::vector<std::size_t> exps(2 * arity, 0);
  std::vector<Complex> lambda(arity);
  std::vector<Complex> lambda_p(arity);
  for (std::size_t g = 0; g < grid; ++g) {
    std::size_t rest = g;
    for (std::size_t v = 0; v < 2 * arity; ++v) {
      exps[v] = rest % side;
      rest /= side;
    }
    for (std::size_t k = 0; k < arity; ++k) {
      lambda[k] = roots[exps[k]];
      lambda_p[k] = roots[exps[arity + k]];
    }
    const ComplexMatrix sample = sampler(lambda, lambda_p);
    if (sample.rows() != block_dim || sample.cols() != block_dim) {
      throw Error(ErrorKind::DimensionMismatch, "sampler block size");
    }
    // conj(l)^t l'^{t'} is the root of unity with exponent sum(j' t') - sum(j t).
    for (std::size_t a = 0; a < degrees.size(); ++a) {
      std::size_t left = 0;
      for (std::size_t k = 0; k < arity; ++k) left += exps[k] * static_cast<std::size_t>(degrees[a].counts[k]);
      for (std::size_t b = 0; b < degrees.size(); ++b) {
        std::size_t right = 0;
        for (std::size_t k = 0; k < arity; ++k) {
          right += exps[arity + k] * static_cast<std::size_t>(degrees[b].counts[k]);
        }
        const Complex w = roots[(right % side + side - left % side) % side];
        auto& dst = acc[a * degrees.size() + b];
        for (std::size_t i = 0; i < sample.size(); ++i) dst.data()[i] += w * sample.data()[i];
      }
    }
  }
  CommutativePolyKernel p{arity, degree, block_dim, {}};
  const double inv = 1.0 / static_cast<double>(grid);
  for (std::size_t a = 0; a < degrees.size(); ++a) {
    for (std::size_t b = 0; b < degrees.size(); ++b) {
      ComplexMatrix c = std::move(acc[a * degrees.size() + b]);
      c *= inv;
      p.coeffs.emplace(DegreePair{degrees[a], degrees[b]}, std::move(c));
    }
  }
  return p;
}

CommutativeGram commutative_gram_matrix(const CommutativePolyKernel& p) {
  CommutativeGram g;
  g.index = enumerate_multidegrees(p.arity, p.degree);
  const std::size_t b = p.block_dim;
  check_dense_size(g.index.size() * b, g.index.size() * b);
  g.matrix = ComplexMatrix(g.index.size() * b, g.index.size() * b);
  std::map<MultiDegree, std::size_t> position;
  for (std::size_t i = 0; i < g.index.size(); ++i) position.emplace(g.index[i], i);
  for (const auto& [key, c] : p.coeffs) {
    g.matrix.set_block(position.at(key.first) * b, position.at(key.second) * b, c);
  }
  return g;
}

PsdReport commutative_gram_check(const CommutativePolyKernel& p, double tol) {
  double scale = 0.0;
  for (const auto& [_, c] : p.coeffs) scale = std::max(scale, max_abs(c));
  double asym = 0.0;
  for (const auto& [key, c] : p.coeffs) {
    asym = std::max(asym, max_abs(p.coefficient(key.second, key.first) - c.adjoint()));
  }
  if (asym > tol * std::max(1.0, scale)) {
    throw Error(ErrorKind::NotHermitian, "P_{t',t} != P_{t,t'}^*: " + std::to_string(asym));
  }
  return hermitian_min_eig(commutative_gram_matrix(p).matrix, tol);
}

double max_coefficient_gap(const CommutativePolyKernel& a, const CommutativePolyKernel& b) {
  if (a.block_dim != b.block_dim) throw Error(ErrorKind::DimensionMismatch, "block sizes differ");
  double worst = 0.0;
  for (const auto& [key, c] : a.coeffs) {
    worst = std::max(worst, max_abs(c - b.coefficient(key.first, key.second)));
  }
  for (const auto& [key, c] : b.coeffs) {
    if (!a.coeffs.contains(key)) worst = std::max(worst, max_abs(c));
  }
  return worst;
}

MatrixTuple weighted_shift_tuple(std::size_t arity, std::size_t window, double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorKind::InvalidArgument, "shift weight must be positive");
  }
  const std::size_t d = word_count(arity, window);
  if (d > kMaxWitnessSize) {
    throw Error(ErrorKind::SizeCap, "word window exceeds " + std::to_string(kMaxWitnessSize));
  }
  const auto words = enumerate_words(arity, window);
  const double step = std::sqrt(weight);
  std::vector<ComplexMatrix> mats(arity, ComplexMatrix(d, d));
  for (std::size_t col = 0; col < d; ++col) {
    const Word& v = words[col];
    if (v.length() >= window) continue;
    for (std::size_t j = 1; j <= arity; ++j) {
      const Word gv = concat(Word{static_cast<Word::Letter>(j)}, v);
      mats[j - 1](word_position(gv, arity), col) = step;
    }
  }
  return MatrixTuple(std::move(mats));
}

ShiftWitnessResult shift_witness_test(const HereditaryKernel& k, std::span<const double> weights,
                                      double tol) {
  if (!hermitize_check(k, kHermitianTolerance * std::max(1.0, max_abs(k)))) {
    throw Error(ErrorKind::NotHermitian, "shift_witness_test");
  }
  ShiftWitnessResult result;
  for (double s : weights) {
    const MatrixTuple shift = weighted_shift_tuple(k.arity(), k.degree_bound(), s);
    const ComplexMatrix value = eval_kernel(k, shift, shift);
    const PsdReport report = hermitian_min_eig(value, tol);
    ShiftSample sample;
    sample.weight = s;
    sample.min_eigenvalue = report.min_eigenvalue;
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         static_cast<double>(value.rows()) * max_abs(value);
    sample.threshold = std::max(tol, floor);
    if (sample.min_eigenvalue < -sample.threshold) {
      result.witness_found = true;
      if (!result.witness_eigenvalue || sample.min_eigenvalue < *result.witness_eigenvalue) {
        result.witness_eigenvalue = sample.min_eigenvalue;
        result.witness_weight = s;
      }
    }
    result.samples.push_back(sample);
  }
  return result;
}

ShiftIdentity shift_identity_check(const HereditaryKernel& k, double weight,
                                   const std::map<Word, std::vector<Complex>>& h) {
  const std::size_t m = k.degree_bound();
  const std::size_t p = k.dim();
  for (const auto& [w, v] : h) {
    check_letters(w, k.arity());
    if (w.length() > m) throw Error(ErrorKind::DimensionMismatch, "h word beyond the window");
    if (v.size() != p) throw Error(ErrorKind::DimensionMismatch, "h vector length");
  }
  const MatrixTuple shift = weighted_shift_tuple(k.arity(), m, weight);
  const std::size_t d = shift.size();
  const ComplexMatrix value = eval_kernel(k, shift, shift);

  // x = sum_a h_a (x) a with a = s^{-|a|/2} times the orthonormal vector.
  std::vector<Complex> x(p * d);
  for (const auto& [w, v] : h) {
    const double scale = std::pow(weight, -0.5 * static_cast<double>(w.length()));
    const std::size_t pos = word_position(w, k.arity());
    for (std::size_t e = 0; e < p; ++e) x[e * d + pos] = v[e] * scale;
  }
  Complex lhs{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    Complex row{};
    for (std::size_t j = 0; j < x.size(); ++j) row += value(i, j) * x[j];
    lhs += row * std::conj(x[i]);
  }

  auto vec = [&](const Word& w) -> const std::vector<Complex>* {
    auto it = h.find(w);
    return it == h.end() ? nullptr : &it->second;
  };
  Complex rhs{};
  for (const auto& gamma : enumerate_words(k.arity(), m)) {
    const double factor = std::pow(weight, -static_cast<double>(gamma.length()));
    for (const auto& [key, coeff] : k.entries()) {
      const auto& [w, wp] = key;
      if (std::max(w.length(), wp.length()) + gamma.length() > m) continue;
      const auto* hr = vec(concat(wp, gamma));
      const auto* hl = vec(concat(w, gamma));
      if (!hr || !hl) continue;
      Complex term{};
      for (std::size_t a = 0; a < p; ++a) {
        Complex kh{};
        for (std::size_t b = 0; b < p; ++b) kh += coeff(a, b) * (*hr)[b];
        term += kh * std::conj((*hl)[a]);
      }
      rhs += term * factor;
    }
  }
  return {lhs, rhs, std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs))};
}

CounterexampleReport counterexample_demo(std::size_t samples, double radius, std::uint64_t seed) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "radius must lie in (0, 1)");
  }
  CounterexampleReport rep;
  rep.seed = seed;
  rep.samples = samples;
  rep.radius = radius;
  const HereditaryKernel k = parse_kernel("1 - z1*z1'", 1);

  rep.gram_eigenvalues = hermitian_eigenvalues(gram_matrix(k).matrix);
  rep.gram_indefinite = rep.gram_eigenvalues.size() == 2 &&
                        std::abs(rep.gram_eigenvalues[0] + 1.0) <= 1e-12 &&
                        std::abs(rep.gram_eigenvalues[1] - 1.0) <= 1e-12;

  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  rep.diagonal_bound = 1.0 - radius * radius - 1e-9;
  rep.min_diagonal_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = 1 + i % 4;
    ComplexMatrix g = random_matrix(rng, n, n);
    const double norm = spectral_norm(g);
    const double target = radius * (1.0 - unit(rng));  // in (0, radius]
    if (norm > 0.0) g *= Complex(target / norm, 0.0);
    const MatrixTuple z({g});
    const double eig = hermitian_min_eig(eval_kernel(k, z, z)).min_eigenvalue;
    rep.min_diagonal_eigenvalue = std::min(rep.min_diagonal_eigenvalue, eig);
  }
  if (samples == 0) rep.min_diagonal_eigenvalue = 1.0;
  rep.diagonal_positive = rep.min_diagonal_eigenvalue >= rep.diagonal_bound;

  const std::vector<MatrixTuple> points = {MatrixTuple({ComplexMatrix{{0.0}}}),
                                           MatrixTuple({ComplexMatrix{{radius}}})};
  rep.two_point_min_eigenvalue = hermitian_min_eig(block_eval_matrix(k, points)).min_eigenvalue;
  const double r2 = radius * radius;
  rep.two_point_expected = ((2.0 - r2) - std::sqrt(r2 * r2 + 4.0)) / 2.0;
  rep.two_point_indefinite = rep.two_point_min_eigenvalue < 0.0;
  return rep;
}

}  // namespace nckernel
