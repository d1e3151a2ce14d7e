#include "nckernel/random.hpp"

#include "nckernel/word.hpp"

namespace nckernel {

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (auto& v : m.data()) v = random_complex(rng);
  return m;
}

MatrixTuple random_strictly_upper_tuple(Rng& rng, std::size_t arity, std::size_t size,
                                        double density) {
  std::bernoulli_distribution keep(density);
  std::vector<ComplexMatrix> mats;
  mats.reserve(arity);
  for (std::size_t k = 0; k < arity; ++k) {
    ComplexMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (keep(rng)) m(i, j) = random_complex(rng);
      }
    }
    mats.push_back(std::move(m));
  }
  return MatrixTuple(std::move(mats));
}

NCPolynomial random_polynomial(Rng& rng, std::size_t arity, std::size_t degree, std::size_t rows,
                               std::size_t inner, double density) {
  std::bernoulli_distribution keep(density);
  NCPolynomial h(arity, rows, inner);
  for (const auto& w : enumerate_words(arity, degree)) {
    if (w.empty() || keep(rng)) h.add(w, random_matrix(rng, rows, inner));
  }
  return h;
}

}  // namespace nckernel
