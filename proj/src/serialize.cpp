#include "nckernel/serialize.hpp"

#include <cmath>
#include <fstream>

#include "nckernel/error.hpp"

namespace nckernel {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::SyntaxError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(ErrorKind::SyntaxError, std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double finite_number(const Json& v) {
  if (!v.is_number()) throw Error(ErrorKind::SyntaxError, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(ErrorKind::NonFinite, "non-finite number");
  return d;
}

Json degree_pair_entry(const DegreePair& key, const ComplexMatrix& c) {
  Json e;
  e["t"] = to_json(key.first);
  e["tp"] = to_json(key.second);
  e["coeff"] = to_json(c);
  return e;
}

}  // namespace

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Word& w) {
  Json a = Json::array();
  for (auto l : w.letters()) a.push_back(l);
  return a;
}

Json to_json(const MultiDegree& t) { return Json(t.counts); }

Json to_json(const HereditaryKernel& k) {
  Json j;
  j["N"] = k.arity();
  j["p"] = k.dim();
  j["m"] = k.degree_bound();
  Json entries = Json::array();
  for (const auto& [key, c] : k.entries()) {
    Json e;
    e["w"] = to_json(key.first);
    e["wp"] = to_json(key.second);
    e["coeff"] = to_json(c);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const NCPolynomial& h) {
  Json j;
  j["N"] = h.arity();
  j["p"] = h.rows();
  j["q"] = h.inner();
  j["m"] = h.degree();
  Json entries = Json::array();
  for (const auto& [w, c] : h.entries()) {
    Json e;
    e["w"] = to_json(w);
    e["coeff"] = to_json(c);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const MatrixTuple& z) {
  Json j;
  j["N"] = z.arity();
  j["n"] = z.size();
  Json mats = Json::array();
  for (const auto& m : z.mats()) mats.push_back(to_json(m));
  j["mats"] = std::move(mats);
  return j;
}

Json to_json(const NilpotencyReport& r) {
  Json j;
  j["is_nilpotent"] = r.is_nilpotent;
  j["rank"] = r.rank ? Json(*r.rank) : Json(nullptr);
  return j;
}

Json to_json(const PsdReport& r) {
  Json j;
  j["min_eigenvalue"] = r.min_eigenvalue;
  j["is_psd"] = r.is_psd;
  j["tolerance"] = r.tolerance;
  j["asymmetry"] = r.asymmetry;
  return j;
}

Json to_json(const PositivityCertificate& c) {
  Json j;
  j["verdict"] = c.verdict == Verdict::PositiveKernel ? "PositiveKernel" : "NotPositive";
  j["min_gram_eigenvalue"] = c.min_gram_eigenvalue;
  j["gram_scale"] = c.gram_scale;
  j["tolerance"] = c.tolerance;
  Json index = Json::array();
  for (const auto& w : c.word_index) index.push_back(to_json(w));
  j["word_index"] = std::move(index);
  j["factor"] = c.factor ? to_json(*c.factor) : Json(nullptr);
  j["residual"] = c.residual ? Json(*c.residual) : Json(nullptr);
  j["inner_dimension"] = c.inner_dimension ? Json(*c.inner_dimension) : Json(nullptr);
  return j;
}

Json to_json(const CommutativePolyKernel& p) {
  Json j;
  j["N"] = p.arity;
  j["m"] = p.degree;
  j["block_dim"] = p.block_dim;
  Json entries = Json::array();
  for (const auto& [key, c] : p.coeffs) entries.push_back(degree_pair_entry(key, c));
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const ShiftWitnessResult& r) {
  Json j;
  j["verdict"] = r.witness_found ? "WitnessFound" : "NoWitnessInGrid";
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"s", s.weight}, {"min_eigenvalue", s.min_eigenvalue}, {"threshold", s.threshold}});
  }
  j["samples"] = std::move(samples);
  j["witness_s"] = r.witness_weight ? Json(*r.witness_weight) : Json(nullptr);
  j["witness_eigenvalue"] = r.witness_eigenvalue ? Json(*r.witness_eigenvalue) : Json(nullptr);
  return j;
}

Json to_json(const CounterexampleReport& r) {
  Json j;
  j["construction"] = "counterexample";
  j["kernel"] = "1 - z1*z1'";
  j["parameters"] = {{"samples", r.samples}, {"radius", r.radius}, {"seed", r.seed}};
  j["gram_indefinite"] = {{"eigenvalues", r.gram_eigenvalues}, {"pass", r.gram_indefinite}};
  j["diagonal_positive"] = {{"min_eigenvalue", r.min_diagonal_eigenvalue},
                            {"bound", r.diagonal_bound},
                            {"pass", r.diagonal_positive}};
  j["two_point_indefinite"] = {{"points", Json::array({0.0, r.radius})},
                               {"min_eigenvalue", r.two_point_min_eigenvalue},
                               {"closed_form", r.two_point_expected},
                               {"pass", r.two_point_indefinite}};
  j["pass"] = r.all_pass();
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {finite_number(j), 0.0};
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::SyntaxError, "complex must be [re, im]");
  return {finite_number(j[0]), finite_number(j[1])};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::SyntaxError, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw Error(ErrorKind::SyntaxError, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::SyntaxError, "word must be an array of integers");
  std::vector<Word::Letter> letters;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 65535) {
      throw Error(ErrorKind::UnknownIndex, "word letter " + v.dump());
    }
    letters.push_back(static_cast<Word::Letter>(v.get<long long>()));
  }
  return Word(std::move(letters));
}

HereditaryKernel kernel_from_json(const Json& j) {
  HereditaryKernel k(size_field(j, "N"), size_field(j, "p"), size_field(j, "m"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw Error(ErrorKind::SyntaxError, "'entries' must be an array");
  for (const auto& e : entries) {
    k.add(word_from_json(field(e, "w")), word_from_json(field(e, "wp")),
          matrix_from_json(field(e, "coeff")));
  }
  return k;
}

NCPolynomial polynomial_from_json(const Json& j) {
  NCPolynomial h(size_field(j, "N"), size_field(j, "p"), size_field(j, "q"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw Error(ErrorKind::SyntaxError, "'entries' must be an array");
  for (const auto& e : entries) {
    ComplexMatrix c = matrix_from_json(field(e, "coeff"));
    // Zero-column coefficients serialize as rows of empty arrays or as [].
    if (h.inner() == 0 && c.rows() == 0) c = ComplexMatrix(h.rows(), 0);
    h.add(word_from_json(field(e, "w")), c);
  }
  return h;
}

MatrixTuple tuple_from_json(const Json& j) {
  const std::size_t arity = size_field(j, "N");
  const std::size_t n = size_field(j, "n");
  const Json& mats = field(j, "mats");
  if (!mats.is_array() || mats.size() != arity) {
    throw Error(ErrorKind::ArityMismatch, "'mats' must hold N matrices");
  }
  std::vector<ComplexMatrix> out;
  for (const auto& m : mats) {
    ComplexMatrix mat = matrix_from_json(m);
    if (mat.rows() != n || mat.cols() != n) {
      throw Error(ErrorKind::DimensionMismatch, "tuple matrix is not n x n");
    }
    out.push_back(std::move(mat));
  }
  return MatrixTuple(std::move(out));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, path.string() + ": " + e.what());
  }
}

}  // namespace nckernel
