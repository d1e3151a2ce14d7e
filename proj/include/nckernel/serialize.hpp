#pragma once

// JSON forms of the library's values. Complex numbers are [re, im]; matrices
// are row-major nested arrays; words are arrays of 1-based letters.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nckernel/certificates.hpp"
#include "nckernel/evaluation.hpp"
#include "nckernel/kernel.hpp"
#include "nckernel/linalg.hpp"
#include "nckernel/witnesses.hpp"

namespace nckernel {

using Json = nlohmann::ordered_json;

Json to_json(Complex c);
Json to_json(const ComplexMatrix& m);
Json to_json(const Word& w);
Json to_json(const MultiDegree& t);
Json to_json(const HereditaryKernel& k);
Json to_json(const NCPolynomial& h);
Json to_json(const MatrixTuple& z);
Json to_json(const NilpotencyReport& r);
Json to_json(const PsdReport& r);
Json to_json(const PositivityCertificate& c);
Json to_json(const CommutativePolyKernel& p);
Json to_json(const ShiftWitnessResult& r);
Json to_json(const CounterexampleReport& r);

// Parsers throw SyntaxError for malformed documents and the usual domain
// errors for inconsistent contents.
Complex complex_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);
Word word_from_json(const Json& j);
HereditaryKernel kernel_from_json(const Json& j);
NCPolynomial polynomial_from_json(const Json& j);
MatrixTuple tuple_from_json(const Json& j);

// Reads and parses a JSON file; Io on failure to open.
Json read_json_file(const std::filesystem::path& path);

}  // namespace nckernel
