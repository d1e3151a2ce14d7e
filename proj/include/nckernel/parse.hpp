#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "nckernel/kernel.hpp"

namespace nckernel {

// Parses a scalar hereditary expression such as "1 - z1*z1'" or
// "(0.5+2i)*z1*z2*z2'*z1'". Within a term every unprimed factor precedes
// every primed one; the primed factors read left to right spell w'^T.
// A term without factors is the empty monomial. Only dim == 1 is accepted;
// matrix coefficients come in through JSON.
//
// Errors: SyntaxError, NonHereditary, UnknownIndex.
HereditaryKernel parse_kernel(std::string_view text, std::size_t arity, std::size_t dim = 1);

// Inverse of parse_kernel for scalar kernels: one term per stored key in
// canonical order, using shortest round-trip number formatting.
std::string to_expression(const HereditaryKernel& k);

}  // namespace nckernel
