#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mirhecke/laurent.hpp"
#include "mirhecke/rational_function.hpp"

namespace mirhecke {

template <class T>
using Matrix = std::vector<std::vector<T>>;

class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError() : std::runtime_error("singular system") {}
};

/// Solves M x = c exactly over the fraction field. Forward elimination is
/// fraction-free (Bareiss) in Z[v, v^-1]; back substitution runs in Q(v).
std::vector<RationalFunction> solve_linear(const Matrix<Laurent>& m, const std::vector<Laurent>& c);

/// Rank over Q using fraction-free elimination after clearing row denominators.
std::size_t rank(const Matrix<BigRational>& m);

/// Determinant over Q (fraction-free elimination on the scaled integer matrix).
BigRational determinant(const Matrix<BigRational>& m);

}  // namespace mirhecke
