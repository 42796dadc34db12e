#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace stratkit {

using Q = mpq_class;
using Z = mpz_class;

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major
using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;

// Thrown for inputs that are well-formed but mathematically invalid.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for mismatched sizes, parabolics, etc.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Q make_q(long num, long den = 1) {
  Q q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

std::string to_string(const Q& q);
Q parse_q(const std::string& text);

Z floor_q(const Q& q);
Z ceil_q(const Q& q);

}  // namespace stratkit
