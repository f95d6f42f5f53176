#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gvm {

// Exact rational scalar used everywhere: weights, matrix entries, module
// coefficients, linear solving. No floating point in the library.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("rational is not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
  return r.get_num().get_si();
}

// Lowest terms, "-5/2" style; integers without the "/1".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace gvm
