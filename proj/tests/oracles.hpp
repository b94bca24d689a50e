#pragma once

// Independent reference values computed without the Groebner engine.

#include <cstdint>

namespace frob::oracle {

// A1 = k[x,y,z]/(xy - z^2) is the semigroup ring k[s^2, st, t^2], spanned by
// s^i t^j with i + j even. m^[q] is generated by s^2q, t^2q, s^q t^q, so its
// colength counts even lattice points outside those three orthants.
inline std::int64_t a1_hilbert_kunz(std::int64_t q) {
  std::int64_t n = 0;
  for (std::int64_t i = 0; i < 2 * q; ++i)
    for (std::int64_t j = 0; j < 2 * q; ++j)
      if ((i + j) % 2 == 0 && !(i >= q && j >= q)) ++n;
  return n;
}

// ((x^q, y^q) : z^q) = ((s^2q, t^2q) : s^q t^q) contains s^i t^j exactly when
// i >= q or j >= q.
inline std::int64_t a1_splitting_number(std::int64_t q) {
  std::int64_t n = 0;
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t j = 0; j < q; ++j)
      if ((i + j) % 2 == 0) ++n;
  return n;
}

// In F_p[x] with a = (x): (x^tq : x^(n + (t-1)q)) = (x^(q-n)).
inline std::int64_t principal_pair_length(std::int64_t q, std::int64_t num, std::int64_t den) {
  std::int64_t n = (num * (q - 1) + den - 1) / den;
  return q > n ? q - n : 0;
}

}  // namespace frob::oracle
