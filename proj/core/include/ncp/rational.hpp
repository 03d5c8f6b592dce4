#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ncp {

// All arithmetic in the library is exact. Rat is a reduced fraction of
// arbitrary-precision integers; the denominators that actually occur are
// tiny (bounded by the lattice data of each group).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool rat_is_int(const Rat& q) { return q.get_den() == 1; }

// floor(a/b), b > 0
inline mpz_class rat_floor_div(const Rat& a, const Rat& b) {
  Rat q = a / b;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

inline std::string rat_str(const Rat& q) {
  if (rat_is_int(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::optional<Rat> rat_parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  try {
    Rat q(std::string(s), 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace ncp
