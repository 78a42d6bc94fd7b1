#pragma once

#include <cstdint>
#include <iosfwd>

namespace picseq::exactla {

/// Residue of an element of F_p, always kept in [0, p).
using Residue = std::int32_t;

inline constexpr int kMaxPrime = 97;

bool is_supported_prime(int p) noexcept;

/// Throws Error{UnsupportedPrime} unless 2 <= p <= 97 and p is prime.
void require_supported_prime(int p);

inline Residue reduce(std::int64_t x, int p) noexcept {
  auto r = static_cast<Residue>(x % p);
  return r < 0 ? r + p : r;
}

/// Multiplicative inverse of a nonzero residue (table lookup).
Residue inverse(Residue a, int p);

inline Residue negate(Residue a, int p) noexcept { return a == 0 ? 0 : p - a; }

/// A single element of F_p carrying its characteristic.
struct Scalar {
  Residue value = 0;
  int p = 2;

  Scalar() = default;
  Scalar(std::int64_t v, int prime);

  Scalar inv() const;

  friend Scalar operator+(Scalar a, Scalar b);
  friend Scalar operator-(Scalar a, Scalar b);
  friend Scalar operator*(Scalar a, Scalar b);
  friend Scalar operator-(Scalar a);
  friend bool operator==(Scalar a, Scalar b) = default;
};

std::ostream& operator<<(std::ostream& os, Scalar s);

}  // namespace picseq::exactla
