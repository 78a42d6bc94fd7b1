#include "picseq/exactla/field.hpp"

#include <array>
#include <ostream>
#include <string>

#include "picseq/error.hpp"

namespace picseq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::UnsupportedPrime: return "unsupported-prime";
    case ErrorKind::IncompatibleAlgebras: return "incompatible-algebras";
    case ErrorKind::NotInvertiblePair: return "not-invertible-pair";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::NotBilinear: return "not-bilinear";
    case ErrorKind::NotMultiplicative: return "not-multiplicative";
    case ErrorKind::WitnessesInvalid: return "witnesses-invalid";
    case ErrorKind::CoherenceFailure: return "coherence-failure";
    case ErrorKind::SearchTooLarge: return "search-too-large";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Validation: return "validation-error";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

namespace exactla {
namespace {

constexpr bool prime_check(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// inverses[p][a] for every supported prime p and residue a != 0
using InverseTable = std::array<std::array<Residue, kMaxPrime + 1>, kMaxPrime + 1>;

constexpr InverseTable build_inverses() {
  InverseTable t{};
  for (int p = 2; p <= kMaxPrime; ++p) {
    if (!prime_check(p)) continue;
    for (int a = 1; a < p; ++a) {
      for (int b = 1; b < p; ++b) {
        if ((a * b) % p == 1) {
          t[p][a] = b;
          break;
        }
      }
    }
  }
  return t;
}

constexpr InverseTable kInverses = build_inverses();

}  // namespace

bool is_supported_prime(int p) noexcept {
  return p >= 2 && p <= kMaxPrime && prime_check(p);
}

void require_supported_prime(int p) {
  if (!is_supported_prime(p)) {
    throw Error(ErrorKind::UnsupportedPrime,
                "characteristic " + std::to_string(p) + " is not a prime in [2, 97]");
  }
}

Residue inverse(Residue a, int p) {
  if (a <= 0 || a >= p) {
    throw Error(ErrorKind::NotInvertible, "zero has no inverse in F_" + std::to_string(p));
  }
  return kInverses[p][a];
}

Scalar::Scalar(std::int64_t v, int prime) : value(reduce(v, prime)), p(prime) {
  require_supported_prime(prime);
}

Scalar Scalar::inv() const {
  Scalar s;
  s.p = p;
  s.value = inverse(value, p);
  return s;
}

Scalar operator+(Scalar a, Scalar b) { return Scalar(a.value + b.value, a.p); }
Scalar operator-(Scalar a, Scalar b) { return Scalar(a.value - b.value, a.p); }
Scalar operator*(Scalar a, Scalar b) {
  return Scalar(static_cast<std::int64_t>(a.value) * b.value, a.p);
}
Scalar operator-(Scalar a) { return Scalar(-a.value, a.p); }

std::ostream& operator<<(std::ostream& os, Scalar s) { return os << s.value; }

}  // namespace exactla
}  // namespace picseq
