#pragma once

#include <stdexcept>
#include <string>

namespace groupcx {

// Input that fails a structural requirement (bad Cayley table, bad permutation
// degree, out-of-range vertex index, ...). The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotClosed,
    DegreeMismatch,
    IndexOutOfRange,
    BadSpec,
    PredicateNotHereditary,
    ArityUnsupported,
    LabelMismatch,
  };

  ValidationError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A configured resource cap was hit. The CLI maps these to exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  enum class Kind { Order, Lattice, Primes };

  CapExceeded(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

  static CapExceeded order(long long requested, long long cap) {
    return CapExceeded(Kind::Order, "OrderCapExceeded: group order " +
                                        std::to_string(requested) +
                                        " exceeds cap " + std::to_string(cap));
  }
  static CapExceeded lattice(long long order, long long cap) {
    return CapExceeded(Kind::Lattice,
                       "LatticeCapExceeded: subgroup lattice needs group order <= " +
                           std::to_string(cap) + ", got " + std::to_string(order));
  }
  static CapExceeded primes(int count, int cap) {
    return CapExceeded(Kind::Primes, "TooManyPrimes: " + std::to_string(count) +
                                         " primes exceed cap " +
                                         std::to_string(cap));
  }

 private:
  Kind kind_;
};

// Runtime caps, adjustable from the CLI.
struct Caps {
  int order_cap = 10000;   // largest constructible group order
  int lattice_cap = 512;   // largest order for full subgroup lattice work
  int primes_cap = 20;     // largest prime-vertex count for GK set cover
};

}  // namespace groupcx
