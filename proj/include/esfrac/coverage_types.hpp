#pragma once

#include <string>

#include "esfrac/arith.hpp"

namespace esfrac {

/// The arithmetic progression {modulus * t - offset : t >= t0}, the standard
/// rendering for a covered set of n values. Normalized so 0 <= offset < modulus;
/// membership: n === -offset (mod modulus) and n >= modulus * t0 - offset.
struct ResidueClass {
  Integer modulus = 1;
  Integer offset = 0;
  Integer t0 = 1;

  ResidueClass() = default;
  ResidueClass(Integer m, Integer g, Integer start = 1);

  bool contains(const Integer& n) const;
  Integer min_member() const { return modulus * t0 - offset; }
  /// residue of the class members: (-offset) mod modulus
  Integer residue() const;
  /// k-th member (k >= 0): modulus * (t0 + k) - offset
  Integer member(long k) const { return modulus * (t0 + k) - offset; }
  std::string str() const;  // "m*t-g (t >= t0)"

  bool operator==(const ResidueClass&) const = default;
};

struct NotAProgression : DomainError {
  using DomainError::DomainError;
};

}  // namespace esfrac
