#ifndef FOLQ_GF_HPP
#define FOLQ_GF_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "folq/error.hpp"

namespace folq {

struct FieldSpec {
  long long p = 2;  // prime characteristic
  int k = 1;        // extension degree, field is F_{p^k}
  auto operator<=>(const FieldSpec&) const = default;
};

// Arithmetic context for F_{p^k}.  Elements are encoded as integers in
// [0, p^k): the element sum_i d_i g^i has encoding sum_i d_i p^i, where g is
// the class of x modulo the canonical irreducible polynomial (the smallest
// monic irreducible of degree k under the same integer encoding of its lower
// coefficients).  The encoding doubles as the canonical text form of a
// coefficient.
class Field {
public:
  using Elem = long long;

  // Cached per-spec context; references stay valid for the program lifetime.
  static const Field& get(FieldSpec spec);

  FieldSpec spec() const { return spec_; }
  long long p() const { return spec_.p; }
  int k() const { return spec_.k; }
  long long q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long n) const;  // reduce mod p into the prime subfield

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  // Frobenius a -> a^p and its inverse a -> a^{p^{k-1}}.
  Elem frobenius(Elem a) const { return pow(a, spec_.p); }
  Elem pth_root(Elem a) const;

  // Canonical r-th root: smallest encoding c with c^r == a, if any.
  std::optional<Elem> nth_root(Elem a, long long r) const;

  bool in_prime_field(Elem a) const { return a < spec_.p; }

  // Lower coefficients of the modulus polynomial x^k + m_{k-1}x^{k-1}+...+m_0.
  const std::vector<long long>& modulus() const { return modulus_; }

private:
  explicit Field(FieldSpec spec);

  std::vector<long long> decode(Elem a) const;
  Elem encode(const std::vector<long long>& digits) const;

  FieldSpec spec_;
  long long q_ = 0;
  std::vector<long long> modulus_;  // size k, absent for k == 1
};

bool is_prime(long long n);

}  // namespace folq

#endif
