#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "segrelab/errors.hpp"
#include "segrelab/primes.hpp"

namespace segrelab {

// Coefficient fields are small value types passed around by the ring.  A
// field object knows how to do arithmetic on its element type; elements
// themselves are plain values.  Two fields interoperate only when equal.

// The rationals.  Elements are GMP rationals, always canonicalized (lowest
// terms, positive denominator).
class rational_field {
 public:
  using elem = mpq_class;

  static constexpr bool is_finite = false;

  std::uint64_t characteristic() const { return 0; }

  elem zero() const { return elem(0); }
  elem one() const { return elem(1); }

  elem from_integer(long n) const { return elem(n); }

  elem from_mpz(const mpz_class& n) const { return elem(n); }

  elem from_decimal(const std::string& digits) const {
    return elem(mpz_class(digits));
  }

  // num and den are decimal strings; den empty means integer.
  elem from_fraction(const std::string& num, const std::string& den) const {
    mpq_class q(den.empty() ? num : num + "/" + den);
    if (den == "0" || (!den.empty() && mpz_class(den) == 0))
      throw precondition_error("zero denominator");
    q.canonicalize();
    return q;
  }

  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem neg(const elem& a) const { return -a; }
  elem inv(const elem& a) const {
    if (a == 0) throw precondition_error("division by zero");
    return 1 / a;
  }
  elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const elem& a) const { return a == 0; }
  bool is_one(const elem& a) const { return a == 1; }
  bool equal(const elem& a, const elem& b) const { return a == b; }

  std::string to_string(const elem& a) const { return a.get_str(); }

  bool operator==(const rational_field&) const { return true; }
};

// A prime field F_p with runtime modulus.  Elements are reduced residues in
// [0, p).  The modulus is checked prime at construction.
class prime_field {
 public:
  using elem = std::uint64_t;

  static constexpr bool is_finite = true;

  explicit prime_field(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p))
      throw precondition_error("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31))
      throw precondition_error("modulus too large (must be < 2^31)");
  }

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t modulus() const { return p_; }

  elem zero() const { return 0; }
  elem one() const { return 1 % p_; }

  elem from_integer(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<elem>(r);
  }

  elem from_mpz(const mpz_class& n) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p_));
    return static_cast<elem>(r.get_ui());
  }

  elem from_decimal(const std::string& digits) const {
    return from_mpz(mpz_class(digits));
  }

  elem from_fraction(const std::string& num, const std::string& den) const {
    elem a = from_mpz(mpz_class(num));
    if (den.empty()) return a;
    elem b = from_mpz(mpz_class(den));
    return div(a, b);
  }

  elem add(elem a, elem b) const {
    elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
  elem mul(elem a, elem b) const { return (a * b) % p_; }
  elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
  elem inv(elem a) const {
    if (a == 0) throw precondition_error("division by zero in F_" + std::to_string(p_));
    return invmod_u64(a, p_);
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  elem pow(elem a, std::uint64_t e) const { return powmod_u64(a, e, p_); }

  bool is_zero(elem a) const { return a == 0; }
  bool is_one(elem a) const { return a == 1 % p_; }
  bool equal(elem a, elem b) const { return a == b; }

  std::string to_string(elem a) const { return std::to_string(a); }

  bool operator==(const prime_field& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace segrelab
