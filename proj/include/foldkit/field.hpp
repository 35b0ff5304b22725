#pragma once

// Exact coefficient fields. Every algorithm in the library is a template over
// a type modelling `Field`; the field object itself is a small runtime
// descriptor (the prime for F_p, nothing for Q).

#include <concepts>
#include <cstdint>
#include <functional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "foldkit/error.hpp"

namespace foldkit {

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, long long n) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.hash(a) } -> std::same_as<std::size_t>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
  { f.descriptor() } -> std::same_as<std::string>;
  { f == f } -> std::same_as<bool>;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// F_p for a prime p < 2^31; values live in [0, p), products fit in 64 bits.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      fail(ErrorKind::InvalidInput, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t prime() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) fail(ErrorKind::InvalidInput, "division by zero in " + descriptor());
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  std::size_t hash(value_type a) const noexcept { return a; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  nlohmann::json to_json(value_type a) const { return a; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string descriptor() const { return "F" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Q with arbitrary-precision numerators and denominators, always in lowest terms.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long n) const { return value_type(n); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) fail(ErrorKind::InvalidInput, "division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  std::size_t hash(const value_type& a) const { return std::hash<std::string>{}(a.str()); }
  std::string to_string(const value_type& a) const { return a.str(); }
  nlohmann::json to_json(const value_type& a) const { return a.str(); }
  std::uint64_t characteristic() const noexcept { return 0; }
  std::string descriptor() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

}  // namespace foldkit
