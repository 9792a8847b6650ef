#ifndef DYNNIKOV_SCALAR_HPP
#define DYNNIKOV_SCALAR_HPP

// Scalar support for the coordinate algorithms.
//
// Every algorithm in this library is templated on a signed integer type
// `Scalar`. The requirements are small: construction from `long`, the
// operators + - (binary and unary), comparison, and truncating division by a
// small integer. The default is the arbitrary-precision `BigInt`; `int64_t`
// works for small inputs, and `Counted<BigInt>` tallies how many arithmetic
// operations an algorithm performs.
//
// Templated code must bind intermediate results to `Scalar` explicitly and
// never to `auto`: gmpxx operators return lazy expression objects.

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace dynnikov {

using BigInt = mpz_class;

template <class Scalar>
Scalar max_of(const Scalar& x, const Scalar& y) {
  return x < y ? y : x;
}

template <class Scalar>
Scalar min_of(const Scalar& x, const Scalar& y) {
  return y < x ? y : x;
}

/// x⁺ = max(x, 0).
template <class Scalar>
Scalar positive_part(const Scalar& x) {
  return x < Scalar(0) ? Scalar(0) : x;
}

template <class Scalar>
Scalar abs_of(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <class Scalar>
Scalar half(const Scalar& x) {
  return Scalar(x / 2);
}

template <class Scalar>
bool is_even(const Scalar& x) {
  const Scalar q = half(x);
  return Scalar(q + q) == x;
}

/// Per-thread tally of arithmetic operations performed on `Counted` values.
class OpCounter {
 public:
  static void reset() { slot() = 0; }
  static std::uint64_t get() { return slot(); }
  static void tick() { ++slot(); }

 private:
  static std::uint64_t& slot() {
    thread_local std::uint64_t count = 0;
    return count;
  }
};

/// Integer wrapper counting additions, subtractions, comparisons and
/// divisions. max/min cost one comparison each.
template <class T>
class Counted {
 public:
  Counted() : value_(0) {}
  Counted(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Counted(int v) : value_(static_cast<long>(v)) {}  // NOLINT
  explicit Counted(const T& v) : value_(v) {}

  const T& value() const { return value_; }
  explicit operator T() const { return value_; }

  friend Counted operator+(const Counted& x, const Counted& y) {
    OpCounter::tick();
    return Counted(T(x.value_ + y.value_));
  }
  friend Counted operator-(const Counted& x, const Counted& y) {
    OpCounter::tick();
    return Counted(T(x.value_ - y.value_));
  }
  friend Counted operator-(const Counted& x) {
    OpCounter::tick();
    return Counted(T(-x.value_));
  }
  friend Counted operator/(const Counted& x, long d) {
    OpCounter::tick();
    return Counted(T(x.value_ / d));
  }
  Counted& operator+=(const Counted& y) { return *this = *this + y; }
  Counted& operator-=(const Counted& y) { return *this = *this - y; }

  friend bool operator==(const Counted& x, const Counted& y) {
    OpCounter::tick();
    return x.value_ == y.value_;
  }
  friend bool operator<(const Counted& x, const Counted& y) {
    OpCounter::tick();
    return x.value_ < y.value_;
  }
  friend bool operator>(const Counted& x, const Counted& y) { return y < x; }
  friend bool operator<=(const Counted& x, const Counted& y) { return !(y < x); }
  friend bool operator>=(const Counted& x, const Counted& y) { return !(x < y); }

  friend std::ostream& operator<<(std::ostream& os, const Counted& x) {
    return os << x.value_;
  }

 private:
  T value_;
};

// Conversions between scalar types. Narrowing conversions throw
// std::overflow_error when the value does not fit.
template <class To, class From>
struct ScalarCast {
  static To apply(const From& x) { return To(x); }
};

template <>
struct ScalarCast<std::int64_t, BigInt> {
  static std::int64_t apply(const BigInt& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer exceeds 64-bit range");
    return x.get_si();
  }
};

template <class To, class T>
struct ScalarCast<To, Counted<T>> {
  static To apply(const Counted<T>& x) { return ScalarCast<To, T>::apply(x.value()); }
};

template <class T>
struct ScalarCast<Counted<T>, Counted<T>> {
  static Counted<T> apply(const Counted<T>& x) { return x; }
};

template <class T, class From>
  requires(!std::is_same_v<From, Counted<T>>)
struct ScalarCast<Counted<T>, From> {
  static Counted<T> apply(const From& x) { return Counted<T>(ScalarCast<T, From>::apply(x)); }
};

template <class To, class From>
To scalar_cast(const From& x) {
  return ScalarCast<To, From>::apply(x);
}

template <class Scalar>
std::string to_decimal(const Scalar& x) {
  return scalar_cast<BigInt>(x).get_str(10);
}

}  // namespace dynnikov

#endif  // DYNNIKOV_SCALAR_HPP
