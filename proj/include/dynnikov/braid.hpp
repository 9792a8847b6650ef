#ifndef DYNNIKOV_BRAID_HPP
#define DYNNIKOV_BRAID_HPP

// Positive braid words and their action on Dynnikov coordinates.
//
// σ_i exchanges punctures i and i+1 counter-clockwise. Only positive
// generators are supported.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dynnikov/coords.hpp"
#include "dynnikov/errors.hpp"
#include "dynnikov/scalar.hpp"

namespace dynnikov {

/// A word in the positive generators σ_1..σ_{n-1}.
class BraidWord {
 public:
  explicit BraidWord(int n) : n_(n) { detail::require_puncture_count(n_); }

  BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    detail::require_puncture_count(n_);
    for (int letter : letters_) check(letter);
  }

  BraidWord(int n, std::initializer_list<int> letters) : BraidWord(n, std::vector<int>(letters)) {}

  int n() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const int> letters() const { return letters_; }
  int operator[](std::size_t k) const { return letters_[k]; }

  void push_back(int letter) {
    check(letter);
    letters_.push_back(letter);
  }

  /// Concatenation: apply *this, then `tail`.
  BraidWord then(const BraidWord& tail) const {
    if (tail.n_ != n_) throw MismatchError("braid words on different strand counts");
    BraidWord out = *this;
    out.letters_.insert(out.letters_.end(), tail.letters_.begin(), tail.letters_.end());
    return out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
    for (std::size_t k = 0; k < w.letters_.size(); ++k) os << (k ? " " : "") << w.letters_[k];
    return os;
  }

 private:
  void check(int letter) const {
    if (letter <= 0) {
      throw InvalidGenerator("braid letter " + std::to_string(letter) +
                             " is not positive; only positive generators sigma_1..sigma_" +
                             std::to_string(n_ - 1) + " are supported");
    }
    if (letter > n_ - 1) {
      throw InvalidGenerator("braid letter " + std::to_string(letter) + " is out of range 1.." +
                             std::to_string(n_ - 1));
    }
  }

  int n_;
  std::vector<int> letters_;
};

namespace detail {

/// Applies σ_i to (a; b) in place. Touches only a_{i-1}, a_i, b_{i-1}, b_i.
template <class Scalar>
void apply_generator_in_place(std::span<Scalar> a, std::span<Scalar> b, int i) {
  const std::size_t l = static_cast<std::size_t>(i - 1);
  const std::size_t r = static_cast<std::size_t>(i);
  const Scalar& a_l = a[l];
  const Scalar& a_r = a[r];
  const Scalar& b_l = b[l];
  const Scalar& b_r = b[r];

  const Scalar b_l_pos = positive_part(b_l);
  const Scalar b_r_pos = positive_part(b_r);
  const Scalar twist = Scalar(a_r + b_l);
  const Scalar m = max_of(Scalar(Scalar(a_l + b_l_pos) + b_r_pos), twist);

  Scalar new_a_l = max_of(Scalar(a_l + b_l_pos), twist);
  Scalar new_a_r = Scalar(b_r - max_of(Scalar(-a_l), Scalar(b_r_pos - a_r)));
  Scalar new_b_l = Scalar(Scalar(twist + b_r) - m);
  Scalar new_b_r = Scalar(m - a_r);

  a[l] = std::move(new_a_l);
  a[r] = std::move(new_a_r);
  b[l] = std::move(new_b_l);
  b[r] = std::move(new_b_r);
}

}  // namespace detail

/// Coordinates of σ_i(L). Does not re-validate `c`.
template <class Scalar>
Coords<Scalar> apply_generator(const Coords<Scalar>& c, int i) {
  if (i < 1 || i > c.n() - 1) {
    throw InvalidGenerator("generator index " + std::to_string(i) + " is out of range 1.." +
                           std::to_string(c.n() - 1));
  }
  auto [a, b] = Coords<Scalar>(c).release();
  detail::apply_generator_in_place<Scalar>(a, b, i);
  return Coords<Scalar>(c.n(), std::move(a), std::move(b));
}

/// Applies the letters of `w` left to right.
template <class Scalar>
Coords<Scalar> apply_word(const Coords<Scalar>& c, const BraidWord& w) {
  if (w.n() != c.n()) {
    throw MismatchError("braid word on " + std::to_string(w.n()) + " strands applied to coordinates on " +
                        std::to_string(c.n()) + " punctures");
  }
  auto [a, b] = Coords<Scalar>(c).release();
  for (int letter : w.letters()) detail::apply_generator_in_place<Scalar>(a, b, letter);
  return Coords<Scalar>(c.n(), std::move(a), std::move(b));
}

}  // namespace dynnikov

#endif  // DYNNIKOV_BRAID_HPP
