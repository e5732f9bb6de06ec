#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blf::mcg {

/// Class in H_1 of a closed genus-g surface, in the basis a1,b1,...,ag,bg.
class HomologyClass {
 public:
  HomologyClass() = default;
  HomologyClass(int genus, std::vector<std::int64_t> coords);

  int genus() const { return genus_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;
  HomologyClass operator-() const;

  bool operator==(const HomologyClass&) const = default;

 private:
  int genus_ = 0;
  std::vector<std::int64_t> coords_;
};

enum class Handedness { right, left };

/// Square integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n = 0);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<std::int64_t> operator*(const std::vector<std::int64_t>& v) const;
  IntMatrix transpose() const;
  std::int64_t trace() const;
  std::int64_t determinant() const;  // Bareiss, exact

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

struct TwistLetter {
  HomologyClass curve;
  Handedness handedness = Handedness::right;
};

/// Product of Dehn twists; letters compose like functions, so the last letter
/// acts first.
class TwistWord {
 public:
  explicit TwistWord(int genus, std::vector<TwistLetter> letters = {});

  int genus() const { return genus_; }
  const std::vector<TwistLetter>& letters() const { return letters_; }
  /// Word followed by its inverse: reversed order, flipped handedness.
  TwistWord inverse() const;

 private:
  int genus_;
  std::vector<TwistLetter> letters_;
};

/// Standard skew form with <a_i, b_i> = 1.
std::int64_t intersection_pairing(const HomologyClass& x, const HomologyClass& y);

/// Matrix J of the skew form, so that <x, y> = x^T J y.
IntMatrix symplectic_form(int genus);

/// Transvection x -> x + <x,c> c (right) or x - <x,c> c (left).
IntMatrix twist_matrix(const HomologyClass& c, Handedness handedness);

IntMatrix compose_word(const TwistWord& word);

/// True iff the monodromy of `word` maps z to +z or -z. On the torus this
/// decides whether the isotopy class of an essential simple closed curve is
/// preserved, since such classes are determined by their primitive homology
/// class up to sign. For higher genus it is a necessary condition only.
bool round_handle_check(const TwistWord& word, const HomologyClass& z);

std::string to_string(const IntMatrix& m);

}  // namespace blf::mcg
