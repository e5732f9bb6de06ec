#include "blf/mcg.hpp"

#include <sstream>
#include <utility>

#include "blf/error.hpp"

namespace blf::mcg {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::invalid_argument, "integer overflow in homology arithmetic");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::invalid_argument, "integer overflow in homology arithmetic");
  }
  return r;
}

void require_same_genus(int g, int h) {
  if (g != h) {
    throw Error(ErrorCode::genus_mismatch,
                "genus " + std::to_string(g) + " vs genus " + std::to_string(h));
  }
}

}  // namespace

HomologyClass::HomologyClass(int genus, std::vector<std::int64_t> coords)
    : genus_(genus), coords_(std::move(coords)) {
  if (genus < 0 || coords_.size() != static_cast<std::size_t>(2 * genus)) {
    throw Error(ErrorCode::invalid_argument,
                "homology class of genus " + std::to_string(genus) + " needs " +
                    std::to_string(2 * genus) + " coordinates, got " + std::to_string(coords_.size()));
  }
}

bool HomologyClass::is_zero() const {
  for (auto x : coords_) {
    if (x != 0) return false;
  }
  return true;
}

HomologyClass HomologyClass::operator-() const {
  auto c = coords_;
  for (auto& x : c) x = checked_mul(x, -1);
  return HomologyClass(genus_, std::move(c));
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw Error(ErrorCode::invalid_argument, "matrix rows must be square");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorCode::genus_mismatch, "matrix size mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

std::vector<std::int64_t> IntMatrix::operator*(const std::vector<std::int64_t>& v) const {
  if (v.size() != n_) throw Error(ErrorCode::genus_mismatch, "vector size mismatch");
  std::vector<std::int64_t> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t = checked_add(t, (*this)(i, i));
  return t;
}

std::int64_t IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<__int128> a(data_.begin(), data_.end());
  auto at = [&](std::size_t r, std::size_t c) -> __int128& { return a[r * n_ + c]; };
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t c = 0; c < n_; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return static_cast<std::int64_t>(sign * at(n_ - 1, n_ - 1));
}

TwistWord::TwistWord(int genus, std::vector<TwistLetter> letters)
    : genus_(genus), letters_(std::move(letters)) {
  for (const auto& l : letters_) require_same_genus(genus_, l.curve.genus());
}

TwistWord TwistWord::inverse() const {
  std::vector<TwistLetter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) {
    l.handedness = l.handedness == Handedness::right ? Handedness::left : Handedness::right;
  }
  return TwistWord(genus_, std::move(inv));
}

std::int64_t intersection_pairing(const HomologyClass& x, const HomologyClass& y) {
  require_same_genus(x.genus(), y.genus());
  std::int64_t sum = 0;
  const auto& u = x.coords();
  const auto& v = y.coords();
  for (int i = 0; i < x.genus(); ++i) {
    const std::size_t a = 2 * i;
    const std::size_t b = a + 1;
    sum = checked_add(sum, checked_add(checked_mul(u[a], v[b]), -checked_mul(u[b], v[a])));
  }
  return sum;
}

IntMatrix symplectic_form(int genus) {
  IntMatrix j(2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

IntMatrix twist_matrix(const HomologyClass& c, Handedness handedness) {
  const int g = c.genus();
  const std::size_t n = 2 * g;
  const std::int64_t sign = handedness == Handedness::right ? 1 : -1;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> e(n, 0);
    e[k] = 1;
    const std::int64_t p = checked_mul(sign, intersection_pairing(HomologyClass(g, e), c));
    for (std::size_t r = 0; r < n; ++r) {
      m(r, k) = checked_add(m(r, k), checked_mul(p, c.coords()[r]));
    }
  }
  return m;
}

IntMatrix compose_word(const TwistWord& word) {
  IntMatrix m = IntMatrix::identity(2 * word.genus());
  for (const auto& letter : word.letters()) {
    m = m * twist_matrix(letter.curve, letter.handedness);
  }
  return m;
}

bool round_handle_check(const TwistWord& word, const HomologyClass& z) {
  require_same_genus(word.genus(), z.genus());
  const auto image = compose_word(word) * z.coords();
  return image == z.coords() || image == (-z).coords();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace blf::mcg
