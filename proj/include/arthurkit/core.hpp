// Exact scalar types, cuspidal labels, multisets and segments shared by every
// other module.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arthurkit {

// Malformed or ill-typed input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (e.g. a non good-parity object).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is well formed but the requested computation is not implemented
// for it (e.g. a derivative oracle refusing an exponent).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t integer) : twice_(2 * integer) {}
  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  std::int64_t to_integer() const;
  std::int64_t floor() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt operator+(std::int64_t k) const { return from_twice(twice_ + 2 * k); }
  constexpr HalfInt operator-(std::int64_t k) const { return from_twice(twice_ - 2 * k); }
  HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr std::strong_ordering operator<=>(HalfInt a, HalfInt b) {
    return a.twice_ <=> b.twice_;
  }

  // "3/2", "-1/2", "2".
  std::string to_string() const;
  static HalfInt parse(std::string_view text);

 private:
  std::int64_t twice_ = 0;
};

// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);
  static Rational from(HalfInt h) { return Rational(h.twice(), 2); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_half_integer() const { return den_ == 1 || den_ == 2; }
  HalfInt to_half_int() const;

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class Parity { Orthogonal, Symplectic, NonSelfDual };

char parity_letter(Parity p);
Parity parity_from_letter(char c);

// Type of S_k as a representation of SL2.
constexpr Parity sl2_type(std::int64_t k) {
  return k % 2 == 1 ? Parity::Orthogonal : Parity::Symplectic;
}
// Type of a tensor product of self-dual representations.
constexpr Parity tensor_type(Parity a, Parity b) {
  if (a == Parity::NonSelfDual || b == Parity::NonSelfDual) return Parity::NonSelfDual;
  return a == b ? Parity::Orthogonal : Parity::Symplectic;
}

// Supercuspidal representation of some GL_d, known only through its label.
// Identity is the label.
struct RhoSymbol {
  std::string label;
  std::int64_t dim = 1;
  Parity parity = Parity::Orthogonal;
  std::string dual_label;
  bool unramified = false;

  static RhoSymbol self_dual(std::string label, std::int64_t dim, Parity parity,
                             bool unramified = false);
  static RhoSymbol non_self_dual(std::string label, std::string dual_label,
                                 std::int64_t dim = 1, bool unramified = false);
  // Trivial character of GL_1.
  static RhoSymbol trivial();

  bool is_self_dual() const { return parity != Parity::NonSelfDual; }
  RhoSymbol contragredient() const;

  friend bool operator==(const RhoSymbol& a, const RhoSymbol& b) { return a.label == b.label; }
  friend std::strong_ordering operator<=>(const RhoSymbol& a, const RhoSymbol& b) {
    int c = a.label.compare(b.label);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

// rho |.|^x
struct RhoTwist {
  RhoSymbol rho;
  HalfInt exponent;

  friend bool operator==(const RhoTwist&, const RhoTwist&) = default;
  friend std::strong_ordering operator<=>(const RhoTwist& a, const RhoTwist& b) {
    if (auto c = a.rho <=> b.rho; c != 0) return c;
    return a.exponent <=> b.exponent;
  }
};

template <class T>
class MultiSet {
 public:
  using Map = std::map<T, std::int64_t>;

  MultiSet() = default;
  MultiSet(std::initializer_list<T> items) {
    for (const auto& t : items) add(t);
  }

  void add(const T& t, std::int64_t n = 1) {
    if (n < 0) throw std::invalid_argument("MultiSet::add: negative count");
    if (n == 0) return;
    m_[t] += n;
  }
  // Removes up to n copies; returns the number removed.
  std::int64_t remove(const T& t, std::int64_t n = 1) {
    auto it = m_.find(t);
    if (it == m_.end()) return 0;
    std::int64_t k = std::min(n, it->second);
    it->second -= k;
    if (it->second == 0) m_.erase(it);
    return k;
  }
  std::int64_t count(const T& t) const {
    auto it = m_.find(t);
    return it == m_.end() ? 0 : it->second;
  }
  std::int64_t size() const {
    std::int64_t s = 0;
    for (const auto& [_, c] : m_) s += c;
    return s;
  }
  std::size_t distinct() const { return m_.size(); }
  bool empty() const { return m_.empty(); }

  auto begin() const { return m_.begin(); }
  auto end() const { return m_.end(); }

  std::vector<T> expanded() const {
    std::vector<T> out;
    for (const auto& [t, c] : m_)
      for (std::int64_t i = 0; i < c; ++i) out.push_back(t);
    return out;
  }

  friend bool operator==(const MultiSet&, const MultiSet&) = default;

 private:
  Map m_;
};

enum class Combine { Sum, Union, Difference, Intersection, SymmetricDifference };

template <class T>
MultiSet<T> combine(Combine op, const MultiSet<T>& x, const MultiSet<T>& y) {
  MultiSet<T> out;
  std::map<T, std::pair<std::int64_t, std::int64_t>> both;
  for (const auto& [t, c] : x) both[t].first = c;
  for (const auto& [t, c] : y) both[t].second = c;
  for (const auto& [t, cc] : both) {
    auto [a, b] = cc;
    std::int64_t n = 0;
    switch (op) {
      case Combine::Sum: n = a + b; break;
      case Combine::Union: n = std::max(a, b); break;
      case Combine::Difference: n = std::max<std::int64_t>(a - b, 0); break;
      case Combine::Intersection: n = std::min(a, b); break;
      case Combine::SymmetricDifference: n = a > b ? a - b : b - a; break;
    }
    out.add(t, n);
  }
  return out;
}

// Segment [A, B]_rho = {rho|.|^A, rho|.|^(A-1), ..., rho|.|^B}, A - B in Z_{>=0}.
struct Segment {
  RhoSymbol rho;
  HalfInt A;
  HalfInt B;

  static Segment make(RhoSymbol rho, HalfInt A, HalfInt B);
  std::int64_t length() const { return (A - B).to_integer() + 1; }
  // Exponents in decreasing order.
  std::vector<HalfInt> exponents() const;
  MultiSet<RhoTwist> elements() const;
};

}  // namespace arthurkit
