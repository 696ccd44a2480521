#include "arthurkit/core.hpp"

#include <charconv>
#include <numeric>

namespace arthurkit {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw InputError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::int64_t HalfInt::to_integer() const {
  if (!is_integer()) throw PreconditionError("half-integer " + to_string() + " is not an integer");
  return twice_ / 2;
}

std::int64_t HalfInt::floor() const { return floor_div(twice_, 2); }

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
  Rational r = Rational::parse(text);
  if (!r.is_half_integer()) throw InputError("'" + std::string(text) + "' is not in (1/2)Z");
  return r.to_half_int();
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

HalfInt Rational::to_half_int() const {
  if (den_ == 1) return HalfInt(num_);
  if (den_ == 2) return HalfInt::from_twice(num_);
  throw PreconditionError("rational " + to_string() + " is not in (1/2)Z");
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const { return *this + (-o); }
Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "number"));
  std::int64_t n = parse_int(text.substr(0, slash), "numerator");
  std::int64_t d = parse_int(text.substr(slash + 1), "denominator");
  if (d <= 0) throw InputError("denominator must be positive in '" + std::string(text) + "'");
  return Rational(n, d);
}

char parity_letter(Parity p) {
  switch (p) {
    case Parity::Orthogonal: return 'O';
    case Parity::Symplectic: return 'S';
    case Parity::NonSelfDual: return 'N';
  }
  return '?';
}

Parity parity_from_letter(char c) {
  switch (c) {
    case 'O': return Parity::Orthogonal;
    case 'S': return Parity::Symplectic;
    case 'N': return Parity::NonSelfDual;
    default: throw InputError(std::string("unknown parity '") + c + "'");
  }
}

RhoSymbol RhoSymbol::self_dual(std::string label, std::int64_t dim, Parity parity,
                               bool unramified) {
  if (label.empty()) throw InputError("empty rho label");
  if (dim < 1) throw InputError("rho '" + label + "': dimension must be positive");
  if (parity == Parity::NonSelfDual)
    throw InputError("rho '" + label + "': self-dual symbol needs parity O or S");
  if (unramified && dim != 1)
    throw InputError("rho '" + label + "': unramified characters have dimension 1");
  if (unramified && parity != Parity::Orthogonal)
    throw InputError("rho '" + label + "': a self-dual character is orthogonal");
  RhoSymbol r;
  r.label = label;
  r.dim = dim;
  r.parity = parity;
  r.dual_label = std::move(label);
  r.unramified = unramified;
  return r;
}

RhoSymbol RhoSymbol::non_self_dual(std::string label, std::string dual_label, std::int64_t dim,
                                   bool unramified) {
  if (label.empty() || dual_label.empty()) throw InputError("empty rho label");
  if (label == dual_label)
    throw InputError("rho '" + label + "': non-self-dual symbol must have a distinct dual");
  if (dim < 1) throw InputError("rho '" + label + "': dimension must be positive");
  if (unramified && dim != 1)
    throw InputError("rho '" + label + "': unramified characters have dimension 1");
  RhoSymbol r;
  r.label = std::move(label);
  r.dim = dim;
  r.parity = Parity::NonSelfDual;
  r.dual_label = std::move(dual_label);
  r.unramified = unramified;
  return r;
}

RhoSymbol RhoSymbol::trivial() { return self_dual("triv", 1, Parity::Orthogonal, true); }

RhoSymbol RhoSymbol::contragredient() const {
  if (is_self_dual()) return *this;
  RhoSymbol r = *this;
  std::swap(r.label, r.dual_label);
  return r;
}

Segment Segment::make(RhoSymbol rho, HalfInt A, HalfInt B) {
  HalfInt d = A - B;
  if (!d.is_integer() || d.twice() < 0)
    throw InputError("segment [" + A.to_string() + "," + B.to_string() +
                     "]: A - B must be a nonnegative integer");
  return Segment{std::move(rho), A, B};
}

std::vector<HalfInt> Segment::exponents() const {
  std::vector<HalfInt> out;
  for (HalfInt x = A; x >= B; x = x - 1) out.push_back(x);
  return out;
}

MultiSet<RhoTwist> Segment::elements() const {
  MultiSet<RhoTwist> out;
  for (HalfInt x : exponents()) out.add(RhoTwist{rho, x});
  return out;
}

}  // namespace arthurkit
