// Langlands data for G_n, GL segments and their derivatives, Speh blocks.
#pragma once

#include <optional>

#include "arthurkit/params.hpp"

namespace arthurkit {

enum class GLKind { Steinberg, Zelevinsky };

// Steinberg Delta_rho[x,y] or Zelevinsky Z_rho[y,x], both on the exponents
// x, x-1, ..., y. x = y - 1 is the trivial representation of GL_0.
struct GLSegmentRep {
  GLKind kind = GLKind::Steinberg;
  RhoSymbol rho;
  HalfInt x;
  HalfInt y;

  static GLSegmentRep steinberg(RhoSymbol rho, HalfInt x, HalfInt y);
  static GLSegmentRep zelevinsky(RhoSymbol rho, HalfInt y, HalfInt x);

  bool is_trivial() const { return x + 1 == y; }
  std::int64_t length() const { return (x - y).to_integer() + 1; }
  std::int64_t dimension() const { return rho.dim * length(); }

  friend bool operator==(const GLSegmentRep& l, const GLSegmentRep& r) {
    return l.kind == r.kind && l.rho == r.rho && l.x == r.x && l.y == r.y;
  }
};

enum class Side { Left, Right };

// Highest derivative of an irreducible segment representation. nullopt is 0.
std::optional<GLSegmentRep> gl_derivative(const GLSegmentRep& seg, const RhoTwist& at, Side side);

struct SpehBlock {
  RhoSymbol rho;
  Rational top_left;
  std::int64_t rows = 1;
  std::int64_t cols = 1;

  // 1-based.
  Rational entry(std::int64_t i, std::int64_t j) const {
    return top_left - Rational(i) + Rational(j);
  }
};

// Block with a rows and b columns, top-left (a-b)/2 + x. shifted requires
// x > 0 (the nu part); otherwise x = 0 (the non good-parity part).
SpehBlock speh_of_summand(const Summand& s, bool shifted);

struct TemperedPiece {
  RhoSymbol rho;
  std::int64_t a = 1;
  std::int64_t multiplicity = 1;
  int sign = 1;

  friend bool operator==(const TemperedPiece& l, const TemperedPiece& r) {
    return l.rho == r.rho && l.a == r.a && l.multiplicity == r.multiplicity && l.sign == r.sign;
  }
};

// pi(phi, eps): a tempered L-parameter with a sign on each distinct piece.
// Pieces are kept sorted by (rho, a) with no repeats.
class TemperedData {
 public:
  // Merges into an existing piece with the same (rho, a); conflicting signs throw.
  void add(const RhoSymbol& rho, std::int64_t a, std::int64_t multiplicity = 1, int sign = 1);

  const std::vector<TemperedPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::int64_t dimension() const;
  bool all_signs_trivial() const;
  LParameter phi(GroupTag g) const;

  friend bool operator==(const TemperedData&, const TemperedData&) = default;

 private:
  std::vector<TemperedPiece> pieces_;
};

struct LData {
  GroupTag group;
  std::vector<GLSegmentRep> segments;  // Steinberg, sorted by (x+y, label, x)
  TemperedData tempered;

  std::int64_t dimension() const;
  friend bool operator==(const LData&, const LData&) = default;
};

// Checks and sorts. Every segment needs x + y < 0 and x >= y; the tempered
// part must be closed under contragredient and eps must be a character; the
// total dimension must be N.
LData make_ldata(GroupTag group, std::vector<GLSegmentRep> segments, TemperedData tempered);
Report check_ldata(const LData& pi);

// Segment Delta[x,-y] gives x and y, tempered rho (x) S_{2z+1} gives z.
MultiSet<RhoTwist> omega_pi(const LData& pi);

// Every exponent of every segment and tempered piece lies in the coset of
// (1/2)Z where rho (x) S_{2|x|+1} has the dual-group type.
bool is_good_parity_ldata(const LData& pi);

// m_{rho,x}: number of segments Delta_rho[-x,-x] for x > 0 and the
// multiplicity of rho (x) S_1 for x = 0. Only meaningful for data satisfying
// the unramified shape (every segment of length one, every tempered piece S_1).
struct MultiplicityProfile {
  std::map<std::string, RhoSymbol> rhos;
  std::map<std::string, std::map<HalfInt, std::int64_t>> m;

  std::int64_t at(const std::string& label, HalfInt x) const;
};
MultiplicityProfile multiplicity_profile(const LData& pi);

}  // namespace arthurkit
