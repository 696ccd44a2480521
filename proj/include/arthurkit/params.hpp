// Local Arthur parameters for Sp(2n) and split SO(2n+1).
#pragma once

#include <functional>
#include <optional>

#include "arthurkit/core.hpp"

namespace arthurkit {

enum class Family { Sp, SOodd };

// G_n. n = 0 is allowed for the trivial group that derivatives may land on.
struct GroupTag {
  Family family = Family::Sp;
  std::int64_t n = 0;

  static GroupTag make(Family family, std::int64_t n);
  // The group whose dual group has standard representation of dimension N.
  static GroupTag for_dimension(Family family, std::int64_t N);

  // Dimension of the standard representation of the dual group.
  std::int64_t N() const { return family == Family::Sp ? 2 * n + 1 : 2 * n; }
  // Orthogonal for Sp (dual SO(2n+1)), symplectic for SO(2n+1) (dual Sp(2n)).
  Parity dual_type() const {
    return family == Family::Sp ? Parity::Orthogonal : Parity::Symplectic;
  }
  std::string family_name() const { return family == Family::Sp ? "Sp" : "SO"; }

  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

// rho |.|^x (x) S_a (x) S_b.
struct Summand {
  RhoSymbol rho;
  Rational x;
  std::int64_t a = 1;
  std::int64_t b = 1;

  static Summand make(RhoSymbol rho, Rational x, std::int64_t a, std::int64_t b);
  static Summand make(RhoSymbol rho, std::int64_t a, std::int64_t b) {
    return make(std::move(rho), Rational(0), a, b);
  }

  // A = (a+b)/2 - 1, B = (a-b)/2.
  HalfInt A() const { return HalfInt::from_twice(a + b - 2); }
  HalfInt B() const { return HalfInt::from_twice(a - b); }
  std::int64_t dimension() const { return rho.dim * a * b; }
  Summand contragredient() const { return Summand{rho.contragredient(), -x, a, b}; }
  // Self-dual type of the summand, NonSelfDual if x != 0 or rho not self-dual.
  Parity type() const;
  std::string to_string() const;

  friend bool operator==(const Summand& l, const Summand& r) {
    return l.rho == r.rho && l.x == r.x && l.a == r.a && l.b == r.b;
  }
  friend std::strong_ordering operator<=>(const Summand& l, const Summand& r);
};

struct ArthurParameter {
  GroupTag group;
  MultiSet<Summand> summands;

  std::int64_t dimension() const;
  friend bool operator==(const ArthurParameter&, const ArthurParameter&) = default;
};

// Outcome of an invariant check.
struct Report {
  bool ok = true;
  std::string message;

  static Report pass() { return {}; }
  static Report fail(std::string m) { return {false, std::move(m)}; }
};

// Dimension, |x| < 1/2, contragredient closure, even multiplicity of
// self-dual summands of the wrong type.
Report validate(const ArthurParameter& psi);

bool is_good_parity(GroupTag g, const Summand& s);
bool is_good_parity(const ArthurParameter& psi);

struct Decomposition {
  std::vector<Summand> nu_pos;  // x > 0, sorted
  std::vector<Summand> np;      // one representative per non good-parity pair
  ArthurParameter gp;           // on the smaller group G_m
};
// psi = nu_pos + np + gp + (np + nu_pos)^dual. Requires validate(psi).ok.
Decomposition decompose(const ArthurParameter& psi);

struct LPiece {
  RhoSymbol rho;
  Rational twist;
  std::int64_t a = 1;

  friend bool operator==(const LPiece& l, const LPiece& r) {
    return l.rho == r.rho && l.twist == r.twist && l.a == r.a;
  }
  friend std::strong_ordering operator<=>(const LPiece& l, const LPiece& r);
};

struct LParameter {
  GroupTag group;
  MultiSet<LPiece> pieces;
  std::int64_t dimension() const;
};

// phi_psi: rho|.|^x (x) S_a (x) S_b -> sum_j rho|.|^(x + (b-1)/2 - j) (x) S_a.
LParameter l_parameter_of(const ArthurParameter& psi);
// Swap S_a and S_b in every summand.
ArthurParameter dual_parameter(const ArthurParameter& psi);

struct Predicates {
  bool tempered = false;     // every b = 1 and x = 0
  bool generic = false;      // every b = 1
  bool anti_tempered = false;  // every a = 1 and x = 0
  bool anti_generic = false;   // every a = 1
};
Predicates predicates(const ArthurParameter& psi);

// Characters of the component group: a sign per distinct good-parity summand
// with prod eps^mult = 1. Characters are listed in binary counting order
// (bit i set = summand i gets -1), trivial first.
struct CharacterTable {
  std::vector<std::pair<Summand, std::int64_t>> distinct;
  std::vector<std::vector<int>> characters;
};
inline constexpr std::size_t kMaxMaterializedComponents = 20;
// Requires good parity. Throws PreconditionError if more than
// kMaxMaterializedComponents distinct summands; use for_each_character then.
CharacterTable characters_of(const ArthurParameter& psi);
void for_each_character(const ArthurParameter& psi,
                        const std::function<void(const std::vector<int>&)>& visit);
std::int64_t character_count(const ArthurParameter& psi);

// 1 (x) S_N (x) S_1 with rho the trivial character.
ArthurParameter steinberg_parameter(GroupTag g);

}  // namespace arthurkit
