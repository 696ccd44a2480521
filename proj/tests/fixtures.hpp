// Small builders shared by the unit tests.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arthurkit/ems.hpp"

namespace fx {

using namespace arthurkit;

inline RhoSymbol rho_o(const std::string& label = "r", bool unramified = true) {
  return RhoSymbol::self_dual(label, 1, Parity::Orthogonal, unramified);
}
inline RhoSymbol rho_s(const std::string& label = "s", std::int64_t dim = 2) {
  return RhoSymbol::self_dual(label, dim, Parity::Symplectic);
}

inline HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }
inline HalfInt i(std::int64_t v) { return HalfInt(v); }

inline GroupTag sp(std::int64_t n) { return GroupTag{Family::Sp, n}; }
inline GroupTag so(std::int64_t n) { return GroupTag{Family::SOodd, n}; }

struct S {
  RhoSymbol rho;
  std::int64_t a, b;
  Rational x = Rational(0);
  std::int64_t mult = 1;
};

inline ArthurParameter param(GroupTag g, const std::vector<S>& parts) {
  ArthurParameter psi{g, {}};
  for (const auto& p : parts) psi.summands.add(Summand::make(p.rho, p.x, p.a, p.b), p.mult);
  return psi;
}

inline ExtendedMultiSegment ems(GroupTag g, const RhoSymbol& rho, std::vector<ExtendedRow> rows) {
  return make_ems(g, {EmsBlock{rho, std::move(rows)}});
}

inline ExtendedRow row(HalfInt A, HalfInt B, std::int64_t l, int eta) { return ExtendedRow{A, B, l, eta}; }

inline TemperedData tempered(const std::vector<std::tuple<RhoSymbol, std::int64_t, std::int64_t, int>>& pieces) {
  TemperedData t;
  for (const auto& [rho, a, m, s] : pieces) t.add(rho, a, m, s);
  return t;
}

inline GLSegmentRep seg(const RhoSymbol& rho, HalfInt x, HalfInt y) { return GLSegmentRep::steinberg(rho, x, y); }

}  // namespace fx
