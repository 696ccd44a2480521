#include "arthurkit/ldata.hpp"

#include <algorithm>
#include <cstdlib>

namespace arthurkit {

GLSegmentRep GLSegmentRep::steinberg(RhoSymbol rho, HalfInt x, HalfInt y) {
  HalfInt d = x - y;
  if (!d.is_integer() || d < HalfInt(-1))
    throw InputError("segment [" + x.to_string() + "," + y.to_string() + "]: x - y must be an integer >= -1");
  return GLSegmentRep{GLKind::Steinberg, std::move(rho), x, y};
}

GLSegmentRep GLSegmentRep::zelevinsky(RhoSymbol rho, HalfInt y, HalfInt x) {
  GLSegmentRep s = steinberg(std::move(rho), x, y);
  s.kind = GLKind::Zelevinsky;
  return s;
}

std::optional<GLSegmentRep> gl_derivative(const GLSegmentRep& seg, const RhoTwist& at, Side side) {
  if (seg.is_trivial() || !(at.rho == seg.rho)) return std::nullopt;
  GLSegmentRep out = seg;
  bool steinberg = seg.kind == GLKind::Steinberg;
  // Steinberg loses its top from the left and its bottom from the right;
  // Zelevinsky the other way round.
  bool take_top = (side == Side::Left) == steinberg;
  if (take_top) {
    if (at.exponent != seg.x) return std::nullopt;
    out.x = seg.x - 1;
  } else {
    if (at.exponent != seg.y) return std::nullopt;
    out.y = seg.y + 1;
  }
  return out;
}

SpehBlock speh_of_summand(const Summand& s, bool shifted) {
  if (shifted && !(s.x > Rational(0))) throw PreconditionError("shifted Speh block needs x > 0");
  if (!shifted && !s.x.is_zero()) throw PreconditionError("unshifted Speh block needs x = 0");
  return SpehBlock{s.rho, Rational(s.a - s.b, 2) + s.x, s.a, s.b};
}

void TemperedData::add(const RhoSymbol& rho, std::int64_t a, std::int64_t multiplicity, int sign) {
  if (a < 1) throw InputError("tempered piece needs a >= 1");
  if (multiplicity < 1) throw InputError("tempered piece needs positive multiplicity");
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), std::pair{rho, a},
                             [](const TemperedPiece& p, const std::pair<RhoSymbol, std::int64_t>& k) {
                               if (p.rho != k.first) return p.rho < k.first;
                               return p.a < k.second;
                             });
  if (it != pieces_.end() && it->rho == rho && it->a == a) {
    if (it->sign != sign)
      throw InputError("character is not constant on equal pieces " + rho.label + "*S" + std::to_string(a));
    it->multiplicity += multiplicity;
    return;
  }
  pieces_.insert(it, TemperedPiece{rho, a, multiplicity, sign});
}

std::int64_t TemperedData::dimension() const {
  std::int64_t d = 0;
  for (const auto& p : pieces_) d += p.rho.dim * p.a * p.multiplicity;
  return d;
}

bool TemperedData::all_signs_trivial() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const TemperedPiece& p) { return p.sign == 1; });
}

LParameter TemperedData::phi(GroupTag g) const {
  LParameter out{g, {}};
  for (const auto& p : pieces_) out.pieces.add(LPiece{p.rho, Rational(0), p.a}, p.multiplicity);
  return out;
}

std::int64_t LData::dimension() const {
  std::int64_t d = tempered.dimension();
  for (const auto& s : segments) d += 2 * s.dimension();
  return d;
}

namespace {

bool piece_good_parity(GroupTag g, const RhoSymbol& rho, std::int64_t a) {
  return rho.is_self_dual() && tensor_type(rho.parity, sl2_type(a)) == g.dual_type();
}

}  // namespace

Report check_ldata(const LData& pi) {
  for (const auto& s : pi.segments) {
    if (s.kind != GLKind::Steinberg) return Report::fail("Langlands data uses Steinberg segments only");
    if (s.x < s.y) return Report::fail("empty segment D(" + s.rho.label + "," + s.x.to_string() + "," + s.y.to_string() + ")");
    if ((s.x + s.y).twice() >= 0)
      return Report::fail("segment D(" + s.rho.label + "," + s.x.to_string() + "," + s.y.to_string() +
                          ") needs x + y < 0");
  }
  int odd_minus = 0;
  const auto& pieces = pi.tempered.pieces();
  for (const auto& p : pieces) {
    if (!p.rho.is_self_dual()) {
      auto it = std::find_if(pieces.begin(), pieces.end(), [&](const TemperedPiece& q) {
        return q.rho.label == p.rho.dual_label && q.a == p.a;
      });
      if (it == pieces.end() || it->multiplicity != p.multiplicity)
        return Report::fail("tempered part not closed under contragredient at " + p.rho.label + "*S" +
                            std::to_string(p.a));
    }
    if (piece_good_parity(pi.group, p.rho, p.a)) {
      if (p.sign == -1 && p.multiplicity % 2 == 1) odd_minus ^= 1;
    } else {
      if (p.rho.is_self_dual() && p.multiplicity % 2 == 1)
        return Report::fail("self-dual piece " + p.rho.label + "*S" + std::to_string(p.a) +
                            " of the wrong type must have even multiplicity");
      if (p.sign != 1)
        return Report::fail("sign on non good-parity piece " + p.rho.label + "*S" + std::to_string(p.a));
    }
  }
  if (odd_minus) return Report::fail("eps is not a character: product of signs is -1");
  if (pi.dimension() != pi.group.N())
    return Report::fail("dimension " + std::to_string(pi.dimension()) + " != N = " + std::to_string(pi.group.N()));
  return Report::pass();
}

LData make_ldata(GroupTag group, std::vector<GLSegmentRep> segments, TemperedData tempered) {
  LData pi{group, std::move(segments), std::move(tempered)};
  std::stable_sort(pi.segments.begin(), pi.segments.end(), [](const GLSegmentRep& l, const GLSegmentRep& r) {
    if (l.x + l.y != r.x + r.y) return l.x + l.y < r.x + r.y;
    if (l.rho != r.rho) return l.rho < r.rho;
    return l.x < r.x;
  });
  if (Report r = check_ldata(pi); !r.ok) throw InputError(r.message);
  return pi;
}

MultiSet<RhoTwist> omega_pi(const LData& pi) {
  MultiSet<RhoTwist> out;
  for (const auto& s : pi.segments) {
    out.add(RhoTwist{s.rho, s.x});
    out.add(RhoTwist{s.rho, -s.y});
  }
  for (const auto& p : pi.tempered.pieces())
    out.add(RhoTwist{p.rho, HalfInt::from_twice(p.a - 1)}, p.multiplicity);
  return out;
}

bool is_good_parity_ldata(const LData& pi) {
  for (const auto& s : pi.segments) {
    std::int64_t k = std::abs(s.x.twice()) + 1;
    if (!piece_good_parity(pi.group, s.rho, k)) return false;
  }
  for (const auto& p : pi.tempered.pieces())
    if (!piece_good_parity(pi.group, p.rho, p.a)) return false;
  return true;
}

std::int64_t MultiplicityProfile::at(const std::string& label, HalfInt x) const {
  auto it = m.find(label);
  if (it == m.end()) return 0;
  auto jt = it->second.find(x);
  return jt == it->second.end() ? 0 : jt->second;
}

MultiplicityProfile multiplicity_profile(const LData& pi) {
  MultiplicityProfile prof;
  for (const auto& s : pi.segments) {
    if (s.x != s.y) throw PreconditionError("multiplicity profile needs segments of length one");
    prof.rhos.emplace(s.rho.label, s.rho);
    prof.m[s.rho.label][-s.x] += 1;
  }
  for (const auto& p : pi.tempered.pieces()) {
    if (p.a != 1) throw PreconditionError("multiplicity profile needs tempered pieces rho*S1");
    prof.rhos.emplace(p.rho.label, p.rho);
    prof.m[p.rho.label][HalfInt(0)] += p.multiplicity;
  }
  return prof;
}

}  // namespace arthurkit
