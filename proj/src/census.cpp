#include "arthurkit/census.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>

namespace arthurkit {

std::vector<ArthurParameter> enumerate_good_parity(GroupTag g, const std::vector<RhoSymbol>& rhos,
                                                   std::size_t max_rows) {
  const std::int64_t N = g.N();
  std::vector<Summand> kinds;
  for (const auto& rho : rhos)
    for (std::int64_t a = 1; rho.dim * a <= N; ++a)
      for (std::int64_t b = 1; rho.dim * a * b <= N; ++b) {
        Summand s = Summand::make(rho, a, b);
        if (is_good_parity(g, s)) kinds.push_back(s);
      }
  std::sort(kinds.begin(), kinds.end());
  std::vector<ArthurParameter> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t left) {
    if (left == 0) {
      ArthurParameter psi{g, {}};
      for (std::size_t i : pick) psi.summands.add(kinds[i]);
      out.push_back(std::move(psi));
      return;
    }
    if (pick.size() == max_rows) return;
    for (std::size_t i = from; i < kinds.size(); ++i) {
      if (kinds[i].dimension() > left) continue;
      pick.push_back(i);
      rec(i, left - kinds[i].dimension());
      pick.pop_back();
    }
  };
  if (N > 0) rec(0, N);
  return out;
}

std::vector<ExtendedMultiSegment> enumerate_ems(const ArthurParameter& psi) {
  ExtendedMultiSegment base = canonical_support(psi);
  std::vector<ExtendedRow*> rows;
  for (auto& b : base.blocks)
    for (auto& r : b.rows) rows.push_back(&r);
  std::vector<ExtendedMultiSegment> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rows.size()) {
      if (sign_condition(base)) out.push_back(base);
      return;
    }
    ExtendedRow& r = *rows[i];
    for (std::int64_t l = 0; 2 * l <= r.b(); ++l) {
      r.l = l;
      if (r.eta_free()) {
        r.eta = 1;
        rec(i + 1);
      } else {
        for (int eta : {1, -1}) {
          r.eta = eta;
          rec(i + 1);
        }
      }
    }
  };
  rec(0);
  return out;
}

std::int64_t dimension_audit(const ArthurParameter& psi) { return psi.dimension(); }

std::int64_t dimension_audit(const LData& pi) {
  std::int64_t d = 0;
  for (const auto& s : pi.segments) d += 2 * s.rho.dim * ((s.x - s.y).to_integer() + 1);
  for (const auto& p : pi.tempered.pieces()) d += p.rho.dim * p.a * p.multiplicity;
  return d;
}

std::int64_t dimension_audit(const ExtendedMultiSegment& e) {
  if (satisfies_L(e)) return dimension_audit(pi_of_L(e));
  std::int64_t d = 0;
  for (const auto& b : e.blocks)
    for (const auto& r : b.rows) d += b.rho.dim * r.a() * r.b();
  return d;
}

std::vector<LData> enumerate_unramified_ldata(GroupTag g, const std::vector<RhoSymbol>& rhos, HalfInt max_x,
                                              bool all_characters) {
  // Atoms: a segment Delta[-x,-x] costs 2 dim(rho), a tempered rho*S1 costs dim(rho).
  struct Atom {
    RhoSymbol rho;
    HalfInt x;  // 0 marks the tempered piece
  };
  std::vector<Atom> atoms;
  for (const auto& rho : rhos) {
    if (!rho.unramified || !rho.is_self_dual()) continue;
    bool integral = tensor_type(rho.parity, sl2_type(1)) == g.dual_type();
    if (integral) atoms.push_back(Atom{rho, HalfInt(0)});
    for (HalfInt x = integral ? HalfInt(1) : HalfInt::from_twice(1); x <= max_x; x = x + 1)
      atoms.push_back(Atom{rho, x});
  }
  std::vector<LData> out;
  std::vector<std::int64_t> count(atoms.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (left == 0) {
      std::vector<GLSegmentRep> segs;
      std::vector<std::pair<RhoSymbol, std::int64_t>> temp;
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (count[j] == 0) continue;
        if (atoms[j].x == HalfInt(0)) {
          temp.emplace_back(atoms[j].rho, count[j]);
        } else {
          for (std::int64_t c = 0; c < count[j]; ++c)
            segs.push_back(GLSegmentRep::steinberg(atoms[j].rho, -atoms[j].x, -atoms[j].x));
        }
      }
      std::uint64_t masks = all_characters ? (std::uint64_t{1} << temp.size()) : 1;
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        TemperedData t;
        int odd_minus = 0;
        for (std::size_t j = 0; j < temp.size(); ++j) {
          int sign = ((mask >> j) & 1) ? -1 : 1;
          if (sign == -1 && temp[j].second % 2 == 1) odd_minus ^= 1;
          t.add(temp[j].first, 1, temp[j].second, sign);
        }
        if (odd_minus) continue;
        out.push_back(make_ldata(g, segs, std::move(t)));
      }
      return;
    }
    if (i == atoms.size()) return;
    std::int64_t cost = atoms[i].rho.dim * (atoms[i].x == HalfInt(0) ? 1 : 2);
    for (std::int64_t c = 0; c * cost <= left; ++c) {
      count[i] = c;
      rec(i + 1, left - c * cost);
    }
    count[i] = 0;
  };
  rec(0, g.N());
  return out;
}

std::int64_t capped_max_N(std::int64_t requested) {
  const char* env = std::getenv("ARTHURKIT_MAX_N");
  if (!env) return requested;
  std::int64_t cap = 0;
  auto [p, ec] = std::from_chars(env, env + std::strlen(env), cap);
  if (ec != std::errc() || cap <= 0) return requested;
  return std::min(requested, cap);
}

std::vector<CensusSpec> default_census() {
  RhoSymbol triv = RhoSymbol::trivial();
  RhoSymbol chi = RhoSymbol::self_dual("chi", 1, Parity::Orthogonal, true);
  RhoSymbol sym = RhoSymbol::self_dual("s", 2, Parity::Symplectic);
  std::vector<CensusSpec> out;
  for (Family f : {Family::Sp, Family::SOodd}) {
    std::string fam = f == Family::Sp ? "Sp" : "SO";
    out.push_back(CensusSpec{fam + "/triv", f, {triv}, capped_max_N(9)});
    out.push_back(CensusSpec{fam + "/triv+chi", f, {triv, chi}, capped_max_N(7)});
    out.push_back(CensusSpec{fam + "/triv+s", f, {triv, sym}, capped_max_N(7)});
  }
  return out;
}

std::vector<GroupTag> census_groups(const CensusSpec& spec) {
  std::vector<GroupTag> out;
  for (std::int64_t n = 1; GroupTag{spec.family, n}.N() <= spec.max_N; ++n) out.push_back(GroupTag{spec.family, n});
  return out;
}

std::vector<ArthurParameter> census_parameters(const CensusSpec& spec) {
  std::vector<ArthurParameter> out;
  for (GroupTag g : census_groups(spec)) {
    auto part = enumerate_good_parity(g, spec.rhos);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace arthurkit
