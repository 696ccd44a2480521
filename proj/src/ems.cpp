#include "arthurkit/ems.hpp"

#include <algorithm>

namespace arthurkit {

namespace {

int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

std::string row_text(const RhoSymbol& rho, const ExtendedRow& r) {
  return rho.label + " [" + r.A.to_string() + "," + r.B.to_string() + "] l=" + std::to_string(r.l) +
         " eta=" + (r.eta > 0 ? "+" : "-");
}

}  // namespace

std::size_t ExtendedMultiSegment::row_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows.size();
  return n;
}

ExtendedMultiSegment make_ems(GroupTag group, std::vector<EmsBlock> blocks) {
  ExtendedMultiSegment e{group, {}};
  for (auto& b : blocks) {
    auto it = std::find_if(e.blocks.begin(), e.blocks.end(), [&](const EmsBlock& x) { return x.rho == b.rho; });
    if (it == e.blocks.end()) {
      e.blocks.push_back(std::move(b));
    } else {
      it->rows.insert(it->rows.end(), b.rows.begin(), b.rows.end());
    }
  }
  std::stable_sort(e.blocks.begin(), e.blocks.end(),
                   [](const EmsBlock& l, const EmsBlock& r) { return l.rho < r.rho; });
  return e;
}

bool order_check(const std::vector<ExtendedRow>& rows, OrderMode mode) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      // rows[i] comes first, so it must not be the larger one.
      const auto& x = rows[i];
      const auto& y = rows[j];
      if (mode == OrderMode::P && x.A > y.A && x.B > y.B) return false;
      if (mode == OrderMode::Pprime && x.B > y.B) return false;
    }
  return true;
}

bool order_check(const ExtendedMultiSegment& e, OrderMode mode) {
  return std::all_of(e.blocks.begin(), e.blocks.end(),
                     [&](const EmsBlock& b) { return order_check(b.rows, mode); });
}

bool sign_condition(const ExtendedMultiSegment& e) {
  int prod = 1;
  for (const auto& blk : e.blocks)
    for (const auto& r : blk.rows) {
      prod *= sign_pow(r.b() / 2 + r.l);
      if (r.b() % 2 == 1) prod *= r.eta;
    }
  return prod == 1;
}

ArthurParameter parameter_of(const ExtendedMultiSegment& e) {
  ArthurParameter psi{e.group, {}};
  for (const auto& blk : e.blocks)
    for (const auto& r : blk.rows) {
      Summand s = Summand::make(blk.rho, r.a(), r.b());
      if (!is_good_parity(e.group, s)) throw InputError("row " + row_text(blk.rho, r) + " is not of good parity");
      psi.summands.add(s);
    }
  if (psi.dimension() != e.group.N())
    throw InputError("dimension " + std::to_string(psi.dimension()) + " != N = " + std::to_string(e.group.N()));
  return psi;
}

Report check_ems(const ExtendedMultiSegment& e) {
  for (std::size_t i = 0; i < e.blocks.size(); ++i) {
    const auto& blk = e.blocks[i];
    if (i > 0 && !(e.blocks[i - 1].rho < blk.rho)) return Report::fail("blocks must be sorted with one block per rho");
    for (const auto& r : blk.rows) {
      HalfInt d = r.A - r.B;
      if (!d.is_integer() || d.twice() < 0) return Report::fail("row " + row_text(blk.rho, r) + ": A - B must be in Z>=0");
      if ((r.A + r.B).twice() < 0) return Report::fail("row " + row_text(blk.rho, r) + ": needs A + B >= 0");
      if (r.l < 0 || 2 * r.l > r.b()) return Report::fail("row " + row_text(blk.rho, r) + ": needs 0 <= l <= b/2");
      if (r.eta != 1 && r.eta != -1) return Report::fail("row " + row_text(blk.rho, r) + ": eta must be +-1");
    }
    if (!order_check(blk.rows, OrderMode::P)) return Report::fail("rows of " + blk.rho.label + " are not in an admissible order");
  }
  try {
    parameter_of(e);
  } catch (const InputError& err) {
    return Report::fail(err.what());
  }
  if (!sign_condition(e)) return Report::fail("sign condition fails");
  return Report::pass();
}

bool weak_equivalent(const ExtendedMultiSegment& e1, const ExtendedMultiSegment& e2) {
  if (!(e1.group == e2.group) || e1.blocks.size() != e2.blocks.size()) return false;
  for (std::size_t i = 0; i < e1.blocks.size(); ++i) {
    const auto& x = e1.blocks[i];
    const auto& y = e2.blocks[i];
    if (!(x.rho == y.rho) || x.rows.size() != y.rows.size()) return false;
    for (std::size_t j = 0; j < x.rows.size(); ++j) {
      const auto& r = x.rows[j];
      const auto& s = y.rows[j];
      if (r.A != s.A || r.B != s.B || r.l != s.l) return false;
      if (!r.eta_free() && r.eta != s.eta) return false;
    }
  }
  return true;
}

bool satisfies_L(const ExtendedMultiSegment& e) {
  for (const auto& blk : e.blocks) {
    for (std::size_t i = 0; i < blk.rows.size(); ++i) {
      const auto& r = blk.rows[i];
      if (r.l != r.b() / 2) return false;
      if (i > 0 && blk.rows[i - 1].A + blk.rows[i - 1].B > r.A + r.B) return false;
      for (std::size_t j = 0; j < i; ++j) {
        const auto& s = blk.rows[j];
        if (s.A + s.B == r.A + r.B && r.b() % 2 == 1 && s.b() % 2 == 1 && r.eta != s.eta) return false;
      }
    }
  }
  return true;
}

LData pi_of_L(const ExtendedMultiSegment& e) {
  if (!satisfies_L(e)) throw PreconditionError("pi(E) is only available for E satisfying (L)");
  std::vector<GLSegmentRep> segs;
  TemperedData temp;
  for (const auto& blk : e.blocks)
    for (const auto& r : blk.rows) {
      for (std::int64_t k = 0; k < r.l; ++k) segs.push_back(GLSegmentRep::steinberg(blk.rho, r.B + k, -r.A + k));
      // A - B even <=> b odd.
      if (r.b() % 2 == 1) temp.add(blk.rho, r.a(), 1, r.eta);
    }
  return make_ldata(e.group, std::move(segs), std::move(temp));
}

ExtendedMultiSegment canonical_support(const ArthurParameter& psi) {
  if (!is_good_parity(psi)) throw PreconditionError("support needs a good-parity parameter");
  std::vector<EmsBlock> blocks;
  for (const auto& [s, m] : psi.summands) {
    if (blocks.empty() || !(blocks.back().rho == s.rho)) blocks.push_back(EmsBlock{s.rho, {}});
    for (std::int64_t i = 0; i < m; ++i) blocks.back().rows.push_back(ExtendedRow{s.A(), s.B(), 0, 1});
  }
  for (auto& b : blocks)
    std::stable_sort(b.rows.begin(), b.rows.end(), [](const ExtendedRow& x, const ExtendedRow& y) {
      return x.B != y.B ? x.B < y.B : x.A < y.A;
    });
  return ExtendedMultiSegment{psi.group, std::move(blocks)};
}

std::vector<ExtendedMultiSegment> l_class(const ArthurParameter& psi) {
  ExtendedMultiSegment base = canonical_support(psi);
  std::vector<ExtendedRow*> free_rows;
  for (auto& b : base.blocks) {
    std::stable_sort(b.rows.begin(), b.rows.end(), [](const ExtendedRow& x, const ExtendedRow& y) {
      return x.A + x.B != y.A + y.B ? x.A + x.B < y.A + y.B : x.B < y.B;
    });
    for (auto& r : b.rows) {
      r.l = r.b() / 2;
      r.eta = 1;
      if (!r.eta_free()) free_rows.push_back(&r);
    }
  }
  if (free_rows.size() >= 40) throw PreconditionError("too many rows to enumerate");
  std::vector<ExtendedMultiSegment> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_rows.size()); ++mask) {
    for (std::size_t i = 0; i < free_rows.size(); ++i) free_rows[i]->eta = ((mask >> i) & 1) ? -1 : 1;
    if (sign_condition(base) && satisfies_L(base)) out.push_back(base);
  }
  return out;
}

std::vector<DualShift> dual_shifts(const std::vector<ExtendedRow>& rows) {
  std::vector<DualShift> out(rows.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].alpha = acc;
    acc += rows[i].a();
  }
  acc = 0;
  for (std::size_t i = rows.size(); i-- > 0;) {
    out[i].beta = acc;
    acc += rows[i].b();
  }
  return out;
}

ExtendedMultiSegment dual(const ExtendedMultiSegment& e) {
  if (!order_check(e, OrderMode::Pprime)) throw PreconditionError("dual needs rows in a (P') order");
  ExtendedMultiSegment out{e.group, {}};
  for (const auto& blk : e.blocks) {
    auto shifts = dual_shifts(blk.rows);
    EmsBlock nb{blk.rho, {}};
    for (std::size_t i = blk.rows.size(); i-- > 0;) {
      const auto& r = blk.rows[i];
      auto [alpha, beta] = shifts[i];
      ExtendedRow d{r.A, -r.B, 0, 1};
      int eta = r.eta;
      if (r.B.is_integer()) {
        d.l = r.l + r.B.to_integer();
        d.eta = sign_pow(alpha + beta) * eta;
      } else {
        if (r.eta_free()) eta = sign_pow(alpha + 1);
        std::int64_t twice_l = 2 * r.l + r.B.twice() + sign_pow(alpha) * eta;
        d.l = twice_l / 2;
        d.eta = sign_pow(alpha + beta + 1) * eta;
      }
      if (d.l < 0)
        throw PreconditionError("dual of row " + row_text(blk.rho, r) + " has l' = " + std::to_string(d.l) +
                               " < 0; the representation vanishes");
      if (2 * d.l > d.b()) throw PreconditionError("dual produced l' > b'/2 at row " + row_text(blk.rho, r));
      if (d.eta_free()) d.eta = 1;
      nb.rows.push_back(d);
    }
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

std::pair<std::vector<HalfInt>, std::vector<HalfInt>> omega_sets(const std::vector<ExtendedRow>& rows) {
  std::vector<HalfInt> om, bar;
  for (const auto& r : rows) {
    for (HalfInt x = r.A; x >= r.B; x = x - 1) om.push_back(x);
    for (HalfInt x = r.B; x >= -r.A; x = x - 1) bar.push_back(x);
  }
  std::sort(om.begin(), om.end());
  std::sort(bar.begin(), bar.end(), std::greater<>());
  return {om, bar};
}

}  // namespace arthurkit
