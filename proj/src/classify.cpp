#include "arthurkit/classify.hpp"

#include <algorithm>

namespace arthurkit {

namespace {

bool piece_good_parity(GroupTag g, const RhoSymbol& rho, std::int64_t a) {
  return rho.is_self_dual() && tensor_type(rho.parity, sl2_type(a)) == g.dual_type();
}

std::string piece_name(const TemperedPiece& p) { return p.rho.label + "*S" + std::to_string(p.a); }

}  // namespace

bool tempered_singleton(const TemperedData& t, GroupTag g) {
  const auto& ps = t.pieces();
  for (const auto& p : ps)
    if (!piece_good_parity(g, p.rho, p.a)) throw PreconditionError("singleton test needs good parity, got " + piece_name(p));
  for (const auto& p : ps) {
    if (p.a == 2 && p.sign == -1) return false;
    for (const auto& q : ps)
      if (q.rho == p.rho && q.a == p.a + 2 && p.sign * q.sign == -1) return false;
  }
  return true;
}

std::vector<TemperedMember> tempered_packet(const LParameter& phi) {
  ArthurParameter psi{phi.group, {}};
  for (const auto& [p, m] : phi.pieces) {
    if (!p.twist.is_zero()) throw PreconditionError("tempered packet needs every twist to be 0");
    psi.summands.add(Summand::make(p.rho, p.a, 1), m);
  }
  if (!is_good_parity(psi)) throw PreconditionError("tempered packet needs a good-parity parameter");
  std::vector<std::pair<Summand, std::int64_t>> comps(psi.summands.begin(), psi.summands.end());
  std::vector<TemperedMember> out;
  for_each_character(psi, [&](const std::vector<int>& eps) {
    TemperedMember m;
    m.generic = std::all_of(eps.begin(), eps.end(), [](int e) { return e == 1; });
    for (std::size_t i = 0; i < comps.size(); ++i)
      m.datum.add(comps[i].first.rho, comps[i].first.a, comps[i].second, eps[i]);
    out.push_back(std::move(m));
  });
  return out;
}

bool has_generic_member(const ArthurParameter& psi) { return predicates(psi).generic; }

std::string condition_name(UnramifiedCondition c) {
  switch (c) {
    case UnramifiedCondition::None: return "";
    case UnramifiedCondition::Shape: return "(i)";
    case UnramifiedCondition::Profile: return "(ii)";
    case UnramifiedCondition::Character: return "(iii)";
  }
  return "";
}

namespace {

// Start of the exponent coset of a profile row: 0 or 1/2.
HalfInt coset_start(const std::map<HalfInt, std::int64_t>& row) {
  for (const auto& [x, m] : row)
    if (!x.is_integer()) return HalfInt::from_twice(1);
  return HalfInt(0);
}

}  // namespace

UnramifiedVerdict classify_unramified(const LData& pi) {
  if (!is_good_parity_ldata(pi)) throw PreconditionError("unramified classification needs good parity");
  UnramifiedVerdict v;
  auto reject = [&](UnramifiedCondition c, std::string w) {
    v.failed = c;
    v.witness = std::move(w);
    return v;
  };
  for (const auto& s : pi.segments) {
    std::string name = "D(" + s.rho.label + "," + s.x.to_string() + "," + s.y.to_string() + ")";
    if (s.x != s.y) return reject(UnramifiedCondition::Shape, "segment " + name + " has length > 1");
    if (!s.rho.unramified) return reject(UnramifiedCondition::Shape, "segment " + name + " uses a ramified rho");
  }
  for (const auto& p : pi.tempered.pieces()) {
    if (p.a != 1) return reject(UnramifiedCondition::Shape, "tempered piece " + piece_name(p) + " is not rho*S1");
    if (!p.rho.unramified) return reject(UnramifiedCondition::Shape, "tempered piece " + piece_name(p) + " uses a ramified rho");
  }
  MultiplicityProfile prof = multiplicity_profile(pi);
  for (const auto& [label, row] : prof.m) {
    HalfInt top = row.rbegin()->first;
    for (HalfInt x = top; x >= coset_start(row); x = x - 1) {
      std::int64_t hi = prof.at(label, x + 1), lo = prof.at(label, x);
      if (hi > lo)
        return reject(UnramifiedCondition::Profile, "m_{" + label + "," + (x + 1).to_string() + "}=" +
                                                        std::to_string(hi) + " > m_{" + label + "," +
                                                        x.to_string() + "}=" + std::to_string(lo));
    }
  }
  for (const auto& p : pi.tempered.pieces())
    if (p.sign != 1) return reject(UnramifiedCondition::Character, "eps(" + piece_name(p) + ") = -");
  v.accepted = true;
  v.e = ems_from_profile(pi.group, prof);
  return v;
}

ExtendedMultiSegment ems_from_profile(GroupTag g, const MultiplicityProfile& prof) {
  std::vector<EmsBlock> blocks;
  for (const auto& [label, row] : prof.m) {
    EmsBlock b{prof.rhos.at(label), {}};
    HalfInt top = row.empty() ? HalfInt(0) : row.rbegin()->first;
    for (HalfInt x = top; x >= coset_start(row); x = x - 1) {
      std::int64_t c = prof.at(label, x) - prof.at(label, x + 1);
      if (c < 0) throw PreconditionError("profile of " + label + " increases at " + x.to_string());
      ExtendedRow r{x, -x, (x + HalfInt::from_twice(1)).floor(), 1};
      for (std::int64_t i = 0; i < c; ++i) b.rows.push_back(r);
    }
    if (!b.rows.empty()) blocks.push_back(std::move(b));
  }
  return make_ems(g, std::move(blocks));
}

UnramifiedCertificate unramified_parameter_set(const LData& pi) {
  UnramifiedVerdict v = classify_unramified(pi);
  if (!v.accepted) throw PreconditionError("not an unramified representation of Arthur type: " + v.witness);
  UnramifiedCertificate c;
  c.psi = parameter_of(v.e);
  c.anti_generic = predicates(c.psi).anti_generic;
  c.dual_e = dual(v.e);
  c.dual_is_tempered_shape = true;
  for (const auto& b : c.dual_e.blocks)
    for (const auto& r : b.rows) c.dual_is_tempered_shape &= (r.A == r.B);
  if (c.dual_is_tempered_shape && satisfies_L(c.dual_e)) {
    LData t = pi_of_L(c.dual_e);
    c.dual_tempered = t.tempered;
    c.dual_is_tempered_shape = t.segments.empty();
    c.singleton = tempered_singleton(c.dual_tempered, pi.group);
  } else {
    c.dual_is_tempered_shape = false;
  }
  return c;
}

std::optional<LData> unramified_member(const ArthurParameter& psi) {
  if (!is_good_parity(psi)) throw PreconditionError("unramified member search needs good parity");
  for (const auto& [s, m] : psi.summands)
    if (!s.rho.unramified) throw PreconditionError("unramified member search needs unramified characters, got " + s.rho.label);
  MultiplicityProfile prof;
  for (const auto& [s, m] : psi.summands) {
    if (s.a != 1) return std::nullopt;
    prof.rhos.emplace(s.rho.label, s.rho);
    // A row [x,-x] with x = (b-1)/2 adds one to m_y for every y <= x in its coset.
    HalfInt x = HalfInt::from_twice(s.b - 1);
    for (HalfInt y = x; y.twice() >= 0; y = y - 1) prof.m[s.rho.label][y] += m;
  }
  return pi_of_L(ems_from_profile(psi.group, prof));
}

}  // namespace arthurkit
