#include "arthurkit/arthur_algo.hpp"

#include <algorithm>

namespace arthurkit {

namespace {

GroupTag shrink(GroupTag g, std::int64_t removed_dim) {
  return GroupTag::for_dimension(g.family, g.N() - 2 * removed_dim);
}

}  // namespace

Derivative oracle_tempered(const LData& pi, const RhoSymbol& rho, HalfInt z) {
  if (!pi.segments.empty() || !pi.tempered.all_signs_trivial())
    throw UnsupportedInput("tempered oracle needs a tempered representation with trivial character");
  if (z.twice() < 0) return Derivative{0, pi};
  if (z.twice() <= 1)
    throw UnsupportedInput("tempered oracle has no closed form at exponent " + z.to_string());
  std::int64_t a = z.twice() + 1;
  std::int64_t k = 0;
  TemperedData out;
  for (const auto& p : pi.tempered.pieces()) {
    if (p.rho == rho && p.a == a) {
      k = p.multiplicity;
      out.add(p.rho, a - 2, k, 1);
    } else {
      out.add(p.rho, p.a, p.multiplicity, 1);
    }
  }
  if (k == 0) return Derivative{0, pi};
  return Derivative{k, make_ldata(shrink(pi.group, k * rho.dim), {}, std::move(out))};
}

Derivative oracle_unramified(const LData& pi, const RhoSymbol& rho, HalfInt x) {
  for (const auto& s : pi.segments)
    if (s.x != s.y) throw UnsupportedInput("unramified oracle needs segments of length one");
  for (const auto& p : pi.tempered.pieces())
    if (p.a != 1) throw UnsupportedInput("unramified oracle needs tempered pieces rho*S1");
  if (x.twice() >= 0) return Derivative{0, pi};
  MultiplicityProfile prof = multiplicity_profile(pi);
  HalfInt y = -x;
  std::int64_t k = std::max<std::int64_t>(prof.at(rho.label, y) - prof.at(rho.label, y + 1), 0);
  if (k == 0) return Derivative{0, pi};
  std::vector<GLSegmentRep> segs;
  std::int64_t left = k;
  for (const auto& s : pi.segments) {
    if (left > 0 && s.rho == rho && s.x == x) {
      --left;
      continue;
    }
    segs.push_back(s);
  }
  return Derivative{k, make_ldata(shrink(pi.group, k * rho.dim), std::move(segs), pi.tempered)};
}

Derivative TemperedOracle::highest_derivative(const LData& pi, const RhoSymbol& rho, HalfInt x) const {
  return oracle_tempered(pi, rho, x);
}

Derivative UnramifiedOracle::highest_derivative(const LData& pi, const RhoSymbol& rho, HalfInt x) const {
  return oracle_unramified(pi, rho, x);
}

std::unique_ptr<DerivativeOracle> make_oracle(const std::string& name) {
  if (name == "tempered") return std::make_unique<TemperedOracle>();
  if (name == "unramified") return std::make_unique<UnramifiedOracle>();
  throw InputError("unknown oracle '" + name + "' (expected tempered or unramified)");
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::NotArthurType: return "NotArthurType";
    case VerdictKind::Candidate: return "Candidate";
    case VerdictKind::ArthurVia: return "ArthurVia";
  }
  return "";
}

namespace {

struct Failure {
  int step;
  std::string witness;
};

std::string idx(const char* name, int i, HalfInt t) {
  return std::string(name) + "_{" + std::to_string(i) + "," + t.to_string() + "}";
}

// Steps 1-4 for one rho. Returns a failure or appends to psi_acc.
std::optional<Failure> run_rho(const LData& pi, const RhoSymbol& rho, const MultiSet<HalfInt>& omega_pi_rho,
                               const DerivativeOracle& oracle, AlgoState& st) {
  RhoTables T;
  T.rho = rho;
  // Step 1.
  T.A = omega_pi_rho.expanded().back();
  T.eps = T.A.is_integer() ? HalfInt(0) : HalfInt::from_twice(1);
  const HalfInt A = T.A;
  auto add_summand = [&](HalfInt a_minus_1, HalfInt b_minus_1, std::int64_t copies) {
    st.psi_acc.add(Summand::make(rho, a_minus_1.to_integer() + 1, b_minus_1.to_integer() + 1), copies);
  };

  // Step 2.
  for (HalfInt B = A; B.twice() > 1; B = B - 1)
    if (oracle.highest_derivative(pi, rho, B).k != 0) T.B_plus.push_back(B);
  for (int i = 1; i <= static_cast<int>(T.B_plus.size()); ++i) {
    HalfInt Bi = T.B_plus[i - 1];
    LData cur = pi;
    for (HalfInt t = Bi; t <= A + 1; t = t + 1) {
      Derivative d = oracle.highest_derivative(cur, rho, t);
      T.k[{i, t}] = d.k;
      cur = std::move(d.result);
    }
    if (T.k[{i, A + 1}] != 0)
      return Failure{2, idx("k", i, A + 1) + "=" + std::to_string(T.k[{i, A + 1}]) + " != 0"};
    for (HalfInt t = Bi; t <= A + 1; t = t + 1) {
      std::int64_t prev = 0;
      if (auto it = T.k.find({i - 1, t}); it != T.k.end()) prev = it->second;
      T.K[{i, t}] = T.k[{i, t}] - prev;
    }
    for (HalfInt t = Bi + 1; t <= A + 1; t = t + 1) {
      std::int64_t cur_K = T.K[{i, t}], prev_K = T.K[{i, t - 1}];
      if (cur_K > prev_K)
        return Failure{2, idx("K", i, t) + "=" + std::to_string(cur_K) + " > " + idx("K", i, t - 1) + "=" +
                              std::to_string(prev_K)};
      if (cur_K < prev_K) {
        add_summand((t - 1) + Bi, (t - 1) - Bi, prev_K - cur_K);
        for (HalfInt x = t - 1; x >= Bi; x = x - 1) T.omega_plus.add(x, prev_K - cur_K);
      }
    }
  }

  // Step 3. pi_A = pi when Omega+ is empty; otherwise a socle shift is needed.
  if (!T.omega_plus.empty())
    throw UnsupportedInput("Omega+ is nonempty for " + rho.label +
                           "; the socle shift of Step 3 is not implemented");
  for (HalfInt B = -A; B.twice() < 0; B = B + 1)
    if (oracle.highest_derivative(pi, rho, B).k != 0) T.B_minus.push_back(B);
  const HalfInt low = -A - 1;
  for (int i = 1; i <= static_cast<int>(T.B_minus.size()); ++i) {
    HalfInt Bi = T.B_minus[i - 1];
    LData cur = pi;
    for (HalfInt t = Bi; t >= low; t = t - 1) {
      Derivative d = oracle.highest_derivative(cur, rho, t);
      T.kbar[{i, t}] = d.k;
      cur = std::move(d.result);
    }
    if (T.kbar[{i, low}] != 0)
      return Failure{3, idx("kbar", i, low) + "=" + std::to_string(T.kbar[{i, low}]) + " != 0"};
    for (HalfInt t = Bi; t >= low; t = t - 1) {
      std::int64_t prev = 0;
      if (auto it = T.kbar.find({i - 1, t}); it != T.kbar.end()) prev = it->second;
      T.Kbar[{i, t}] = T.kbar[{i, t}] - prev;
    }
    for (HalfInt t = Bi - 1; t >= low; t = t - 1) {
      std::int64_t cur_K = T.Kbar[{i, t}], prev_K = T.Kbar[{i, t + 1}];
      if (cur_K > prev_K)
        return Failure{3, idx("Kbar", i, t) + "=" + std::to_string(cur_K) + " > " + idx("Kbar", i, t + 1) + "=" +
                              std::to_string(prev_K)};
      if (cur_K < prev_K) {
        HalfInt s = -(t + 1);
        add_summand(s + Bi, s - Bi, prev_K - cur_K);
        for (HalfInt x = s; x >= Bi; x = x - 1) T.omega_minus.add(x, prev_K - cur_K);
      }
    }
  }

  // Step 4.
  MultiSet<HalfInt> omega = combine(Combine::Sum, T.omega_plus, T.omega_minus);
  MultiSet<HalfInt> only_omega = combine(Combine::Difference, omega, omega_pi_rho);
  MultiSet<HalfInt> only_pi = combine(Combine::Difference, omega_pi_rho, omega);
  for (const auto& [x, c] : only_omega) T.m1[x] = c;
  for (const auto& [x, c] : only_pi) T.m2[x] = c;
  for (HalfInt t = A + 1; t >= T.eps; t = t - 1)
    T.M[t] = only_omega.count(-t - 1) - only_omega.count(t) + only_pi.count(t);
  for (HalfInt t = A + 1; t >= T.eps + 1; t = t - 1) {
    std::int64_t hi = T.M[t], lo = T.M[t - 1];
    if (hi > lo)
      return Failure{4, "M_" + t.to_string() + "=" + std::to_string(hi) + " > M_" + (t - 1).to_string() + "=" +
                            std::to_string(lo)};
    if (hi < lo) add_summand((t - 1) + T.eps, (t - 1) - T.eps, lo - hi);
  }
  st.tables.push_back(std::move(T));
  return std::nullopt;
}

}  // namespace

ArthurVerdict arthur_type_check(const LData& pi, const DerivativeOracle& oracle) {
  if (!is_good_parity_ldata(pi)) throw PreconditionError("Arthur-type test needs good parity");
  ArthurVerdict v;
  std::map<std::string, std::pair<RhoSymbol, MultiSet<HalfInt>>> by_rho;
  for (const auto& [rt, c] : omega_pi(pi)) {
    auto& slot = by_rho.try_emplace(rt.rho.label, rt.rho, MultiSet<HalfInt>{}).first->second;
    slot.second.add(rt.exponent, c);
  }
  for (const auto& [label, entry] : by_rho) {
    if (auto f = run_rho(pi, entry.first, entry.second, oracle, v.state)) {
      v.kind = VerdictKind::NotArthurType;
      v.step = f->step;
      v.witness = label + ": " + f->witness;
      v.psi = ArthurParameter{pi.group, v.state.psi_acc};
      return v;
    }
  }
  // Step 5.
  v.psi = ArthurParameter{pi.group, v.state.psi_acc};
  if (v.psi.dimension() != pi.group.N()) {
    v.kind = VerdictKind::NotArthurType;
    v.step = 5;
    v.witness = "accumulated parameter has dimension " + std::to_string(v.psi.dimension()) + " != N = " +
                std::to_string(pi.group.N());
    return v;
  }
  if (!validate(v.psi).ok || !is_good_parity(v.psi)) {
    v.kind = VerdictKind::NotArthurType;
    v.step = 5;
    v.witness = "accumulated parameter is not a good-parity parameter";
    return v;
  }
  for (auto& e : l_class(v.psi)) {
    if (pi_of_L(e) == pi) {
      v.kind = VerdictKind::ArthurVia;
      v.e = std::move(e);
      return v;
    }
  }
  v.kind = VerdictKind::Candidate;
  v.witness = "membership unverified";
  return v;
}

}  // namespace arthurkit
