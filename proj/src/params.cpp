#include "arthurkit/params.hpp"

namespace arthurkit {

GroupTag GroupTag::make(Family family, std::int64_t n) {
  if (n < 0) throw InputError("group rank must be nonnegative");
  return GroupTag{family, n};
}

GroupTag GroupTag::for_dimension(Family family, std::int64_t N) {
  if (family == Family::Sp) {
    if (N < 1 || N % 2 == 0) throw PreconditionError("Sp needs an odd dual dimension, got " + std::to_string(N));
    return GroupTag{family, (N - 1) / 2};
  }
  if (N < 0 || N % 2 == 1) throw PreconditionError("SO(2n+1) needs an even dual dimension, got " + std::to_string(N));
  return GroupTag{family, N / 2};
}

Summand Summand::make(RhoSymbol rho, Rational x, std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InputError("S_a and S_b need a, b >= 1");
  if (x.abs() >= Rational(1, 2)) throw InputError("twist " + x.to_string() + " must satisfy |x| < 1/2");
  return Summand{std::move(rho), x, a, b};
}

Parity Summand::type() const {
  if (!x.is_zero() || !rho.is_self_dual()) return Parity::NonSelfDual;
  return tensor_type(rho.parity, tensor_type(sl2_type(a), sl2_type(b)));
}

std::string Summand::to_string() const {
  std::string s = rho.label;
  if (!x.is_zero()) s += "@" + x.to_string();
  return s + "*S" + std::to_string(a) + "*S" + std::to_string(b);
}

std::strong_ordering operator<=>(const Summand& l, const Summand& r) {
  if (auto c = l.rho <=> r.rho; c != 0) return c;
  if (auto c = l.x <=> r.x; c != 0) return c;
  if (auto c = l.a <=> r.a; c != 0) return c;
  return l.b <=> r.b;
}

std::int64_t ArthurParameter::dimension() const {
  std::int64_t d = 0;
  for (const auto& [s, m] : summands) d += m * s.dimension();
  return d;
}

Report validate(const ArthurParameter& psi) {
  for (const auto& [s, m] : psi.summands) {
    if (s.a < 1 || s.b < 1) return Report::fail("summand " + s.to_string() + " has an empty SL2 factor");
    if (s.x.abs() >= Rational(1, 2))
      return Report::fail("summand " + s.to_string() + ": twist must satisfy |x| < 1/2");
  }
  if (psi.dimension() != psi.group.N())
    return Report::fail("dimension " + std::to_string(psi.dimension()) + " != N = " +
                        std::to_string(psi.group.N()));
  for (const auto& [s, m] : psi.summands) {
    Summand d = s.contragredient();
    if (psi.summands.count(d) != m)
      return Report::fail("not closed under contragredient: " + s.to_string() + " has multiplicity " +
                          std::to_string(m) + " but " + d.to_string() + " has " +
                          std::to_string(psi.summands.count(d)));
    Parity t = s.type();
    if (t != Parity::NonSelfDual && t != psi.group.dual_type() && m % 2 != 0)
      return Report::fail("self-dual summand " + s.to_string() +
                          " of the wrong type must have even multiplicity");
  }
  return Report::pass();
}

bool is_good_parity(GroupTag g, const Summand& s) { return s.type() == g.dual_type(); }

bool is_good_parity(const ArthurParameter& psi) {
  for (const auto& [s, m] : psi.summands)
    if (!is_good_parity(psi.group, s)) return false;
  return true;
}

Decomposition decompose(const ArthurParameter& psi) {
  if (Report r = validate(psi); !r.ok) throw PreconditionError("decompose: " + r.message);
  Decomposition d;
  std::int64_t removed = 0;
  MultiSet<Summand> gp;
  for (const auto& [s, m] : psi.summands) {
    if (s.x > Rational(0)) {
      for (std::int64_t i = 0; i < m; ++i) d.nu_pos.push_back(s);
      removed += m * s.dimension();
    } else if (s.x < Rational(0)) {
      continue;
    } else if (is_good_parity(psi.group, s)) {
      gp.add(s, m);
    } else if (s.rho.is_self_dual()) {
      for (std::int64_t i = 0; i < m / 2; ++i) d.np.push_back(s);
      removed += (m / 2) * s.dimension();
    } else if (s.rho.label < s.rho.dual_label) {
      for (std::int64_t i = 0; i < m; ++i) d.np.push_back(s);
      removed += m * s.dimension();
    }
  }
  d.gp.group = GroupTag::for_dimension(psi.group.family, psi.group.N() - 2 * removed);
  d.gp.summands = std::move(gp);
  return d;
}

std::strong_ordering operator<=>(const LPiece& l, const LPiece& r) {
  if (auto c = l.rho <=> r.rho; c != 0) return c;
  if (auto c = l.twist <=> r.twist; c != 0) return c;
  return l.a <=> r.a;
}

std::int64_t LParameter::dimension() const {
  std::int64_t d = 0;
  for (const auto& [p, m] : pieces) d += m * p.rho.dim * p.a;
  return d;
}

LParameter l_parameter_of(const ArthurParameter& psi) {
  LParameter phi{psi.group, {}};
  for (const auto& [s, m] : psi.summands)
    for (std::int64_t j = 0; j < s.b; ++j)
      phi.pieces.add(LPiece{s.rho, s.x + Rational(s.b - 1 - 2 * j, 2), s.a}, m);
  return phi;
}

ArthurParameter dual_parameter(const ArthurParameter& psi) {
  ArthurParameter out{psi.group, {}};
  for (const auto& [s, m] : psi.summands) out.summands.add(Summand{s.rho, s.x, s.b, s.a}, m);
  return out;
}

Predicates predicates(const ArthurParameter& psi) {
  Predicates p{true, true, true, true};
  for (const auto& [s, m] : psi.summands) {
    if (s.b != 1) p.generic = p.tempered = false;
    if (s.a != 1) p.anti_generic = p.anti_tempered = false;
    if (!s.x.is_zero()) p.tempered = p.anti_tempered = false;
  }
  return p;
}

namespace {

std::vector<std::pair<Summand, std::int64_t>> components(const ArthurParameter& psi) {
  if (!is_good_parity(psi)) throw PreconditionError("characters need a good-parity parameter");
  return {psi.summands.begin(), psi.summands.end()};
}

}  // namespace

std::int64_t character_count(const ArthurParameter& psi) {
  auto comps = components(psi);
  bool some_odd = false;
  for (const auto& [s, m] : comps) some_odd |= (m % 2 == 1);
  std::size_t k = comps.size();
  if (k >= 62) throw PreconditionError("too many components to count");
  return std::int64_t{1} << (some_odd ? k - 1 : k);
}

void for_each_character(const ArthurParameter& psi,
                        const std::function<void(const std::vector<int>&)>& visit) {
  auto comps = components(psi);
  std::size_t k = comps.size();
  if (k >= 62) throw PreconditionError("too many components to enumerate");
  std::vector<int> eps(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    int odd_minus = 0;
    for (std::size_t i = 0; i < k; ++i) {
      bool minus = (mask >> i) & 1;
      eps[i] = minus ? -1 : 1;
      if (minus && comps[i].second % 2 == 1) odd_minus ^= 1;
    }
    if (odd_minus == 0) visit(eps);
  }
}

CharacterTable characters_of(const ArthurParameter& psi) {
  CharacterTable t;
  t.distinct = components(psi);
  if (t.distinct.size() > kMaxMaterializedComponents)
    throw PreconditionError("component group too large to materialize; iterate instead");
  for_each_character(psi, [&](const std::vector<int>& e) { t.characters.push_back(e); });
  return t;
}

ArthurParameter steinberg_parameter(GroupTag g) {
  if (g.n < 1) throw InputError("steinberg needs n >= 1");
  ArthurParameter psi{g, {}};
  psi.summands.add(Summand::make(RhoSymbol::trivial(), g.N(), 1));
  return psi;
}

}  // namespace arthurkit
