// Arthur-type test for an irreducible representation given by Langlands
// data, driven by a pluggable highest-derivative oracle.
#pragma once

#include <memory>

#include "arthurkit/classify.hpp"

namespace arthurkit {

struct Derivative {
  std::int64_t k = 0;
  LData result;
};

class DerivativeOracle {
 public:
  virtual ~DerivativeOracle() = default;
  virtual std::string name() const = 0;
  // Highest rho|.|^x-derivative. Throws UnsupportedInput for inputs or
  // exponents outside the oracle's closed form.
  virtual Derivative highest_derivative(const LData& pi, const RhoSymbol& rho, HalfInt x) const = 0;
};

// Tempered pi(phi, 1): at z > 1/2 every rho (x) S_{2z+1} becomes rho (x) S_{2z-1}.
Derivative oracle_tempered(const LData& pi, const RhoSymbol& rho, HalfInt z);
// pi with every segment Delta[-x,-x] and every tempered piece rho (x) S_1:
// at -x (x > 0) removes max(m_x - m_{x+1}, 0) copies of Delta[-x,-x];
// positive exponents give 0.
Derivative oracle_unramified(const LData& pi, const RhoSymbol& rho, HalfInt x);

class TemperedOracle final : public DerivativeOracle {
 public:
  std::string name() const override { return "tempered"; }
  Derivative highest_derivative(const LData& pi, const RhoSymbol& rho, HalfInt x) const override;
};

class UnramifiedOracle final : public DerivativeOracle {
 public:
  std::string name() const override { return "unramified"; }
  Derivative highest_derivative(const LData& pi, const RhoSymbol& rho, HalfInt x) const override;
};

// "tempered" or "unramified"; throws InputError otherwise.
std::unique_ptr<DerivativeOracle> make_oracle(const std::string& name);

// Bookkeeping for one rho. Indices i are 1-based chain numbers.
struct RhoTables {
  RhoSymbol rho;
  HalfInt A;
  HalfInt eps;
  std::vector<HalfInt> B_plus;   // decreasing
  std::vector<HalfInt> B_minus;  // increasing
  std::map<std::pair<int, HalfInt>, std::int64_t> k, K, kbar, Kbar;
  std::map<HalfInt, std::int64_t> m1, m2, M;
  MultiSet<HalfInt> omega_plus, omega_minus;
};

struct AlgoState {
  MultiSet<Summand> psi_acc;
  std::vector<RhoTables> tables;
};

enum class VerdictKind { NotArthurType, Candidate, ArthurVia };
std::string verdict_name(VerdictKind k);

struct ArthurVerdict {
  VerdictKind kind = VerdictKind::Candidate;
  int step = 0;         // failing step for NotArthurType
  std::string witness;  // failing inequality for NotArthurType
  ArthurParameter psi;
  std::optional<ExtendedMultiSegment> e;  // for ArthurVia
  AlgoState state;
};

// Requires pi of good parity. Throws UnsupportedInput if the oracle refuses
// an exponent or if Step 3 would need a socle shift (Omega+ nonempty).
ArthurVerdict arthur_type_check(const LData& pi, const DerivativeOracle& oracle);

}  // namespace arthurkit
