// Exhaustive desk-scale generators and dimension audits used to cross-check
// the decision procedures.
#pragma once

#include <limits>

#include "arthurkit/ems.hpp"

namespace arthurkit {

// All multisets of good-parity summands (rho, 0, a, b) over rhos with total
// dimension N and at most max_rows summands. Deterministic order.
std::vector<ArthurParameter> enumerate_good_parity(GroupTag g, const std::vector<RhoSymbol>& rhos,
                                                   std::size_t max_rows = std::numeric_limits<std::size_t>::max());

// Every E with support psi in the canonical (B, A) order, 0 <= l <= b/2, eta
// fixed to + where l = b/2, satisfying the sign condition.
std::vector<ExtendedMultiSegment> enumerate_ems(const ArthurParameter& psi);

std::int64_t dimension_audit(const ArthurParameter& psi);
std::int64_t dimension_audit(const LData& pi);
// Through pi(E) when E satisfies (L), through the parameter otherwise.
std::int64_t dimension_audit(const ExtendedMultiSegment& e);

// Every L-datum for g whose segments are Delta_rho[-x,-x] (0 < x <= max_x) and
// whose tempered pieces are rho (x) S_1, over the unramified rhos given, with
// good parity. With all_characters, every sign pattern on the tempered part
// is included; otherwise only the trivial one.
std::vector<LData> enumerate_unramified_ldata(GroupTag g, const std::vector<RhoSymbol>& rhos, HalfInt max_x,
                                              bool all_characters);

struct CensusSpec {
  std::string name;
  Family family = Family::Sp;
  std::vector<RhoSymbol> rhos;
  std::int64_t max_N = 9;
};

// min(requested, ARTHURKIT_MAX_N) when the variable is set to a positive integer.
std::int64_t capped_max_N(std::int64_t requested);

// Default desk-scale census: one unramified rho up to N = 9, two unramified
// rhos up to N = 7, the trivial rho with a ramified symplectic one up to N = 7,
// for both families. max_N values are already capped.
std::vector<CensusSpec> default_census();

// Groups of the family with 1 <= n and N <= max_N.
std::vector<GroupTag> census_groups(const CensusSpec& spec);
std::vector<ArthurParameter> census_parameters(const CensusSpec& spec);

}  // namespace arthurkit
