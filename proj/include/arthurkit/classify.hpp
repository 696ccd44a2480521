// Decision procedures: tempered singletons, tempered packets, generic
// members, and the unramified classification.
#pragma once

#include "arthurkit/ems.hpp"

namespace arthurkit {

// No rho (x) S_a, rho (x) S_{a+2} with eps product -1 and no rho (x) S_2 with
// eps -1. Requires good parity.
bool tempered_singleton(const TemperedData& t, GroupTag g);

struct TemperedMember {
  TemperedData datum;
  bool generic = false;  // eps trivial
};
// One member per character of the component group. Requires a tempered
// good-parity phi (every twist 0).
std::vector<TemperedMember> tempered_packet(const LParameter& phi);

// True iff every b = 1.
bool has_generic_member(const ArthurParameter& psi);

enum class UnramifiedCondition { None, Shape, Profile, Character };
std::string condition_name(UnramifiedCondition c);  // "(i)", "(ii)", "(iii)"

struct UnramifiedVerdict {
  bool accepted = false;
  UnramifiedCondition failed = UnramifiedCondition::None;
  std::string witness;
  ExtendedMultiSegment e;  // set when accepted
};
// Requires pi of good parity.
UnramifiedVerdict classify_unramified(const LData& pi);

// Rows ([x,-x], floor(x+1/2), +) with multiplicity m_x - m_{x+1}, x descending.
// Throws PreconditionError if the profile is not nonincreasing.
ExtendedMultiSegment ems_from_profile(GroupTag g, const MultiplicityProfile& prof);

struct UnramifiedCertificate {
  ArthurParameter psi;
  ExtendedMultiSegment dual_e;
  TemperedData dual_tempered;  // pi(dual(E)), tempered
  bool dual_is_tempered_shape = false;
  bool singleton = false;
  bool anti_generic = false;
  bool ok() const { return dual_is_tempered_shape && singleton && anti_generic; }
};
// Requires classify_unramified(pi).accepted.
UnramifiedCertificate unramified_parameter_set(const LData& pi);

// The unique unramified member of the packet of psi, if any. Requires good
// parity and every rho an unramified character.
std::optional<LData> unramified_member(const ArthurParameter& psi);

}  // namespace arthurkit
