// Extended multi-segments: rows ([A,B], l, eta) per rho, condition (L),
// pi(E) for (L)-classes and the dual.
#pragma once

#include "arthurkit/ldata.hpp"

namespace arthurkit {

struct ExtendedRow {
  HalfInt A;
  HalfInt B;
  std::int64_t l = 0;
  int eta = 1;

  std::int64_t a() const { return (A + B).to_integer() + 1; }
  std::int64_t b() const { return (A - B).to_integer() + 1; }
  // l = b/2 makes eta irrelevant up to weak equivalence.
  bool eta_free() const { return 2 * l == b(); }

  friend bool operator==(const ExtendedRow&, const ExtendedRow&) = default;
};

struct EmsBlock {
  RhoSymbol rho;
  std::vector<ExtendedRow> rows;  // in the admissible order, first = smallest

  friend bool operator==(const EmsBlock& l, const EmsBlock& r) {
    return l.rho == r.rho && l.rows == r.rows;
  }
};

struct ExtendedMultiSegment {
  GroupTag group;
  std::vector<EmsBlock> blocks;  // sorted by rho, one block per rho

  std::size_t row_count() const;
  friend bool operator==(const ExtendedMultiSegment&, const ExtendedMultiSegment&) = default;
};

// Sorts blocks by rho and merges blocks with the same rho (rows appended).
ExtendedMultiSegment make_ems(GroupTag group, std::vector<EmsBlock> blocks);

enum class OrderMode { P, Pprime };

// P: A_i > A_j and B_i > B_j forces i after j. P': B_i > B_j forces i after j.
bool order_check(const ExtendedMultiSegment& e, OrderMode mode);
bool order_check(const std::vector<ExtendedRow>& rows, OrderMode mode);

// prod (-1)^(floor(b/2) + l) eta^b = 1.
bool sign_condition(const ExtendedMultiSegment& e);

// rho (x) S_{A+B+1} (x) S_{A-B+1} per row. Throws InputError unless the
// parameter has good parity and dimension N.
ArthurParameter parameter_of(const ExtendedMultiSegment& e);

// Row shape, 0 <= l <= b/2, order (P), good parity, dimension, sign condition.
Report check_ems(const ExtendedMultiSegment& e);

bool weak_equivalent(const ExtendedMultiSegment& e1, const ExtendedMultiSegment& e2);

// (1) A+B nondecreasing, (2) l = floor(b/2), (3) rows with equal A+B and both
// A-B even share eta.
bool satisfies_L(const ExtendedMultiSegment& e);

// Requires satisfies_L.
LData pi_of_L(const ExtendedMultiSegment& e);

// Rows of psi for each rho, sorted by (B, A). Satisfies (P').
ExtendedMultiSegment canonical_support(const ArthurParameter& psi);

// All (L)-classes with support psi, one representative per weak equivalence
// class. Rows are ordered by (A+B, B), which is admissible and keeps (1).
std::vector<ExtendedMultiSegment> l_class(const ArthurParameter& psi);

// alpha_i = sum_{j<i} a_j, beta_i = sum_{j>i} b_j within one rho.
struct DualShift {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
};
std::vector<DualShift> dual_shifts(const std::vector<ExtendedRow>& rows);

// Requires (P'). Throws PreconditionError on an order violation or when some
// l' falls below zero (then the representation is 0 and has no dual datum).
ExtendedMultiSegment dual(const ExtendedMultiSegment& e);

// Omega ascending and Omega-bar descending, as exponents of one rho.
std::pair<std::vector<HalfInt>, std::vector<HalfInt>> omega_sets(const std::vector<ExtendedRow>& rows);

}  // namespace arthurkit
