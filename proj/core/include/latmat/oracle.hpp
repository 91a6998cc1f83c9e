#pragma once

#include <cstdint>
#include <optional>

#include "latmat/classify2.hpp"
#include "latmat/rng.hpp"

namespace latmat {

struct GenSpec {
    RingKind ring = RingKind::Integers;
    std::size_t n = 2;
    std::uint64_t seed = 0;
    int bound = 10;
    std::optional<CaseTag> case_tag;   // family of the structure data to generate
};

// Membership in the cone by a fresh Gauss-Jordan solve of A Y = X,
// checking Y over R+. Deliberately a separate route from
// ConeA::contains, which multiplies by the precomputed adjugate-based
// inverse; the two must always agree.
bool membership_oracle(const ConeA& cone, const Mat& x);

// Random valid cone generator: a product of permutation, unitriangular
// nonnegative and positive-unit-diagonal factors, so the result is
// entrywise nonnegative with unit determinant by construction.
ConeA gen_cone(const GenSpec& spec);

// Random structure data of the requested family, deterministic in the
// seed. The usual family uses the gauge construction below with random
// gauges and positive units; corner and parametric are 2x2 only.
// Parametric data is found by rejection sampling and raises
// ResourceExhausted when the bounded retry budget runs out (over Z this
// is the norm: the unit constraints have no solutions for most (a, b)).
StructureData gen_structure_data(const GenSpec& spec);

// Deterministic gauge construction q_ij = g_i u_ij / g_j with positive
// gauges g and positive units u; the structure conditions hold by
// construction for D = I. H may be any invertible matrix over K.
StructureData make_gauge_structure(const Mat& h, const std::vector<FieldElem>& gauges,
                                   const Mat& units);

// Shared random element helpers (deterministic in the stream state).
RingElem random_nonneg_elem(SeededStream& s, RingKind kind, int bound);
RingElem random_positive_elem(SeededStream& s, RingKind kind, int bound);
RingElem random_signed_elem(SeededStream& s, RingKind kind, int bound);
RingElem random_positive_unit(SeededStream& s, RingKind kind, int exponent_bound);
FieldElem random_positive_field_elem(SeededStream& s, RingKind kind, int bound);
Mat random_ring_matrix(SeededStream& s, RingKind kind, std::size_t n, int bound);
Mat random_nonneg_matrix(SeededStream& s, RingKind kind, std::size_t n, int bound);

}  // namespace latmat
