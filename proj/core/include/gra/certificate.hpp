#pragma once

#include <cstddef>
#include <vector>

#include "gra/graph.hpp"
#include "gra/sums.hpp"

namespace gra {

/// Terms `first` and `second` cancel: `isomorphism` maps the first graph onto
/// the second, and the edge permutation it induces has the sign that makes
/// the two signed terms opposite.
struct CancellingPair {
  std::size_t first;
  std::size_t second;
  VertexPermutation isomorphism;
};

/// A perfect or partial pairing of raw terms. `pairs` and `residual` together
/// partition the term indices.
struct PairingCertificate {
  std::vector<CancellingPair> pairs;
  std::vector<std::size_t> residual;

  bool identically_zero() const { return residual.empty(); }
};

/// Pairs the terms of s, all of which must have coefficient +1 or -1, into
/// cancelling pairs within each isomorphism class. A class of non-zero graphs
/// splits by the sign of (coefficient x canonical sign) and pairs across the
/// split; a class of zero graphs pairs in any order, using an odd automorphism
/// to fix up the sign where needed. The matching is maximum, so the residual
/// is empty iff s cancels without dropping any unpaired zero graph.
PairingCertificate cancellation_certificate(const RawSum& s);

/// Checks a certificate against the sum it claims to cancel.
bool verify_certificate(const RawSum& s, const PairingCertificate& cert);

}  // namespace gra
