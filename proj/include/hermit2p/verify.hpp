// Formula-vs-ground-truth verification suites at the exhaustively checkable
// field sizes q = 2 and q = 3.
//
//   duality    closed-form dual divisor vs the nullspace dual, all canonical
//              divisors of degree 0..n-1
//   distance   closed-form minimum distance vs exhaustive enumeration for the
//              two-point family (indices beyond the enumeration budget are
//              reported as skipped, not as mismatches)
//   hermitian  Gram-matrix self-orthogonality for iP-jQ, j in [1,q],
//              i <= q^2-2
//   aqecc      family parameters vs oracle-backed construction over the
//              (r1, r2) grid
//   all        every suite above, in that order
//
// Every comparison is reported. all_match is false when any comparison
// deviates from the closed form — including deviations where the closed form
// is only a strict lower bound, which the report labels as such.

#pragma once

#include <string>

#include "hermit2p/oracle.hpp"

namespace hermit2p {

struct VerifyResult {
  std::string report;
  bool all_match = true;
};

VerifyResult verify_suite(unsigned q, const std::string& suite,
                          const OracleOptions& opt = {});

}  // namespace hermit2p
