#pragma once

#include "oscul/bigint.hpp"
#include "oscul/partition.hpp"

namespace oscul {

/// Littlewood-Richardson coefficient c^nu_{lam,mu}: the number of
/// semistandard fillings of nu/lam with content mu whose right-to-left,
/// top-to-bottom reading word is a lattice word. Zero when the weights do
/// not add up or lam is not contained in nu.
///
/// Results are memoized in a process-wide table; concurrent callers are safe.
BigInt lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

}  // namespace oscul
