#pragma once

#include <iosfwd>

#include "logenergy/rmt/sampling.hpp"

namespace logenergy {

/// CSV with header replica_index,eigenvalue_index,re,im.
void write_spectrum_csv(std::ostream& out, const SpectrumBatch& batch);
/// Inverse of write_spectrum_csv; seed and hermitian flag are not stored.
SpectrumBatch read_spectrum_csv(std::istream& in);

}  // namespace logenergy
