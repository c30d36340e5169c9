#include "logenergy/rmt/spectrum_io.hpp"

#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "logenergy/errors.hpp"

namespace logenergy {

void write_spectrum_csv(std::ostream& out, const SpectrumBatch& batch) {
  out << "replica_index,eigenvalue_index,re,im\n";
  out << std::setprecision(17);
  for (unsigned r = 0; r < batch.replica_count; ++r)
    for (unsigned i = 0; i < batch.n; ++i) {
      const auto z = batch.spectra(i, r);
      out << r << ',' << i << ',' << z.real() << ',' << z.imag() << '\n';
    }
}

SpectrumBatch read_spectrum_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("replica_index,eigenvalue_index,re,im", 0) != 0)
    throw DomainError("read_spectrum_csv: missing header");
  std::map<unsigned, std::map<unsigned, std::complex<double>>> cells;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    unsigned r = 0, i = 0;
    double re = 0, im = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ls >> r >> c1 >> i >> c2 >> re >> c3 >> im) || c1 != ',' || c2 != ',' || c3 != ',')
      throw DomainError("read_spectrum_csv: malformed line '" + line + "'");
    cells[r][i] = {re, im};
  }
  if (cells.empty()) throw DomainError("read_spectrum_csv: no data");
  SpectrumBatch batch;
  batch.replica_count = static_cast<unsigned>(cells.size());
  batch.n = static_cast<unsigned>(cells.begin()->second.size());
  batch.spectra.resize(batch.n, batch.replica_count);
  bool real = true;
  unsigned col = 0;
  for (const auto& [r, row] : cells) {
    if (r != col || row.size() != batch.n) throw DomainError("read_spectrum_csv: ragged or non-contiguous data");
    unsigned k = 0;
    for (const auto& [i, z] : row) {
      if (i != k) throw DomainError("read_spectrum_csv: non-contiguous eigenvalue index");
      batch.spectra(k++, col) = z;
      real = real && z.imag() == 0.0;
    }
    ++col;
  }
  batch.hermitian = real;
  return batch;
}

}  // namespace logenergy
