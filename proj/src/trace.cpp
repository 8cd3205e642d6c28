#include "fgs/trace.hpp"

#include <iomanip>
#include <ostream>

namespace fgs {

std::vector<double> SolverTrace::energies() const {
  std::vector<double> e;
  e.reserve(entries.size());
  for (const auto& t : entries) e.push_back(t.energy);
  return e;
}

void write_trace_csv(std::ostream& out, const SolverTrace& trace) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << "iter,energy,gap,ms\n" << std::setprecision(17);
  for (const auto& t : trace.entries)
    out << t.iteration << ',' << t.energy << ',' << t.gap << ','
        << std::setprecision(6) << t.ms << std::setprecision(17) << '\n';
  out.flags(flags);
  out.precision(prec);
}

}  // namespace fgs
