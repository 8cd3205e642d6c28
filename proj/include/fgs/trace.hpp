#pragma once

#include <iosfwd>
#include <vector>

namespace fgs {

struct TraceEntry {
  int iteration = 0;        // 1-based
  double energy = 0.0;      // objective at the iterate
  double gap = 0.0;         // ||u - v||_inf of the split variables
  double ms = 0.0;          // wall time of the iteration's passes
  double mean_step = 0.0;   // mean |u_new - u_old| over all samples
};

struct SolverTrace {
  std::vector<TraceEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const TraceEntry& front() const { return entries.front(); }
  const TraceEntry& back() const { return entries.back(); }
  std::vector<double> energies() const;
};

// "iter,energy,gap,ms" header plus one row per entry.
void write_trace_csv(std::ostream& out, const SolverTrace& trace);

}  // namespace fgs
