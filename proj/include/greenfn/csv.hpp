#pragma once

// Plot-ready text output: CSV tables with a header row, LF endings, values
// printed to a requested number of significant digits, and JSON-lines
// records for the benchmark. Deterministic for fixed inputs.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "greenfn/closed_forms.hpp"
#include "greenfn/random_walk.hpp"
#include "greenfn/util.hpp"

namespace greenfn {

inline std::string format_value(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return std::string(buf);
}

inline void write_cycle_csv(std::ostream& os, int m, int digits) {
  os << "a,value\n";
  for (int a = 0; a < m; ++a)
    os << a << ',' << format_value(cycle_green(m, a), digits) << '\n';
}

inline void write_galpha_csv(std::ostream& os, int m, double alpha,
                             int digits) {
  os << "a,value\n";
  CycleShiftKernel k = make_shift_kernel(m, alpha);
  for (int a = 0; a < m; ++a)
    os << a << ',' << format_value(shift_kernel_eval(k, a), digits) << '\n';
}

inline void write_torus_csv(std::ostream& os, int m, int n, int digits) {
  os << "dx,dy,value\n";
  for (int dx = 0; dx < m; ++dx)
    for (int dy = 0; dy < n; ++dy)
      os << dx << ',' << dy << ','
         << format_value(torus_green(m, n, dx, dy), digits) << '\n';
}

inline void write_ttorus_csv(std::ostream& os, const TorusSpec& spec,
                             int digits, int threads = 1) {
  TorusPlan plan(spec);
  std::vector<std::vector<int>> disps;
  for_each_index(spec.dims, [&](const std::vector<int>& d) { disps.push_back(d); });
  std::vector<double> values(disps.size());
  parallel_for(static_cast<int>(disps.size()), threads,
               [&](int i) { values[i] = plan.eval(disps[i]); });
  for (int s = 1; s <= spec.order(); ++s) os << 'd' << s << ',';
  os << "value\n";
  for (std::size_t i = 0; i < disps.size(); ++i) {
    for (int d : disps[i]) os << d << ',';
    os << format_value(values[i], digits) << '\n';
  }
}

inline void write_hitting_csv(std::ostream& os, const HittingTable& t,
                              int digits) {
  os << "x,y,Q\n";
  os << "# max=" << format_value(t.max_value, digits) << '\n';
  for (int x = 0; x < t.q.rows(); ++x)
    for (int y = 0; y < t.q.cols(); ++y)
      os << x << ',' << y << ',' << format_value(t.q(x, y), digits) << '\n';
}

struct BenchRecord {
  long long n = 0;
  int t = 0;
  std::string mode;
  long long entries_computed = 0;
  long long nanos_total = 0;
};

inline void write_bench_record(std::ostream& os, const BenchRecord& b) {
  double per = b.entries_computed > 0
                   ? static_cast<double>(b.nanos_total) / b.entries_computed
                   : 0.0;
  os << "{\"n\":" << b.n << ",\"t\":" << b.t << ",\"mode\":\"" << b.mode
     << "\",\"entries_computed\":" << b.entries_computed
     << ",\"nanos_total\":" << b.nanos_total
     << ",\"nanos_per_entry\":" << format_value(per, 6) << "}\n";
}

}  // namespace greenfn
