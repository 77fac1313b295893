#include "hardy/numeric/csv.hpp"

#include <cstdio>
#include <ostream>

namespace hardy::numeric {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,y,yp\n";
  for (const auto& s : traj.samples) {
    out << format_double(s.t) << ',' << format_double(s.y) << ',' << format_double(s.yp) << '\n';
  }
}

void write_zeros_csv(const Trajectory& traj, std::ostream& out) {
  out << "index,t_zero\n";
  for (std::size_t i = 0; i < traj.zeros.size(); ++i) {
    out << i << ',' << format_double(traj.zeros[i]) << '\n';
  }
}

}  // namespace hardy::numeric
