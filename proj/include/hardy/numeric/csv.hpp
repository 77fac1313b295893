#pragma once

#include <iosfwd>
#include <string>

#include "hardy/numeric/integrator.hpp"

namespace hardy::numeric {

/// Header `t,y,yp`, one row per accepted step.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

/// Header `index,t_zero`.
void write_zeros_csv(const Trajectory& traj, std::ostream& out);

/// %.17g, enough to round-trip any double.
std::string format_double(double v);

}  // namespace hardy::numeric
