#ifndef SPINORLAB_CSV_HPP
#define SPINORLAB_CSV_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "spinorlab/scenario.hpp"

namespace spinorlab {

/// 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "eta,omega,theta_rad,phi_rad,cos2_half_theta\n";
  for (const auto& r : rows)
    os << format_double(r.eta) << ',' << format_double(r.omega) << ',' << format_double(r.theta)
       << ',' << format_double(r.phi) << ',' << format_double(r.cos2_half_theta) << '\n';
}

inline void write_rest_curve_csv(std::ostream& os, const std::vector<RestParticleRow>& rows) {
  os << "omega,theta_rad,cos2_half_theta\n";
  for (const auto& r : rows)
    os << format_double(r.omega) << ',' << format_double(r.theta) << ','
       << format_double(r.cos2_half_theta) << '\n';
}

}  // namespace spinorlab

#endif  // SPINORLAB_CSV_HPP
