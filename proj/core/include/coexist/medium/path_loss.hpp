#ifndef COEXIST_MEDIUM_PATH_LOSS_HPP
#define COEXIST_MEDIUM_PATH_LOSS_HPP

#include <cmath>
#include <cstdint>

namespace coexist {

enum class PathLossKind { inh_office, umi_street_canyon };

/// 3GPP channel-model LOS closed forms (TR 38.901 style):
///   InH-Office:        PL = 32.4 + 17.3 log10(d3D) + 20 log10(fc[GHz])
///   UMi-StreetCanyon:  PL = 32.4 + 21.0 log10(d3D) + 20 log10(fc[GHz])
/// Loss is strictly increasing in distance for a fixed carrier. Distances
/// below 1 m clamp to 1 m (counted so the caller can log a warning).
struct PathLossModel {
  PathLossKind kind = PathLossKind::inh_office;
  double carrier_ghz = 5.18;

  double loss_db(double d3d_m, std::uint64_t* clamp_count = nullptr) const {
    if (d3d_m < 1.0) {
      d3d_m = 1.0;
      if (clamp_count) ++*clamp_count;
    }
    const double dist_coeff =
        kind == PathLossKind::inh_office ? 17.3 : 21.0;
    return 32.4 + dist_coeff * std::log10(d3d_m) +
           20.0 * std::log10(carrier_ghz);
  }
};

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

/// Thermal noise floor over the given bandwidth: -174 dBm/Hz plus receiver
/// noise figure.
inline double noise_floor_dbm(double bandwidth_mhz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(bandwidth_mhz * 1e6) + noise_figure_db;
}

}  // namespace coexist

#endif  // COEXIST_MEDIUM_PATH_LOSS_HPP
