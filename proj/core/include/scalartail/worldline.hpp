#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scalartail/four_vector.hpp"

namespace scalartail {

struct WorldlineSample {
  double tau = 0.0;
  FourVector z;  // position
  FourVector u;  // four-velocity, u.u = -1
  FourVector a;  // four-acceleration, u.a = 0
};

// Timelike worldline given as ordered proper-time samples with C1 Hermite
// interpolation. Before the first sample the motion is exactly uniform with
// prehistory_velocity (this closes the infinite-past tail integrals
// analytically). An optional uniform post-history closure extends the line to
// tau = +inf, which the advanced potentials need; without it, evaluation past
// the last sample raises HistoryExhausted.
class Worldline {
 public:
  Worldline(std::vector<WorldlineSample> samples,
            std::optional<FourVector> prehistory_velocity = std::nullopt,
            std::optional<FourVector> posthistory_velocity = std::nullopt);

  static Worldline uniform_line(const FourVector& z0, const FourVector& u,
                                double tau0, double tau1, int n_samples);

  const std::vector<WorldlineSample>& samples() const { return samples_; }
  double tau_first() const { return samples_.front().tau; }
  double tau_last() const { return samples_.back().tau; }
  const FourVector& prehistory_velocity() const { return prehistory_u_; }
  const std::optional<FourVector>& posthistory_velocity() const {
    return posthistory_u_;
  }
  bool has_posthistory() const { return posthistory_u_.has_value(); }

  // Interpolated sample; u is renormalized to u.u = -1 and a adjusted so that
  // u.a = 0 holds exactly for the renormalized pair.
  WorldlineSample eval(double tau) const;

  // Proper time of the intersection of the worldline with the past / future
  // light cone of x. |dtau| <= ~1e-12. Raises OnWorldline if x lies on the
  // line, HistoryExhausted if the intersection is not inside the recorded
  // history (plus closures).
  double retarded_time(const FourVector& x) const;
  double advanced_time(const FourVector& x) const;

  // Single-writer growth for the integrator.
  void append(const WorldlineSample& s);
  void pop_back();
  void replace_back(const WorldlineSample& s);

 private:
  double cone_time(const FourVector& x, bool retarded) const;
  double time_coordinate_root(double x0) const;

  std::vector<WorldlineSample> samples_;
  FourVector prehistory_u_;
  std::optional<FourVector> posthistory_u_;
};

// Retarded distance r = -(K.u) with K = x - s.z; positive when s lies in the
// causal past of x.
double retarded_distance(const FourVector& x, const WorldlineSample& s);

// CSV persistence, columns tau,z0..z3,u0..u3,a0..a3 with a header row.
Worldline load_worldline_csv(const std::string& path);
void save_worldline_csv(const Worldline& w, const std::string& path);

}  // namespace scalartail
