#pragma once

#include <string>
#include <vector>

#include "scalartail/dynamics.hpp"
#include "scalartail/fields.hpp"

namespace scalartail {

// Trajectory file: tau,z0..3,u0..3,a0..3,m,res_p0..3
void write_trajectory_csv(const std::vector<StepRecord>& records,
                          const std::string& path);

// Flow trace: tau,pdir0..3,ptail0..3,pbound0..3,M01,M02,M03,M12,M13,M23
// (M is the total radiated angular momentum, direct plus tail).
void write_flows_csv(const std::vector<StepRecord>& records,
                     const std::string& path);

struct FieldMapRow {
  FourVector x;
  double phi = 0.0;
  FieldStrength strength;
};

// Field map: x0,x1,x2,x3,phi,grad0..3,direct0..3,tail0..3
void write_field_map_csv(const std::vector<FieldMapRow>& rows,
                         const std::string& path);

}  // namespace scalartail
