#include "scalartail/csv.hpp"

#include <fstream>

#include "scalartail/errors.hpp"

namespace scalartail {

namespace {

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open output file: " + path);
  out.precision(17);
  return out;
}

void put4(std::ofstream& out, const FourVector& v) {
  for (int i = 0; i < 4; ++i) out << ',' << v[i];
}

}  // namespace

void write_trajectory_csv(const std::vector<StepRecord>& records,
                          const std::string& path) {
  auto out = open_csv(path);
  out << "tau,z0,z1,z2,z3,u0,u1,u2,u3,a0,a1,a2,a3,m,res_p0,res_p1,res_p2,"
         "res_p3\n";
  for (const auto& r : records) {
    out << r.tau;
    put4(out, r.z);
    put4(out, r.u);
    put4(out, r.a);
    out << ',' << r.m;
    put4(out, r.res_p);
    out << '\n';
  }
}

void write_flows_csv(const std::vector<StepRecord>& records,
                     const std::string& path) {
  auto out = open_csv(path);
  out << "tau,pdir0,pdir1,pdir2,pdir3,ptail0,ptail1,ptail2,ptail3,"
         "pbound0,pbound1,pbound2,pbound3,M01,M02,M03,M12,M13,M23\n";
  for (const auto& r : records) {
    out << r.tau;
    put4(out, r.p_dir_rad);
    put4(out, r.p_tail_rad);
    put4(out, r.p_tail_bound);
    for (int i = 0; i < 6; ++i) out << ',' << r.M_rad.c[i];
    out << '\n';
  }
}

void write_field_map_csv(const std::vector<FieldMapRow>& rows,
                         const std::string& path) {
  auto out = open_csv(path);
  out << "x0,x1,x2,x3,phi,grad0,grad1,grad2,grad3,direct0,direct1,direct2,"
         "direct3,tail0,tail1,tail2,tail3\n";
  for (const auto& r : rows) {
    out << r.x.t << ',' << r.x.x << ',' << r.x.y << ',' << r.x.z;
    out << ',' << r.phi;
    put4(out, r.strength.grad);
    put4(out, r.strength.direct_part);
    put4(out, r.strength.tail_part);
    out << '\n';
  }
}

}  // namespace scalartail
