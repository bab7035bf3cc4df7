#include "typek/golden.hpp"

#include "typek/picard_fuchs.hpp"

#include <sstream>

namespace typek {

namespace {

std::string dump_d12(int trunc) {
  D12Model m = compute_d12(trunc);
  std::vector<std::string> z = {"z1", "z2"}, q = {"q1", "q2"};
  std::ostringstream os;
  os << "family = pf-d12\n";
  os << "trunc = " << trunc << "\n";
  os << "phi0 = " << m.phi0.to_string(z) << "\n";
  os << "r1 = " << m.r1.to_string(z) << "\n";
  os << "r2 = " << m.r2.to_string(z) << "\n";
  os << "q1 = " << m.maps.q_of_z[0].to_string(z) << "\n";
  os << "q2 = " << m.maps.q_of_z[1].to_string(z) << "\n";
  os << "z1 = " << m.maps.z_of_q[0].to_string(q) << "\n";
  os << "z2 = " << m.maps.z_of_q[1].to_string(q) << "\n";
  os << "k11 = " << m.k11.to_string(q) << "\n";
  os << "k12 = " << m.k12.to_string(q) << "\n";
  os << "k22 = " << m.k22.to_string(q) << "\n";
  return os.str();
}

std::string dump_d8(int trunc) {
  MultiSeries phi0 = solve_regular(d8_basis_operators(), trunc);
  std::ostringstream os;
  os << "family = pf-d8\n";
  os << "trunc = " << trunc << "\n";
  os << "phi0 = " << phi0.to_string({"z1", "z2", "z3"}) << "\n";
  return os.str();
}

std::string dump_elliptic(int steps) {
  ThetaOperator op = elliptic_operator();
  MultiSeries phi0 = solve_regular({op}, steps);
  MultiSeries r = solve_log({op}, phi0, 0);
  MirrorMaps maps = mirror_maps(phi0, {r});
  Rat target = make_rat(Int(steps), Int(6));
  std::ostringstream os;
  os << "family = pf-elliptic\n";
  os << "trunc = " << steps << "\n";
  os << "phi0 = " << phi0.to_string({"z"}) << "\n";
  os << "r = " << r.to_string({"z"}) << "\n";
  os << "q = " << maps.q_of_z[0].to_string({"z"}) << "\n";
  os << "z = " << maps.z_of_q[0].to_string({"q"}) << "\n";
  os << "z_eta = " << elliptic_eta_z_of_q(target).to_string() << "\n";
  os << "phi0_eta = " << elliptic_eta_phi0_of_q(target).to_string() << "\n";
  return os.str();
}

}  // namespace

std::string golden_dump(const std::string& family, int trunc) {
  if (trunc < 2) throw Error("golden_dump: truncation must be >= 2");
  if (family == "pf-d12") return dump_d12(trunc);
  if (family == "pf-d8") return dump_d8(trunc);
  if (family == "pf-elliptic") return dump_elliptic(trunc);
  throw Error("golden_dump: unknown family '" + family + "'");
}

}  // namespace typek
