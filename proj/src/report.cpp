#include "eigmult/report.hpp"

namespace eigmult {

Json number_json(double x) { return x == 0.0 ? 0.0 : x; }

Json complex_json(Complex z) {
  Json j;
  j["re"] = number_json(z.real());
  j["im"] = number_json(z.imag());
  return j;
}

Json poly_json(const QPoly& p) {
  Json j = Json::array();
  for (int k = 0; k <= p.degree(); ++k) j.push_back(to_string(p.coeff(k)));
  return j;
}

Json poly_json(const UniPoly<double>& p) {
  Json j = Json::array();
  for (int k = 0; k <= p.degree(); ++k) j.push_back(number_json(p.coeff(k)));
  return j;
}

Json spectrum_json(const Spectrum& s) {
  Json j;
  const bool exact = s.mode == Mode::Exact;
  j["mode"] = exact ? "exact" : "numeric";
  j["degree"] = s.degree;
  j["charpoly"] = exact ? poly_json(s.charpoly) : poly_json(s.charpoly_numeric);
  Json eigs = Json::array();
  for (const auto& r : s.eigs.roots) {
    Json e = complex_json(r.value);
    e["am"] = r.multiplicity;
    if (r.exact) e["value"] = to_string(r.exact_value);
    if (!s.eigs.exact_multiplicities) e["spread"] = number_json(r.spread);
    eigs.push_back(std::move(e));
  }
  j["eigs"] = std::move(eigs);
  j["multiplicities"] = s.eigs.exact_multiplicities ? "exact" : "clustered";
  if (!exact) {
    j["cluster_tol"] = s.eigs.tolerance;
    j["residual"] = number_json(s.residual);
    j["flagged"] = s.flagged;
  }
  return j;
}

Json point_json(const ProjectivePoint& p) {
  Json j = Json::array();
  if (p.exact) {
    for (const auto& c : p.coords) j.push_back(to_string(c));
  } else {
    for (const auto& c : p.approx) j.push_back(complex_json(c));
  }
  return j;
}

Json eigenvariety_json(const EigenvarietyReport& r) {
  Json j;
  j["lambda"] = r.lambda;
  j["in_spectrum"] = r.in_spectrum;
  j["gm"] = r.gm;
  j["kappa"] = r.kappa;
  Json cs = Json::array();
  for (const auto& c : r.components) {
    Json e;
    e["dim"] = c.dimension;
    if (c.whole_space) e["whole_space"] = true;
    if (c.point) e["point"] = point_json(*c.point);
    if (c.factor) e["factor"] = to_string(*c.factor);
    if (!c.factored) e["factored"] = false;
    if (!r.exact) e["residual"] = number_json(c.residual);
    cs.push_back(std::move(e));
  }
  j["components"] = std::move(cs);
  j["exact"] = r.exact;
  j["complete"] = r.complete;
  if (r.common_root_count >= 0) j["common_root_count"] = r.common_root_count;
  if (!r.exact) j["max_residual"] = number_json(r.max_residual);
  return j;
}

}  // namespace eigmult
