#include "fibercone/serialize.hpp"

namespace fibercone {

Json to_json(const ExponentVector& v) { return Json(v.values()); }

Json to_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.gens()) out.push_back(to_json(g));
  return out;
}

Json to_json(const ZMonomial& z) { return Json(z.values()); }

Json to_json(const JGenerator& g) {
  Json out;
  out["degree"] = g.degree();
  out["kind"] = g.is_monomial() ? "monomial" : "binomial";
  out["lead"] = to_json(g.lead());
  if (g.is_binomial()) out["trail"] = to_json(g.trail());
  out["text"] = g.to_string();
  return out;
}

Json to_json(const KernelReport& report) {
  Json out;
  out["ideal"] = to_json(report.ideal);
  out["degree_bound"] = report.degree_bound;
  Json gens = Json::array();
  for (const auto& g : report.generators()) gens.push_back(to_json(g));
  out["generators"] = std::move(gens);
  out["mu_J"] = report.mu();
  out["mu_powers"] = report.mu_powers;
  out["stability_window"] = report.stability_window;
  out["statement"] = "complete up to degree " + std::to_string(report.degree_bound);
  return out;
}

std::string certification_label(const Certification& cert) {
  switch (cert.status) {
    case CertificationStatus::Pending: return "Pending";
    case CertificationStatus::CertifiedUpTo: return "CertifiedUpTo(" + std::to_string(cert.degree) + ")";
    case CertificationStatus::Mismatch: return "Mismatch";
  }
  return "?";
}

Json to_json(const Certification& cert) {
  Json out;
  out["status"] = certification_label(cert);
  if (cert.status != CertificationStatus::Pending) out["degree"] = cert.degree;
  if (!cert.detail.empty()) out["detail"] = cert.detail;
  if (cert.status == CertificationStatus::Mismatch) {
    Json missing = Json::array(), unexpected = Json::array();
    for (const auto& g : cert.missing) missing.push_back(g.to_string());
    for (const auto& g : cert.unexpected) unexpected.push_back(g.to_string());
    out["missing"] = std::move(missing);
    out["unexpected"] = std::move(unexpected);
  }
  return out;
}

Json to_json(const Classification& cl) {
  Json out;
  out["family"] = to_string(cl.family);
  out["case"] = cl.case_tag ? Json(*cl.case_tag) : Json(nullptr);
  if (cl.halfspace) out["halfspace"] = to_string(*cl.halfspace);
  Json params = Json::object();
  for (const auto& [k, v] : cl.params) params[k] = v;
  out["params"] = std::move(params);
  Json gens = Json::array();
  for (const auto& g : cl.predicted) gens.push_back(to_json(g));
  out["predicted_generators"] = std::move(gens);
  out["predicted_depth"] = cl.predicted_depth;
  out["predicted_cm"] = cl.predicted_cm ? Json(*cl.predicted_cm) : Json("Unknown");
  out["certification"] = to_json(cl.certification);
  out["ideal"] = to_json(cl.ideal);
  if (!cl.notes.empty()) out["notes"] = cl.notes;
  return out;
}

Json to_json(const DepthCertificate& cert) {
  Json out;
  out["depth"] = cert.depth;
  out["dimension"] = cert.dimension;
  out["cohen_macaulay"] = cert.cohen_macaulay();
  out["regular_sequence"] = cert.regular_sequence;
  if (cert.socle_witness) {
    Ring ring(cert.variables, cert.prime, MonomialOrder::grevlex(cert.variables.size()));
    out["socle_witness"] = format_polynomial(*cert.socle_witness, ring);
  } else {
    out["socle_witness"] = nullptr;
  }
  out["variables"] = cert.variables;
  out["trials"] = cert.trials;
  out["prime"] = cert.prime;
  out["seed"] = cert.seed;
  return out;
}

}  // namespace fibercone
