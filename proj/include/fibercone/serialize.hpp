#pragma once

#include <json.hpp>

#include "fibercone/closed_form.hpp"
#include "fibercone/depth.hpp"
#include "fibercone/fiber.hpp"

namespace fibercone {

using Json = nlohmann::ordered_json;

Json to_json(const ExponentVector& v);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const ZMonomial& z);
Json to_json(const JGenerator& g);
Json to_json(const KernelReport& report);
Json to_json(const Certification& cert);
Json to_json(const Classification& cl);
Json to_json(const DepthCertificate& cert);

/// "Pending", "CertifiedUpTo(5)" or "Mismatch".
std::string certification_label(const Certification& cert);

}  // namespace fibercone
