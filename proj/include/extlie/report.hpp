#pragma once

#include <json.hpp>

#include "extlie/certificate.hpp"
#include "extlie/classify.hpp"

namespace extlie {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "extlie";
inline constexpr const char* kToolVersion = "0.1.0";

// Vectors are arrays of canonical coefficient strings, as in algebra files.
Json to_json(const Vector& v);
Json to_json(const Subspace& s);
Json to_json(const ValidationReport& r);
Json to_json(const SimplicityVerdict& v);
Json to_json(const ExtremalStatus& s);
Json to_json(const ScanResult& r);
Json to_json(const Sl2Triple& t, const WalesCertificate& c);
Json to_json(const HGrading& g);
Json to_json(const DichotomyResult& d);
Json to_json(const ExtremalGenCertificate& c);
Json to_json(const WittIsoReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const freealg::CertificateReport& r);

}  // namespace extlie
