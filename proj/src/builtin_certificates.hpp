#pragma once

#include <string>
#include <vector>

namespace hraag::detail {

struct BuiltinCertificateSource {
  std::string name;
  std::string json;
};

/// Generated at configure time from data/certificates/v1.
const std::vector<BuiltinCertificateSource>& builtin_certificate_sources();

}  // namespace hraag::detail
