#ifndef LIOUVILLE_CERT_IO_HPP
#define LIOUVILLE_CERT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "liouville/construct.hpp"
#include "liouville/liouville.hpp"

namespace liouville {

// On-disk evidence document. All big integers are decimal strings; the
// verified region is the certificates array (subjects + witnesses), the tool
// block is metadata (its timestamp is excluded from determinism guarantees).
struct CertificateFile {
  int format_version = 1;
  std::vector<LiouvilleCertificate> certificates;
  std::optional<ConstructionLog> log;
  std::string tool_name = "liou";
  std::string tool_version = "0.1.0";
  std::string timestamp;  // RFC 3339; empty allowed
};

std::string to_json(const CertificateFile& f);
CertificateFile parse_certificate_file(const std::string& json_text);

// Rebuild the subject value from its recipe (raises InvalidCertificate when
// the recipe is missing or not reproducible).
ExactReal rebuild(const RecipePtr& recipe);

// Rebuild every subject and re-check every witness; raises InvalidWitness on
// the first failing witness.
void verify_file(const CertificateFile& f);

}  // namespace liouville

#endif  // LIOUVILLE_CERT_IO_HPP
