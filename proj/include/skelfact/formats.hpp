#pragma once

#include <iosfwd>
#include <string>

#include "skelfact/factorize.hpp"

namespace skelfact {

// Certificate text format:
//   FACTORIZATION family=<simplex|cross|cube> n=<n> l=<ell> blocks=<r>
//   BLOCK <optional label>
//   <one face encoding per line>
//   ...
// '#' comments and blank lines are ignored. Serialization emits faces within
// each block in canonical ascending order, so parse(format(x)) == x on
// canonical certificates. Parse errors carry 1-based line numbers.
FactorizationCertificate parse_certificate(std::istream& in);
FactorizationCertificate read_certificate_file(const std::string& path);
std::string format_certificate(const FactorizationCertificate& cert);
void write_certificate_file(const FactorizationCertificate& cert,
                            const std::string& path);

}  // namespace skelfact
