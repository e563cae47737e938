#include "skelfact/formats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "skelfact/errors.hpp"

namespace skelfact {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int parse_header_int(const std::string& kv, const std::string& key, int lineno) {
  std::string prefix = key + "=";
  if (kv.rfind(prefix, 0) != 0)
    throw ParseError(lineno, "expected " + prefix + "<integer>, got '" + kv + "'");
  try {
    size_t used;
    int value = std::stoi(kv.substr(prefix.size()), &used);
    if (used != kv.size() - prefix.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ParseError(lineno, "bad integer in '" + kv + "'");
  }
}

}  // namespace

FactorizationCertificate parse_certificate(std::istream& in) {
  FactorizationCertificate cert;
  bool have_header = false;
  long long declared_blocks = 0;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (!have_header) {
      std::istringstream ss(line);
      std::string tag, fam_kv, n_kv, l_kv, blocks_kv, extra;
      ss >> tag >> fam_kv >> n_kv >> l_kv >> blocks_kv;
      if (tag != "FACTORIZATION" || blocks_kv.empty())
        throw ParseError(lineno,
                         "expected 'FACTORIZATION family=... n=... l=... blocks=...'");
      if (ss >> extra) throw ParseError(lineno, "trailing content '" + extra + "'");
      if (fam_kv.rfind("family=", 0) != 0)
        throw ParseError(lineno, "expected family=<name>, got '" + fam_kv + "'");
      auto fam = family_from_name(fam_kv.substr(7));
      if (!fam)
        throw ParseError(lineno, "unknown family '" + fam_kv.substr(7) + "'");
      cert.spec.family = *fam;
      cert.spec.n = parse_header_int(n_kv, "n", lineno);
      cert.spec.ell = parse_header_int(l_kv, "l", lineno);
      declared_blocks = parse_header_int(blocks_kv, "blocks", lineno);
      if (cert.spec.n < 1 || cert.spec.ell < 0 || cert.spec.ell >= cert.spec.n)
        throw ParseError(lineno, "skeleton needs 1 <= n and 0 <= l < n");
      if (declared_blocks < 0) throw ParseError(lineno, "negative block count");
      have_header = true;
      continue;
    }

    if (line.rfind("BLOCK", 0) == 0 &&
        (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
      Block blk;
      if (line.size() > 5) blk.label = trim(line.substr(5));
      cert.blocks.push_back(std::move(blk));
      continue;
    }

    if (cert.blocks.empty())
      throw ParseError(lineno, "face line before any BLOCK");
    try {
      cert.blocks.back().faces.push_back(parse_face(cert.spec.family, line));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_header)
    throw ParseError(lineno ? lineno : 1, "missing FACTORIZATION header");
  if (static_cast<long long>(cert.blocks.size()) != declared_blocks)
    throw ParseError(lineno ? lineno : 1,
                     "header declares " + std::to_string(declared_blocks) +
                         " blocks, file has " + std::to_string(cert.blocks.size()));
  return cert;
}

FactorizationCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file: " + path);
  return parse_certificate(in);
}

std::string format_certificate(const FactorizationCertificate& cert) {
  std::ostringstream out;
  out << "FACTORIZATION family=" << family_name(cert.spec.family)
      << " n=" << cert.spec.n << " l=" << cert.spec.ell
      << " blocks=" << cert.blocks.size() << "\n";
  for (const auto& blk : cert.blocks) {
    out << "BLOCK";
    if (!blk.label.empty()) out << ' ' << blk.label;
    out << "\n";
    auto faces = blk.faces;
    std::sort(faces.begin(), faces.end(), face_less);
    for (const auto& f : faces) out << encode_face(f) << "\n";
  }
  return out.str();
}

void write_certificate_file(const FactorizationCertificate& cert,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << format_certificate(cert);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace skelfact
