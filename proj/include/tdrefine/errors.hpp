#pragma once

#include <stdexcept>
#include <string>

namespace tdr {

// Bad user input: malformed files, out-of-range parameters, invalid
// decompositions passed on the command line. CLI exit code 1.
class UserError : public std::runtime_error {
public:
    explicit UserError(const std::string& msg) : std::runtime_error(msg) {}
};

// A bound or proof certificate that the construction guarantees failed to
// hold at runtime. Always an implementation bug, never a user error.
// CLI exit code 2.
class CertificateError : public std::logic_error {
public:
    CertificateError(const std::string& certificate, const std::string& detail)
        : std::logic_error("certificate '" + certificate + "' failed: " + detail),
          name(certificate) {}
    std::string name;
};

inline void certify(bool ok, const char* certificate, const std::string& detail = "") {
    if (!ok) throw CertificateError(certificate, detail);
}

}  // namespace tdr
