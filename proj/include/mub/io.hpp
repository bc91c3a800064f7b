// io.hpp — JSON file formats: "mvs-1" for vector systems and "cert-1" for
// rigidity certificates. Reals are serialized with 17 significant digits, so
// parse(serialize(x)) reproduces every double bit-exactly.
#pragma once

#include <stdexcept>
#include <string>

#include "mub/rigidity.hpp"
#include "mub/system.hpp"

namespace mub::io {

// Malformed JSON or schema violations (missing fields, wrong format_version,
// inconsistent counts).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

std::string system_to_json(const UnitVectorSystem& sys);
UnitVectorSystem system_from_json(const std::string& text);
void write_system(const UnitVectorSystem& sys, const std::string& path);
UnitVectorSystem read_system(const std::string& path);

std::string certificate_to_json(const RigidityCertificate& cert);
RigidityCertificate certificate_from_json(const std::string& text);
void write_certificate(const RigidityCertificate& cert, const std::string& path);
RigidityCertificate read_certificate(const std::string& path);

}  // namespace mub::io
