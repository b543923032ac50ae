#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "kac/hopf.hpp"

namespace kac::io {

using json = nlohmann::json;

// Raised for malformed input files; mapped to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result of reading an algebra file. Hopf descriptors set hopf; a bare
// structure algebra (raw tensors without comultiplication, or crossed_base)
// sets only alg. group is set for group builders.
struct AlgebraFile {
    std::string kind;
    HopfPtr hopf;
    StructPtr alg;
    std::optional<CayleyTable> group;
    // Set for crossed_base: the Hopf algebra the base was built from.
    HopfPtr crossed_of;
};

AlgebraFile parse_algebra(const json& j);
AlgebraFile load_algebra(const std::string& path);

// Named groups accepted in place of a Cayley table: Zn, Z2xZ2, S3.
CayleyTable named_group(const std::string& name);

// Raw tensor form with complex numbers as [re, im] and sparse triplets.
json to_json(const StructAlg& alg);
json to_json(const Hopf& H);

json complex_json(const cd& z);

std::string read_file(const std::string& path);
// FNV-1a 64 of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace kac::io
