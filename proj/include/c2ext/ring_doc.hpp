#pragma once

#include <string>
#include <vector>

#include "c2ext/polynomial.hpp"
#include "c2ext/voa.hpp"

namespace c2ext {

/// Plain-text ring definition consumed by the CLI:
///   vars = x:2, y        (name:weight, weight defaults to 1)
///   gen  = x^2 + y^4
///   gen  = ...
///   D    = 12
///   P    = 6
/// '#' starts a comment; D and P are optional.
struct RingDocument {
    std::vector<RingSpec::Variable> variables;
    std::vector<std::string> generator_text;
    int D = -1;  // -1: unset, caller applies defaults
    int P = -1;

    RingPtr make_ring_spec() const;
    std::vector<Polynomial> parse_generators(const RingPtr& ring) const;
};

struct RingDocError : std::runtime_error {
    RingDocError(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

RingDocument parse_ring_document(const std::string& text);
RingDocument load_ring_document(const std::string& path);
std::string serialize_ring_document(const RingDocument& doc);

RingDocument to_ring_document(const C2Presentation& pres, int D, int P);

}  // namespace c2ext
