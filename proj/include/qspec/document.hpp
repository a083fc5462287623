#pragma once

#include <string>

#include "qspec/quantale.hpp"

namespace qspec {

/// A quantale plus interchange metadata. The JSON form carries the element
/// labels, the order (either a full 0/1 matrix or a pair list that gets
/// closed reflexively and transitively) and the explicit n x n index matrix
/// for multiplication.
struct QuantaleDocument {
    std::string name;
    std::string note;
    Quantale q;
};

/// Parse a JSON document. Structural problems (bad shape, out-of-range
/// index, duplicate label) throw ParseError naming the field; a well-formed
/// table that breaks an order or quantale law throws ValidationError.
QuantaleDocument parse_document(const std::string& text);

/// parse_document on the contents of `path`; unreadable file throws
/// ParseError.
QuantaleDocument load_document(const std::string& path);

/// Deterministic bytes: fixed key order, full leq matrix, two-space indent.
/// parse_document(serialize_document(d)) reproduces the same quantale.
std::string serialize_document(const QuantaleDocument& doc);

}  // namespace qspec
