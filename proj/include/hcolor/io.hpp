#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hcolor/bounds.hpp"
#include "hcolor/chains.hpp"
#include "hcolor/hypergraph.hpp"

namespace hcolor {

using Json = nlohmann::json;

/// Malformed input document (wrong shape or types). Invariant violations of a
/// well-formed instance surface as InvalidInstance instead.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n": 3, "num_vertices": 7, "edges": [[0,1,2], ...]}
Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& doc);
Hypergraph read_hypergraph(std::istream& in);

// {"palette": 3, "colors": [1,2,...]}
Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& doc);

Json to_json(const VertexOrder& order);
VertexOrder order_from_json(const Json& doc);

Json to_json(const ChainCertificate& cert);
Json to_json(const OrderStats& stats);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const BigInt& x);
/// "p/q"
Json to_json(const Rational& x);

Json to_json(const BoundTable& table);
Json to_json(const WindowConstant& w);
Json to_json(const BoundReport& report);
/// Header plus one row per r.
std::string report_csv(const BoundReport& report);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& doc);

}  // namespace hcolor
