#include "hcolor/io.hpp"

#include <istream>
#include <iterator>
#include <limits>
#include <sstream>

namespace hcolor {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw FormatError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& value, const char* what) {
  if (!value.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

std::string rows_text(const std::optional<BigInt>& x) { return x ? x->str() : ""; }

}  // namespace

Json to_json(const Hypergraph& h) {
  return Json{{"n", h.uniformity()}, {"num_vertices", h.num_vertices()}, {"edges", h.edges()}};
}

Hypergraph hypergraph_from_json(const Json& doc) {
  const auto n = integer(field(doc, "n"), "n");
  const auto nv = integer(field(doc, "num_vertices"), "num_vertices");
  const Json& raw = field(doc, "edges");
  if (!raw.is_array()) throw FormatError("edges must be an array");
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const Json& e : raw) {
    if (!e.is_array()) throw FormatError("each edge must be an array");
    Edge edge;
    for (const Json& v : e) {
      const auto x = integer(v, "vertex");
      if (x < std::numeric_limits<Vertex>::min() || x > std::numeric_limits<Vertex>::max()) {
        throw FormatError("vertex index out of representable range");
      }
      edge.push_back(static_cast<Vertex>(x));
    }
    edges.push_back(std::move(edge));
  }
  if (n < 2 || n > std::numeric_limits<int>::max()) {
    throw InvalidInstance({{Violation::Kind::bad_uniformity, 0, "uniformity must be >= 2"}});
  }
  auto violations = validate(static_cast<int>(n), nv, edges);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  return Hypergraph(static_cast<int>(n), static_cast<std::size_t>(nv), std::move(edges));
}

Hypergraph read_hypergraph(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw FormatError(std::string("instance is not valid JSON: ") + ex.what());
  }
  return hypergraph_from_json(doc);
}

Json to_json(const Coloring& c) { return Json{{"palette", c.palette}, {"colors", c.colors}}; }

Coloring coloring_from_json(const Json& doc) {
  Coloring c;
  c.palette = static_cast<int>(integer(field(doc, "palette"), "palette"));
  if (c.palette < 1) throw FormatError("palette must be positive");
  const Json& raw = field(doc, "colors");
  if (!raw.is_array()) throw FormatError("colors must be an array");
  for (const Json& v : raw) {
    const auto color = integer(v, "color");
    if (color < 1 || color > c.palette) throw FormatError("color outside palette");
    c.colors.push_back(static_cast<int>(color));
  }
  return c;
}

Json to_json(const VertexOrder& order) { return order.sequence(); }

VertexOrder order_from_json(const Json& doc) {
  if (!doc.is_array()) throw FormatError("order must be an array of vertices");
  std::vector<Vertex> seq;
  for (const Json& v : doc) seq.push_back(static_cast<Vertex>(integer(v, "vertex")));
  try {
    return VertexOrder(std::move(seq));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(ex.what());
  }
}

Json to_json(const ChainCertificate& cert) {
  return Json{{"edges", cert.edges}, {"order", to_json(cert.order)}};
}

Json to_json(const OrderStats& stats) {
  return Json{{"trials", stats.trials},
              {"chain_free_count", stats.chain_free_count},
              {"fraction", stats.fraction},
              {"seed", stats.seed}};
}

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const BoundTable& table) {
  Json provenance = Json::array();
  for (auto p : table.provenance) provenance.push_back(to_string(p));
  return Json{{"n", table.n}, {"n_max", table.n_max()}, {"F", table.F},
              {"provenance", std::move(provenance)}};
}

Json to_json(const WindowConstant& w) {
  return Json{{"n", w.n},
              {"M", w.M},
              {"window_end", w.window_end},
              {"rule", to_string(w.rule)},
              {"argmax", w.argmax},
              {"F_at_argmax", w.f_at_argmax},
              {"lambda", w.lambda},
              {"c_lower", to_json(w.c_lower)},
              {"c_lower_decimal", to_double(w.c_lower)},
              {"r0", w.r0}};
}

Json to_json(const BoundReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"r", row.r},
                        {"window_lb", row.window_lb ? to_json(*row.window_lb) : Json(nullptr)},
                        {"table_lb", row.table_lb},
                        {"alon_lb", to_json(row.alon_lb)},
                        {"pluhar_lb", to_json(row.pluhar_lb)},
                        {"erdos_ub", to_json(row.erdos_ub)},
                        {"consistent", row.consistent}});
  }
  Json out{{"n", report.n},
           {"n_max", report.params.n_max},
           {"rule", to_string(report.params.rule)},
           {"rows", std::move(rows)}};
  out["window"] = report.window ? to_json(*report.window) : Json(nullptr);
  if (!report.window_note.empty()) out["window_note"] = report.window_note;
  return out;
}

std::string report_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "r,window_lb,table_lb,alon_lb,pluhar_lb,erdos_ub,consistent\n";
  for (const auto& row : report.rows) {
    out << row.r << ',' << rows_text(row.window_lb) << ',' << row.table_lb << ','
        << row.alon_lb.str() << ',' << row.pluhar_lb.str() << ',' << row.erdos_ub.str() << ','
        << (row.consistent ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace hcolor
