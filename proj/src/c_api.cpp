#include "chromhom/chromhom.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "chromhom/errors.hpp"
#include "chromhom/reports.hpp"

struct chromhom_graph {
  chromhom::Multigraph raw;
  chromhom::Graph graph;
  chromhom::NormalizationReport report;
};

namespace {

thread_local std::string last_error;

chromhom_status status_of(chromhom::ErrorCode code) {
  using chromhom::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return CHROMHOM_ERR_PARSE;
    case ErrorCode::InvalidArgument: return CHROMHOM_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotInSpan: return CHROMHOM_ERR_NOT_IN_SPAN;
    case ErrorCode::NonIntegerSolution: return CHROMHOM_ERR_NON_INTEGER;
    case ErrorCode::ComplexNotExact: return CHROMHOM_ERR_COMPLEX_NOT_EXACT;
    case ErrorCode::DimensionMismatch: return CHROMHOM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotASubgraph: return CHROMHOM_ERR_NOT_A_SUBGRAPH;
    case ErrorCode::PlanarInput: return CHROMHOM_ERR_PLANAR_INPUT;
    case ErrorCode::LiftFailed: return CHROMHOM_ERR_LIFT_FAILED;
    case ErrorCode::SizeBoundExceeded: return CHROMHOM_ERR_SIZE_BOUND;
    case ErrorCode::InvariantViolation: return CHROMHOM_ERR_INVARIANT;
  }
  return CHROMHOM_ERR_INTERNAL;
}

template <typename F>
chromhom_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CHROMHOM_OK;
  } catch (const chromhom::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return CHROMHOM_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CHROMHOM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CHROMHOM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return CHROMHOM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw chromhom::Error(chromhom::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

chromhom_graph* wrap(chromhom::Multigraph raw) {
  auto [g, report] = chromhom::normalize(raw);
  return new chromhom_graph{std::move(raw), std::move(g), report};
}

}  // namespace

extern "C" {

const char* chromhom_status_string(chromhom_status status) {
  switch (status) {
    case CHROMHOM_OK: return "ok";
    case CHROMHOM_ERR_PARSE: return "parse error";
    case CHROMHOM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CHROMHOM_ERR_NOT_IN_SPAN: return "not in span";
    case CHROMHOM_ERR_NON_INTEGER: return "non-integer solution";
    case CHROMHOM_ERR_COMPLEX_NOT_EXACT: return "complex not exact";
    case CHROMHOM_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case CHROMHOM_ERR_NOT_A_SUBGRAPH: return "not a subgraph";
    case CHROMHOM_ERR_PLANAR_INPUT: return "planar input";
    case CHROMHOM_ERR_LIFT_FAILED: return "lift failed";
    case CHROMHOM_ERR_SIZE_BOUND: return "size bound exceeded";
    case CHROMHOM_ERR_INVARIANT: return "invariant violation";
    case CHROMHOM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* chromhom_last_error(void) { return last_error.c_str(); }

void chromhom_string_free(char* s) { std::free(s); }

chromhom_status chromhom_graph_parse(const char* text, chromhom_format format, chromhom_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    const auto fmt = format == CHROMHOM_GRAPH6 ? chromhom::GraphFormat::Graph6 : chromhom::GraphFormat::EdgeList;
    *out = wrap(chromhom::parse_graph(text, fmt));
  });
}

chromhom_status chromhom_graph_from_edges(int n, const int* endpoints, int edge_count, chromhom_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (n < 0 || edge_count < 0) throw chromhom::Error(chromhom::ErrorCode::InvalidArgument, "negative size");
    if (edge_count > 0) require(endpoints, "endpoints");
    chromhom::Multigraph raw{n, {}};
    for (int i = 0; i < edge_count; ++i) {
      const int a = endpoints[2 * i], b = endpoints[2 * i + 1];
      if (a < 1 || a > n || b < 1 || b > n)
        throw chromhom::Error(chromhom::ErrorCode::InvalidArgument, "edge endpoint out of range");
      raw.edges.push_back(chromhom::Edge::make(a, b));
    }
    std::sort(raw.edges.begin(), raw.edges.end());
    *out = wrap(std::move(raw));
  });
}

void chromhom_graph_free(chromhom_graph* g) { delete g; }

int chromhom_graph_vertex_count(const chromhom_graph* g) { return g ? g->graph.vertex_count() : -1; }

int chromhom_graph_edge_count(const chromhom_graph* g) { return g ? static_cast<int>(g->graph.edge_count()) : -1; }

chromhom_status chromhom_graph_normalization(const chromhom_graph* g, int* had_loop, int* collapsed_multiedges) {
  return guarded([&] {
    require(g, "graph");
    if (had_loop) *had_loop = g->report.had_loop ? 1 : 0;
    if (collapsed_multiedges) *collapsed_multiedges = g->report.collapsed_multiedges;
  });
}

chromhom_status chromhom_graph_to_graph6(const chromhom_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(chromhom::encode_graph6(g->graph));
  });
}

chromhom_status chromhom_graph_is_planar(const chromhom_graph* g, int* planar) {
  return guarded([&] {
    require(g, "graph");
    require(planar, "planar");
    *planar = chromhom::is_planar(g->graph) ? 1 : 0;
  });
}

chromhom_status chromhom_homology_json(const chromhom_graph* g, int k, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (k < 0) throw chromhom::Error(chromhom::ErrorCode::InvalidArgument, "k must be nonnegative");
    chromhom::ShapeScan scan;
    scan.all_shapes = k == 0;
    if (k > 0) {
      if (2 * k > g->graph.vertex_count() && !g->report.had_loop)
        throw chromhom::Error(chromhom::ErrorCode::InvalidArgument, "shape (2^k,1^(n-2k)) needs 2k <= n");
      scan.k = k;
    }
    *out = dup_string(chromhom::homology_report(g->graph, g->report, scan).dump());
  });
}

chromhom_status chromhom_certify_json(const chromhom_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (g->report.had_loop)
      throw chromhom::Error(chromhom::ErrorCode::InvalidArgument, "graph has a loop; its homology vanishes");
    *out = dup_string(chromhom::certificate_json(chromhom::certify_nonplanar(g->graph)).dump());
  });
}

chromhom_status chromhom_check_json(const char* certificate_json, const chromhom_graph* graph, int* valid,
                                    char** verdict_json) {
  return guarded([&] {
    require(certificate_json, "certificate_json");
    require(valid, "valid");
    *valid = 0;
    chromhom::Json doc;
    try {
      doc = chromhom::Json::parse(certificate_json);
    } catch (const nlohmann::json::exception& e) {
      throw chromhom::Error(chromhom::ErrorCode::ParseError, std::string("certificate is not JSON: ") + e.what());
    }
    const auto v = chromhom::check_certificate_json(doc, graph ? &graph->graph : nullptr);
    *valid = v.valid() ? 1 : 0;
    if (verdict_json) {
      const chromhom::Json j{
          {"cycle", v.cycle}, {"doubled", v.doubled}, {"not_in_image", v.not_in_image}, {"valid", v.valid()}};
      *verdict_json = dup_string(j.dump());
    }
  });
}

chromhom_status chromhom_survey_record_json(const chromhom_graph* g, int all_shapes, char** record_json,
                                            char** certificate_json) {
  return guarded([&] {
    require(g, "graph");
    require(record_json, "record_json");
    chromhom::ShapeScan scan;
    scan.all_shapes = all_shapes != 0;
    const auto r = chromhom::survey_record(g->graph, scan);
    *record_json = dup_string(r.record.dump());
    if (certificate_json) *certificate_json = dup_string(r.certificate.dump());
  });
}

chromhom_status chromhom_reproduction_battery_json(int mutate, char** out, int* all_pass) {
  return guarded([&] {
    require(out, "out");
    const auto checks = chromhom::reproduction_battery(mutate != 0);
    chromhom::Json arr = chromhom::Json::array();
    bool ok = true;
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      ok = ok && c.pass;
    }
    if (all_pass) *all_pass = ok ? 1 : 0;
    *out = dup_string(arr.dump());
  });
}

chromhom_status chromhom_connected_graphs_graph6(int n, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 1 || n > 7) throw chromhom::Error(chromhom::ErrorCode::SizeBoundExceeded, "enumeration supports 1 <= n <= 7");
    std::string s;
    for (const auto& g : chromhom::connected_graphs(n)) s += chromhom::encode_graph6(g) + "\n";
    *out = dup_string(s);
  });
}

}  // extern "C"
