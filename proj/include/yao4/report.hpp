#pragma once
/**
 * Graph report documents ("yao4-report/1").
 *
 * Reports are emitted by a purpose-built writer rather than a JSON library:
 * key order is fixed by construction, every real is rendered with 17
 * significant digits, and identical inputs produce identical bytes, which
 * the reproduction pipeline relies on.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "yao4/analyze.hpp"
#include "yao4/build.hpp"
#include "yao4/generate.hpp"
#include "yao4/point_set.hpp"

namespace yao4 {

// Minimal streaming JSON emitter with deterministic float formatting.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(std::int64_t(v)); }
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(double v);  // %.17g
  JsonWriter& value(bool v);
  JsonWriter& null();

  const std::string& str() const { return out_; }

 private:
  void separator();
  std::string out_;
  // Parallel stacks: container kind and whether anything was emitted yet.
  std::string kinds_;
  std::vector<bool> dirty_;
  bool pending_key_ = false;
};

std::string json_escape(const std::string& raw);

struct AnalysisBundle {
  std::optional<CrossingReport> crossings;
  std::optional<ConnectivityReport> components;
  std::optional<StretchReport> stretch;
  std::optional<DilationReport> dilation;
  std::optional<Table1Report> matrix;
};

// Assembles the full report document; generator and verdict are optional
// sections used when the point set came out of a generator.
std::string render_graph_report(const PointSet& ps, const DirectedYaoGraph& g,
                                const AnalysisBundle& analyses,
                                const GeneratedInstance* generator,
                                const VerificationResult* verdict);

// Shared sub-renderers used by the reproduction summary.
void write_lambda(JsonWriter& w, QuadrantSet lambda);
void write_table1_entry(JsonWriter& w, const Table1Entry& entry);

}  // namespace yao4
