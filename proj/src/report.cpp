#include "yao4/report.hpp"

#include <cmath>
#include <cstdio>

#include "yao4/io.hpp"

namespace yao4 {

std::string json_escape(const std::string& raw) {
  std::string out;
  out.reserve(raw.size() + 2);
  for (const char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if ((unsigned char)c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonWriter::separator() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!dirty_.empty()) {
    if (dirty_.back()) out_ += ',';
    dirty_.back() = true;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_ += '{';
  kinds_ += 'o';
  dirty_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  kinds_.pop_back();
  dirty_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separator();
  out_ += '[';
  kinds_ += 'a';
  dirty_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  kinds_.pop_back();
  dirty_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
  separator();
  out_ += '"';
  out_ += json_escape(name);
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  separator();
  out_ += '"';
  out_ += json_escape(v);
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(std::int64_t v) {
  separator();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
  separator();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separator();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out_ += buf;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  separator();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::null() {
  separator();
  out_ += "null";
  return *this;
}

void write_lambda(JsonWriter& w, QuadrantSet lambda) {
  w.begin_array();
  for (const Quadrant q : lambda.quadrants()) w.value(q.index());
  w.end_array();
}

namespace {

double edge_length_real(const YaoEdge& e) { return double(sqrtl((long double)e.length2)); }

void write_edge(JsonWriter& w, const YaoEdge& e) {
  w.begin_object();
  w.key("from").value(e.from);
  w.key("to").value(e.to);
  w.key("quadrant").value(e.quadrant.index());
  w.key("length").value(edge_length_real(e));
  w.end_object();
}

void write_crossing_pair(JsonWriter& w, const CrossingPair& pair) {
  w.begin_object();
  w.key("edge1");
  write_edge(w, pair.e1);
  w.key("edge2");
  write_edge(w, pair.e2);
  w.key("collinear_overlap").value(pair.witness.collinear_overlap);
  if (pair.witness.collinear_overlap) {
    w.key("at").null();
  } else {
    w.key("at").begin_array();
    w.value(pair.witness.at.x_string());
    w.value(pair.witness.at.y_string());
    w.end_array();
  }
  w.end_object();
}

}  // namespace

void write_table1_entry(JsonWriter& w, const Table1Entry& entry) {
  w.begin_object();
  w.key("lambda");
  write_lambda(w, entry.lambda);
  w.key("crossings").value(entry.crossing_count);
  w.key("planar").value(entry.planar);
  w.key("components").value(entry.component_count);
  w.key("connected").value(entry.connected);
  w.key("top_reachable_from_all").value(entry.top_reachable_from_all);
  w.key("max_stretch").value(entry.max_stretch);
  w.key("disconnected_pairs").value(std::int64_t(entry.disconnected_pairs));
  w.key("is_dag").value(entry.is_dag);
  if (entry.is_dag) {
    w.key("dilation").value(entry.dilation);
  } else {
    w.key("dilation").null();
  }
  w.end_object();
}

std::string render_graph_report(const PointSet& ps, const DirectedYaoGraph& g,
                                const AnalysisBundle& analyses,
                                const GeneratedInstance* generator,
                                const VerificationResult* verdict) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value("yao4-report/1");

  w.key("point_set").begin_object();
  w.key("digest").value(point_set_digest(ps));
  w.key("count").value(ps.size());
  w.key("scale").value(ps.scale);
  w.key("general_position").begin_object();
  w.key("clean").value(ps.validation.clean);
  w.key("distance_ties").value(ps.validation.distance_ties.size());
  w.key("shared_x").value(ps.validation.shared_x.size());
  w.key("shared_y").value(ps.validation.shared_y.size());
  w.end_object();
  w.end_object();

  w.key("lambda");
  write_lambda(w, g.lambda());

  w.key("edges").begin_array();
  for (const YaoEdge& e : g.edges(ps)) write_edge(w, e);
  w.end_array();

  w.key("analyses").begin_object();
  w.key("crossings");
  if (analyses.crossings) {
    w.begin_object();
    w.key("count").value(analyses.crossings->count);
    w.key("pairs").begin_array();
    for (const CrossingPair& pair : analyses.crossings->crossing_pairs) {
      write_crossing_pair(w, pair);
    }
    w.end_array();
    w.end_object();
  } else {
    w.null();
  }
  w.key("components");
  if (analyses.components) {
    const ConnectivityReport& c = *analyses.components;
    w.begin_object();
    w.key("count").value(c.component_count);
    w.key("top_vertex").value(c.top_vertex);
    w.key("top_reachable_from_all").value(c.top_reachable_from_all);
    w.key("component_of").begin_array();
    for (const int id : c.component_of) w.value(id);
    w.end_array();
    w.end_object();
  } else {
    w.null();
  }
  w.key("stretch");
  if (analyses.stretch) {
    const StretchReport& s = *analyses.stretch;
    w.begin_object();
    w.key("max").value(s.max_stretch);
    w.key("argmax").begin_array().value(s.argmax_pair.first).value(s.argmax_pair.second).end_array();
    w.key("disconnected_pairs").value(std::int64_t(s.disconnected_pairs));
    w.key("spanner_broken_by_disconnection").value(s.disconnected_pairs > 0);
    w.end_object();
  } else {
    w.null();
  }
  w.key("dilation");
  if (analyses.dilation) {
    const DilationReport& d = *analyses.dilation;
    w.begin_object();
    w.key("is_dag").value(d.is_dag);
    if (d.is_dag) {
      w.key("max").value(d.max_path_dilation);
      w.key("argmax").begin_array().value(d.argmax_pair.first).value(d.argmax_pair.second).end_array();
    } else {
      w.key("max").null();
      w.key("argmax").null();
    }
    w.end_object();
  } else {
    w.null();
  }
  w.key("matrix");
  if (analyses.matrix) {
    w.begin_array();
    for (const Table1Entry& entry : analyses.matrix->entries) write_table1_entry(w, entry);
    w.end_array();
  } else {
    w.null();
  }
  w.end_object();

  w.key("generator");
  if (generator) {
    w.begin_object();
    w.key("family").value(generator->family);
    w.key("claim").value(generator->claim);
    w.key("params").begin_object();
    for (const auto& [k, v] : generator->params) w.key(k).value(v);
    w.end_object();
    w.key("landmarks").begin_object();
    for (const auto& [k, v] : generator->landmarks) w.key(k).value(v);
    w.end_object();
    w.key("verified").value(verdict ? verdict->ok : false);
    w.key("verdict").value(verdict ? verdict->detail : std::string("not verified"));
    w.end_object();
  } else {
    w.null();
  }

  w.end_object();
  std::string out = w.str();
  out += '\n';
  return out;
}

}  // namespace yao4
