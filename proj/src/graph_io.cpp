#include "gvm/graph_io.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace gvm {

using nlohmann::json;

namespace {
long long parse_entry(const std::string& s) {
  // doubled value of an integer or a reduced fraction over 2
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return 2 * std::stoll(s);
  long long num = std::stoll(s.substr(0, slash));
  long long den = std::stoll(s.substr(slash + 1));
  if (den != 2 || num % 2 == 0)
    throw std::invalid_argument("weight entry must be an integer or a reduced half: " + s);
  return num;
}

std::string entry_str(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}
}  // namespace

Weight parse_weight_literal(const std::string& text, int rank, int cross) {
  std::vector<long long> doubled;
  int bar_at = -1;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw std::invalid_argument("empty weight entry in \"" + text + "\"");
    doubled.push_back(parse_entry(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == ',' ) {
      flush();
    } else if (c == '|') {
      flush();
      if (bar_at >= 0) throw std::invalid_argument("two bars in weight literal");
      bar_at = static_cast<int>(doubled.size());
    } else {
      cur += c;
    }
  }
  flush();
  if (static_cast<int>(doubled.size()) != rank)
    throw std::invalid_argument("weight literal has wrong rank");
  if (bar_at < 0) throw std::invalid_argument("weight literal needs a bar at the crossed node");
  if (bar_at != cross)
    throw std::invalid_argument("bar position " + std::to_string(bar_at) +
                                " does not match crossed node " + std::to_string(cross));
  return Weight::from_doubled(std::move(doubled));
}

std::string weight_literal(const Weight& w, int cross) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) s += (static_cast<int>(i) == cross) ? "|" : ",";
    s += entry_str(w.dbl(i));
  }
  return s;
}

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Standard:
      return "standard";
    case EdgeKind::Nonstandard:
      return "nonstandard";
    case EdgeKind::Conjectural:
      return "conjectural";
    case EdgeKind::Hasse:
      return "hasse";
  }
  return "?";
}

namespace {
EdgeKind kind_from_name(const std::string& s) {
  if (s == "standard") return EdgeKind::Standard;
  if (s == "nonstandard") return EdgeKind::Nonstandard;
  if (s == "conjectural") return EdgeKind::Conjectural;
  if (s == "hasse") return EdgeKind::Hasse;
  throw std::invalid_argument("unknown edge kind " + s);
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (std::size_t i = 0; i < w.rank(); ++i) a.push_back(entry_str(w.dbl(i)));
  return a;
}

Weight weight_from_json(const json& a) {
  std::vector<long long> d;
  for (const auto& x : a) d.push_back(parse_entry(x.get<std::string>()));
  return Weight::from_doubled(std::move(d));
}
}  // namespace

std::string emit_json(const LabeledGraph& g, const std::optional<Weight>& lambda) {
  json doc;
  doc["algebra"] = g.spec.algebra.series == Series::B ? "B" : "D";
  doc["rank"] = g.spec.algebra.rank;
  doc["sigma"] = g.spec.cross;
  if (lambda) doc["lambda"] = weight_json(*lambda);
  doc["vertices"] = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    doc["vertices"].push_back({{"id", static_cast<int>(i)},
                               {"weight", weight_json(g.vertices[i].weight)},
                               {"label", g.vertices[i].label}});
  }
  doc["edges"] = json::array();
  for (const auto& e : g.edges) {
    json ej{{"from", e.from}, {"to", e.to}};
    if (e.order_known)
      ej["order"] = e.order;
    else
      ej["order"] = "unknown";
    if (e.kind != EdgeKind::Hasse) ej["kind"] = edge_kind_name(e.kind);
    doc["edges"].push_back(ej);
  }
  return doc.dump(2) + "\n";
}

ParsedGraph parse_json(const std::string& text) {
  json doc = json::parse(text);
  ParsedGraph out;
  out.graph.spec.algebra.series = doc.at("algebra").get<std::string>() == "B" ? Series::B : Series::D;
  out.graph.spec.algebra.rank = doc.at("rank").get<int>();
  out.graph.spec.cross = doc.at("sigma").get<int>();
  if (doc.contains("lambda")) out.lambda = weight_from_json(doc["lambda"]);
  for (const auto& v : doc.at("vertices")) {
    if (v.at("id").get<int>() != static_cast<int>(out.graph.vertices.size()))
      throw std::invalid_argument("vertex ids must be dense and ordered");
    out.graph.vertices.push_back(
        {weight_from_json(v.at("weight")), v.at("label").get<std::string>()});
  }
  for (const auto& e : doc.at("edges")) {
    GraphEdge ge;
    ge.from = e.at("from").get<int>();
    ge.to = e.at("to").get<int>();
    if (e.at("order").is_string()) {
      if (e["order"].get<std::string>() != "unknown")
        throw std::invalid_argument("order must be an integer or \"unknown\"");
      ge.order_known = false;
    } else {
      ge.order = e.at("order").get<long long>();
    }
    ge.kind = e.contains("kind") ? kind_from_name(e["kind"].get<std::string>()) : EdgeKind::Hasse;
    const int nv = static_cast<int>(out.graph.vertices.size());
    if (ge.from < 0 || ge.from >= nv || ge.to < 0 || ge.to >= nv)
      throw std::invalid_argument("edge references missing vertex");
    out.graph.edges.push_back(ge);
  }
  return out;
}

std::string emit_dot(const LabeledGraph& g) {
  std::ostringstream os;
  os << "digraph bgg {\n";
  os << "  rankdir=TB;\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    std::string label = g.vertices[i].label;
    std::string esc;
    for (char c : label) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    os << "  v" << i << " [label=\"" << esc << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"";
    if (e.order_known)
      os << e.order;
    else
      os << "?";
    os << "\"";
    if (e.kind == EdgeKind::Nonstandard) os << " style=bold color=blue";
    if (e.kind == EdgeKind::Conjectural) os << " style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_text(const LabeledGraph& g) {
  std::ostringstream os;
  os << g.spec.algebra.name() << " cross=" << g.spec.cross << "  " << g.vertices.size()
     << " vertices, " << g.edges.size() << " arrows\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  [" << i << "] " << g.vertices[i].label << "\n";
  for (const auto& e : g.edges) {
    os << "  " << e.from << " -> " << e.to << "  order ";
    if (e.order_known)
      os << e.order;
    else
      os << "?";
    if (e.kind != EdgeKind::Hasse) os << "  " << edge_kind_name(e.kind);
    os << "\n";
  }
  return os.str();
}

}  // namespace gvm
