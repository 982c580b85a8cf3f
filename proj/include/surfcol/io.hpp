#pragma once
// Text and JSON readers/writers for problem inputs: embeddings with
// external vertex labels, list assignments, precolorings, chart
// directives, and coloring files.
//
// Text grammar (one statement per line, '#' starts a comment):
//   vertex <id>
//   rot <id>: <id1> <id2> ... <idk>
//   face-check <count>
//   list <id>: <c1> <c2> ...
//   precolor <id> <c>
//   cface <faceIndex>
//   root <faceIndex>
//   ppath <faceIndex>: <v1> <v2> ...
//   params alpha=<num> k=<int> beta=<num> gamma=<num>
//
// The JSON mirror uses {vertices:[...], rotation:{id:[ids]}, lists:
// {id:[colors]}, precolor:{id:color}} plus optional face_check, cfaces,
// root, ppaths, params.

#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "surfcol/embedding.hpp"

namespace surfcol {

inline constexpr int kMaxColors = 64;  // colors live in a 64-bit set

struct ChartParams {
  double alpha = -1;
  int k = -1;
  double beta = 2;
  double gamma = 1;
  bool has_alpha = false;
  bool has_k = false;
};

// Everything a problem file can carry. Vertices are dense indices in
// declaration order; labels keep the external ids.
struct ProblemInput {
  Embedding emb;
  std::map<long long, int> index_of_label;
  bool has_lists = false;
  std::vector<std::vector<int>> lists;          // per dense vertex
  std::map<int, int> precolor;                  // dense vertex -> color
  std::vector<int> cfaces;                      // designated face indices
  int root_face = -1;
  std::map<int, std::vector<int>> ppaths;       // face index -> dense vertices
  ChartParams params;
};

namespace iodetail {

inline long long parse_ll(const std::string& tok, int line) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "trailing junk in integer '" + tok + "'");
  return v;
}

inline double parse_num(const std::string& tok, int line) {
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "trailing junk in number '" + tok + "'");
  return v;
}

inline int parse_color(const std::string& tok, int line) {
  long long c = parse_ll(tok, line);
  if (c < 0 || c >= kMaxColors)
    throw ParseError(line, "color " + std::to_string(c) + " outside [0," +
                               std::to_string(kMaxColors - 1) + "]");
  return static_cast<int>(c);
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// Splits "<head>: <tail...>" after the keyword; the colon may be glued
// to the head token or stand alone.
inline std::pair<std::string, std::vector<std::string>> colon_split(
    std::vector<std::string> toks, int line, const char* what) {
  if (toks.empty()) throw ParseError(line, std::string(what) + ": missing id");
  std::string head = toks[0];
  size_t rest = 1;
  if (!head.empty() && head.back() == ':') {
    head.pop_back();
  } else if (toks.size() >= 2 && toks[1] == ":") {
    rest = 2;
  } else {
    throw ParseError(line, std::string(what) + ": expected ':' after id");
  }
  if (head.empty()) throw ParseError(line, std::string(what) + ": missing id");
  return {head, std::vector<std::string>(toks.begin() + rest, toks.end())};
}

}  // namespace iodetail

inline ProblemInput parse_problem_text(std::istream& in) {
  using namespace iodetail;
  std::vector<long long> labels;
  std::map<long long, int> index;
  std::map<int, std::vector<long long>> rot_labels;
  int face_check = -1, face_check_line = 0;
  std::map<int, std::vector<int>> lists;
  bool has_lists = false;
  std::map<int, int> precolor;
  std::vector<std::pair<int, int>> cfaces;
  std::pair<int, int> root{-1, 0};
  std::map<int, std::pair<std::vector<int>, int>> ppaths;
  ChartParams params;

  auto lookup = [&](long long label, int line) {
    auto it = index.find(label);
    if (it == index.end())
      throw ParseError(line,
                       "undeclared vertex " + std::to_string(label));
    return it->second;
  };

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (size_t hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::vector<std::string> toks = tokens(raw);
    if (toks.empty()) continue;
    std::string kw = toks[0];
    std::vector<std::string> args(toks.begin() + 1, toks.end());

    if (kw == "vertex") {
      if (args.size() != 1) throw ParseError(line, "vertex: want one id");
      long long label = parse_ll(args[0], line);
      if (index.count(label))
        throw ParseError(line, "duplicate vertex " + std::to_string(label));
      index[label] = static_cast<int>(labels.size());
      labels.push_back(label);
    } else if (kw == "rot") {
      auto [head, rest] = colon_split(args, line, "rot");
      int v = lookup(parse_ll(head, line), line);
      if (rot_labels.count(v))
        throw ParseError(line, "duplicate rotation for vertex " + head);
      std::vector<long long> nbs;
      for (const std::string& t : rest) nbs.push_back(parse_ll(t, line));
      for (long long nb : nbs) lookup(nb, line);
      rot_labels[v] = std::move(nbs);
    } else if (kw == "face-check") {
      if (args.size() != 1) throw ParseError(line, "face-check: want a count");
      face_check = static_cast<int>(parse_ll(args[0], line));
      face_check_line = line;
    } else if (kw == "list") {
      auto [head, rest] = colon_split(args, line, "list");
      int v = lookup(parse_ll(head, line), line);
      if (lists.count(v))
        throw ParseError(line, "duplicate list for vertex " + head);
      std::vector<int> cs;
      for (const std::string& t : rest) cs.push_back(parse_color(t, line));
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      lists[v] = std::move(cs);
      has_lists = true;
    } else if (kw == "precolor") {
      if (args.size() != 2) throw ParseError(line, "precolor: want id color");
      int v = lookup(parse_ll(args[0], line), line);
      if (precolor.count(v))
        throw ParseError(line, "duplicate precolor for vertex " + args[0]);
      precolor[v] = parse_color(args[1], line);
    } else if (kw == "cface") {
      if (args.size() != 1) throw ParseError(line, "cface: want a face index");
      cfaces.emplace_back(static_cast<int>(parse_ll(args[0], line)), line);
    } else if (kw == "root") {
      if (args.size() != 1) throw ParseError(line, "root: want a face index");
      if (root.first >= 0) throw ParseError(line, "duplicate root");
      root = {static_cast<int>(parse_ll(args[0], line)), line};
    } else if (kw == "ppath") {
      auto [head, rest] = colon_split(args, line, "ppath");
      int f = static_cast<int>(parse_ll(head, line));
      if (ppaths.count(f))
        throw ParseError(line, "duplicate ppath for face " + head);
      std::vector<int> vs;
      for (const std::string& t : rest)
        vs.push_back(lookup(parse_ll(t, line), line));
      ppaths[f] = {std::move(vs), line};
    } else if (kw == "params") {
      for (const std::string& t : args) {
        size_t eq = t.find('=');
        if (eq == std::string::npos)
          throw ParseError(line, "params: expected key=value, got '" + t + "'");
        std::string key = t.substr(0, eq), val = t.substr(eq + 1);
        if (key == "alpha") {
          params.alpha = parse_num(val, line);
          params.has_alpha = true;
        } else if (key == "k") {
          params.k = static_cast<int>(parse_ll(val, line));
          params.has_k = true;
        } else if (key == "beta") {
          params.beta = parse_num(val, line);
        } else if (key == "gamma") {
          params.gamma = parse_num(val, line);
        } else {
          throw ParseError(line, "params: unknown key '" + key + "'");
        }
      }
    } else {
      throw ParseError(line, "unknown directive '" + kw + "'");
    }
  }

  if (labels.empty()) throw ParseError(line, "no vertices declared");
  std::vector<std::vector<int>> rotations(labels.size());
  for (auto& [v, nbs] : rot_labels) {
    rotations[v].reserve(nbs.size());
    for (long long nb : nbs) rotations[v].push_back(index.at(nb));
  }

  ProblemInput p;
  try {
    p.emb = Embedding::build(std::move(rotations), labels);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
  p.index_of_label = std::move(index);
  if (face_check >= 0 && face_check != p.emb.face_count())
    throw ParseError(face_check_line,
                     "face-check " + std::to_string(face_check) +
                         " but embedding has " +
                         std::to_string(p.emb.face_count()) + " faces");
  p.has_lists = has_lists;
  p.lists.assign(p.emb.order(), {});
  for (auto& [v, cs] : lists) p.lists[v] = std::move(cs);
  p.precolor = std::move(precolor);
  for (auto [f, ln] : cfaces) {
    if (f < 0 || f >= p.emb.face_count())
      throw ParseError(ln, "cface: face index out of range");
    p.cfaces.push_back(f);
  }
  if (root.first >= 0) {
    if (root.first >= p.emb.face_count())
      throw ParseError(root.second, "root: face index out of range");
    p.root_face = root.first;
  }
  for (auto& [f, pv] : ppaths) {
    if (f < 0 || f >= p.emb.face_count())
      throw ParseError(pv.second, "ppath: face index out of range");
    p.ppaths[f] = std::move(pv.first);
  }
  p.params = params;
  return p;
}

inline ProblemInput parse_problem_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(0, std::string("json: ") + e.what());
  }
  auto fail = [](const std::string& msg) -> ParseError {
    return ParseError(0, "json: " + msg);
  };
  if (!j.is_object() || !j.contains("vertices") || !j.contains("rotation"))
    throw fail("want an object with 'vertices' and 'rotation'");
  std::vector<long long> labels;
  std::map<long long, int> index;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) throw fail("vertices must be integers");
    long long label = v.get<long long>();
    if (index.count(label))
      throw fail("duplicate vertex " + std::to_string(label));
    index[label] = static_cast<int>(labels.size());
    labels.push_back(label);
  }
  if (labels.empty()) throw fail("no vertices");
  auto lookup = [&](long long label) {
    auto it = index.find(label);
    if (it == index.end())
      throw ParseError(0,
                       "json: undeclared vertex " + std::to_string(label));
    return it->second;
  };
  auto key_to_label = [&](const std::string& key) -> long long {
    try {
      return std::stoll(key);
    } catch (const std::exception&) {
      throw ParseError(0, "json: non-integer vertex key '" + key + "'");
    }
  };
  std::vector<std::vector<int>> rotations(labels.size());
  std::vector<char> seen(labels.size(), 0);
  for (const auto& [key, arr] : j["rotation"].items()) {
    int v = lookup(key_to_label(key));
    if (seen[v]) throw fail("duplicate rotation for vertex " + key);
    seen[v] = 1;
    for (const auto& nb : arr)
      rotations[v].push_back(lookup(nb.get<long long>()));
  }
  ProblemInput p;
  try {
    p.emb = Embedding::build(std::move(rotations), labels);
  } catch (const Error& e) {
    throw ParseError(0, std::string("json: ") + e.what());
  }
  if (j.contains("face_check") && j["face_check"].get<int>() != p.emb.face_count())
    throw fail("face_check mismatch: embedding has " +
               std::to_string(p.emb.face_count()) + " faces");
  p.lists.assign(p.emb.order(), {});
  if (j.contains("lists")) {
    p.has_lists = true;
    for (const auto& [key, arr] : j["lists"].items()) {
      int v = lookup(key_to_label(key));
      std::vector<int> cs;
      for (const auto& c : arr) {
        int ci = c.get<int>();
        if (ci < 0 || ci >= kMaxColors) throw fail("color out of range");
        cs.push_back(ci);
      }
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      p.lists[v] = std::move(cs);
    }
  }
  if (j.contains("precolor"))
    for (const auto& [key, c] : j["precolor"].items()) {
      int ci = c.get<int>();
      if (ci < 0 || ci >= kMaxColors) throw fail("color out of range");
      p.precolor[lookup(key_to_label(key))] = ci;
    }
  if (j.contains("cfaces"))
    for (const auto& f : j["cfaces"]) {
      int fi = f.get<int>();
      if (fi < 0 || fi >= p.emb.face_count())
        throw fail("cfaces: face index out of range");
      p.cfaces.push_back(fi);
    }
  if (j.contains("root")) {
    p.root_face = j["root"].get<int>();
    if (p.root_face < 0 || p.root_face >= p.emb.face_count())
      throw fail("root: face index out of range");
  }
  if (j.contains("ppaths"))
    for (const auto& [key, arr] : j["ppaths"].items()) {
      int f = static_cast<int>(key_to_label(key));
      if (f < 0 || f >= p.emb.face_count())
        throw fail("ppaths: face index out of range");
      std::vector<int> vs;
      for (const auto& v : arr) vs.push_back(lookup(v.get<long long>()));
      p.ppaths[f] = std::move(vs);
    }
  if (j.contains("params")) {
    const auto& q = j["params"];
    if (q.contains("alpha")) {
      p.params.alpha = q["alpha"].get<double>();
      p.params.has_alpha = true;
    }
    if (q.contains("k")) {
      p.params.k = q["k"].get<int>();
      p.params.has_k = true;
    }
    if (q.contains("beta")) p.params.beta = q["beta"].get<double>();
    if (q.contains("gamma")) p.params.gamma = q["gamma"].get<double>();
  }
  p.index_of_label = std::move(index);
  return p;
}

// Auto-detects JSON input by its first non-space byte.
inline ProblemInput parse_problem(std::istream& in) {
  int c;
  while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
  if (c == '{') return parse_problem_json(in);
  return parse_problem_text(in);
}

inline std::string format_number(double x) {
  if (x == static_cast<long long>(x))
    return std::to_string(static_cast<long long>(x));
  std::ostringstream os;
  os << x;
  return os.str();
}

inline void write_problem_text(std::ostream& os, const ProblemInput& p) {
  const Embedding& g = p.emb;
  for (int v = 0; v < g.order(); ++v) os << "vertex " << g.label(v) << "\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "rot " << g.label(v) << ":";
    for (int nb : g.rotation(v)) os << " " << g.label(nb);
    os << "\n";
  }
  os << "face-check " << g.face_count() << "\n";
  if (p.has_lists)
    for (int v = 0; v < g.order(); ++v) {
      os << "list " << g.label(v) << ":";
      for (int c : p.lists[v]) os << " " << c;
      os << "\n";
    }
  for (auto [v, c] : p.precolor)
    os << "precolor " << g.label(v) << " " << c << "\n";
  for (int f : p.cfaces) os << "cface " << f << "\n";
  if (p.root_face >= 0) os << "root " << p.root_face << "\n";
  for (const auto& [f, vs] : p.ppaths) {
    os << "ppath " << f << ":";
    for (int v : vs) os << " " << g.label(v);
    os << "\n";
  }
  if (p.params.has_alpha || p.params.has_k)
    os << "params alpha=" << format_number(p.params.alpha) << " k="
       << p.params.k << " beta=" << format_number(p.params.beta)
       << " gamma=" << format_number(p.params.gamma) << "\n";
}

inline nlohmann::json problem_to_json(const ProblemInput& p) {
  nlohmann::json j;
  const Embedding& g = p.emb;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.order(); ++v) j["vertices"].push_back(g.label(v));
  j["rotation"] = nlohmann::json::object();
  for (int v = 0; v < g.order(); ++v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int nb : g.rotation(v)) arr.push_back(g.label(nb));
    j["rotation"][std::to_string(g.label(v))] = std::move(arr);
  }
  j["face_check"] = g.face_count();
  if (p.has_lists) {
    j["lists"] = nlohmann::json::object();
    for (int v = 0; v < g.order(); ++v)
      j["lists"][std::to_string(g.label(v))] = p.lists[v];
  }
  if (!p.precolor.empty()) {
    j["precolor"] = nlohmann::json::object();
    for (auto [v, c] : p.precolor)
      j["precolor"][std::to_string(g.label(v))] = c;
  }
  if (!p.cfaces.empty()) j["cfaces"] = p.cfaces;
  if (p.root_face >= 0) j["root"] = p.root_face;
  if (!p.ppaths.empty()) {
    j["ppaths"] = nlohmann::json::object();
    for (const auto& [f, vs] : p.ppaths) {
      nlohmann::json arr = nlohmann::json::array();
      for (int v : vs) arr.push_back(g.label(v));
      j["ppaths"][std::to_string(f)] = std::move(arr);
    }
  }
  if (p.params.has_alpha || p.params.has_k) {
    j["params"] = {{"alpha", p.params.alpha},
                   {"k", p.params.k},
                   {"beta", p.params.beta},
                   {"gamma", p.params.gamma}};
  }
  return j;
}

// Coloring files: `color <vertexId> <colorId>` per line.

inline std::map<int, int> parse_coloring(std::istream& in,
                                         const ProblemInput& p) {
  using namespace iodetail;
  std::map<int, int> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (size_t hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::vector<std::string> toks = tokens(raw);
    if (toks.empty()) continue;
    if (toks[0] != "color" || toks.size() != 3)
      throw ParseError(line, "expected 'color <id> <c>'");
    long long label = parse_ll(toks[1], line);
    auto it = p.index_of_label.find(label);
    if (it == p.index_of_label.end())
      throw ParseError(line, "undeclared vertex " + std::to_string(label));
    if (out.count(it->second))
      throw ParseError(line, "vertex colored twice: " + toks[1]);
    out[it->second] = parse_color(toks[2], line);
  }
  return out;
}

inline void write_coloring(std::ostream& os, const Embedding& g,
                           const std::map<int, int>& coloring) {
  for (auto [v, c] : coloring) os << "color " << g.label(v) << " " << c << "\n";
}

}  // namespace surfcol
