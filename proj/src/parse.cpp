#include "kgr/parse.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "kgr/error.hpp"

namespace kgr {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  if (!isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

int parse_int(const std::string& s, int line, const std::string& what) {
  for (char ch : s)
    if (!isdigit(static_cast<unsigned char>(ch))) fail(line, "bad " + what + " '" + s + "'");
  return std::stoi(s);
}

std::string attr(const std::vector<std::string>& toks, size_t from, const std::string& key, int line) {
  for (size_t i = from; i < toks.size(); ++i) {
    if (toks[i].rfind(key + "=", 0) == 0) return toks[i].substr(key.size() + 1);
  }
  fail(line, "edge declaration is missing '" + key + "='");
}

}  // namespace

Skeleton parse_skeleton(std::string_view text) {
  Skeleton sk;
  bool saw_header = false, saw_rank = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "kgraph") {
      if (toks.size() != 2 || toks[1] != "1") fail(lineno, "expected 'kgraph 1' header");
      saw_header = true;
    } else if (kw == "k") {
      if (toks.size() != 2) fail(lineno, "expected 'k <rank>'");
      sk.rank = parse_int(toks[1], lineno, "rank");
      saw_rank = true;
    } else if (kw == "vertex") {
      if (toks.size() != 2) fail(lineno, "expected 'vertex <id>'");
      if (!valid_id(toks[1])) fail(lineno, "bad vertex id '" + toks[1] + "'");
      sk.vertices.push_back(toks[1]);
    } else if (kw == "edge") {
      if (toks.size() != 5) fail(lineno, "expected 'edge <id> color=<i> range=<v> source=<w>'");
      if (!valid_id(toks[1])) fail(lineno, "bad edge id '" + toks[1] + "'");
      SkeletonEdge e;
      e.id = toks[1];
      e.color = parse_int(attr(toks, 2, "color", lineno), lineno, "color");
      e.range = attr(toks, 2, "range", lineno);
      e.source = attr(toks, 2, "source", lineno);
      e.line = lineno;
      sk.edges.push_back(std::move(e));
    } else if (kw == "square") {
      if (toks.size() != 6 || toks[3] != "=") fail(lineno, "expected 'square <a> <b> = <c> <d>'");
      sk.squares.push_back({toks[1], toks[2], toks[4], toks[5], lineno});
    } else {
      fail(lineno, "unknown declaration '" + kw + "'");
    }
  }
  if (!saw_header) throw Error(Errc::parse_error, "missing 'kgraph 1' header");
  if (!saw_rank) throw Error(Errc::parse_error, "missing 'k <rank>' declaration");
  return sk;
}

KGraph parse_graph(std::string_view text) { return KGraph::validate(parse_skeleton(text)); }

KGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace kgr
