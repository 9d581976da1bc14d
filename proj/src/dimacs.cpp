#include "maxflow/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace maxflow {

DimacsError::DimacsError(Kind kind, int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), kind_(kind), line_(line) {}

namespace {

using Kind = DimacsError::Kind;

std::vector<std::string> fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

long long parse_int(const std::string& w, int line, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(w, &used);
  } catch (const std::out_of_range&) {
    throw DimacsError(Kind::Range, line, std::string(what) + " out of range: " + w);
  } catch (const std::invalid_argument&) {
    throw DimacsError(Kind::Parse, line, std::string("bad ") + what + ": " + w);
  }
  if (used != w.size()) throw DimacsError(Kind::Parse, line, std::string("bad ") + what + ": " + w);
  return v;
}

cap_t parse_amount(const std::string& w, int line) {
  try {
    return parse_cap(w);
  } catch (const std::out_of_range&) {
    throw DimacsError(Kind::Range, line, "capacity out of range: " + w);
  } catch (const std::invalid_argument&) {
    throw DimacsError(Kind::Parse, line, "bad capacity: " + w);
  }
}

int node_id(const std::string& w, int n, int line) {
  long long v = parse_int(w, line, "node id");
  if (v < 1 || v > n) throw DimacsError(Kind::Range, line, "node id " + w + " outside 1.." + std::to_string(n));
  return static_cast<int>(v - 1);
}

}  // namespace

Network parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  int n = -1, s = -1, t = -1, lineno = 0;
  long long declared_m = -1;
  std::vector<InputArc> arcs;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto f = fields(line);
    if (f.empty() || f[0] == "c") continue;
    const std::string& tag = f[0];
    if (tag == "p") {
      if (n >= 0) throw DimacsError(Kind::Format, lineno, "second problem line");
      if (f.size() != 4 || f[1] != "max") throw DimacsError(Kind::Parse, lineno, "expected 'p max <n> <m>'");
      long long nn = parse_int(f[2], lineno, "node count");
      declared_m = parse_int(f[3], lineno, "arc count");
      if (nn < 2 || nn > 10'000'000) throw DimacsError(Kind::Range, lineno, "node count " + f[2]);
      if (declared_m < 0) throw DimacsError(Kind::Range, lineno, "arc count " + f[3]);
      n = static_cast<int>(nn);
    } else if (tag == "n") {
      if (n < 0) throw DimacsError(Kind::Format, lineno, "node line before problem line");
      if (f.size() != 3 || (f[2] != "s" && f[2] != "t"))
        throw DimacsError(Kind::Parse, lineno, "expected 'n <id> s|t'");
      int v = node_id(f[1], n, lineno);
      int& slot = f[2] == "s" ? s : t;
      if (slot >= 0) throw DimacsError(Kind::Format, lineno, "duplicate " + f[2] + " designator");
      slot = v;
    } else if (tag == "a") {
      if (n < 0) throw DimacsError(Kind::Format, lineno, "arc line before problem line");
      if (f.size() != 4) throw DimacsError(Kind::Parse, lineno, "expected 'a <u> <v> <cap>'");
      int u = node_id(f[1], n, lineno), v = node_id(f[2], n, lineno);
      cap_t c = parse_amount(f[3], lineno);
      if (c < 0) throw DimacsError(Kind::Range, lineno, "negative capacity " + f[3]);
      if (u == v) continue;
      arcs.push_back({u, v, c});
    } else {
      throw DimacsError(Kind::Parse, lineno, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw DimacsError(Kind::Format, 0, "missing problem line");
  if (s < 0 || t < 0) throw DimacsError(Kind::Format, 0, "missing source or sink designator");
  if (s == t) throw DimacsError(Kind::Format, 0, "source and sink coincide");
  return build_network(n, arcs, s, t);
}

std::string write_dimacs(const Network& net) {
  std::vector<int> arcs;
  for (int a = 0; a < net.m(); ++a)
    if (net.arcs[a].orig > 0) arcs.push_back(a);
  std::string out = "p max " + std::to_string(net.n) + " " + std::to_string(arcs.size()) + "\n";
  out += "n " + std::to_string(net.source + 1) + " s\n";
  out += "n " + std::to_string(net.sink + 1) + " t\n";
  for (int a : arcs)
    out += "a " + std::to_string(net.arcs[a].tail + 1) + " " + std::to_string(net.arcs[a].head + 1) + " " +
           to_string(net.arcs[a].orig) + "\n";
  return out;
}

std::string write_solution(const Network& net, const std::vector<cap_t>& flow, cap_t value) {
  std::string out = "s " + to_string(value) + "\n";
  for (int a = 0; a < net.m(); ++a) {
    if (flow[a] <= 0) continue;
    out += "f " + std::to_string(net.arcs[a].tail + 1) + " " + std::to_string(net.arcs[a].head + 1) + " " +
           to_string(flow[a]) + "\n";
  }
  return out;
}

Solution parse_solution(const Network& net, const std::string& text) {
  std::istringstream in(text);
  Solution sol;
  sol.flow.assign(static_cast<size_t>(net.m()), 0);
  bool seen_value = false;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto f = fields(line);
    if (f.empty() || f[0] == "c") continue;
    if (f[0] == "s" && f.size() == 2) {
      if (seen_value) throw DimacsError(Kind::Format, lineno, "second value line");
      sol.value = parse_amount(f[1], lineno);
      seen_value = true;
    } else if (f[0] == "f" && f.size() == 4) {
      int u = node_id(f[1], net.n, lineno), v = node_id(f[2], net.n, lineno);
      int a = net.find_arc(u, v);
      if (a < 0) throw DimacsError(Kind::Format, lineno, "flow on a missing arc " + f[1] + "->" + f[2]);
      sol.flow[a] += parse_amount(f[3], lineno);
    } else {
      throw DimacsError(Kind::Parse, lineno, "expected 's <value>' or 'f <u> <v> <amount>'");
    }
  }
  if (!seen_value) throw DimacsError(Kind::Format, 0, "missing value line");
  return sol;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DimacsError(Kind::Format, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace maxflow
