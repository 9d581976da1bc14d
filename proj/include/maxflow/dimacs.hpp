#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "maxflow/network.hpp"

namespace maxflow {

class DimacsError : public std::runtime_error {
 public:
  enum class Kind { Parse, Format, Range };
  DimacsError(Kind kind, int line, const std::string& what);
  Kind kind() const { return kind_; }
  int line() const { return line_; }  // 0 when not tied to a line

 private:
  Kind kind_;
  int line_;
};

// DIMACS max-flow problem text: "p max n m", "n id s|t", "a u v cap", "c ...".
Network parse_dimacs(const std::string& text);

// Problem text for the input arcs of net (positive input capacity only).
std::string write_dimacs(const Network& net);

// "s <value>" then one "f <u> <v> <amount>" line per arc with positive flow,
// 1-based node ids, arc order.
std::string write_solution(const Network& net, const std::vector<cap_t>& flow, cap_t value);

struct Solution {
  cap_t value = 0;
  std::vector<cap_t> flow;  // per arc of the network it was read against
};

Solution parse_solution(const Network& net, const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace maxflow
