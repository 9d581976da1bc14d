#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maxflow {

// Integer capacity / flow type. 64 bits is too narrow for k^alpha capacities.
using cap_t = __int128;

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define MF_REQUIRE(cond, msg)                                    \
  do {                                                           \
    if (!(cond)) throw ::maxflow::ContractViolation(msg);        \
  } while (0)

std::string to_string(cap_t v);

// Parses an optionally signed decimal integer; throws std::out_of_range when
// the magnitude does not fit and std::invalid_argument on junk.
cap_t parse_cap(std::string_view text);

}  // namespace maxflow
