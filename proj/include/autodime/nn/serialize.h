#ifndef AUTODIME_NN_SERIALIZE_H_
#define AUTODIME_NN_SERIALIZE_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "autodime/nn/mlp.h"

namespace autodime::nn {

// Text checkpoint format, version 1. Values are C99 hex floats so a
// write/read cycle is bit-exact.
//
//   mlp v1
//   dims <d0> <d1> ... <dL>
//   step <optimizer step count>
//   layer <l>
//   <weight row 0: d_{l} values> ... (d_{l+1} rows, row-major)
//   <bias: d_{l+1} values>
//   ...
//   end
struct NetworkRecord {
  Mlp net;
  std::int64_t step_count = 0;
};

void WriteNetwork(std::ostream& out, const Mlp& net, std::int64_t step_count);
// Throws std::runtime_error on malformed input.
NetworkRecord ReadNetwork(std::istream& in);

std::string FormatHexDouble(double value);
double ParseDouble(const std::string& token);

}  // namespace autodime::nn

#endif  // AUTODIME_NN_SERIALIZE_H_
