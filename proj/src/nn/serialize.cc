#include "autodime/nn/serialize.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace autodime::nn {
namespace {

std::string NextLine(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(std::string("checkpoint truncated: expected ") + what);
  }
  return line;
}

void ReadRow(std::istream& in, int count, auto&& sink) {
  std::istringstream row(NextLine(in, "parameter row"));
  std::string token;
  for (int i = 0; i < count; ++i) {
    if (!(row >> token)) throw std::runtime_error("checkpoint row too short");
    sink(i, ParseDouble(token));
  }
  if (row >> token) throw std::runtime_error("checkpoint row too long");
}

}  // namespace

std::string FormatHexDouble(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", value);
  return buf;
}

double ParseDouble(const std::string& token) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE) {
    throw std::runtime_error("malformed number '" + token + "'");
  }
  return value;
}

void WriteNetwork(std::ostream& out, const Mlp& net, std::int64_t step_count) {
  out << "mlp v1\ndims";
  for (int d : net.layer_dims()) out << ' ' << d;
  out << "\nstep " << step_count << '\n';
  for (std::size_t l = 0; l < net.layers().size(); ++l) {
    const DenseLayer& layer = net.layers()[l];
    out << "layer " << l << '\n';
    for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
      for (Eigen::Index j = 0; j < layer.weight.cols(); ++j) {
        if (j) out << ' ';
        out << FormatHexDouble(layer.weight(i, j));
      }
      out << '\n';
    }
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) {
      if (i) out << ' ';
      out << FormatHexDouble(layer.bias(i));
    }
    out << '\n';
  }
  out << "end\n";
}

NetworkRecord ReadNetwork(std::istream& in) {
  if (NextLine(in, "header") != "mlp v1") {
    throw std::runtime_error("unsupported network header");
  }
  std::istringstream dims_line(NextLine(in, "dims"));
  std::string tag;
  dims_line >> tag;
  if (tag != "dims") throw std::runtime_error("expected dims line");
  std::vector<int> dims;
  for (int d; dims_line >> d;) dims.push_back(d);
  if (dims.size() < 2) throw std::runtime_error("network needs two or more dims");
  for (int d : dims) {
    if (d <= 0) throw std::runtime_error("network dims must be positive");
  }

  NetworkRecord record;
  std::istringstream step_line(NextLine(in, "step"));
  if (!(step_line >> tag >> record.step_count) || tag != "step") {
    throw std::runtime_error("expected step line");
  }
  record.net = Mlp(dims);
  for (std::size_t l = 0; l < record.net.layers().size(); ++l) {
    if (NextLine(in, "layer") != "layer " + std::to_string(l)) {
      throw std::runtime_error("expected layer " + std::to_string(l));
    }
    DenseLayer& layer = record.net.layers()[l];
    for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
      ReadRow(in, static_cast<int>(layer.weight.cols()),
              [&](int j, double v) { layer.weight(i, j) = v; });
    }
    ReadRow(in, static_cast<int>(layer.bias.size()),
            [&](int j, double v) { layer.bias(j) = v; });
  }
  if (NextLine(in, "end") != "end") throw std::runtime_error("expected end");
  return record;
}

}  // namespace autodime::nn
