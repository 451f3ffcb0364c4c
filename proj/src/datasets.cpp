#include "wgof/datasets.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "wgof/errors.hpp"

namespace wgof {

namespace {

// Failure stresses (GPa) of single carbon fibers at four gauge lengths,
// collected by M. Priest (University of Surrey); classic Weibull
// benchmark data, listed in reading order.
const std::vector<double> kFibers1mm = {
    2.247, 2.64,  2.842, 2.908, 3.099, 3.126, 3.245, 3.328, 3.355, 3.383,
    3.572, 3.581, 3.681, 3.726, 3.727, 3.728, 3.783, 3.785, 3.786, 3.896,
    3.912, 3.964, 4.05,  4.063, 4.082, 4.111, 4.118, 4.141, 4.216, 4.251,
    4.262, 4.326, 4.402, 4.457, 4.466, 4.519, 4.542, 4.555, 4.614, 4.632,
    4.634, 4.636, 4.678, 4.698, 4.738, 4.832, 4.924, 5.043, 5.099, 5.134,
    5.359, 5.473, 5.571, 5.684, 5.721, 5.998, 6.06};

const std::vector<double> kFibers10mm = {
    1.901, 2.132, 2.203, 2.228, 2.257, 2.35,  2.361, 2.396, 2.397, 2.445,
    2.454, 2.454, 2.474, 2.518, 2.522, 2.525, 2.532, 2.575, 2.614, 2.616,
    2.618, 2.624, 2.659, 2.675, 2.738, 2.74,  2.856, 2.917, 2.928, 2.937,
    2.937, 2.977, 2.996, 3.03,  3.125, 3.139, 3.145, 3.22,  3.223, 3.235,
    3.243, 3.264, 3.272, 3.294, 3.332, 3.346, 3.377, 3.408, 3.435, 3.493,
    3.501, 3.537, 3.554, 3.562, 3.628, 3.852, 3.871, 3.886, 3.971, 4.024,
    4.027, 4.225, 4.395, 5.02};

const std::vector<double> kFibers20mm = {
    1.312, 1.314, 1.479, 1.552, 1.7,   1.803, 1.861, 1.865, 1.944, 1.958,
    1.966, 1.997, 2.006, 2.021, 2.027, 2.055, 2.063, 2.098, 2.14,  2.179,
    2.224, 2.24,  2.253, 2.27,  2.272, 2.274, 2.301, 2.301, 2.339, 2.359,
    2.382, 2.382, 2.426, 2.434, 2.435, 2.478, 2.49,  2.511, 2.514, 2.535,
    2.554, 2.566, 2.57,  2.586, 2.629, 2.633, 2.642, 2.648, 2.684, 2.697,
    2.726, 2.77,  2.773, 2.8,   2.809, 2.818, 2.821, 2.848, 2.88,  2.954,
    3.012, 3.067, 3.084, 3.09,  3.096, 3.128, 3.233, 3.433, 3.585, 3.585};

const std::vector<double> kFibers50mm = {
    1.339, 1.434, 1.549, 1.574, 1.589, 1.613, 1.746, 1.753, 1.764, 1.807,
    1.812, 1.84,  1.852, 1.852, 1.862, 1.864, 1.931, 1.952, 1.974, 2.019,
    2.051, 2.055, 2.058, 2.088, 2.125, 2.162, 2.171, 2.172, 2.18,  2.194,
    2.211, 2.27,  2.272, 2.28,  2.299, 2.308, 2.335, 2.349, 2.356, 2.386,
    2.39,  2.41,  2.43,  2.431, 2.458, 2.471, 2.497, 2.514, 2.558, 2.577,
    2.593, 2.601, 2.604, 2.62,  2.633, 2.67,  2.682, 2.699, 2.705, 2.735,
    2.785, 2.785, 3.02,  3.042, 3.116, 3.174};

const std::map<std::string, const std::vector<double>*>& builtin_map() {
  static const std::map<std::string, const std::vector<double>*> m = {
      {"fibers-1mm", &kFibers1mm},
      {"fibers-10mm", &kFibers10mm},
      {"fibers-20mm", &kFibers20mm},
      {"fibers-50mm", &kFibers50mm}};
  return m;
}

InputDataset parse_stream(std::istream& is, const std::string& source) {
  std::vector<double> values;
  int skipped_lines = 0;
  std::string line;
  int line_number = 0;
  while (std::getline(is, line)) {
    ++line_number;
    std::size_t start = line.find_first_not_of(" \t\r,");
    if (start == std::string::npos || line[start] == '#') {
      ++skipped_lines;
      continue;
    }
    std::size_t pos = start;
    while (pos < line.size()) {
      while (pos < line.size() &&
             (std::isspace(static_cast<unsigned char>(line[pos])) ||
              line[pos] == ',')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[end])) &&
             line[end] != ',') {
        ++end;
      }
      const std::string token = line.substr(pos, end - pos);
      char* parse_end = nullptr;
      const double v = std::strtod(token.c_str(), &parse_end);
      if (parse_end != token.c_str() + token.size()) {
        throw MalformedNumberError(
            source + ": malformed number '" + token + "' on line " +
                std::to_string(line_number),
            line_number);
      }
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw NoPositiveValuesError(source + ": non-positive value '" + token +
                                    "' on line " + std::to_string(line_number));
      }
      values.push_back(v);
      pos = end;
    }
  }
  if (values.empty()) {
    throw NoPositiveValuesError(source + ": no positive values found");
  }
  return InputDataset{Sample::from_vector(values), source,
                      static_cast<int>(values.size()), skipped_lines};
}

}  // namespace

const std::vector<std::string>& builtin_dataset_names() {
  static const std::vector<std::string> names = {
      "fibers-1mm", "fibers-10mm", "fibers-20mm", "fibers-50mm"};
  return names;
}

bool is_builtin_dataset(const std::string& name) {
  return builtin_map().count(name) > 0;
}

InputDataset ingest(const std::string& path_or_builtin) {
  auto it = builtin_map().find(path_or_builtin);
  if (it != builtin_map().end()) {
    const auto& values = *it->second;
    return InputDataset{Sample::from_vector(values), path_or_builtin,
                        static_cast<int>(values.size()), 0};
  }
  std::ifstream file(path_or_builtin);
  if (!file) {
    throw FileNotFoundError("cannot open '" + path_or_builtin + "'");
  }
  return parse_stream(file, path_or_builtin);
}

void write_sample(const Sample& sample, std::ostream& os) {
  char buf[64];
  for (Eigen::Index i = 0; i < sample.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", sample[i]);
    os << buf;
  }
}

std::string canonical_serialization(const Sample& sample) {
  std::ostringstream os;
  write_sample(sample, os);
  return os.str();
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
             nullptr);
  std::string hex;
  hex.reserve(2 * length);
  static const char* kDigits = "0123456789abcdef";
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kDigits[digest[i] >> 4]);
    hex.push_back(kDigits[digest[i] & 0xF]);
  }
  return hex;
}

}  // namespace wgof
