#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace onewave {

struct GridDim {
  std::string name;
  std::size_t size = 0;
  double origin = 0.0;
  double spacing = 1.0;
  std::string unit;

  friend bool operator==(const GridDim&, const GridDim&) = default;
};

/// On-disk array: a binary payload of little-endian IEEE-754 64-bit values in
/// row-major order, plus a text sidecar "<path>.meta" describing dimensions.
/// Complex data is stored interleaved (re, im), doubling the payload length.
struct GridFile {
  std::vector<GridDim> dims;
  bool is_complex = false;
  std::vector<double> data;
  std::map<std::string, std::string> attrs;  // free-form sidecar attributes

  std::size_t element_count() const;  // product of dim sizes

  void write(const std::string& path) const;
  static GridFile read(const std::string& path);

  double attr_as_double(const std::string& key) const;
  bool has_attr(const std::string& key) const { return attrs.count(key) > 0; }
};

}  // namespace onewave
