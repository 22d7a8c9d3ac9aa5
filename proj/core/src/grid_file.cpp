#include "onewave/grid_file.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "onewave/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "grid payloads are little-endian; big-endian hosts unsupported");

namespace onewave {
namespace {

constexpr const char* kFormatTag = "owgrid-1";

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::size_t GridFile::element_count() const {
  std::size_t n = 1;
  for (const GridDim& d : dims) n *= d.size;
  return n;
}

double GridFile::attr_as_double(const std::string& key) const {
  auto it = attrs.find(key);
  if (it == attrs.end()) throw ConfigError("grid file: missing attr " + key);
  return std::stod(it->second);
}

void GridFile::write(const std::string& path) const {
  const std::size_t expect = element_count() * (is_complex ? 2 : 1);
  if (data.size() != expect)
    throw ConfigError("grid file: payload length does not match dims");

  std::ofstream bin(path, std::ios::binary | std::ios::trunc);
  if (!bin) throw ConfigError("grid file: cannot open " + path);
  bin.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(double)));
  if (!bin) throw NumericError("grid file: short write to " + path);
  bin.close();

  std::ofstream meta(path + ".meta", std::ios::trunc);
  if (!meta) throw ConfigError("grid file: cannot open " + path + ".meta");
  meta << "format = " << kFormatTag << "\n";
  meta << "kind = " << (is_complex ? "complex" : "real") << "\n";
  meta << "ndim = " << dims.size() << "\n";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const GridDim& d = dims[i];
    meta << "dim" << i << ".name = " << d.name << "\n";
    meta << "dim" << i << ".size = " << d.size << "\n";
    meta << "dim" << i << ".origin = " << format_double(d.origin) << "\n";
    meta << "dim" << i << ".spacing = " << format_double(d.spacing) << "\n";
    meta << "dim" << i << ".unit = " << d.unit << "\n";
  }
  for (const auto& [k, v] : attrs) meta << "attr." << k << " = " << v << "\n";
}

GridFile GridFile::read(const std::string& path) {
  std::ifstream meta(path + ".meta");
  if (!meta) throw ConfigError("grid file: missing sidecar " + path + ".meta");

  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(meta, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("grid file sidecar: malformed line '" + t + "'");
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  if (kv["format"] != kFormatTag)
    throw ConfigError("grid file: unknown format tag '" + kv["format"] + "'");

  GridFile g;
  g.is_complex = kv["kind"] == "complex";
  const std::size_t ndim = std::stoul(kv.at("ndim"));
  for (std::size_t i = 0; i < ndim; ++i) {
    const std::string p = "dim" + std::to_string(i) + ".";
    GridDim d;
    d.name = kv.at(p + "name");
    d.size = std::stoul(kv.at(p + "size"));
    d.origin = std::stod(kv.at(p + "origin"));
    d.spacing = std::stod(kv.at(p + "spacing"));
    if (auto it = kv.find(p + "unit"); it != kv.end()) d.unit = it->second;
    g.dims.push_back(std::move(d));
  }
  for (const auto& [k, v] : kv)
    if (k.rfind("attr.", 0) == 0) g.attrs[k.substr(5)] = v;

  std::ifstream bin(path, std::ios::binary);
  if (!bin) throw ConfigError("grid file: cannot open " + path);
  const std::size_t n = g.element_count() * (g.is_complex ? 2 : 1);
  g.data.resize(n);
  bin.read(reinterpret_cast<char*>(g.data.data()),
           static_cast<std::streamsize>(n * sizeof(double)));
  if (static_cast<std::size_t>(bin.gcount()) != n * sizeof(double))
    throw ConfigError("grid file: payload shorter than declared dims");
  return g;
}

}  // namespace onewave
