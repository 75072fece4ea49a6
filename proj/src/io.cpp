#include "torusmix/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace torusmix {

namespace {

constexpr char kMagic[4] = {'M', 'X', 'B', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& os, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void write_field(const ScalarField& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_field: cannot open " + path);
  os.write(kMagic, 4);
  put_u32(os, static_cast<std::uint32_t>(f.grid.dim));
  put_u32(os, static_cast<std::uint32_t>(f.grid.n));
  for (double v : f.values) put_f64(os, v);
  if (!os) throw std::runtime_error("write_field: write failed for " + path);
}

ScalarField read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_field: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("read_field: bad magic in " + path);
  std::uint32_t dim = get_u32(is);
  std::uint32_t n = get_u32(is);
  PeriodicGrid g = PeriodicGrid::make(static_cast<int>(dim), static_cast<int>(n));
  ScalarField f(g);
  for (double& v : f.values) v = get_f64(is);
  if (!is) throw std::runtime_error("read_field: truncated file " + path);
  return f;
}

void write_field_csv(const ScalarField& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_field_csv: cannot open " + path);
  os.precision(17);
  if (f.grid.dim == 1) {
    os << "i,value\n";
    for (int i = 0; i < f.grid.n; ++i) os << i << ',' << f.at(i) << '\n';
  } else {
    os << "i,j,value\n";
    for (int i = 0; i < f.grid.n; ++i)
      for (int j = 0; j < f.grid.n; ++j) os << i << ',' << j << ',' << f.at(i, j) << '\n';
  }
}

}  // namespace torusmix
