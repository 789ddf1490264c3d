#pragma once

#include <ostream>
#include <string>

#include "qhrigid/data.hpp"
#include "qhrigid/linalg.hpp"
#include "qhrigid/representation.hpp"

namespace qhr {

inline void PrintTo(const LoewyProfile& p, std::ostream* os) { *os << "[" << p.str() << "]"; }

}  // namespace qhr

namespace qhr::test {

inline std::string data_path(const std::string& file) { return std::string(QHR_TEST_DATA_DIR) + "/" + file; }

inline AlgebraPtr bundled(const std::string& name, unsigned long characteristic = 0) {
  return load_algebra(name, characteristic);
}

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Mat mat(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  std::size_t width = 0;
  for (const auto& r : rows) {
    rs.push_back(vec(r));
    width = r.size();
  }
  return Mat::from_rows(f, width, rs);
}

}  // namespace qhr::test
