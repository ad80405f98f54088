#pragma once

// Line-oriented ASCII pointset files:
//
//   # comment
//   q 13
//   poly 1 1 0 0 1          (optional; base-p coefficients c0..ce)
//   point 1 3 0             (field elements as base-p-digit integer encodings)
//
// The q line comes first; points are normalized on read and written in dense
// index order with LF endings.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "pgblock/pointset.hpp"

namespace pgblock {

struct LoadedSet {
  Field field;
  PlaneIndex plane;
  PointSet set;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

inline LoadedSet read_pointset(std::istream& in) {
  std::optional<Field> field;
  std::optional<PlaneIndex> plane;
  std::optional<PointSet> set;
  std::optional<std::vector<int>> poly;
  int q = 0, lineno = 0;
  std::string line;

  auto materialize = [&]() {
    if (!field) {
      field.emplace(q, poly);
      plane.emplace(*field);
      set.emplace(plane->size());
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key) || key[0] == '#') continue;
    if (key == "q") {
      if (q) throw ParseError(lineno, "duplicate q");
      if (!(ss >> q) || q < 2) throw ParseError(lineno, "bad q");
      if (!Field::factor_prime_power(q)) throw ParseError(lineno, "q is not a prime power");
    } else if (key == "poly") {
      if (!q) throw ParseError(lineno, "poly before q");
      if (field) throw ParseError(lineno, "poly after points");
      std::vector<int> c;
      int v;
      while (ss >> v) c.push_back(v);
      try {
        field.emplace(q, c);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      plane.emplace(*field);
      set.emplace(plane->size());
    } else if (key == "point") {
      if (!q) throw ParseError(lineno, "point before q");
      materialize();
      long long x, y, z;
      if (!(ss >> x >> y >> z)) throw ParseError(lineno, "point needs three coordinates");
      for (long long v : {x, y, z})
        if (v < 0 || v >= q) throw ParseError(lineno, "coordinate out of field range");
      if (x == 0 && y == 0 && z == 0) throw ParseError(lineno, "zero triple");
      Point p = normalize(*field, Fe(x), Fe(y), Fe(z));
      int idx = plane->index_of(p);
      if (set->contains(idx)) throw ParseError(lineno, "point repeated");
      set->insert(idx);
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!q) throw ParseError(lineno, "missing q");
  materialize();
  return LoadedSet{std::move(*field), std::move(*plane), std::move(*set)};
}

inline void write_pointset(const PlaneIndex& plane, const PointSet& s, std::ostream& out) {
  const Field& f = plane.field();
  out << "q " << f.q() << "\n";
  if (f.e() > 1) {
    out << "poly";
    for (int c : f.poly()) out << " " << c;
    out << "\n";
  }
  for (int pi : s.indices()) {
    Point p = plane.point_at(pi);
    out << "point " << int(p.x) << " " << int(p.y) << " " << int(p.z) << "\n";
  }
}

}  // namespace pgblock
