#include "spechthom/io.hpp"

#include <cctype>
#include <sstream>

namespace spechthom {

namespace {

// Comma-separated positive integers; empty string → empty list.
std::vector<int> parse_int_list(const std::string& s, size_t base_pos) {
  std::vector<int> out;
  if (s.empty()) return out;
  size_t i = 0;
  while (i < s.size()) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected a digit", base_pos + i);
    long v = 0;
    const size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw ParseError("number too large", base_pos + start);
      ++i;
    }
    out.push_back(static_cast<int>(v));
    if (i < s.size()) {
      if (s[i] != ',') throw ParseError("expected ','", base_pos + i);
      ++i;
      if (i == s.size()) throw ParseError("trailing ','", base_pos + i - 1);
    }
  }
  return out;
}

} // namespace

Partition parse_partition(const std::string& s) {
  auto parts = parse_int_list(s, 0);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw ParseError("partition parts must be positive", 0);
    if (i > 0 && parts[i] > parts[i - 1])
      throw ParseError("partition parts must be weakly decreasing", 0);
  }
  return Partition(std::move(parts));
}

Composition parse_composition(const std::string& s) {
  auto parts = parse_int_list(s, 0);
  for (int p : parts)
    if (p <= 0) throw ParseError("composition parts must be positive", 0);
  return Composition(std::move(parts));
}

Bicomposition parse_bicomposition(const std::string& s) {
  const size_t bar = s.find('|');
  if (bar == std::string::npos)
    throw ParseError("bicomposition needs a '|' separator", s.size());
  if (s.find('|', bar + 1) != std::string::npos)
    throw ParseError("bicomposition has more than one '|'", s.find('|', bar + 1));
  auto alpha = parse_int_list(s.substr(0, bar), 0);
  auto beta = parse_int_list(s.substr(bar + 1), bar + 1);
  return Bicomposition(Composition(std::move(alpha)), Composition(std::move(beta)));
}

Permutation parse_permutation(const std::string& s, int n) {
  if (s.empty()) throw ParseError("empty permutation", 0);
  if (s == "id" || s == "()" || s == "e") return Permutation::identity(n);
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("expected ']'", s.size() - 1);
    auto img = parse_int_list(s.substr(1, s.size() - 2), 1);
    if (static_cast<int>(img.size()) != n)
      throw ParseError("image list must have length " + std::to_string(n), 1);
    try {
      return Permutation(std::move(img));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1);
    }
  }
  if (s.front() == '(') {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < s.size()) {
      if (s[i] != '(') throw ParseError("expected '('", i);
      ++i;
      std::vector<int> cyc;
      while (i < s.size() && s[i] != ')') {
        while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
        if (i < s.size() && s[i] == ')') break;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("expected a digit in cycle", i);
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          v = v * 10 + (s[i++] - '0');
        if (v < 1 || v > n)
          throw ParseError("cycle entry out of range 1.." + std::to_string(n), i - 1);
        cyc.push_back(static_cast<int>(v));
      }
      if (i >= s.size()) throw ParseError("unterminated cycle", s.size() - 1);
      ++i; // ')'
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    try {
      return Permutation::from_cycles(n, cycles);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  throw ParseError("permutation must be '[images]', '(cycles)' or 'id'", 0);
}

NumericTableau parse_numeric_tableau(const std::string& s, const Partition& shape) {
  std::vector<std::vector<int>> rows;
  size_t pos = 0, start = 0;
  auto flush = [&](size_t end) {
    rows.push_back(parse_int_list(s.substr(start, end - start), start));
    start = end + 1;
  };
  for (pos = 0; pos < s.size(); ++pos)
    if (s[pos] == '/') flush(pos);
  flush(s.size());
  if (s.empty()) rows.clear();
  try {
    return NumericTableau(shape, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

ColorTableau parse_color_tableau(const std::string& s, const Partition& shape,
                                 const Bicomposition& type) {
  std::vector<std::vector<Color>> rows;
  std::vector<Color> current;
  size_t i = 0;
  auto parse_token = [&]() -> Color {
    if (i >= s.size() || (s[i] != 'c' && s[i] != 'd'))
      throw ParseError("expected colour token 'c<k>' or 'd<k>'", i);
    const int kind = s[i] == 'c' ? 0 : 1;
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected colour index", i);
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return Color{kind, static_cast<int>(v)};
  };
  if (!s.empty()) {
    while (true) {
      current.push_back(parse_token());
      if (i == s.size()) break;
      if (s[i] == ',') {
        ++i;
      } else if (s[i] == '/') {
        rows.push_back(std::move(current));
        current.clear();
        ++i;
      } else {
        throw ParseError("expected ',' or '/'", i);
      }
    }
    rows.push_back(std::move(current));
  }
  try {
    return ColorTableau(shape, type, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const Bicomposition& ab) {
  json j;
  j["alpha"] = ab.alpha().parts();
  j["beta"] = ab.beta().parts();
  return j;
}

json to_json(const Permutation& p) { return json(p.images()); }

json to_json(const NumericTableau& t) {
  json rows = json::array();
  for (int i = 1; i <= t.shape().length(); ++i) {
    json row = json::array();
    for (int j = 1; j <= t.shape().part(i); ++j) row.push_back(t.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ColorTableau& t) {
  json rows = json::array();
  for (int i = 1; i <= t.shape().length(); ++i) {
    json row = json::array();
    for (int j = 1; j <= t.shape().part(i); ++j) row.push_back(t.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json coords_json(const std::vector<Int>& coords) {
  json arr = json::array();
  for (const auto& c : coords) arr.push_back(c.str());
  return arr;
}

} // namespace

json specht_vector_json(const Partition& shape, const std::vector<Int>& coords) {
  json j;
  j["shape"] = to_json(shape);
  j["basis"] = "std-lex";
  j["coords"] = coords_json(coords);
  return j;
}

json signed_vector_json(const Bicomposition& type, const std::vector<Int>& coords) {
  json j;
  j["type"] = to_json(type);
  j["basis"] = "gamma-distinguished";
  j["coords"] = coords_json(coords);
  return j;
}

json hom_matrix_json(const HomMatrix& m) {
  json j;
  j["shape"] = to_json(m.shape);
  j["type"] = to_json(m.type);
  j["rep"] = to_json(m.rep);
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  json entries = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

} // namespace spechthom
