#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spechthom/hom.hpp"
#include "spechthom/partition.hpp"
#include "spechthom/permutation.hpp"
#include "spechthom/tableau.hpp"

namespace spechthom {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// "2,2,1"; the empty string is the empty partition.
Partition parse_partition(const std::string& s);
// "3,1,2"; empty string allowed.
Composition parse_composition(const std::string& s);
// "alpha|beta" with either side possibly empty: "2|2,1", "|3,2,2", "4|".
Bicomposition parse_bicomposition(const std::string& s);
// Image list "[2,1,3]", cycles "(1 2)(3 4)" or "(1,2)", or "id"/"()".
Permutation parse_permutation(const std::string& s, int n);
// Rows separated by '/', entries by ',': "1,7/2/3/4/5/6".
NumericTableau parse_numeric_tableau(const std::string& s, const Partition& shape);
// Rows of colour tokens: "c1,c1/d1,d2/d1".
ColorTableau parse_color_tableau(const std::string& s, const Partition& shape,
                                 const Bicomposition& type);

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const Bicomposition& ab);
json to_json(const Permutation& p); // image array
json to_json(const NumericTableau& t);
json to_json(const ColorTableau& t);

// {"shape": [...], "basis": "std-lex", "coords": ["...", ...]}
json specht_vector_json(const Partition& shape, const std::vector<Int>& coords);
// {"type": {...}, "basis": "gamma-distinguished", "coords": [...]}
json signed_vector_json(const Bicomposition& type, const std::vector<Int>& coords);
// {"shape": ..., "type": ..., "rep": ..., "rows": ..., "cols": ..., "entries": [[...]]}
// with decimal-string entries.
json hom_matrix_json(const HomMatrix& m);

} // namespace spechthom
