#ifndef CSA_IO_HPP
#define CSA_IO_HPP

#include <iosfwd>
#include <string>

#include "csa/arrangement.hpp"
#include "csa/freeness.hpp"
#include "csa/graphs.hpp"

namespace csa {

// Arrangement text format: first line "dim L", then one hyperplane per
// line: optional label, colon, L integers.
Arrangement read_arrangement(std::istream& in);
Arrangement read_arrangement_file(const std::string& path);
void write_arrangement(std::ostream& out, const Arrangement& a);

// Multiplicity file: whitespace-separated non-negative integers in
// hyperplane order.
Multiplicity read_multiplicity(std::istream& in, int expected_count);
Multiplicity read_multiplicity_file(const std::string& path, int expected_count);

// Edge list: header "n m", then m lines "u v". graph6: standard format,
// chosen by filename extension ".g6" or by read_graph6 directly.
Graph read_edge_list(std::istream& in);
Graph read_graph6_line(const std::string& line);
Graph read_graph_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Certificate JSON per the chain-step schema; arrangement inline or by
// file reference.
Certificate read_certificate(std::istream& in, const std::string& base_dir = "");
Certificate read_certificate_file(const std::string& path);
std::string certificate_to_json(const Certificate& cert);

// Derivation basis JSON: {"dim": L, "derivations": [[poly, ...], ...]},
// each poly a list of {"c": "num/den", "e": [exponents]} terms.
std::vector<PolyDerivation> read_basis(std::istream& in, int dim);
std::vector<PolyDerivation> read_basis_file(const std::string& path, int dim);

// Filtration file: one level per line, hyperplane labels or indices.
std::vector<std::vector<int>> read_filtration_file(const std::string& path, const Arrangement& a);

}  // namespace csa

#endif
