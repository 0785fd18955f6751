#pragma once

#include <string>
#include <vector>

#include "endosign/roots/root_datum.hpp"

namespace endosign {

enum class Isogeny { SimplyConnected, Adjoint };

/// Cartan integer <a_i, a_j^v> (0-based, Bourbaki numbering) for a simple
/// type letter A-G of rank n. Throws InputError for unknown types.
long cartan_entry(char type, std::size_t n, std::size_t i, std::size_t j);

/// Simple factor of the given type. Simply connected: X_* has the simple
/// coroots as basis. Adjoint: X has the simple roots as basis.
RootDatum build_simple(char type, std::size_t n, Isogeny isogeny);

/// Split torus of the given rank (no roots).
RootDatum build_torus(std::size_t rank);

/// Block-diagonal product of root data.
RootDatum product(const std::vector<RootDatum>& factors, std::string label = {});

/// Parses strings such as "A1:sc", "G2", "B2:ad*A1:sc", "A1xA1", "A2:sc*T1".
/// Factors are separated by '*' or 'x'; the isogeny tag defaults to sc;
/// "Tk" is a rank-k torus. Simple factors are limited to rank 8.
RootDatum build_named(const std::string& spec);

/// |W| of a simple factor from the classical order formulas.
Integer weyl_group_order_formula(char type, std::size_t n);

struct CatalogEntry {
  std::string name;
  std::size_t rank = 0;
  std::size_t num_roots = 0;
  Integer weyl_order;
};

/// Built-in names in a fixed order (types A..G, increasing rank, sc before ad).
/// Types whose sc and ad forms coincide (E8, F4, G2) are listed once without tag.
std::vector<CatalogEntry> catalog(const std::string& filter = {});

}  // namespace endosign
