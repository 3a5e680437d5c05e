#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "semap/map.hpp"
#include "semap/vertex_type.hpp"

namespace semap {

struct CatalogEntry {
  std::string name;
  PolyhedralMap map;
  VertexType type;
  int vertex_count = 0;
  std::string recipe;  // e.g. "truncate(cube)"
};

// tetrahedron, cube, octahedron, dodecahedron, icosahedron
CatalogEntry platonic(std::string_view name);
CatalogEntry prism(int n);
CatalogEntry antiprism(int n);
CatalogEntry archimedean(std::string_view name);
CatalogEntry pseudo_rhombicuboctahedron();

const std::vector<std::string>& platonic_names();
const std::vector<std::string>& archimedean_names();

// Any catalog name: the solids above, "pseudo-rhombicuboctahedron",
// "prism-N", "antiprism-N", or "rp2-<sphere entry>" for the quotients.
// Throws UnknownName.
CatalogEntry catalog_entry(std::string_view name);

// Platonic, Archimedean, pseudo, prisms (3, 5..max_gon) and antiprisms
// (4..max_gon). Throws MaxGonTooSmall.
std::vector<CatalogEntry> sphere_catalog(int max_gon = 12);

// The ten sphere maps with a polyhedral antipodal quotient.
const std::vector<std::string>& rp2_sources();
std::vector<CatalogEntry> rp2_catalog();

// `name<TAB>type<TAB>count<TAB>recipe`, one line per entry.
void write_manifest(std::ostream& out, const std::vector<CatalogEntry>& entries);

}  // namespace semap
