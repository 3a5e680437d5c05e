#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "semap/map.hpp"

namespace semap {

using Vec3 = std::array<double, 3>;

enum class Provenance { ExactFormula, Relaxed };

struct RealizationReport {
  double max_norm_deviation = 0;  // max | |x| - 1 |
  double edge_length_spread = 0;  // longest minus shortest edge
  double max_planarity_residual = 0;  // distance of a vertex from its face's best plane
  double max_regularity_residual = 0;  // spread of side lengths within a face
  bool converged = true;
  long iterations = 0;
};

struct Realization {
  std::vector<Vec3> coords;
  Provenance provenance = Provenance::Relaxed;
  RealizationReport report;
};

std::string_view provenance_name(Provenance p);

// Fills in the report fields for given coordinates.
RealizationReport measure(const PolyhedralMap& m, const std::vector<Vec3>& coords);

// Closed-form coordinates matching the vertex labels of prism(n) / antiprism(n).
Realization prism_coordinates(int n);
Realization antiprism_coordinates(int n);

struct RelaxOptions {
  long max_steps = 100000;
  double tolerance = 1e-12;  // stop once the largest vertex move is below this
};

// Tutte layout of the map with its largest face outside, lifted to the
// sphere and conformally recentred, then relaxed towards equal edges and
// regular faces. report.converged is false when the step budget runs out or
// the line search stalls (ConvergenceFailure in the CLI).
Realization realize_on_sphere(const PolyhedralMap& m, const RelaxOptions& opts = {});

enum class ExportFormat { Off, Svg };

// Throws CountMismatch when coordinates and map disagree.
void export_realization(std::ostream& out, const Realization& r, const PolyhedralMap& m, ExportFormat fmt);

struct OffData {
  std::vector<Vec3> coords;
  std::vector<Face> faces;
};
OffData parse_off(std::string_view text);

}  // namespace semap
