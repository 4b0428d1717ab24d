#pragma once

#include <string>
#include <vector>

#include "heis/codazzi.hpp"
#include "heis/invariants.hpp"
#include "heis/surface.hpp"
#include "heis/surface_geom.hpp"

namespace heis {

/// ASCII OBJ of the surface sampled on an nu x nv grid. Vertices carry 17
/// significant digits; quads split into two triangles with consistent
/// winding; rows that collapse to a point (poles) are deduplicated and their
/// cells emitted as triangles. Output is deterministic.
std::string export_obj(const ParamSurface& surf, int nu, int nv);

std::string profile_csv(const InvariantProfile& profile);
std::string singular_csv(const std::vector<LocusPolyline>& polylines);
std::string phase_field_csv(const std::vector<PhaseSample>& samples);

void write_file(const std::string& path, const std::string& content);

}  // namespace heis
