#pragma once

#include "tropgeom/crossratio.hpp"
#include "tropgeom/pencil.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tropgeom {

struct SceneView {
  Rat xmin, xmax, ymin, ymax;
  Rat ray_extension = 1;
};

struct ScenePoint {
  PlanePoint at;
  std::string label;
  bool aux = false;
};

struct SceneLine {
  TropLine line;
  std::string label;
  bool aux = false;
};

struct ScenePencil {
  Pencil pencil;
  std::string label;
};

/// Drawn as both lines, the center, and a dotted auxiliary tropical line
/// through the center for every marked source point, with its image marked
/// on the target line.
struct ScenePerspectivity {
  PlanePoint center;
  TropLine src;
  TropLine dst;
  std::vector<PlanePoint> points;
};

struct SceneProjectivity {
  Projectivity map;
  std::vector<PlanePoint> points;
};

// Data-only payloads; accepted by the scene schema, not drawn.
struct SceneQuadruple {
  TropVector a, b, c, d;
};

struct SceneMatrix {
  TropMatrix m;
};

using SceneObject =
    std::variant<ScenePoint, SceneLine, ScenePencil, ScenePerspectivity,
                 SceneProjectivity, SceneQuadruple, SceneMatrix>;

struct Scene {
  Flavor convention = Flavor::MaxPlus;
  SceneView view;
  std::vector<SceneObject> objects;
};

/// Deterministic SVG: same scene, byte-identical output. Rays run from the
/// vertex to the view boundary plus ray_extension; coordinates are printed
/// with 6 decimal places, rounding half to even. Throws EmptyView on an
/// empty view box.
std::string render_svg(const Scene& scene);

}  // namespace tropgeom
