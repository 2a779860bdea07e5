#pragma once

#include <string>

#include "vlnaug/nav_graph.hpp"
#include "vlnaug/scene.hpp"

namespace vlnaug {

struct RenderSpec {
  std::string viewpoint;
  double radius = 4.0;  // metres shown around the viewpoint
  int width = 800;
  int height = 800;
};

// Top-down orthographic SVG centred on the viewpoint, +Y up. Objects within
// `radius` (3D, closed) are drawn as projected OBB outlines with their
// category; neighbors as arrows labelled with the edge length. Objects appear
// in index order and neighbors in id order.
std::string render_viewpoint(const SceneModel& scene, const NavGraph& graph,
                             const RenderSpec& spec);

}  // namespace vlnaug
