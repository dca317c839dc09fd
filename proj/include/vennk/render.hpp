#pragma once

#include <string>

#include "vennk/arrangement.hpp"

namespace vennk {

struct RenderOptions {
  bool shade_faces = false;  // fill each face by the weight of its sign vector
  int size = 800;            // canvas width and height in pixels
};

/// SVG 1.1 drawing with one closed path per polygon (class "curve") and,
/// when shading, one path per face (class "face"). Byte-identical output
/// for identical input. Throws DegeneracyError like verify.
std::string render_svg(const PolygonFamily& family, const RenderOptions& options = {});

}  // namespace vennk
