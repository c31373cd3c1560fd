#pragma once

// Closed-form surface charts with exact jets: the constant-curvature
// "spheres" of L^3 and R^3_2, planes, cylinders, and sample graphs.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minkgeo/surface.hpp"

namespace mink {

// de Sitter sphere S^2_1(c, r) = {p : <p-c, p-c>_L = r^2} via
// x(u,v) = c + r (cosh v cos u, cosh v sin u, sinh v). Timelike surface,
// normal (p-c)/r, K = 1/r^2, H = -1/r.
SurfaceModel de_sitter_chart(const Vector3d& center = Vector3d::Zero(),
                             double r = 1.0,
                             Rect domain = {{-3.0, 3.0}, {-1.5, 1.5}});

// Hyperbolic plane H^2(c, r) (upper sheet of <p-c,p-c>_L = -r^2) via
// x(u,v) = c + r (sinh v cos u, sinh v sin u, cosh v). Spacelike surface,
// normal (p-c)/r, K = -1/r^2, H = 1/r. The chart needs v > 0.
SurfaceModel hyperbolic_chart(const Vector3d& center = Vector3d::Zero(),
                              double r = 1.0,
                              Rect domain = {{-3.0, 3.0}, {0.2, 1.5}});

// Anti-de Sitter space H^2_1 in R^3_2 via
// x(u,v) = (sinh u, cosh u cos v, cosh u sin v). Timelike surface, K = -1.
SurfaceModel anti_de_sitter_chart(Rect domain = {{-1.2, 1.2}, {-3.0, 3.0}});

// Coordinate plane z = 0 in the given ambient.
SurfaceModel plane_chart(Ambient ambient = Ambient::Lorentz3,
                         Rect domain = {{-1.0, 1.0}, {-1.0, 1.0}});

// Cylinder (cos u, sin u, v): timelike in L^3, K = 0, H = -1/2.
SurfaceModel cylinder_chart(Ambient ambient = Ambient::Lorentz3,
                            Rect domain = {{-3.0, 3.0}, {-1.0, 1.0}});

// Spacelike graphs z = f(u,v) over a disk where |grad f| < 1.
SurfaceModel saddle_graph(Rect domain = {{-0.6, 0.6}, {-0.6, 0.6}});
SurfaceModel paraboloid_graph(Rect domain = {{-0.6, 0.6}, {-0.6, 0.6}});

struct GallerySurface {
  std::string name;
  std::string description;
  SurfaceModel model;
  std::optional<double> const_K, const_H;  // expected constants, when known
};

const std::vector<GallerySurface>& surface_gallery();

// nullptr when the name is unknown.
const GallerySurface* find_gallery_surface(std::string_view name);

}  // namespace mink
