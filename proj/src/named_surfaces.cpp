#include "minkgeo/named_surfaces.hpp"

#include <cmath>

namespace mink {

SurfaceModel de_sitter_chart(const Vector3d& center, double r, Rect domain) {
  if (r <= 0.0) throw precondition_error("de_sitter_chart: radius must be positive");
  SurfaceModel m;
  m.domain = domain;
  m.ambient = Ambient::Lorentz3;
  m.eval = [center, r](double u, double v) {
    const double cu = std::cos(u), su = std::sin(u);
    const double cv = std::cosh(v), sv = std::sinh(v);
    SurfaceJet j;
    j.value = center + r * Vector3d{cv * cu, cv * su, sv};
    j.du = r * Vector3d{-cv * su, cv * cu, 0};
    j.dv = r * Vector3d{sv * cu, sv * su, cv};
    j.duu = r * Vector3d{-cv * cu, -cv * su, 0};
    j.duv = r * Vector3d{-sv * su, sv * cu, 0};
    j.dvv = r * Vector3d{cv * cu, cv * su, sv};
    return j;
  };
  return m;
}

SurfaceModel hyperbolic_chart(const Vector3d& center, double r, Rect domain) {
  if (r <= 0.0) throw precondition_error("hyperbolic_chart: radius must be positive");
  SurfaceModel m;
  m.domain = domain;
  m.ambient = Ambient::Lorentz3;
  m.eval = [center, r](double u, double v) {
    const double cu = std::cos(u), su = std::sin(u);
    const double cv = std::cosh(v), sv = std::sinh(v);
    SurfaceJet j;
    j.value = center + r * Vector3d{sv * cu, sv * su, cv};
    j.du = r * Vector3d{-sv * su, sv * cu, 0};
    j.dv = r * Vector3d{cv * cu, cv * su, sv};
    j.duu = r * Vector3d{-sv * cu, -sv * su, 0};
    j.duv = r * Vector3d{-cv * su, cv * cu, 0};
    j.dvv = r * Vector3d{sv * cu, sv * su, cv};
    return j;
  };
  return m;
}

SurfaceModel anti_de_sitter_chart(Rect domain) {
  SurfaceModel m;
  m.domain = domain;
  m.ambient = Ambient::Index2_3;
  m.eval = [](double u, double v) {
    const double cu = std::cosh(u), su = std::sinh(u);
    const double cv = std::cos(v), sv = std::sin(v);
    SurfaceJet j;
    j.value = {su, cu * cv, cu * sv};
    j.du = {cu, su * cv, su * sv};
    j.dv = {0, -cu * sv, cu * cv};
    j.duu = {su, cu * cv, cu * sv};
    j.duv = {0, -su * sv, su * cv};
    j.dvv = {0, -cu * cv, -cu * sv};
    return j;
  };
  return m;
}

SurfaceModel plane_chart(Ambient ambient, Rect domain) {
  SurfaceModel m;
  m.domain = domain;
  m.ambient = ambient;
  m.eval = [](double u, double v) {
    SurfaceJet j;
    j.value = {u, v, 0};
    j.du = {1, 0, 0};
    j.dv = {0, 1, 0};
    j.duu.setZero();
    j.duv.setZero();
    j.dvv.setZero();
    return j;
  };
  return m;
}

SurfaceModel cylinder_chart(Ambient ambient, Rect domain) {
  SurfaceModel m;
  m.domain = domain;
  m.ambient = ambient;
  m.eval = [](double u, double v) {
    const double cu = std::cos(u), su = std::sin(u);
    SurfaceJet j;
    j.value = {cu, su, v};
    j.du = {-su, cu, 0};
    j.dv = {0, 0, 1};
    j.duu = {-cu, -su, 0};
    j.duv.setZero();
    j.dvv.setZero();
    return j;
  };
  return m;
}

SurfaceModel saddle_graph(Rect domain) {
  return graph_surface(
      [](double u, double v) {
        return ScalarJet2{0.5 * (u * u - v * v), u, -v, 1, 0, -1};
      },
      domain);
}

SurfaceModel paraboloid_graph(Rect domain) {
  return graph_surface(
      [](double u, double v) {
        return ScalarJet2{0.5 * (u * u + v * v), u, v, 1, 0, 1};
      },
      domain);
}

const std::vector<GallerySurface>& surface_gallery() {
  static const std::vector<GallerySurface> gallery = [] {
    std::vector<GallerySurface> g;
    g.push_back({"de_sitter", "de Sitter sphere S^2_1 in L^3 (timelike, K=1, H=-1)",
                 de_sitter_chart(), 1.0, -1.0});
    g.push_back({"hyperbolic_plane",
                 "hyperbolic plane H^2 in L^3 (spacelike, K=-1, H=1)",
                 hyperbolic_chart(), -1.0, 1.0});
    g.push_back({"anti_de_sitter",
                 "anti-de Sitter space H^2_1 in R^3_2 (timelike, K=-1)",
                 anti_de_sitter_chart(), -1.0, 1.0});
    g.push_back({"plane", "coordinate plane z=0 in L^3 (spacelike, K=H=0)",
                 plane_chart(), 0.0, 0.0});
    g.push_back({"cylinder", "right cylinder in L^3 (timelike, K=0, H=-1/2)",
                 cylinder_chart(), 0.0, -0.5});
    g.push_back({"saddle_graph", "spacelike graph z=(u^2-v^2)/2 in L^3",
                 saddle_graph(), std::nullopt, std::nullopt});
    g.push_back({"paraboloid_graph", "spacelike graph z=(u^2+v^2)/2 in L^3",
                 paraboloid_graph(), std::nullopt, std::nullopt});
    return g;
  }();
  return gallery;
}

const GallerySurface* find_gallery_surface(std::string_view name) {
  for (const GallerySurface& g : surface_gallery())
    if (g.name == name) return &g;
  return nullptr;
}

}  // namespace mink
