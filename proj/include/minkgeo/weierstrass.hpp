#pragma once

// Weierstrass-Enneper generation of critical (H = 0) surfaces:
//   - spacelike sheets in R^3 and L^3 from complex data (type I pair (f, g)
//     or type II single function F),
//   - timelike sheets in L^3 from split-complex data,
// with integral evaluators whose jets come from the integrands themselves,
// regularity masks with clause diagnostics, and the named example gallery.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "minkgeo/binarion.hpp"
#include "minkgeo/surface.hpp"
#include "minkgeo/types.hpp"

namespace mink {

enum class WKind { TypeI_fg, TypeII_F };
enum class WAmbient { R3, L3_spacelike, L3_timelike };

const char* to_string(WKind k);
const char* to_string(WAmbient a);

// Value and first derivative of a one-variable holomorphic (Sign=-1) or
// split-holomorphic (Sign=+1) function.
template <int Sign>
struct FnJet {
  Binarion<Sign> v{}, d{};
};
using CFn = std::function<FnJet<-1>(Complexd)>;
using SFn = std::function<FnJet<+1>(SplitComplex)>;

// Holomorphic substitution z = c(w) applied before the data functions; needs
// a second derivative because the pulled-back f carries a factor c'(w).
struct ChartJet {
  Complexd v{}, d1{}, d2{};
};
using ChartFn = std::function<ChartJet(Complexd)>;

struct WeierstrassData {
  std::string name = "custom";
  WKind kind = WKind::TypeII_F;
  WAmbient ambient = WAmbient::R3;
  Rect domain{{-1.0, 1.0}, {-1.0, 1.0}};
  Vector2d basepoint{0.0, 0.0};       // z0 (complex) / w0 (split)
  Vector3d base_image{0.0, 0.0, 0.0}; // integration constants c_j

  // Complex data (R3, L3_spacelike): TypeI uses (f, g), TypeII uses F.
  CFn f, g, F;
  // Optional substitution z = chart(w); identity when absent. The effective
  // data become f(c(w)) c'(w), g(c(w)) (and for TypeII, g = c itself).
  ChartFn chart;

  // Split data (L3_timelike): TypeI uses (sf, sg), TypeII uses sF.
  SFn sf, sg, sF;

  // Declared singular locus in the parameter plane: isolated points where the
  // data functions are undefined, and (split case) centers whose two null
  // lines (u-u0) = +-(v-v0) are excluded.
  std::vector<Vector2d> poles;
  std::vector<Vector2d> null_line_centers;
};

// ---------------------------------------------------------------------------
// Regularity
// ---------------------------------------------------------------------------

struct RegularityReport {
  std::vector<double> us, vs;  // grid coordinates
  // mask(i, j) = 1 when node (us[i], vs[j]) is irregular or inside the guard
  // band around a declared singular locus.
  Eigen::ArrayXXi mask;
  // Signed conformal factor at each node: E = G = lambda^2 for spacelike
  // ambients; E = -G = eps_u lambda^2 for the timelike ambient.
  MatrixXd conformal;
  std::map<std::string, int> clause_counts;  // which regularity clause fired
  int masked_count = 0;
};

// Evaluates the ambient's conformal factor on an nu x nv grid over the data
// domain and masks nodes where it vanishes below mask_tol, plus a guard band
// of radius `guard` around declared poles / null lines.
RegularityReport regularity_check(const WeierstrassData& data, int nu, int nv,
                                  double mask_tol = 1e-6, double guard = 1e-6);

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

struct GeneratedSurface {
  SurfaceModel model;           // jets taken from the integrands, not by FD
  RegularityReport regularity;  // over the same grid
  Vector3d constants;           // the c_j actually used
};

// Integrates the representation x^j = c_j + 2 Re int phi^j (resp. psi^j for
// the timelike ambient, whose fg-term sits in the SECOND coordinate) along
// axis-aligned L paths from the basepoint: horizontal leg first, or vertical
// leg first when reversed_L is set (path independence on the pole-free
// simply-connected domain). Throws precondition_error when a declared pole or
// null line meets the domain rectangle.
GeneratedSurface generate(const WeierstrassData& data, int nu = 64, int nv = 64,
                          bool reversed_L = false);

// |<phi,phi>| (or |<psi,psi>_L|) of the integrand triple at (u,v): the
// isothermal residual, identically 0 for valid data.
double isothermal_residual(const WeierstrassData& data, double u, double v);

// Signed conformal factor of the integrand triple at one point.
double conformal_factor(const WeierstrassData& data, double u, double v);

// ---------------------------------------------------------------------------
// Named gallery
// ---------------------------------------------------------------------------

enum class NamedSurface {
  EnneperR3,
  EnneperL3Spacelike,
  CatalanR3,
  CatenoidL3Spacelike,
  HennebergR3,
  EnneperL3Timelike,
  CatenoidL3Timelike,
};

const std::vector<NamedSurface>& all_named_surfaces();
const char* to_string(NamedSurface k);
// Throws precondition_error for an unknown name.
NamedSurface named_surface_from_string(const std::string& name);

struct NamedWeierstrass {
  std::string name;
  SurfaceModel closed_form;  // black-box jets (finite differences)
  WeierstrassData data;      // generates the closed form exactly
  std::string mask_description;
};

NamedWeierstrass named_surface(NamedSurface kind);

// K(x(u,v)) for type II spacelike data with identity chart:
//   K = (-1)^(nu+1) * 4 / (|F(u+iv)|^2 ((-1)^nu + u^2 + v^2)^4).
// Throws precondition_error for timelike/TypeI data or an irregular point.
double typeII_gaussian_curvature(const WeierstrassData& data, double u, double v);

// JSON text listing every named surface with its data, domain and mask.
std::string gallery_manifest_json();

}  // namespace mink
