#pragma once

// Deterministic text output: 17-significant-digit numbers, CSV tables for
// curve samples and curvature fields, Wavefront OBJ meshes over parameter
// grids, and an insertion-ordered JSON writer.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "minkgeo/surface.hpp"
#include "minkgeo/types.hpp"

namespace mink {

// Locale-independent decimal rendering with 17 significant digits (general
// format, so every IEEE-754 double round-trips). Non-finite values render as
// "nan" / "inf" / "-inf".
std::string format_double(double x);

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

// Minimal JSON document builder. Object keys keep insertion order and every
// number goes through format_double, which keeps reports byte-stable across
// runs (vendored writers use shortest-round-trip digits instead).
class JsonValue {
 public:
  JsonValue() = default;  // null
  static JsonValue number(double x);
  static JsonValue integer(long long x);
  static JsonValue boolean(bool b);
  static JsonValue text(std::string s);
  static JsonValue array();
  static JsonValue object();
  static JsonValue vector(const VectorXd& v);  // -> [x0, x1, ...]
  static JsonValue matrix(const MatrixXd& m);  // -> [[row0...], [row1...], ...]

  // Array append / object append (insertion order preserved). Both return
  // *this for chaining and throw error when the kind does not match.
  JsonValue& push(JsonValue v);
  JsonValue& set(std::string key, JsonValue v);

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { Null, Number, Integer, Boolean, Text, Array, Object };
  Kind kind_ = Kind::Null;
  double num_ = 0;
  long long int_ = 0;
  bool bool_ = false;
  std::string text_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> fields_;

  void write(std::string& out, int indent, int depth) const;
};

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

// One curve sample: parameter, position, frame columns, and the invariant
// pair -- (kappa, tau) for Frenet rows, (pseudo-torsion, 0) for Cartan rows.
struct CurveSampleRow {
  double param = 0;
  Vector3d p = Vector3d::Zero();
  Vector3d T = Vector3d::Zero(), N = Vector3d::Zero(), B = Vector3d::Zero();
  double kappa_or_ctorsion = 0;
  double tau = 0;
};

// Header: param,x,y,z,Tx,Ty,Tz,Nx,Ny,Nz,Bx,By,Bz,kappa_or_ctorsion,tau
std::string curve_csv(const std::vector<CurveSampleRow>& rows);

// One curvature-field sample; diag_flag is 1 when the Weingarten map is
// diagonalizable at the point.
struct CurvatureRow {
  double u = 0, v = 0;
  double E = 0, F = 0, G = 0;
  double e = 0, f = 0, g = 0;
  double H = 0, K = 0;
  int diag_flag = 1;
};

// Header: u,v,E,F,G,e,f,g,H,K,diag_flag
std::string curvature_csv(const std::vector<CurvatureRow>& rows);

// ---------------------------------------------------------------------------
// OBJ meshes
// ---------------------------------------------------------------------------

// Rectangular parameter grid with an optional node mask (1 = omit).
struct GridMesh {
  int nu = 0, nv = 0;
  std::vector<double> us, vs;      // grid lines (sizes nu, nv)
  std::vector<Vector3d> vertices;  // row-major: index iu * nv + iv
  std::vector<std::uint8_t> mask;  // same layout; empty = nothing masked
};

// Samples the model on a uniform nu x nv grid over its domain; rows are
// evaluated concurrently when jobs > 1 (identical output for any job count).
GridMesh sample_grid(const SurfaceModel& m, int nu, int nv, int jobs = 1);

// Wavefront OBJ: one `v x y z` line per unmasked vertex; every grid quad
// whose four corners are unmasked is split into two triangles wound
// counterclockwise in (u,v).
std::string obj_mesh(const GridMesh& mesh);

// Writes text to path (binary stream, no newline translation); throws error
// when the file cannot be created or written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mink
