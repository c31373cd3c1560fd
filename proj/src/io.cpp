#include "minkgeo/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "minkgeo/parallel.hpp"

namespace mink {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

JsonValue JsonValue::number(double x) {
  JsonValue v;
  v.kind_ = Kind::Number;
  v.num_ = x;
  return v;
}

JsonValue JsonValue::integer(long long x) {
  JsonValue v;
  v.kind_ = Kind::Integer;
  v.int_ = x;
  return v;
}

JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.kind_ = Kind::Boolean;
  v.bool_ = b;
  return v;
}

JsonValue JsonValue::text(std::string s) {
  JsonValue v;
  v.kind_ = Kind::Text;
  v.text_ = std::move(s);
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::Array;
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}

JsonValue JsonValue::vector(const VectorXd& x) {
  JsonValue v = array();
  for (Eigen::Index i = 0; i < x.size(); ++i) v.push(number(x[i]));
  return v;
}

JsonValue JsonValue::matrix(const MatrixXd& m) {
  JsonValue v = array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    JsonValue row = array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push(number(m(i, j)));
    v.push(std::move(row));
  }
  return v;
}

JsonValue& JsonValue::push(JsonValue v) {
  if (kind_ != Kind::Array) throw error("JsonValue::push on a non-array");
  items_.push_back(std::move(v));
  return *this;
}

JsonValue& JsonValue::set(std::string key, JsonValue v) {
  if (kind_ != Kind::Object) throw error("JsonValue::set on a non-object");
  fields_.emplace_back(std::move(key), std::move(v));
  return *this;
}

namespace {

void escape_into(std::string& out, const std::string& s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void newline_indent(std::string& out, int indent, int depth) {
  if (indent <= 0) return;
  out += '\n';
  out.append(static_cast<size_t>(indent) * depth, ' ');
}

}  // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
  switch (kind_) {
    case Kind::Null: out += "null"; return;
    case Kind::Number: out += format_double(num_); return;
    case Kind::Integer: out += std::to_string(int_); return;
    case Kind::Boolean: out += bool_ ? "true" : "false"; return;
    case Kind::Text: escape_into(out, text_); return;
    case Kind::Array: {
      if (items_.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (size_t i = 0; i < items_.size(); ++i) {
        if (i) out += indent > 0 ? "," : ", ";
        newline_indent(out, indent, depth + 1);
        items_[i].write(out, indent, depth + 1);
      }
      newline_indent(out, indent, depth);
      out += ']';
      return;
    }
    case Kind::Object: {
      if (fields_.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      for (size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += indent > 0 ? "," : ", ";
        newline_indent(out, indent, depth + 1);
        escape_into(out, fields_[i].first);
        out += ": ";
        fields_[i].second.write(out, indent, depth + 1);
      }
      newline_indent(out, indent, depth);
      out += '}';
      return;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace {

void append_cell(std::string& out, double x, bool last = false) {
  out += format_double(x);
  out += last ? '\n' : ',';
}

}  // namespace

std::string curve_csv(const std::vector<CurveSampleRow>& rows) {
  std::string out = "param,x,y,z,Tx,Ty,Tz,Nx,Ny,Nz,Bx,By,Bz,kappa_or_ctorsion,tau\n";
  for (const auto& r : rows) {
    append_cell(out, r.param);
    for (int i = 0; i < 3; ++i) append_cell(out, r.p[i]);
    for (int i = 0; i < 3; ++i) append_cell(out, r.T[i]);
    for (int i = 0; i < 3; ++i) append_cell(out, r.N[i]);
    for (int i = 0; i < 3; ++i) append_cell(out, r.B[i]);
    append_cell(out, r.kappa_or_ctorsion);
    append_cell(out, r.tau, true);
  }
  return out;
}

std::string curvature_csv(const std::vector<CurvatureRow>& rows) {
  std::string out = "u,v,E,F,G,e,f,g,H,K,diag_flag\n";
  for (const auto& r : rows) {
    append_cell(out, r.u);
    append_cell(out, r.v);
    append_cell(out, r.E);
    append_cell(out, r.F);
    append_cell(out, r.G);
    append_cell(out, r.e);
    append_cell(out, r.f);
    append_cell(out, r.g);
    append_cell(out, r.H);
    append_cell(out, r.K);
    out += std::to_string(r.diag_flag);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// OBJ meshes
// ---------------------------------------------------------------------------

GridMesh sample_grid(const SurfaceModel& m, int nu, int nv, int jobs) {
  if (nu < 2 || nv < 2) throw precondition_error("sample_grid: grid dims must be >= 2");
  GridMesh mesh;
  mesh.nu = nu;
  mesh.nv = nv;
  mesh.us.resize(static_cast<size_t>(nu));
  mesh.vs.resize(static_cast<size_t>(nv));
  for (int i = 0; i < nu; ++i)
    mesh.us[static_cast<size_t>(i)] =
        m.domain.u.lo + (m.domain.u.hi - m.domain.u.lo) * i / (nu - 1);
  for (int j = 0; j < nv; ++j)
    mesh.vs[static_cast<size_t>(j)] =
        m.domain.v.lo + (m.domain.v.hi - m.domain.v.lo) * j / (nv - 1);
  mesh.vertices.assign(static_cast<size_t>(nu) * nv, Vector3d::Zero());
  parallel_rows(nu, jobs, [&](int i) {
    for (int j = 0; j < nv; ++j)
      mesh.vertices[static_cast<size_t>(i) * nv + j] =
          m.eval(mesh.us[static_cast<size_t>(i)], mesh.vs[static_cast<size_t>(j)]).value;
  });
  return mesh;
}

std::string obj_mesh(const GridMesh& mesh) {
  const size_t total = static_cast<size_t>(mesh.nu) * mesh.nv;
  if (mesh.vertices.size() != total)
    throw precondition_error("obj_mesh: vertex count does not match grid dims");
  if (!mesh.mask.empty() && mesh.mask.size() != total)
    throw precondition_error("obj_mesh: mask size does not match grid dims");

  const auto masked = [&](int i, int j) {
    return !mesh.mask.empty() && mesh.mask[static_cast<size_t>(i) * mesh.nv + j] != 0;
  };

  std::string out = "# parametric surface grid\n";
  std::vector<long> renum(total, -1);
  long count = 0;
  for (int i = 0; i < mesh.nu; ++i)
    for (int j = 0; j < mesh.nv; ++j) {
      if (masked(i, j)) continue;
      const size_t idx = static_cast<size_t>(i) * mesh.nv + j;
      renum[idx] = ++count;  // OBJ indices are 1-based
      const Vector3d& p = mesh.vertices[idx];
      out += "v ";
      out += format_double(p.x());
      out += ' ';
      out += format_double(p.y());
      out += ' ';
      out += format_double(p.z());
      out += '\n';
    }

  // Quad (i,j)-(i+1,j)-(i+1,j+1)-(i,j+1) is counterclockwise in (u,v); both
  // triangles keep that winding.
  for (int i = 0; i + 1 < mesh.nu; ++i)
    for (int j = 0; j + 1 < mesh.nv; ++j) {
      const long a = renum[static_cast<size_t>(i) * mesh.nv + j];
      const long b = renum[static_cast<size_t>(i + 1) * mesh.nv + j];
      const long c = renum[static_cast<size_t>(i + 1) * mesh.nv + j + 1];
      const long d = renum[static_cast<size_t>(i) * mesh.nv + j + 1];
      if (a < 0 || b < 0 || c < 0 || d < 0) continue;
      out += "f " + std::to_string(a) + ' ' + std::to_string(b) + ' ' +
             std::to_string(c) + '\n';
      out += "f " + std::to_string(a) + ' ' + std::to_string(c) + ' ' +
             std::to_string(d) + '\n';
    }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot open for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw error("write failed: " + path);
}

}  // namespace mink
