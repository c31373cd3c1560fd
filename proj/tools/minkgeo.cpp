// minkgeo -- command-line front end: causal classification, curve sampling
// and reconstruction, surface curvature reports, and critical-surface
// generation, with CSV / OBJ / JSON export.
//
// Exit codes: 0 success, 2 usage or parse error, 3 domain precondition
// violation, 4 numerical failure.

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minkgeo/bscroll.hpp"
#include "minkgeo/cartan.hpp"
#include "minkgeo/curve.hpp"
#include "minkgeo/fermi.hpp"
#include "minkgeo/frenet.hpp"
#include "minkgeo/helix.hpp"
#include "minkgeo/inner.hpp"
#include "minkgeo/io.hpp"
#include "minkgeo/metric_patch.hpp"
#include "minkgeo/named_surfaces.hpp"
#include "minkgeo/parallel.hpp"
#include "minkgeo/reconstruct.hpp"
#include "minkgeo/relations.hpp"
#include "minkgeo/revolution.hpp"
#include "minkgeo/standard_curves.hpp"
#include "minkgeo/surface.hpp"
#include "minkgeo/transform.hpp"
#include "minkgeo/types.hpp"
#include "minkgeo/weierstrass.hpp"

namespace {

using namespace mink;

// ---------------------------------------------------------------------------
// small parsers (failures raise CLI::ValidationError -> exit code 2)
// ---------------------------------------------------------------------------

double parse_one_double(const std::string& tok, const std::string& what) {
  double x = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  const auto res = std::from_chars(b, e, x);
  if (res.ec != std::errc{} || res.ptr != e)
    throw CLI::ValidationError(what, "'" + tok + "' is not a number");
  return x;
}

std::vector<double> split_doubles(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_one_double(tok, what));
  if (out.empty()) throw CLI::ValidationError(what, "expected a comma-separated list");
  return out;
}

Interval parse_interval(const std::string& s, const std::string& what) {
  const auto v = split_doubles(s, what);
  if (v.size() != 2) throw CLI::ValidationError(what, "expected lo,hi");
  if (!(v[0] < v[1])) throw CLI::ValidationError(what, "needs lo < hi");
  return {v[0], v[1]};
}

std::pair<int, int> parse_grid(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos)
    throw CLI::ValidationError("--grid", "expected NxM, e.g. 64x64");
  int a = 0, b = 0;
  const auto ra = std::from_chars(s.data(), s.data() + x, a);
  const auto rb = std::from_chars(s.data() + x + 1, s.data() + s.size(), b);
  if (ra.ec != std::errc{} || ra.ptr != s.data() + x || rb.ec != std::errc{} ||
      rb.ptr != s.data() + s.size())
    throw CLI::ValidationError("--grid", "expected NxM, e.g. 64x64");
  if (a < 2 || b < 2) throw CLI::ValidationError("--grid", "grid dims must be >= 2");
  return {a, b};
}

Signature parse_sig(const std::string& s) {
  const auto v = split_doubles(s, "--sig");
  if (v.size() != 2) throw CLI::ValidationError("--sig", "expected n,nu");
  Signature sig{static_cast<int>(v[0]), static_cast<int>(v[1])};
  if (!sig.valid()) throw CLI::ValidationError("--sig", "needs n >= 1, 0 <= nu <= n");
  return sig;
}

Ambient parse_ambient(const std::string& s) {
  if (s == "euclidean3") return Ambient::Euclidean3;
  if (s == "lorentz3") return Ambient::Lorentz3;
  if (s == "index2_3") return Ambient::Index2_3;
  throw CLI::ValidationError("--ambient",
                             "expected euclidean3 | lorentz3 | index2_3");
}

// Scalar profiles for reconstruction invariants -- a registered catalog, not
// an expression language.
std::function<double(double)> parse_profile(const std::string& spec,
                                            const std::string& what) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos)
    args = split_doubles(spec.substr(colon + 1), what);
  const auto need = [&](size_t n) {
    if (args.size() != n)
      throw CLI::ValidationError(what, name + " takes " + std::to_string(n) +
                                           " argument(s)");
  };
  if (name == "const") {
    need(1);
    const double c = args[0];
    return [c](double) { return c; };
  }
  if (name == "linear") {
    need(2);
    const double a = args[0], b = args[1];
    return [a, b](double s) { return a + b * s; };
  }
  if (name == "sin") {
    need(2);
    const double a = args[0], w = args[1];
    return [a, w](double s) { return a * std::sin(w * s); };
  }
  if (name == "cos") {
    need(2);
    const double a = args[0], w = args[1];
    return [a, w](double s) { return a * std::cos(w * s); };
  }
  throw CLI::ValidationError(
      what, "unknown profile '" + name + "' (catalog: const:c, linear:a,b, sin:a,w, cos:a,w)");
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--file", "cannot open " + path);
  return nlohmann::json::parse(in);  // parse_error propagates -> exit 2
}

// ---------------------------------------------------------------------------
// report plumbing
// ---------------------------------------------------------------------------

JsonValue vec_json(const Vector3d& v) {
  JsonValue a = JsonValue::array();
  for (int i = 0; i < 3; ++i) a.push(JsonValue::number(v[i]));
  return a;
}

JsonValue interval_json(const Interval& iv) {
  return JsonValue::array().push(JsonValue::number(iv.lo)).push(JsonValue::number(iv.hi));
}

void emit_report(const JsonValue& report, const std::string& report_path) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!report_path.empty()) write_text_file(report_path, text);
}

// Shared options for commands that sample a surface on a grid.
struct GridArgs {
  std::string grid = "64x64";
  std::string obj_path, csv_path, report_path;
  int jobs = 0;  // 0 -> MINKGEO_JOBS or 1

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid", grid, "grid dimensions NxM (default 64x64)");
    cmd->add_option("-o,--output", obj_path, "write a Wavefront OBJ mesh here");
    cmd->add_option("--csv", csv_path, "write the curvature-field CSV here");
    cmd->add_option("--report", report_path, "also write the JSON report here");
    cmd->add_option("--jobs", jobs,
                    "worker threads for grid evaluation (default: MINKGEO_JOBS or 1)");
  }
};

// Curvature rows over a full grid (no mask), evaluated row-parallel.
std::vector<CurvatureRow> curvature_rows(const SurfaceModel& m,
                                         const std::vector<double>& us,
                                         const std::vector<double>& vs, int jobs) {
  const int nu = static_cast<int>(us.size());
  const int nv = static_cast<int>(vs.size());
  std::vector<CurvatureRow> rows(static_cast<size_t>(nu) * nv);
  parallel_rows(nu, jobs, [&](int i) {
    for (int j = 0; j < nv; ++j) {
      const CurvatureReport cr = curvatures(m, us[i], vs[j]);
      CurvatureRow& r = rows[static_cast<size_t>(i) * nv + j];
      r.u = us[i];
      r.v = vs[j];
      r.E = cr.forms.E;
      r.F = cr.forms.F;
      r.G = cr.forms.G;
      r.e = cr.forms.e;
      r.f = cr.forms.f;
      r.g = cr.forms.g;
      r.H = cr.H;
      r.K = cr.K;
      r.diag_flag = cr.diagonalizable == Diagonalizable::Yes ? 1 : 0;
    }
  });
  return rows;
}

JsonValue field_stats(const char* key, const std::vector<CurvatureRow>& rows,
                      double CurvatureRow::*member, std::optional<double> expected) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, err = 0;
  for (const auto& r : rows) {
    const double x = r.*member;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    if (expected) err = std::max(err, std::abs(x - *expected));
  }
  JsonValue o = JsonValue::object();
  o.set("field", JsonValue::text(key));
  o.set("min", JsonValue::number(lo));
  o.set("max", JsonValue::number(hi));
  if (expected) {
    o.set("expected", JsonValue::number(*expected));
    o.set("max_err", JsonValue::number(err));
  }
  return o;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyVectorArgs {
  std::string sig = "3,1";
  std::string coords;
  std::string report_path;
};

void run_classify_vector(const ClassifyVectorArgs& a) {
  const Signature sig = parse_sig(a.sig);
  const auto c = split_doubles(a.coords, "--coords");
  VectorXd x(static_cast<Eigen::Index>(c.size()));
  for (size_t i = 0; i < c.size(); ++i) x[static_cast<Eigen::Index>(i)] = c[i];

  const CausalRecord rec = causal_character(sig, x);
  const TimeOrientation orient = time_orientation(sig, x);

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("classify vector"));
  r.set("signature",
        JsonValue::object().set("n", JsonValue::integer(sig.n)).set("nu", JsonValue::integer(sig.nu)));
  r.set("coords", JsonValue::vector(x));
  r.set("class", JsonValue::text(to_string(rec.cls)));
  r.set("indicator", JsonValue::integer(rec.indicator));
  r.set("quadrance", JsonValue::number(rec.quadrance));
  r.set("fake_norm", JsonValue::number(rec.fake_norm));
  r.set("time_orientation", JsonValue::text(to_string(orient)));
  emit_report(r, a.report_path);
}

struct ClassifyTransformArgs {
  std::string file, inline_json;
  std::string sig;  // optional override
  double tol = 1e-9;
  std::string report_path;
};

void run_classify_transform(const ClassifyTransformArgs& a) {
  nlohmann::json doc;
  if (!a.file.empty())
    doc = load_json_file(a.file);
  else
    doc = nlohmann::json::parse(a.inline_json);

  const nlohmann::json& mat = doc.is_object() ? doc.at("matrix") : doc;
  if (!mat.is_array() || mat.empty() || !mat[0].is_array())
    throw CLI::ValidationError("--file", "matrix must be an array of row arrays");
  const Eigen::Index rows = static_cast<Eigen::Index>(mat.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(mat[0].size());
  MatrixXd L(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = mat[static_cast<size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw CLI::ValidationError("--file", "matrix rows have unequal lengths");
    for (Eigen::Index j = 0; j < cols; ++j)
      L(i, j) = row[static_cast<size_t>(j)].get<double>();
  }

  Signature sig{static_cast<int>(rows), 1};
  if (doc.is_object() && doc.contains("signature")) {
    const auto& s = doc.at("signature");
    sig = Signature{s.at(0).get<int>(), s.at(1).get<int>()};
  }
  if (!a.sig.empty()) sig = parse_sig(a.sig);

  const PseudoOrthReport rep = classify_transform(L, sig, a.tol);

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("classify transform"));
  r.set("signature",
        JsonValue::object().set("n", JsonValue::integer(sig.n)).set("nu", JsonValue::integer(sig.nu)));
  r.set("is_member", JsonValue::boolean(rep.is_member));
  r.set("membership_residual", JsonValue::number(rep.membership_residual));
  r.set("det", JsonValue::number(rep.det_total));
  r.set("det_spatial", JsonValue::number(rep.det_spatial));
  r.set("det_temporal", JsonValue::number(rep.det_temporal));
  r.set("component", rep.component ? JsonValue::text(to_string(*rep.component)) : JsonValue{});
  r.set("conjugacy", rep.conjugacy ? JsonValue::text(to_string(*rep.conjugacy)) : JsonValue{});
  r.set("angle", rep.angle ? JsonValue::number(*rep.angle) : JsonValue{});
  r.set("axis", rep.axis ? vec_json(*rep.axis) : JsonValue{});
  r.set("note", JsonValue::text(rep.note));
  emit_report(r, a.report_path);
}

struct ClassifyRelationArgs {
  std::string sig = "3,1";
  std::string p, q;
  std::string report_path;
};

void run_classify_relation(const ClassifyRelationArgs& a) {
  const Signature sig = parse_sig(a.sig);
  const auto pv = split_doubles(a.p, "--p");
  const auto qv = split_doubles(a.q, "--q");
  Vec p{VectorXd(static_cast<Eigen::Index>(pv.size())), sig};
  Vec q{VectorXd(static_cast<Eigen::Index>(qv.size())), sig};
  for (size_t i = 0; i < pv.size(); ++i) p.coords[static_cast<Eigen::Index>(i)] = pv[i];
  for (size_t i = 0; i < qv.size(); ++i) q.coords[static_cast<Eigen::Index>(i)] = qv[i];

  const CausalRelation rel = causal_relations(p, q);

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("classify relation"));
  r.set("separation_class", JsonValue::text(to_string(rel.separation_class)));
  r.set("separation_orientation", JsonValue::text(to_string(rel.separation_orientation)));
  r.set("chron", JsonValue::boolean(rel.chronological));
  r.set("causal", JsonValue::boolean(rel.causal));
  r.set("hyperbolic_angle",
        rel.hyperbolic_angle ? JsonValue::number(*rel.hyperbolic_angle) : JsonValue{});
  r.set("gamma", rel.gamma ? JsonValue::number(*rel.gamma) : JsonValue{});
  r.set("relative_speed",
        rel.relative_speed ? JsonValue::number(*rel.relative_speed) : JsonValue{});
  emit_report(r, a.report_path);
}

// ---------------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------------

// Optional curve parameters; only flags the user actually passed are
// forwarded, so catalog defaults stay authoritative.
struct CurveParamFlags {
  double r = 0, a = 0, b = 0, c = 0, d = 0, ct = 0;
  CLI::Option *or_ = nullptr, *oa = nullptr, *ob = nullptr, *oc = nullptr,
              *od = nullptr, *oct = nullptr;

  void attach(CLI::App* cmd) {
    or_ = cmd->add_option("--r", r, "curve parameter r");
    oa = cmd->add_option("--a", a, "curve parameter a");
    ob = cmd->add_option("--b", b, "curve parameter b");
    oc = cmd->add_option("--c", c, "curve parameter c");
    od = cmd->add_option("--d", d, "curve parameter d");
    oct = cmd->add_option("--ct", ct, "curve parameter ct");
  }
  std::map<std::string, double> collect() const {
    std::map<std::string, double> m;
    if (or_->count()) m["r"] = r;
    if (oa->count()) m["a"] = a;
    if (ob->count()) m["b"] = b;
    if (oc->count()) m["c"] = c;
    if (od->count()) m["d"] = d;
    if (oct->count()) m["ct"] = ct;
    return m;
  }
};

std::vector<double> sample_params(const Interval& range, double step) {
  if (!(step > 0)) throw CLI::ValidationError("--step", "step must be positive");
  std::vector<double> out;
  const int n = static_cast<int>(std::floor((range.hi - range.lo) / step + 1e-9));
  out.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out.push_back(range.lo + i * step);
  return out;
}

struct CurveNamedArgs {
  std::string name;
  CurveParamFlags params;
  std::string range, csv_path, report_path;
  double step = 0.01;
};

void run_curve_named(const CurveNamedArgs& a) {
  CurveModel model = make_named_curve(a.name, a.params.collect());
  if (!a.range.empty()) model.domain = parse_interval(a.range, "--range");
  const std::vector<double> params = sample_params(model.domain, a.step);

  const CurveClassification cls = classify_curve(model, 65);
  const CurveKind kind = cls.kind.value_or(CurveKind::Other);
  const bool cartan =
      kind == CurveKind::Lightlike || kind == CurveKind::SemiLightlike;

  std::vector<CurveSampleRow> rows;
  rows.reserve(params.size());
  double inv_min = std::numeric_limits<double>::infinity(), inv_max = -inv_min;
  double inv_sum = 0, tau_sum = 0;
  for (const double s : params) {
    CurveSampleRow row;
    row.param = s;
    if (cartan) {
      const CartanData cd = cartan_apparatus(model, s);
      row.p = model.eval(s).p;
      row.T = cd.T;
      row.N = cd.N;
      row.B = cd.B;
      row.kappa_or_ctorsion = cd.pseudo_torsion;
      row.tau = 0;
    } else {
      const FrenetData fd = frenet_apparatus(model, s);
      row.p = model.eval(s).p;
      row.T = fd.T;
      row.N = fd.N;
      row.B = fd.B;
      row.kappa_or_ctorsion = fd.kappa;
      row.tau = fd.tau;
    }
    inv_min = std::min(inv_min, row.kappa_or_ctorsion);
    inv_max = std::max(inv_max, row.kappa_or_ctorsion);
    inv_sum += row.kappa_or_ctorsion;
    tau_sum += row.tau;
    rows.push_back(row);
  }
  const double n = static_cast<double>(rows.size());

  JsonValue invariants = JsonValue::object();
  if (cartan) {
    invariants.set("ctorsion", JsonValue::number(inv_sum / n));
    invariants.set("ctorsion_min", JsonValue::number(inv_min));
    invariants.set("ctorsion_max", JsonValue::number(inv_max));
  } else {
    invariants.set("kappa", JsonValue::number(inv_sum / n));
    invariants.set("kappa_min", JsonValue::number(inv_min));
    invariants.set("kappa_max", JsonValue::number(inv_max));
    invariants.set("tau", JsonValue::number(tau_sum / n));
  }

  JsonValue helix_json;
  try {
    const HelixReport h = helix_classify(model);
    helix_json = JsonValue::object();
    helix_json.set("is_helix", JsonValue::boolean(h.is_helix));
    helix_json.set("family", JsonValue::text(h.family));
    helix_json.set("invariant_ratio", JsonValue::number(h.invariant_ratio));
    helix_json.set("axis", h.axis ? vec_json(*h.axis) : JsonValue{});
    helix_json.set("axis_class",
                   h.axis_class ? JsonValue::text(to_string(*h.axis_class)) : JsonValue{});
    helix_json.set("conjugacy",
                   h.conjugacy ? JsonValue::text(to_string(*h.conjugacy)) : JsonValue{});
  } catch (const mink::error&) {
    // not helix-classifiable (e.g. not unit-speed); report null
  }

  if (!a.csv_path.empty()) write_text_file(a.csv_path, curve_csv(rows));

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("curve named"));
  r.set("curve", JsonValue::text(a.name));
  r.set("ambient", JsonValue::text(to_string(model.ambient)));
  r.set("range", interval_json(model.domain));
  r.set("step", JsonValue::number(a.step));
  r.set("samples", JsonValue::integer(static_cast<long long>(rows.size())));
  r.set("kind", JsonValue::text(to_string(kind)));
  r.set("admissible", JsonValue::boolean(cls.admissible));
  r.set("frame", JsonValue::text(cartan ? "cartan" : "frenet"));
  r.set("invariants", std::move(invariants));
  r.set("helix", std::move(helix_json));
  r.set("csv", a.csv_path.empty() ? JsonValue{} : JsonValue::text(a.csv_path));
  emit_report(r, a.report_path);
}

struct CurveReconstructArgs {
  std::string kind;
  std::string kappa, tau, ctorsion;
  std::string range = "0,10";
  double step = 1e-3;
  std::string p0 = "0,0,0";
  std::string frame_file;
  std::string ambient = "lorentz3";
  std::string csv_path, report_path;
};

Matrix3d default_frame(ReconstructKind kind) {
  Matrix3d f = Matrix3d::Identity();
  switch (kind) {
    case ReconstructKind::Admissible:
      return f;  // T=e1, N=e2, B=e3
    case ReconstructKind::Lightlike: {
      const double s = 1.0 / std::sqrt(2.0);
      f.col(0) = Vector3d(s, 0, s);    // T lightlike
      f.col(1) = Vector3d(0, 1, 0);    // N unit spacelike
      f.col(2) = Vector3d(-s, 0, s);   // B lightlike, <B,T> = -1
      return f;
    }
    case ReconstructKind::SemiLightlike:
      f.col(0) = Vector3d(1, 0, 0);       // T unit spacelike
      f.col(1) = Vector3d(0, 1, 1);       // N lightlike
      f.col(2) = Vector3d(0, -0.5, 0.5);  // B lightlike, <B,N> = -1
      return f;
  }
  return f;
}

void run_curve_reconstruct(const CurveReconstructArgs& a) {
  ReconstructionSpec spec;
  if (a.kind == "admissible")
    spec.kind = ReconstructKind::Admissible;
  else if (a.kind == "lightlike")
    spec.kind = ReconstructKind::Lightlike;
  else if (a.kind == "semi-lightlike")
    spec.kind = ReconstructKind::SemiLightlike;
  else
    throw CLI::ValidationError("--kind",
                               "expected admissible | lightlike | semi-lightlike");

  if (spec.kind == ReconstructKind::Admissible) {
    if (a.kappa.empty() || a.tau.empty())
      throw CLI::ValidationError("--kappa/--tau",
                                 "admissible reconstruction needs --kappa and --tau");
    spec.kappa = parse_profile(a.kappa, "--kappa");
    spec.tau = parse_profile(a.tau, "--tau");
  } else {
    if (a.ctorsion.empty())
      throw CLI::ValidationError("--ctorsion", "this kind needs --ctorsion");
    spec.ctorsion = parse_profile(a.ctorsion, "--ctorsion");
  }

  const Interval range = parse_interval(a.range, "--range");
  spec.s0 = range.lo;
  spec.s1 = range.hi;
  spec.step = a.step;
  spec.ambient = parse_ambient(a.ambient);

  const auto p0 = split_doubles(a.p0, "--p0");
  if (p0.size() != 3) throw CLI::ValidationError("--p0", "expected x,y,z");
  spec.p0 = Vector3d(p0[0], p0[1], p0[2]);

  if (!a.frame_file.empty()) {
    const nlohmann::json doc = load_json_file(a.frame_file);
    const nlohmann::json& m = doc.is_object() ? doc.at("frame") : doc;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        spec.frame0(i, j) = m.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)).get<double>();
  } else {
    spec.frame0 = default_frame(spec.kind);
  }

  const ReconstructionResult res = reconstruct_curve(spec);

  std::vector<CurveSampleRow> rows;
  rows.reserve(res.params.size());
  for (size_t i = 0; i < res.params.size(); ++i) {
    CurveSampleRow row;
    row.param = res.params[i];
    row.p = res.points[i];
    row.T = res.frames[i].col(0);
    row.N = res.frames[i].col(1);
    row.B = res.frames[i].col(2);
    if (spec.kind == ReconstructKind::Admissible) {
      row.kappa_or_ctorsion = spec.kappa(row.param);
      row.tau = spec.tau(row.param);
    } else {
      row.kappa_or_ctorsion = spec.ctorsion(row.param);
      row.tau = 0;
    }
    rows.push_back(row);
  }
  if (!a.csv_path.empty()) write_text_file(a.csv_path, curve_csv(rows));

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("curve reconstruct"));
  r.set("kind", JsonValue::text(a.kind));
  r.set("ambient", JsonValue::text(to_string(spec.ambient)));
  r.set("range", interval_json(range));
  r.set("step", JsonValue::number(spec.step));
  r.set("samples", JsonValue::integer(static_cast<long long>(rows.size())));
  r.set("initial_products", JsonValue::vector(res.initial_products));
  r.set("max_product_drift", JsonValue::number(res.max_product_drift));
  r.set("endpoint", vec_json(res.points.back()));
  r.set("csv", a.csv_path.empty() ? JsonValue{} : JsonValue::text(a.csv_path));
  emit_report(r, a.report_path);
}

// ---------------------------------------------------------------------------
// surface
// ---------------------------------------------------------------------------

struct SurfaceNamedArgs {
  std::string name;
  GridArgs grid;
};

void run_surface_named(const SurfaceNamedArgs& a) {
  std::string name = a.name;
  for (char& c : name)
    if (c == '-') c = '_';
  const GallerySurface* entry = find_gallery_surface(name);
  if (!entry) throw precondition_error("unknown gallery surface: " + a.name);

  const auto [nu, nv] = parse_grid(a.grid.grid);
  const GridMesh mesh = sample_grid(entry->model, nu, nv, a.grid.jobs);
  const std::vector<CurvatureRow> rows =
      curvature_rows(entry->model, mesh.us, mesh.vs, a.grid.jobs);

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("surface named"));
  r.set("surface", JsonValue::text(entry->name));
  r.set("description", JsonValue::text(entry->description));
  r.set("ambient", JsonValue::text(to_string(entry->model.ambient)));
  r.set("grid",
        JsonValue::array().push(JsonValue::integer(nu)).push(JsonValue::integer(nv)));
  r.set("K", field_stats("K", rows, &CurvatureRow::K, entry->const_K));
  r.set("H", field_stats("H", rows, &CurvatureRow::H, entry->const_H));
  if (!a.grid.obj_path.empty()) write_text_file(a.grid.obj_path, obj_mesh(mesh));
  if (!a.grid.csv_path.empty()) write_text_file(a.grid.csv_path, curvature_csv(rows));
  r.set("obj", a.grid.obj_path.empty() ? JsonValue{} : JsonValue::text(a.grid.obj_path));
  r.set("csv", a.grid.csv_path.empty() ? JsonValue{} : JsonValue::text(a.grid.csv_path));
  emit_report(r, a.grid.report_path);
}

// --- weierstrass -----------------------------------------------------------

CFn complex_fn_from_name(const std::string& name) {
  if (name == "one")
    return [](Complexd) { return FnJet<-1>{{1, 0}, {0, 0}}; };
  if (name == "identity")
    return [](Complexd z) { return FnJet<-1>{z, {1, 0}}; };
  if (name == "inverse-square")
    return [](Complexd z) {
      const Complexd i1 = z.inverse(), i2 = i1 * i1;
      return FnJet<-1>{i2, -2.0 * (i2 * i1)};
    };
  if (name == "catalan")
    return [](Complexd z) {
      const Complexd i = {0, 1};
      const Complexd i1 = z.inverse(), i2 = i1 * i1, i3 = i2 * i1, i4 = i2 * i2;
      return FnJet<-1>{i * (i1 - i3), i * (3.0 * i4 - i2)};
    };
  if (name == "henneberg")
    return [](Complexd z) {
      const Complexd one = {1, 0};
      const Complexd i1 = z.inverse(), i2 = i1 * i1, i4 = i2 * i2, i5 = i4 * i1;
      return FnJet<-1>{one - i4, 4.0 * i5};
    };
  throw precondition_error(
      "unknown complex function '" + name +
      "' (catalog: one, identity, inverse-square, catalan, henneberg)");
}

SFn split_fn_from_name(const std::string& name) {
  if (name == "one")
    return [](SplitComplex) { return FnJet<+1>{{1, 0}, {0, 0}}; };
  if (name == "h")
    return [](SplitComplex) { return FnJet<+1>{{0, 1}, {0, 0}}; };
  if (name == "identity")
    return [](SplitComplex w) { return FnJet<+1>{w, {1, 0}}; };
  if (name == "inverse-square")
    return [](SplitComplex w) {
      const SplitComplex i1 = w.inverse(), i2 = i1 * i1;
      return FnJet<+1>{i2, -2.0 * (i2 * i1)};
    };
  throw precondition_error("unknown split function '" + name +
                           "' (catalog: one, h, identity, inverse-square)");
}

ChartFn chart_from_spec(const std::string& spec) {
  if (spec == "identity") return nullptr;
  const std::string prefix = "scaled-exp:";
  if (spec.rfind(prefix, 0) == 0) {
    const auto v = split_doubles(spec.substr(prefix.size()), "chart");
    if (v.size() != 2) throw precondition_error("scaled-exp chart takes re,im");
    const Complexd m{v[0], v[1]};
    return [m](Complexd w) {
      const Complexd c = -1.0 * exp(m * w);
      const Complexd d1 = m * c;
      return ChartJet{c, d1, m * d1};
    };
  }
  throw precondition_error("unknown chart '" + spec +
                           "' (catalog: identity, scaled-exp:re,im)");
}

WeierstrassData weierstrass_data_from_json(const nlohmann::json& doc) {
  const auto read_rect = [](const nlohmann::json& j) {
    return Rect{{j.at(0).at(0).get<double>(), j.at(0).at(1).get<double>()},
                {j.at(1).at(0).get<double>(), j.at(1).at(1).get<double>()}};
  };
  const auto read_points = [](const nlohmann::json& j) {
    std::vector<Vector2d> pts;
    for (const auto& p : j) pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return pts;
  };

  WeierstrassData d;
  if (doc.contains("named")) {
    d = named_surface(named_surface_from_string(doc.at("named").get<std::string>())).data;
  } else {
    d.name = doc.value("name", std::string("custom"));
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "typeI")
      d.kind = WKind::TypeI_fg;
    else if (kind == "typeII")
      d.kind = WKind::TypeII_F;
    else
      throw precondition_error("kind must be typeI or typeII");

    const std::string amb = doc.at("ambient").get<std::string>();
    if (amb == "R3")
      d.ambient = WAmbient::R3;
    else if (amb == "L3-spacelike")
      d.ambient = WAmbient::L3_spacelike;
    else if (amb == "L3-timelike")
      d.ambient = WAmbient::L3_timelike;
    else
      throw precondition_error("ambient must be R3 | L3-spacelike | L3-timelike");

    if (d.ambient == WAmbient::L3_timelike) {
      if (d.kind == WKind::TypeI_fg) {
        d.sf = split_fn_from_name(doc.at("f").get<std::string>());
        d.sg = split_fn_from_name(doc.at("g").get<std::string>());
      } else {
        d.sF = split_fn_from_name(doc.at("F").get<std::string>());
      }
      if (doc.contains("chart"))
        throw precondition_error("charts are not supported for timelike data");
    } else {
      if (d.kind == WKind::TypeI_fg) {
        d.f = complex_fn_from_name(doc.at("f").get<std::string>());
        d.g = complex_fn_from_name(doc.at("g").get<std::string>());
      } else {
        d.F = complex_fn_from_name(doc.at("F").get<std::string>());
      }
      if (doc.contains("chart"))
        d.chart = chart_from_spec(doc.at("chart").get<std::string>());
    }
    d.domain = read_rect(doc.at("domain"));
    const auto& bp = doc.at("basepoint");
    d.basepoint = Vector2d(bp.at(0).get<double>(), bp.at(1).get<double>());
  }

  // overrides valid for both named and custom specs
  if (doc.contains("named") && doc.contains("domain")) d.domain = read_rect(doc.at("domain"));
  if (doc.contains("named") && doc.contains("basepoint")) {
    const auto& bp = doc.at("basepoint");
    d.basepoint = Vector2d(bp.at(0).get<double>(), bp.at(1).get<double>());
  }
  if (doc.contains("poles")) d.poles = read_points(doc.at("poles"));
  if (doc.contains("null_line_centers"))
    d.null_line_centers = read_points(doc.at("null_line_centers"));
  return d;
}

struct SurfaceWeierstrassArgs {
  std::string name, data_file;
  bool manifest = false;
  GridArgs grid;
};

void run_surface_weierstrass(const SurfaceWeierstrassArgs& a) {
  if (a.manifest) {
    std::cout << gallery_manifest_json() << "\n";
    return;
  }
  WeierstrassData data;
  if (!a.name.empty())
    data = named_surface(named_surface_from_string(a.name)).data;
  else if (!a.data_file.empty())
    data = weierstrass_data_from_json(load_json_file(a.data_file));
  else
    throw CLI::ValidationError("surface weierstrass",
                               "need --name, --data, or --manifest");

  const auto [nu, nv] = parse_grid(a.grid.grid);
  const GeneratedSurface gen = generate(data, nu, nv);
  const RegularityReport& reg = gen.regularity;

  GridMesh mesh;
  mesh.nu = nu;
  mesh.nv = nv;
  mesh.us = reg.us;
  mesh.vs = reg.vs;
  mesh.vertices.assign(static_cast<size_t>(nu) * nv, Vector3d::Zero());
  mesh.mask.assign(static_cast<size_t>(nu) * nv, 0);
  std::vector<CurvatureRow> rows(static_cast<size_t>(nu) * nv);
  std::vector<std::uint8_t> has_row(static_cast<size_t>(nu) * nv, 0);
  std::vector<double> max_h(static_cast<size_t>(nu), 0.0);
  std::vector<double> max_iso(static_cast<size_t>(nu), 0.0);

  parallel_rows(nu, a.grid.jobs, [&](int i) {
    for (int j = 0; j < nv; ++j) {
      const size_t idx = static_cast<size_t>(i) * nv + j;
      if (reg.mask(i, j)) {
        mesh.mask[idx] = 1;
        continue;
      }
      const double u = reg.us[static_cast<size_t>(i)];
      const double v = reg.vs[static_cast<size_t>(j)];
      mesh.vertices[idx] = gen.model.eval(u, v).value;
      const CurvatureReport cr = curvatures(gen.model, u, v);
      rows[idx] = {u,
                   v,
                   cr.forms.E,
                   cr.forms.F,
                   cr.forms.G,
                   cr.forms.e,
                   cr.forms.f,
                   cr.forms.g,
                   cr.H,
                   cr.K,
                   cr.diagonalizable == Diagonalizable::Yes ? 1 : 0};
      has_row[idx] = 1;
      max_h[static_cast<size_t>(i)] =
          std::max(max_h[static_cast<size_t>(i)], std::abs(cr.H));
      max_iso[static_cast<size_t>(i)] =
          std::max(max_iso[static_cast<size_t>(i)], isothermal_residual(data, u, v));
    }
  });

  std::vector<CurvatureRow> kept;
  kept.reserve(rows.size());
  for (size_t k = 0; k < rows.size(); ++k)
    if (has_row[k]) kept.push_back(rows[k]);
  double maxH = 0, maxIso = 0;
  for (int i = 0; i < nu; ++i) {
    maxH = std::max(maxH, max_h[static_cast<size_t>(i)]);
    maxIso = std::max(maxIso, max_iso[static_cast<size_t>(i)]);
  }

  JsonValue clauses = JsonValue::object();
  for (const auto& [key, count] : reg.clause_counts)
    clauses.set(key, JsonValue::integer(count));

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("surface weierstrass"));
  r.set("name", JsonValue::text(data.name));
  r.set("kind", JsonValue::text(to_string(data.kind)));
  r.set("ambient", JsonValue::text(to_string(data.ambient)));
  r.set("grid",
        JsonValue::array().push(JsonValue::integer(nu)).push(JsonValue::integer(nv)));
  r.set("masked_count", JsonValue::integer(reg.masked_count));
  r.set("mask_clauses", std::move(clauses));
  r.set("maxH", JsonValue::number(maxH));
  r.set("max_isothermal_residual", JsonValue::number(maxIso));
  r.set("basepoint", JsonValue::array()
                         .push(JsonValue::number(data.basepoint.x()))
                         .push(JsonValue::number(data.basepoint.y())));
  r.set("base_image", vec_json(data.base_image));
  if (!a.grid.obj_path.empty()) write_text_file(a.grid.obj_path, obj_mesh(mesh));
  if (!a.grid.csv_path.empty()) write_text_file(a.grid.csv_path, curvature_csv(kept));
  r.set("obj", a.grid.obj_path.empty() ? JsonValue{} : JsonValue::text(a.grid.obj_path));
  r.set("csv", a.grid.csv_path.empty() ? JsonValue{} : JsonValue::text(a.grid.csv_path));
  emit_report(r, a.grid.report_path);
}

// --- bscroll ---------------------------------------------------------------

struct SurfaceBScrollArgs {
  std::string curve = "gamma2";
  CurveParamFlags params;
  std::string trange;
  std::string phirange;
  GridArgs grid;
};

void run_surface_bscroll(const SurfaceBScrollArgs& a) {
  CurveModel alpha = make_named_curve(a.curve, a.params.collect());
  if (!a.phirange.empty()) alpha.domain = parse_interval(a.phirange, "--phirange");
  const Interval trange = parse_interval(a.trange, "--trange");
  const auto [nu, nv] = parse_grid(a.grid.grid);

  const SurfaceModel model = b_scroll(alpha, trange);
  const BScrollCheck check = b_scroll_verify(alpha, trange, nu, nv);
  const GridMesh mesh = sample_grid(model, nu, nv, a.grid.jobs);
  const std::vector<CurvatureRow> rows = curvature_rows(model, mesh.us, mesh.vs, a.grid.jobs);

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("surface bscroll"));
  r.set("curve", JsonValue::text(a.curve));
  r.set("phirange", interval_json(alpha.domain));
  r.set("trange", interval_json(trange));
  r.set("grid",
        JsonValue::array().push(JsonValue::integer(nu)).push(JsonValue::integer(nv)));
  r.set("K_residual", JsonValue::number(check.max_K_err));
  r.set("H_residual", JsonValue::number(check.max_H_err));
  r.set("non_diagonalizable_count", JsonValue::integer(check.non_diagonalizable_count));
  r.set("flags_consistent", JsonValue::boolean(check.flags_consistent));
  r.set("frame_det_range", JsonValue::array()
                               .push(JsonValue::number(check.min_D))
                               .push(JsonValue::number(check.max_D)));
  if (!a.grid.obj_path.empty()) write_text_file(a.grid.obj_path, obj_mesh(mesh));
  if (!a.grid.csv_path.empty()) write_text_file(a.grid.csv_path, curvature_csv(rows));
  r.set("obj", a.grid.obj_path.empty() ? JsonValue{} : JsonValue::text(a.grid.obj_path));
  r.set("csv", a.grid.csv_path.empty() ? JsonValue{} : JsonValue::text(a.grid.csv_path));
  emit_report(r, a.grid.report_path);
}

// --- revolution -------------------------------------------------------------

struct SurfaceRevolutionArgs {
  std::string profile;
  std::string kind = "circular-z";
  std::string ambient;  // only for profiles that take one
  std::string urange, vrange;
  double check_K = 0;
  CLI::Option* check_opt = nullptr;
  GridArgs grid;
};

RevolutionKind parse_revolution_kind(const std::string& s) {
  if (s == "circular-z") return RevolutionKind::CircularZ;
  if (s == "circular-x") return RevolutionKind::CircularX;
  if (s == "hyperbolic-xy") return RevolutionKind::HyperbolicXY;
  if (s == "hyperbolic-yz") return RevolutionKind::HyperbolicYZ;
  throw CLI::ValidationError(
      "--kind", "expected circular-z | circular-x | hyperbolic-xy | hyperbolic-yz");
}

void run_surface_revolution(const SurfaceRevolutionArgs& a) {
  const RevolutionKind kind = parse_revolution_kind(a.kind);

  CurveModel profile;
  if (a.profile == "de-sitter")
    profile = de_sitter_profile();
  else if (a.profile == "hyperbolic")
    profile = hyperbolic_profile();
  else if (a.profile == "cylinder")
    profile = cylinder_profile(a.ambient.empty() ? Ambient::Lorentz3
                                                 : parse_ambient(a.ambient));
  else if (a.profile == "elliptic-cosh")
    profile = elliptic_cosh_profile(a.ambient.empty() ? Ambient::Index2_3
                                                      : parse_ambient(a.ambient));
  else if (a.profile == "elliptic-cos")
    profile = elliptic_cos_profile(a.ambient.empty() ? Ambient::Lorentz3
                                                     : parse_ambient(a.ambient));
  else
    throw precondition_error(
        "unknown profile '" + a.profile +
        "' (catalog: de-sitter, hyperbolic, cylinder, elliptic-cosh, elliptic-cos)");
  if (!a.urange.empty()) profile.domain = parse_interval(a.urange, "--urange");

  Interval vrange{0.0, 6.283185307179586};
  if (kind == RevolutionKind::HyperbolicXY || kind == RevolutionKind::HyperbolicYZ)
    vrange = {-1.0, 1.0};
  if (!a.vrange.empty()) vrange = parse_interval(a.vrange, "--vrange");

  const SurfaceModel model = revolution_surface(profile, kind, vrange);
  const auto [nu, nv] = parse_grid(a.grid.grid);
  const GridMesh mesh = sample_grid(model, nu, nv, a.grid.jobs);
  const std::vector<CurvatureRow> rows = curvature_rows(model, mesh.us, mesh.vs, a.grid.jobs);

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("surface revolution"));
  r.set("profile", JsonValue::text(a.profile));
  r.set("kind", JsonValue::text(to_string(kind)));
  r.set("ambient", JsonValue::text(to_string(model.ambient)));
  r.set("urange", interval_json(profile.domain));
  r.set("vrange", interval_json(vrange));
  r.set("grid",
        JsonValue::array().push(JsonValue::integer(nu)).push(JsonValue::integer(nv)));
  r.set("K", field_stats("K", rows, &CurvatureRow::K, std::nullopt));
  r.set("H", field_stats("H", rows, &CurvatureRow::H, std::nullopt));

  if (a.check_opt->count()) {
    const RevolutionConstKCheck c =
        revolution_constant_K_check(profile, kind, a.check_K);
    JsonValue cj = JsonValue::object();
    cj.set("K", JsonValue::number(a.check_K));
    cj.set("eps_alpha", JsonValue::integer(c.eps_alpha));
    cj.set("max_unit_speed_err", JsonValue::number(c.max_unit_speed_err));
    cj.set("max_ode_residual", JsonValue::number(c.max_ode_residual));
    cj.set("max_g_pointwise", JsonValue::number(c.max_g_pointwise));
    cj.set("max_g_integral", JsonValue::number(c.max_g_integral));
    r.set("constant_K_check", std::move(cj));
  } else {
    r.set("constant_K_check", JsonValue{});
  }

  if (!a.grid.obj_path.empty()) write_text_file(a.grid.obj_path, obj_mesh(mesh));
  if (!a.grid.csv_path.empty()) write_text_file(a.grid.csv_path, curvature_csv(rows));
  r.set("obj", a.grid.obj_path.empty() ? JsonValue{} : JsonValue::text(a.grid.obj_path));
  r.set("csv", a.grid.csv_path.empty() ? JsonValue{} : JsonValue::text(a.grid.csv_path));
  emit_report(r, a.grid.report_path);
}

// --- fermi -------------------------------------------------------------------

struct SurfaceFermiArgs {
  std::string metric;   // registered abstract patch
  std::string surface;  // or induced from a gallery chart
  std::string base = "";
  double halfwidth = 0.5;
  std::string vrange = "0,1.5";
  int u_samples = 10, v_samples = 21, substeps = 8;
  std::string csv_path, report_path;
};

struct MetricEntry {
  MetricPatch patch;
  GeodesicState default_base;
  // closed-form G(u) along the Fermi normal coordinate, when known
  std::function<double(double)> target_G;
  std::string target_label;
};

MetricEntry metric_from_name(const std::string& name) {
  MetricEntry e;
  if (name == "sphere-latitude") {
    // round unit sphere in colatitude coordinates; the equator u = pi/2
    e.patch = metric_from_functions(
        [](double, double) { return 1.0; }, [](double, double) { return 0.0; },
        [](double u, double) { const double s = std::sin(u); return s * s; },
        {{0.3, 2.9}, {-7, 7}}, 0);
    e.default_base = {{1.5707963267948966, 0}, {0, 1}};
    e.target_G = [](double u) { const double c = std::cos(u); return c * c; };
    e.target_label = "cos^2(u)";
    return e;
  }
  if (name == "sphere-stereographic") {
    // round unit sphere; the unit circle is the image of the equator
    auto conf = [](double u, double v) {
      const double s = 1 + u * u + v * v;
      return 4.0 / (s * s);
    };
    e.patch = metric_from_functions(conf, [](double, double) { return 0.0; }, conf,
                                    {{-3, 3}, {-3, 3}}, 0);
    e.default_base = {{1, 0}, {0, 1}};
    e.target_G = [](double u) { const double c = std::cos(u); return c * c; };
    e.target_label = "cos^2(u)";
    return e;
  }
  if (name == "hyperbolic-disk") {
    auto conf = [](double u, double v) {
      const double s = 1 - u * u - v * v;
      return 4.0 / (s * s);
    };
    e.patch = metric_from_functions(conf, [](double, double) { return 0.0; }, conf,
                                    {{-0.95, 0.95}, {-0.95, 0.95}}, 0);
    e.default_base = {{0, 0}, {1, 0}};
    e.target_G = [](double u) { const double c = std::cosh(u); return c * c; };
    e.target_label = "cosh^2(u)";
    return e;
  }
  if (name == "flat-euclidean") {
    auto one = [](double, double) { return 1.0; };
    e.patch = metric_from_functions(one, [](double, double) { return 0.0; }, one,
                                    {{-5, 5}, {-5, 5}}, 0);
    e.default_base = {{0, 0}, {1, 0}};
    e.target_G = [](double) { return 1.0; };
    e.target_label = "1";
    return e;
  }
  if (name == "flat-lorentz") {
    e.patch = metric_from_functions([](double, double) { return 1.0; },
                                    [](double, double) { return 0.0; },
                                    [](double, double) { return -1.0; },
                                    {{-5, 5}, {-5, 5}}, 1);
    e.default_base = {{0, 0}, {1, 0}};
    e.target_G = [](double) { return 1.0; };
    e.target_label = "1";
    return e;
  }
  throw precondition_error("unknown metric '" + name +
                           "' (catalog: sphere-latitude, sphere-stereographic, "
                           "hyperbolic-disk, flat-euclidean, flat-lorentz)");
}

void run_surface_fermi(const SurfaceFermiArgs& a) {
  MetricEntry entry;
  std::string source;
  if (!a.metric.empty()) {
    entry = metric_from_name(a.metric);
    source = a.metric;
  } else if (!a.surface.empty()) {
    std::string name = a.surface;
    for (char& c : name)
      if (c == '-') c = '_';
    const GallerySurface* g = find_gallery_surface(name);
    if (!g) throw precondition_error("unknown gallery surface: " + a.surface);
    entry.patch = induced_metric(g->model);
    const Rect& dom = g->model.domain;
    entry.default_base = {{0.5 * (dom.u.lo + dom.u.hi), 0.5 * (dom.v.lo + dom.v.hi)},
                          {0, 1}};
    source = "induced:" + g->name;
  } else {
    throw CLI::ValidationError("surface fermi", "need --metric or --surface");
  }

  GeodesicState base = entry.default_base;
  if (!a.base.empty()) {
    const auto b = split_doubles(a.base, "--base");
    if (b.size() != 4) throw CLI::ValidationError("--base", "expected u,v,du,dv");
    base = {{b[0], b[1]}, {b[2], b[3]}};
  }

  FermiOptions opt;
  opt.u_half_samples = a.u_samples;
  opt.v_samples = a.v_samples;
  opt.substeps = a.substeps;
  const Interval vr = parse_interval(a.vrange, "--vrange");

  const FermiChart chart = fermi_chart(entry.patch, base, a.halfwidth, vr, opt);

  double target_err = 0;
  if (entry.target_G) {
    for (size_t i = 0; i < chart.u.size(); ++i)
      for (size_t j = 0; j < chart.v.size(); ++j)
        target_err = std::max(target_err,
                              std::abs(chart.G(static_cast<Eigen::Index>(i),
                                               static_cast<Eigen::Index>(j)) -
                                       entry.target_G(chart.u[i])));
  }

  if (!a.csv_path.empty()) {
    std::string csv = "u,v,E,F,G\n";
    for (size_t i = 0; i < chart.u.size(); ++i)
      for (size_t j = 0; j < chart.v.size(); ++j) {
        const auto ii = static_cast<Eigen::Index>(i);
        const auto jj = static_cast<Eigen::Index>(j);
        csv += format_double(chart.u[i]) + ',' + format_double(chart.v[j]) + ',' +
               format_double(chart.E(ii, jj)) + ',' + format_double(chart.F(ii, jj)) +
               ',' + format_double(chart.G(ii, jj)) + '\n';
      }
    write_text_file(a.csv_path, csv);
  }

  JsonValue r = JsonValue::object();
  r.set("command", JsonValue::text("surface fermi"));
  r.set("metric", JsonValue::text(source));
  r.set("base", JsonValue::array()
                    .push(JsonValue::number(base.pos.x()))
                    .push(JsonValue::number(base.pos.y()))
                    .push(JsonValue::number(base.vel.x()))
                    .push(JsonValue::number(base.vel.y())));
  r.set("halfwidth", JsonValue::number(a.halfwidth));
  r.set("vrange", interval_json(vr));
  r.set("grid", JsonValue::array()
                    .push(JsonValue::integer(static_cast<long long>(chart.u.size())))
                    .push(JsonValue::integer(static_cast<long long>(chart.v.size()))));
  r.set("eps_gamma", JsonValue::integer(chart.eps_gamma));
  r.set("E_expected", JsonValue::number(chart.E_expected));
  r.set("max_E_err", JsonValue::number(chart.max_E_err));
  r.set("max_F", JsonValue::number(chart.max_F));
  r.set("max_Gu0", JsonValue::number(chart.max_Gu0));
  if (entry.target_G) {
    r.set("G_target", JsonValue::text(entry.target_label));
    r.set("max_G_target_err", JsonValue::number(target_err));
  } else {
    r.set("G_target", JsonValue{});
    r.set("max_G_target_err", JsonValue{});
  }
  r.set("csv", a.csv_path.empty() ? JsonValue{} : JsonValue::text(a.csv_path));
  emit_report(r, a.report_path);
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{
      "minkgeo: computational geometry of Lorentz-Minkowski space "
      "(causal classification, curve invariants and reconstruction, surface "
      "curvature, critical-surface generation)"};
  app.require_subcommand(1);

  // classify ----------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "causal / group classification");
  classify->require_subcommand(1);

  ClassifyVectorArgs cva;
  auto* cvec = classify->add_subcommand("vector", "causal character of a vector");
  cvec->add_option("--sig", cva.sig, "signature n,nu (default 3,1)");
  cvec->add_option("--coords", cva.coords, "comma-separated coordinates")->required();
  cvec->add_option("--report", cva.report_path, "also write the JSON report here");
  cvec->callback([&] { run_classify_vector(cva); });

  ClassifyTransformArgs cta;
  auto* ctr = classify->add_subcommand("transform",
                                       "pseudo-orthogonal membership / component");
  auto* input = ctr->add_option_group("input", "matrix source");
  input->add_option("--file", cta.file, "JSON file with {\"matrix\": [[...]]}");
  input->add_option("--json", cta.inline_json, "inline JSON matrix");
  input->require_option(1);
  ctr->add_option("--sig", cta.sig, "signature n,nu (default: from file or n,1)");
  ctr->add_option("--tol", cta.tol, "membership tolerance (default 1e-9)");
  ctr->add_option("--report", cta.report_path, "also write the JSON report here");
  ctr->callback([&] { run_classify_transform(cta); });

  ClassifyRelationArgs cra;
  auto* crel = classify->add_subcommand("relation", "causal relations of two events");
  crel->add_option("--sig", cra.sig, "signature n,nu (default 3,1)");
  crel->add_option("--p", cra.p, "event p coordinates")->required();
  crel->add_option("--q", cra.q, "event q coordinates")->required();
  crel->add_option("--report", cra.report_path, "also write the JSON report here");
  crel->callback([&] { run_classify_relation(cra); });

  // curve ---------------------------------------------------------------------
  auto* curve = app.add_subcommand("curve", "curve sampling and reconstruction");
  curve->require_subcommand(1);

  CurveNamedArgs cna;
  auto* cnamed = curve->add_subcommand("named", "sample a catalog curve");
  cnamed->add_option("name", cna.name, "catalog curve name")->required();
  cna.params.attach(cnamed);
  cnamed->add_option("--range", cna.range, "parameter range lo,hi (default: curve domain)");
  cnamed->add_option("--step", cna.step, "parameter step (default 0.01)");
  cnamed->add_option("-o,--output", cna.csv_path, "write the sample CSV here");
  cnamed->add_option("--report", cna.report_path, "also write the JSON report here");
  cnamed->callback([&] { run_curve_named(cna); });

  CurveReconstructArgs crc;
  auto* crec = curve->add_subcommand("reconstruct",
                                     "integrate a curve from invariant profiles");
  crec->add_option("--kind", crc.kind, "admissible | lightlike | semi-lightlike")
      ->required();
  crec->add_option("--kappa", crc.kappa, "curvature profile (const:c, linear:a,b, ...)");
  crec->add_option("--tau", crc.tau, "torsion profile");
  crec->add_option("--ctorsion", crc.ctorsion, "pseudo-torsion profile");
  crec->add_option("--range", crc.range, "arclength range lo,hi (default 0,10)");
  crec->add_option("--step", crc.step, "RK4 step (default 1e-3)");
  crec->add_option("--p0", crc.p0, "initial point x,y,z (default 0,0,0)");
  crec->add_option("--frame", crc.frame_file,
                   "JSON file with {\"frame\": 3x3 rows}, columns (T,N,B); "
                   "default: a standard frame for the kind");
  crec->add_option("--ambient", crc.ambient,
                   "euclidean3 | lorentz3 (default lorentz3)");
  crec->add_option("-o,--output", crc.csv_path, "write the sample CSV here");
  crec->add_option("--report", crc.report_path, "also write the JSON report here");
  crec->callback([&] { run_curve_reconstruct(crc); });

  // surface ---------------------------------------------------------------------
  auto* surface = app.add_subcommand("surface", "surface curvature and generation");
  surface->require_subcommand(1);

  SurfaceNamedArgs sna;
  auto* snamed = surface->add_subcommand("named", "curvature report for a gallery chart");
  snamed->add_option("name", sna.name, "gallery surface name")->required();
  sna.grid.attach(snamed);
  snamed->callback([&] { run_surface_named(sna); });

  SurfaceWeierstrassArgs swa;
  auto* swei = surface->add_subcommand(
      "weierstrass", "generate a critical surface from representation data");
  swei->add_option("--name", swa.name, "named data set (see --manifest)");
  swei->add_option("--data", swa.data_file, "JSON data file (see README schema)");
  swei->add_flag("--manifest", swa.manifest, "print the named-surface manifest and exit");
  swa.grid.attach(swei);
  swei->callback([&] { run_surface_weierstrass(swa); });

  SurfaceBScrollArgs sba;
  auto* sbs = surface->add_subcommand("bscroll",
                                      "ruled surface over a lightlike curve's binormal");
  sbs->add_option("--curve", sba.curve, "lightlike catalog curve (default gamma2)");
  sba.params.attach(sbs);
  sbs->add_option("--trange", sba.trange, "ruling range lo,hi")->required();
  sbs->add_option("--phirange", sba.phirange, "curve parameter range lo,hi");
  sba.grid.attach(sbs);
  sbs->callback([&] { run_surface_bscroll(sba); });

  SurfaceRevolutionArgs sra;
  auto* srev = surface->add_subcommand("revolution", "surface of revolution");
  srev->add_option("--profile", sra.profile,
                   "de-sitter | hyperbolic | cylinder | elliptic-cosh | elliptic-cos")
      ->required();
  srev->add_option("--kind", sra.kind,
                   "circular-z | circular-x | hyperbolic-xy | hyperbolic-yz");
  srev->add_option("--ambient", sra.ambient, "ambient override for flexible profiles");
  srev->add_option("--urange", sra.urange, "profile parameter range lo,hi");
  srev->add_option("--vrange", sra.vrange, "rotation parameter range lo,hi");
  sra.check_opt = srev->add_option("--check-K", sra.check_K,
                                   "verify the constant-K profile relations for this K");
  sra.grid.attach(srev);
  srev->callback([&] { run_surface_revolution(sra); });

  SurfaceFermiArgs sfa;
  auto* sfer = surface->add_subcommand("fermi", "numeric Fermi chart of a metric patch");
  sfer->add_option("--metric", sfa.metric,
                   "sphere-latitude | sphere-stereographic | hyperbolic-disk | "
                   "flat-euclidean | flat-lorentz");
  sfer->add_option("--surface", sfa.surface, "induced metric of a gallery chart");
  sfer->add_option("--base", sfa.base, "base geodesic start u,v,du,dv");
  sfer->add_option("--halfwidth", sfa.halfwidth, "normal-coordinate half width (default 0.5)");
  sfer->add_option("--vrange", sfa.vrange, "base parameter range lo,hi (default 0,1.5)");
  sfer->add_option("--u-samples", sfa.u_samples, "rows each side of the base (default 10)");
  sfer->add_option("--v-samples", sfa.v_samples, "columns along the base (default 21)");
  sfer->add_option("--substeps", sfa.substeps, "RK4 substeps per interval (default 8)");
  sfer->add_option("--csv", sfa.csv_path, "write the (u,v,E,F,G) CSV here");
  sfer->add_option("--report", sfa.report_path, "also write the JSON report here");
  sfer->callback([&] { run_surface_fermi(sfa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mink::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const mink::error& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
