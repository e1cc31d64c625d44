#include "focalkit/families.hpp"

#include <algorithm>
#include <cassert>

#include "focalkit/errors.hpp"
#include "focalkit/polyparse.hpp"

namespace focalkit {

FiberPoint::FiberPoint(RatVec c) : coords(std::move(c)) {
  std::size_t lead = coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!is_zero(coords[i])) {
      lead = i;
      break;
    }
  }
  if (lead == coords.size())
    throw InputError("fiber point must have a nonzero coordinate");
  const Rat f = coords[lead];
  for (auto& x : coords) x /= f;
}

FamilySpec make_family(int N, int k, VarList params,
                       std::vector<MovingPoint> span, std::string label,
                       std::uint64_t validation_seed) {
  FamilySpec spec;
  spec.N = N;
  spec.k = k;
  spec.n = static_cast<int>(params->size());
  spec.params = std::move(params);
  spec.span = std::move(span);
  spec.label = std::move(label);

  if (N < 1 || k < 0 || k >= N) throw InputError("need 0 <= k < N");
  if (spec.n < 1) throw InputError("need at least one parameter");
  if (spec.n > N - k) throw InputError("need n <= N - k");
  if (spec.span.size() != static_cast<std::size_t>(k + 1))
    throw ShapeError("a family of k-planes needs k+1 spanning points");
  for (const auto& p : spec.span) {
    if (p.coords.size() != static_cast<std::size_t>(N + 1))
      throw ShapeError("spanning points need N+1 coordinates");
    bool all_zero = true;
    for (const auto& c : p.coords) all_zero = all_zero && c.is_zero();
    if (all_zero) throw InputError("spanning point is identically zero");
  }

  std::vector<std::string> joint = *spec.params;
  for (int a = 0; a <= k; ++a) {
    const std::string xa = "x" + std::to_string(a);
    if (std::find(joint.begin(), joint.end(), xa) != joint.end())
      throw InputError("parameter name " + xa +
                       " collides with a fiber coordinate");
    joint.push_back(xa);
  }
  spec.joint = make_vars(std::move(joint));

  Sampler sampler(validation_seed);
  bool independent = false;
  for (int attempt = 0; attempt < Sampler::kRetries && !independent;
       ++attempt) {
    ParamPoint t{sampler.rational_vec(static_cast<std::size_t>(spec.n))};
    independent = span_matrix_at(spec, t).rank() ==
                  static_cast<std::size_t>(k + 1);
  }
  if (!independent)
    throw InputError("spanning points are dependent at random samples");
  return spec;
}

RatVec span_value(const FamilySpec& spec, std::size_t a, const ParamPoint& t) {
  assert(t.values.size() == static_cast<std::size_t>(spec.n));
  RatVec v;
  v.reserve(spec.span[a].coords.size());
  for (const MPoly& c : spec.span[a].coords) v.push_back(c.eval(t.values));
  return v;
}

RatMatrix span_matrix_at(const FamilySpec& spec, const ParamPoint& t) {
  std::vector<RatVec> rows;
  for (std::size_t a = 0; a < spec.span.size(); ++a)
    rows.push_back(span_value(spec, a, t));
  return RatMatrix::from_rows(rows);
}

IncidenceMap incidence(const FamilySpec& spec) {
  IncidenceMap f;
  f.vars = spec.joint;
  for (int i = 0; i <= spec.N; ++i) {
    MPoly c(spec.joint);
    for (int a = 0; a <= spec.k; ++a) {
      const MPoly xa = MPoly::variable(spec.joint, spec.fiber_index(a));
      c = c + xa * spec.span[static_cast<std::size_t>(a)]
                       .coords[static_cast<std::size_t>(i)]
                       .with_universe(spec.joint);
    }
    f.coords.push_back(std::move(c));
  }
  return f;
}

RatMatrix incidence_jacobian_at(const FamilySpec& spec, const ParamPoint& t,
                                const FiberPoint& x) {
  const IncidenceMap f = incidence(spec);
  RatVec point = t.values;
  point.insert(point.end(), x.coords.begin(), x.coords.end());
  const std::size_t nvars = point.size();
  RatMatrix jac(static_cast<std::size_t>(spec.N + 1), nvars);
  for (std::size_t i = 0; i < f.coords.size(); ++i)
    for (std::size_t j = 0; j < nvars; ++j)
      jac.at(i, j) = f.coords[i].derivative(j).eval(point);
  return jac;
}

UnionDimReport union_dimension(const FamilySpec& spec, int trials,
                               Sampler& sampler) {
  UnionDimReport report;
  report.expected = spec.n + spec.k;
  for (int i = 0; i < std::max(trials, 1); ++i) {
    const ParamPoint t = sample_param_point(spec, sampler);
    const FiberPoint x = sample_fiber_point(spec, sampler);
    const int dim =
        static_cast<int>(incidence_jacobian_at(spec, t, x).rank()) - 1;
    report.dim = std::max(report.dim, dim);
  }
  return report;
}

ParamPoint sample_param_point(const FamilySpec& spec, Sampler& sampler,
                              long bound) {
  return ParamPoint{
      sampler.rational_vec(static_cast<std::size_t>(spec.n), bound)};
}

FiberPoint sample_fiber_point(const FamilySpec& spec, Sampler& sampler,
                              long bound) {
  for (;;) {
    RatVec v = sampler.rational_vec(static_cast<std::size_t>(spec.k + 1),
                                    bound);
    bool nonzero = false;
    for (const Rat& c : v) nonzero = nonzero || !is_zero(c);
    if (nonzero) return FiberPoint(std::move(v));
  }
}

namespace {

std::vector<MPoly> parse_point(const VarList& vars,
                               const std::vector<std::string>& exprs) {
  std::vector<MPoly> coords;
  for (const auto& e : exprs) coords.push_back(parse_polynomial(e, vars));
  return coords;
}

FamilySpec from_strings(int N, int k, std::vector<std::string> params,
                        const std::vector<std::vector<std::string>>& points,
                        std::string label) {
  VarList vars = make_vars(std::move(params));
  std::vector<MovingPoint> span;
  for (const auto& p : points) span.push_back(MovingPoint{parse_point(vars, p)});
  return make_family(N, k, vars, std::move(span), std::move(label));
}

std::vector<MPoly> rational_normal_curve(const VarList& vars, std::size_t var,
                                         int degree) {
  std::vector<MPoly> c;
  const MPoly t = MPoly::variable(vars, var);
  for (int i = 0; i <= degree; ++i) c.push_back(t.pow(i));
  return c;
}

std::vector<MPoly> derivative_curve(const std::vector<MPoly>& c,
                                    std::size_t var) {
  std::vector<MPoly> d;
  for (const MPoly& x : c) d.push_back(x.derivative(var));
  return d;
}

}  // namespace

FamilySpec band_line_family(const std::vector<MPoly>& curve,
                            const std::vector<MPoly>& directrix,
                            std::string label) {
  // Lines span{C(t), C'(t) + u D(t)} inside the band's planes.
  VarList tu = make_vars({"t", "u"});
  const int N = static_cast<int>(curve.size()) - 1;
  std::vector<MPoly> p0, p1;
  const MPoly u = MPoly::variable(tu, 1);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const MPoly c = curve[i].with_universe(tu);
    const MPoly d = directrix[i].with_universe(tu);
    p0.push_back(c);
    p1.push_back(c.derivative(0) + u * d);
  }
  return make_family(N, 1, tu, {MovingPoint{p0}, MovingPoint{p1}},
                     std::move(label));
}

FamilySpec band_plane_family(const std::vector<MPoly>& curve,
                             const std::vector<MPoly>& directrix,
                             std::string label) {
  VarList tv = make_vars({"t"});
  const int N = static_cast<int>(curve.size()) - 1;
  std::vector<MPoly> p0, p1, p2;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const MPoly c = curve[i].with_universe(tv);
    p0.push_back(c);
    p1.push_back(c.derivative(0));
    p2.push_back(directrix[i].with_universe(tv));
  }
  return make_family(N, 2, tv,
                     {MovingPoint{p0}, MovingPoint{p1}, MovingPoint{p2}},
                     std::move(label));
}

FamilySpec cone_over_surface(const std::vector<MPoly>& patch,
                             std::string label) {
  // Vertex is appended as an extra coordinate direction so it is never on
  // the surface's span.
  VarList uv = patch.front().vars();
  const int N = static_cast<int>(patch.size());
  std::vector<MPoly> vertex, s;
  for (const auto& c : patch) {
    vertex.push_back(MPoly(uv));
    s.push_back(c);
  }
  vertex.push_back(MPoly::constant(uv, Rat(1)));
  s.push_back(MPoly(uv));
  return make_family(N, 1, uv, {MovingPoint{vertex}, MovingPoint{s}},
                     std::move(label));
}

FamilySpec fixture(const std::string& id) {
  if (id == "F1") {
    return from_strings(3, 1, {"t"},
                        {{"1", "t", "t^2", "t^3"}, {"0", "1", "2*t", "3*t^2"}},
                        "tangent lines of the twisted cubic");
  }
  if (id == "F2") {
    return from_strings(3, 1, {"t"},
                        {{"0", "0", "0", "1"}, {"1", "t", "t^2", "0"}},
                        "cone over a plane cubic curve");
  }
  if (id == "F3") {
    return from_strings(3, 1, {"t"},
                        {{"1", "t", "0", "0"}, {"0", "0", "1", "t"}},
                        "ruling of a quadric surface");
  }
  if (id == "F4") {
    return from_strings(4, 1, {"s", "u"},
                        {{"1", "s", "s^2", "s^3", "s^4"},
                         {"1", "u", "u^2", "u^3", "u^4"}},
                        "secant lines of the rational normal quartic");
  }
  if (id == "F5") {
    return from_strings(4, 2, {"t"},
                        {{"1", "t", "t^2", "t^3", "t^4"},
                         {"0", "1", "2*t", "3*t^2", "4*t^3"},
                         {"0", "0", "2", "6*t", "12*t^2"}},
                        "osculating planes of the rational normal quartic");
  }
  if (id == "F6") {
    return from_strings(5, 1, {"s", "u"},
                        {{"1", "s", "s^2", "0", "0", "0"},
                         {"0", "0", "0", "1", "u", "u^2"}},
                        "join of two conics");
  }
  if (id == "F7" || id == "F7-planes") {
    VarList t = make_vars({"t"});
    const auto curve = rational_normal_curve(t, 0, 5);
    // Default directrix: a conic meeting no tangent line of the curve.
    const auto conic = parse_point(t, {"1", "2*t", "t^2", "0", "0", "0"});
    if (id == "F7")
      return band_line_family(curve, conic, "band over the quintic (lines)");
    return band_plane_family(curve, conic, "band over the quintic (planes)");
  }
  if (id == "F8") {
    VarList uv = make_vars({"u", "v"});
    const auto veronese =
        parse_point(uv, {"1", "u", "v", "u^2", "u*v", "v^2"});
    return cone_over_surface(veronese, "cone over the Veronese surface");
  }
  if (id == "F10") {
    return from_strings(5, 1, {"u", "v"},
                        {{"1", "u", "v", "u^2", "u*v", "v^2"},
                         {"0", "1", "0", "2*u", "v", "0"}},
                        "u-tangent lines of the Veronese surface");
  }
  if (id == "F11") {
    return from_strings(4, 1, {"t", "s"},
                        {{"1", "t", "t^2", "0", "0"},
                         {"0", "0", "1", "s+t*s^2", "s^2"}},
                        "pencil of cones with vertices on a conic");
  }
  if (id == "F12") {
    return from_strings(
        5, 2, {"s", "u"},
        {{"1", "s", "s^2", "s^3", "s^4", "s^5"},
         {"1", "u", "u^2", "u^3", "u^4", "u^5"},
         {"0", "2", "2*s+2*u", "3*s^2+3*u^2", "4*s^3+4*u^3",
          "5*s^4+5*u^4"}},
        "planes on the secant lines of the rational normal quintic");
  }
  throw InputError("unknown fixture id: " + id);
}

std::vector<std::string> fixture_ids() {
  return {"F1", "F2", "F3", "F4",  "F5",  "F6",
          "F7", "F7-planes", "F8", "F10", "F11", "F12"};
}

}  // namespace focalkit
