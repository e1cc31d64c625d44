#pragma once

#include <string>
#include <vector>

#include "focalkit/linalg.hpp"
#include "focalkit/mpoly.hpp"
#include "focalkit/sampling.hpp"

namespace focalkit {

struct ParamPoint {
  RatVec values;
};

// Projective point on a fiber, canonicalized so the first nonzero
// coordinate is 1.
struct FiberPoint {
  explicit FiberPoint(RatVec c);
  RatVec coords;
  bool operator==(const FiberPoint& o) const { return coords == o.coords; }
};

// One moving spanning point: N+1 polynomial coordinates in the parameters.
struct MovingPoint {
  std::vector<MPoly> coords;
};

// A family of k-planes in P^N spanned by k+1 moving points over n
// parameters. `joint` is the parameter universe extended by the fiber
// coordinates x0..xk, in that order.
struct FamilySpec {
  int N = 0;
  int k = 0;
  int n = 0;
  VarList params;
  VarList joint;
  std::vector<MovingPoint> span;
  std::string label;

  std::size_t param_index(std::size_t j) const { return j; }
  std::size_t fiber_index(std::size_t a) const {
    return static_cast<std::size_t>(n) + a;
  }
};

// Validates shapes, name clashes (parameters may not be called x0..xk),
// n <= N-k, and spanning-point independence at random parameter samples
// (retried per the sampling policy).
FamilySpec make_family(int N, int k, VarList params,
                       std::vector<MovingPoint> span, std::string label,
                       std::uint64_t validation_seed = 0);

// P_a evaluated at t.
RatVec span_value(const FamilySpec& spec, std::size_t a, const ParamPoint& t);
// (k+1) x (N+1) matrix of span points evaluated at t.
RatMatrix span_matrix_at(const FamilySpec& spec, const ParamPoint& t);

// The map (t, x) -> sum_a x_a P_a(t), as N+1 polynomials over `joint`.
struct IncidenceMap {
  std::vector<MPoly> coords;
  VarList vars;
};
IncidenceMap incidence(const FamilySpec& spec);

// Jacobian of the incidence map w.r.t. (t_1..t_n, x_0..x_k), evaluated.
RatMatrix incidence_jacobian_at(const FamilySpec& spec, const ParamPoint& t,
                                const FiberPoint& x);

struct UnionDimReport {
  int dim = -1;       // projective dimension of the union variety
  int expected = -1;  // n + k
  bool matches() const { return dim == expected; }
};
UnionDimReport union_dimension(const FamilySpec& spec, int trials,
                               Sampler& sampler);

// Fixture catalog. Ids: F1 F2 F3 F4 F5 F6 F7 F7-planes F8 F10 F11 F12.
FamilySpec fixture(const std::string& id);
std::vector<std::string> fixture_ids();

// Builders behind the parameterized fixtures (defaults: rational normal
// curves / the Veronese patch).
FamilySpec band_line_family(const std::vector<MPoly>& curve,
                            const std::vector<MPoly>& directrix,
                            std::string label);
FamilySpec band_plane_family(const std::vector<MPoly>& curve,
                             const std::vector<MPoly>& directrix,
                             std::string label);
FamilySpec cone_over_surface(const std::vector<MPoly>& patch,
                             std::string label);

// Random parameter / fiber point under the sampling policy.
ParamPoint sample_param_point(const FamilySpec& spec, Sampler& sampler,
                              long bound = Sampler::kDefaultBound);
FiberPoint sample_fiber_point(const FamilySpec& spec, Sampler& sampler,
                              long bound = Sampler::kDefaultBound);

}  // namespace focalkit
