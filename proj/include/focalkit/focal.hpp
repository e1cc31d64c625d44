#pragma once

#include <optional>
#include <utility>

#include "focalkit/families.hpp"
#include "focalkit/polymatrix.hpp"
#include "focalkit/upoly.hpp"

namespace focalkit {

// The characteristic matrix of the family at a fixed parameter value: the
// (N-k) x n matrix whose column j, evaluated at a fiber point x, is the
// class of sum_a x_a dP_a/dt_j in V / span(Lambda), written in the quotient
// basis of standard coordinate vectors complementary to the RREF pivots of
// the span matrix.
struct CharMatrix {
  ParamPoint base;
  LinSubspace lambda;                       // RREF basis of the fiber's cone
  std::vector<std::size_t> quotient_basis;  // ascending non-pivot indices
  PolyMatrix entries;                       // degree <= 1 in x0..xk
  VarList fiber_vars;
  int N = 0, k = 0, n = 0;
};

CharMatrix characteristic_matrix(const FamilySpec& spec, const ParamPoint& t);

// Rank-drop divisor on the fiber: the gcd of the maximal minors of the
// characteristic matrix, factored over Q for line fibers.
struct FocalDivisor {
  MPoly form;  // monic under graded lex; zero iff whole_fiber_focal
  int degree = 0;
  bool whole_fiber_focal = false;
  struct Root {
    FiberPoint point;
    int multiplicity;
  };
  std::vector<Root> roots;  // k = 1 only: rational roots
  struct Factor {
    MPoly factor;  // squarefree binary form without rational roots
    int multiplicity;
  };
  std::vector<Factor> irrational;  // k = 1 only
  // False when integer factoring gave up on some residual factor.
  bool factorization_complete = true;
};

FocalDivisor focal_divisor(const CharMatrix& cm);

struct TangentEnvelope {
  LinSubspace space;  // subspace of V containing the fiber's cone
  int proj_dim() const { return space.proj_dim(); }
};

// Fixed tangent space along a line fiber, from the linear system obtained
// by dividing the signed maximal minors by the focal form and extracting
// monomial coefficients. Requires k = 1 and n <= N-2.
TangentEnvelope fixed_tangent_space(const CharMatrix& cm);

// Independent oracle: exact intersection of the embedded tangent spaces of
// the union variety at `samples` random smooth fiber points.
TangentEnvelope tangent_envelope(const FamilySpec& spec, const ParamPoint& t,
                                 int samples, Sampler& sampler);

// Rank of the incidence differential at (t, x); x is focal iff this is
// less than n+k+1.
int df_rank_oracle(const FamilySpec& spec, const ParamPoint& t,
                   const FiberPoint& x);

// A tangent vector of the family viewed as a homomorphism from the fiber
// cone to the quotient: (N-k) x (k+1) matrix in the span-point basis.
struct TangentHom {
  RatMatrix m;
  RatVec coeffs;  // coordinates in the characteristic-matrix column basis
};

struct RankOneClasses {
  // Every combination has rank <= 1 (e.g. both generators already rank 1).
  bool pencil = false;
  std::optional<FiberPoint> pencil_kernel;  // shared kernel, when one exists
  std::vector<std::pair<TangentHom, FiberPoint>> classes;
  int irrational_count = 0;  // rank-1 classes with irrational coordinates
  bool complete = true;
};

// All rank-1 homomorphism classes in the tangent space of the family at a
// non-focal line fiber, paired with their projectivized kernels (the foci).
// Supported for n <= 2 (the classification range).
RankOneClasses rank_one_homs(const FamilySpec& spec, const ParamPoint& t);

// Witness pair for a focus of multiplicity >= 2: eta1(v) = 0 with nonzero
// image, eta2(v) in Im(eta1) with Im(eta2) != Im(eta1); nullopt iff the
// root is simple.
std::optional<std::pair<TangentHom, TangentHom>> multiplicity_witness(
    const FamilySpec& spec, const ParamPoint& t, const FiberPoint& focus,
    Sampler& sampler);

// A root of the focal divisor tracked as a function of the parameters.
struct FocusBranch {
  enum class Kind { rational_point, irrational_point, focal_line };
  Kind kind = Kind::rational_point;
  std::vector<MPoly> point;  // N+1 coords over `vars`
  VarList vars;              // params, plus a line parameter for focal_line,
                             // plus the root variable for irrational_point
  std::optional<FiberPoint> fiber_root;  // rational_point: constant root
  UPoly min_poly;                        // irrational_point: squarefree factor
  int multiplicity = 1;
};

struct BranchSet {
  MPoly symbolic_form;  // divisor over the joint universe (x-primitive part)
  std::vector<FocusBranch> branches;
  MPoly untracked;  // residual divisor factor whose roots vary with t
  bool complete = true;
  bool degenerate = false;  // all incidence minors vanish identically
};

BranchSet focus_branches(const FamilySpec& spec, Sampler& sampler);

// Divisor of the family over the joint (t, x) universe: gcd of the maximal
// minors of the incidence Jacobian, with the t-only content removed.
MPoly symbolic_focal_divisor(const FamilySpec& spec);

// Rank of the branch point map at the given values of the branch variables,
// minus one: 0 = fixed point, 1 = sweeps a curve, 2 = sweeps a surface.
// -1 when the rank is ambiguous across the conjugate roots of an
// irrational branch.
int focus_sweep_rank(const FocusBranch& branch, const RatVec& at);

struct TangencyReport {
  bool applicable = false;
  std::string reason;
  std::vector<bool> trial_pass;
  bool all_pass() const;
};

// Checks that the fiber cone is contained in the tangent space of the
// swept focal hypersurface at each focus (codimension-1 focal component
// required).
TangencyReport verify_focal_tangency(const FamilySpec& spec, int trials,
                                     Sampler& sampler);

// Coordinates of the characteristic-matrix columns in a basis of the fixed
// tangent space modulo the fiber: an n x n matrix of linear forms whose
// determinant cuts the focal divisor. nullopt when the tangent envelope is
// bigger than n+k (no fixed tangent space of the right size).
std::optional<PolyMatrix> reduced_focal_matrix(const FamilySpec& spec,
                                               const ParamPoint& t,
                                               Sampler& sampler);

FocalDivisor divisor_at(const FamilySpec& spec, const ParamPoint& t);

// Span-point recombination and ambient coordinate change, for the basis
// independence properties.
FamilySpec recombine_span(const FamilySpec& spec, const RatMatrix& m);
FamilySpec transform_ambient(const FamilySpec& spec, const RatMatrix& m);
RatMatrix random_invertible(std::size_t size, Sampler& sampler, long bound = 5);

}  // namespace focalkit
