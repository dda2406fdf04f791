#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sglab/addcomb.hpp"
#include "sglab/config.hpp"
#include "sglab/cubic_group.hpp"

namespace sglab {

struct ClassifierParams {
  int d = 3;                      // maximal degree of the fitted curve
  Rational delta = rat(1, 5);     // structure threshold
  Rational epsilon = rat(1, 20);  // fit-coverage threshold
  Rational significance;          // component cutoff; 0 means delta / (100 d)
  int max_m = 0;                  // subgroup search bound; 0 means 2 |A|
};

enum class VerdictKind { fermat_equivalent, ordinary_line, inconclusive };

const char* verdict_kind_name(VerdictKind k);

// Pipeline stages: 0 SG precheck, 1 curve fit, 2 component partition,
// 3 concurrency check, 4 group charts and coset recovery, 5 Fermat
// normalization, 6 tangent-line search.
struct StructureVerdict {
  VerdictKind kind = VerdictKind::inconclusive;
  int stage = 0;                              // stage at which the verdict settled
  std::optional<Curve> fitted;                // with the discovered component list
  std::vector<std::vector<size_t>> classes;   // significant component classes
  std::vector<GridStats> grids;               // per class, when the model applies
  std::vector<std::optional<CosetCertificate>> cosets;  // per class
  std::optional<ProjTransform> to_fermat;     // fermat_equivalent only
  unsigned m = 0;                             // fermat_equivalent only
  std::optional<ProjLine> ordinary;           // ordinary_line only
  std::string reason;                         // inconclusive only
};

// Searches for a concurrency point whose pencil covers the set with m lines,
// one of which carries more than m-2 points (the concurrency point itself
// not counted).  When such a point exists the set admits an ordinary line;
// the first one in canonical order is returned.  Declines with nullopt when
// no candidate satisfies the hypothesis.
std::optional<ProjLine> concurrent_lines_check(const Configuration& a);

// Number of distinct lines through p meeting the cubic in fewer than three
// distinct points, read off the pencil restriction exactly: the discriminant
// of the restricted binary cubic is a sextic in the pencil parameter, and
// deficient lines are its distinct roots (plus possibly the basis line at
// infinity).  The sample points are only validated to lie smoothly on the
// curve; the count itself needs no sampling.
long tangent_count(const Curve& c, const ProjPoint& p,
                   const std::vector<ProjPoint>& sample = {});

StructureVerdict classify(const Configuration& a, const ClassifierParams& params = {});

}  // namespace sglab
