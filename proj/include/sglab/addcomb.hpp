#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sglab/cubic_group.hpp"

namespace sglab {

struct CycNumLess {
  bool operator()(const CycNum& a, const CycNum& b) const { return CycNum::cmp(a, b) < 0; }
};
using ValueSet = std::set<CycNum, CycNumLess>;

struct CycPairLess {
  bool operator()(const std::pair<CycNum, CycNum>& a,
                  const std::pair<CycNum, CycNum>& b) const {
    int c = CycNum::cmp(a.first, b.first);
    return c != 0 ? c < 0 : CycNum::cmp(a.second, b.second) < 0;
  }
};
using ValuePairSet = std::set<std::pair<CycNum, CycNum>, CycPairLess>;

enum class GroupModel { additive, multiplicative };

// {a - b} in the additive model, {a / b} in the multiplicative one.
ValueSet scalar_difference_set(const ValueSet& a, GroupModel model);

struct GridStats {
  int set_size = 0;
  int diff_or_ratio_size = 0;
  Rational doubling_constant;  // diff_or_ratio_size / set_size, exact
  GroupModel group_kind = GroupModel::additive;
};

// Difference (or ratio) set of chart values: the model is read off the
// shared cubic kind of the elements.
ValueSet difference_set(const std::vector<GroupElement>& q);

struct GridVerdict {
  bool is_grid = false;
  GridStats stats;
};

// Verdict of |Q - Q| <= C |Q| with the exact sizes behind it.
GridVerdict grid_constant(const std::vector<GroupElement>& q, const Rational& c);

struct CosetCertificate {
  int m = 1;             // subgroup order: H_m = all m-th roots of unity
  CycNum lambda;         // coset representative, drawn from the input set
  long sym_diff = 0;     // |A symdiff lambda*H_m|, exact
};

// Best coset-of-roots-of-unity fit for A over all m <= max_m.  Ties go to
// the smaller sym_diff, then smaller m, then the identity if it is a
// candidate, then the coefficient order on the representative.  Returns
// nothing when even the best fit misses by more than |A|.
std::optional<CosetCertificate> recover_subgroup(const ValueSet& a, int max_m);

class MobiusMap {
 public:
  MobiusMap(CycNum a, CycNum b, CycNum c, CycNum d);  // requires ad - bc != 0
  // Value at x, or nothing when x is the pole.
  std::optional<CycNum> operator()(const CycNum& x) const;
  const CycNum& a() const { return a_; }
  const CycNum& b() const { return b_; }
  const CycNum& c() const { return c_; }
  const CycNum& d() const { return d_; }

 private:
  CycNum a_, b_, c_, d_;
};

// #{(x, y, psi) : y = psi(x)}; pole evaluations never count.  Two routes
// that must agree: per-map graph intersection, and the direct triple loop.
long mobius_incidences(const ValuePairSet& pairs, const std::vector<MobiusMap>& maps);
long mobius_incidences_naive(const ValuePairSet& pairs, const std::vector<MobiusMap>& maps);

enum class ExpansionMode { two_pt, one_pt, mixed };

struct ExpansionReport {
  ExpansionMode mode = ExpansionMode::two_pt;
  int set_size = 0;
  long size_a = 0;       // |A:A| (two-pt) or |A-A| (one-pt, mixed)
  long size_psi = 0;     // |psi(A):psi(A)| (two-pt, mixed) or |psi(A)-psi(A)|
  long max_size = 0;
  double normalized = 0.0;  // max_size / |A|^(1 + 1/40), a measurement only
};

const char* expansion_mode_name(ExpansionMode mode);

// Measures how psi expands A; never asserts a bound (the constants in the
// underlying growth estimates are not explicit).
ExpansionReport expansion_report(const ValueSet& a, const MobiusMap& psi, ExpansionMode mode);

}  // namespace sglab
