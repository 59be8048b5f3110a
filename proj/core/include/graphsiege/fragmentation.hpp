#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphsiege/graph.hpp"

namespace graphsiege {

/// Multiset of component sizes of a graph, largest first.
struct FragmentProfile {
  std::size_t n = 0;                  // total alive vertices
  std::vector<std::size_t> sizes;     // descending, sums to n
};

FragmentProfile fragment_profile(const Graph& g);

/// Component statistics of a fragmented graph: count m, largest component,
/// the LCC share S = lcc/n, and the mean size s of the remaining fragments,
/// s = (n - lcc)/(m - 1), absent for connected graphs.
struct AjbStats {
  std::size_t n = 0;
  std::size_t component_count = 0;        // m
  std::size_t lcc = 0;
  double lcc_share = 0;                   // S
  std::optional<double> mean_fragment;    // s, present iff m >= 2
};

/// Throws EmptyProfileError when the profile has no vertices.
AjbStats ajb_stats(const FragmentProfile& profile);

/// Constraint ids for the (n, lcc, m, s) system. C1..C6 are the logical
/// constraints; LccRange / MRange are the arithmetic bounds
/// 1 <= lcc <= n and m_min <= m <= m_max.  A graph with one largest
/// component and everything else a singleton reaches m = 1 + (n - lcc),
/// so that is the m_max used for lcc < n.
enum class ConstraintId {
  LccRange,        // 1 <= lcc <= n
  MRange,          // m_min <= m <= m_max
  C1_FragmentMean, // s <= lcc
  C2_ShareRange,   // 1/n <= S <= 1
  C3_Singletons,   // lcc == 1  <=>  m == n
  C4_HalfMax,      // lcc == n/2  =>  m <= m_max
  C5_JthMax,       // lcc == n/j  =>  m <= m_max
  C6_NearWhole,    // lcc == n-1  =>  m == 2
};

std::string to_string(ConstraintId id);

struct Violation {
  ConstraintId id;
  std::string detail;
};

/// Empty result means the statistics describe a realizable graph.
std::vector<Violation> validate(const AjbStats& stats);

/// (n - lcc) / (m - 1). Throws UndefinedError when m < 2.
double s_exact(std::size_t n, std::size_t lcc, std::size_t m);

/// Symbolic classes for the asymptotic mean-fragment-size table.
enum class MClass { HalfN, NOverJ, NMinusOne, N };
enum class LccClass { One, HalfN, NOverJ, NMinusOne };

std::string to_string(MClass c);
std::string to_string(LccClass c);

struct SApproxCase {
  MClass m_class;
  LccClass lcc_class;
  int j = 2;  // only read by the NOverJ classes; must be >= 2
};

/// Closed-form asymptotic for one (m, lcc) class cell, together with the
/// constraint violations that make the cell unrealizable (if any). The
/// closed form is evaluated even for flagged cells.
struct SApproxResult {
  double approx = 0;
  std::vector<ConstraintId> violations;
  bool feasible() const { return violations.empty(); }
};

SApproxResult s_approx(const SApproxCase& c, std::size_t n);

/// m and lcc class values instantiated at a concrete n (real division).
double m_class_value(MClass c, std::size_t n, int j);
double lcc_class_value(LccClass c, std::size_t n, int j);

/// The two-value means and related combinations of the LCC share S and
/// the mean fragment size s. Throws RatioUndefinedError when S = 0.
struct MeanAggregates {
  double fscore = 0;          // 2Ss/(S+s), 0 when S+s = 0
  double fscore_beta = 0;     // (1+b^2)Ss/(b^2 S + s)
  double arithmetic = 0;
  double geometric = 0;
  double quadratic = 0;
  double ratio = 0;           // s/S
  double share_pow_fragment = 0;  // S^s
  double fragment_pow_share = 0;  // s^S
};

MeanAggregates aggregates(double lcc_share, double mean_fragment, double beta = 1.0);

/// Summary statistics of the non-LCC fragment sizes; every field is absent
/// for an empty list (connected graph).
struct FragmentListStats {
  std::optional<double> median;
  std::optional<double> mean;
  std::optional<double> std_dev;       // population
  std::optional<double> harmonic_mean;
  std::optional<double> geometric_mean;
};

FragmentListStats fragment_list_stats(const std::vector<std::size_t>& sizes);

}  // namespace graphsiege
