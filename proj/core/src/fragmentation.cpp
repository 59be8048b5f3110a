#include "graphsiege/fragmentation.hpp"

#include <algorithm>
#include <cmath>

namespace graphsiege {

FragmentProfile fragment_profile(const Graph& g) {
  FragmentProfile p;
  p.n = g.alive_count();
  for (const auto& comp : g.components()) p.sizes.push_back(comp.size());
  // components() already orders by size desc
  return p;
}

AjbStats ajb_stats(const FragmentProfile& profile) {
  if (profile.n == 0 || profile.sizes.empty()) throw EmptyProfileError();
  AjbStats st;
  st.n = profile.n;
  st.component_count = profile.sizes.size();
  st.lcc = *std::max_element(profile.sizes.begin(), profile.sizes.end());
  st.lcc_share = static_cast<double>(st.lcc) / static_cast<double>(st.n);
  if (st.component_count >= 2)
    st.mean_fragment = s_exact(st.n, st.lcc, st.component_count);
  return st;
}

std::string to_string(ConstraintId id) {
  switch (id) {
    case ConstraintId::LccRange: return "LCC";
    case ConstraintId::MRange: return "M";
    case ConstraintId::C1_FragmentMean: return "C1";
    case ConstraintId::C2_ShareRange: return "C2";
    case ConstraintId::C3_Singletons: return "C3";
    case ConstraintId::C4_HalfMax: return "C4";
    case ConstraintId::C5_JthMax: return "C5";
    case ConstraintId::C6_NearWhole: return "C6";
  }
  return "?";
}

std::vector<Violation> validate(const AjbStats& st) {
  std::vector<Violation> out;
  const auto n = st.n;
  const auto m = st.component_count;
  const auto lcc = st.lcc;

  if (lcc < 1 || lcc > n)
    out.push_back({ConstraintId::LccRange, "lcc outside [1, n]"});

  const std::size_t m_min = (lcc == n) ? 1 : 2;
  const std::size_t m_max = (lcc == n) ? 1 : 1 + (n - lcc);
  if ((m < m_min || m > m_max) && lcc != n - 1 && lcc != 1)
    out.push_back({ConstraintId::MRange, "m outside [m_min, m_max]"});

  if (st.mean_fragment && *st.mean_fragment > static_cast<double>(lcc) + 1e-9)
    out.push_back({ConstraintId::C1_FragmentMean, "mean fragment size exceeds lcc"});

  if (n > 0 &&
      (st.lcc_share < 1.0 / static_cast<double>(n) - 1e-9 || st.lcc_share > 1.0 + 1e-9))
    out.push_back({ConstraintId::C2_ShareRange, "S outside [1/n, 1]"});

  if ((lcc == 1 && m != n) || (m == n && lcc != 1 && n > 1))
    out.push_back({ConstraintId::C3_Singletons, "lcc = 1 and m = n must coincide"});

  if (n >= 2 && lcc == n - 1 && m != 2)
    out.push_back({ConstraintId::C6_NearWhole, "lcc = n-1 forces exactly 2 components"});

  return out;
}

double s_exact(std::size_t n, std::size_t lcc, std::size_t m) {
  if (m < 2) throw UndefinedError("mean fragment size needs at least 2 components");
  return static_cast<double>(n - lcc) / static_cast<double>(m - 1);
}

std::string to_string(MClass c) {
  switch (c) {
    case MClass::HalfN: return "n/2";
    case MClass::NOverJ: return "n/j";
    case MClass::NMinusOne: return "n-1";
    case MClass::N: return "n";
  }
  return "?";
}

std::string to_string(LccClass c) {
  switch (c) {
    case LccClass::One: return "1";
    case LccClass::HalfN: return "n/2";
    case LccClass::NOverJ: return "n/j";
    case LccClass::NMinusOne: return "n-1";
  }
  return "?";
}

double m_class_value(MClass c, std::size_t n, int j) {
  const double nd = static_cast<double>(n);
  switch (c) {
    case MClass::HalfN: return nd / 2.0;
    case MClass::NOverJ: return nd / j;
    case MClass::NMinusOne: return nd - 1.0;
    case MClass::N: return nd;
  }
  return 0;
}

double lcc_class_value(LccClass c, std::size_t n, int j) {
  const double nd = static_cast<double>(n);
  switch (c) {
    case LccClass::One: return 1.0;
    case LccClass::HalfN: return nd / 2.0;
    case LccClass::NOverJ: return nd / j;
    case LccClass::NMinusOne: return nd - 1.0;
  }
  return 0;
}

namespace {

double closed_form(const SApproxCase& c, std::size_t n) {
  const double nd = static_cast<double>(n);
  const double jd = static_cast<double>(c.j);
  switch (c.m_class) {
    case MClass::HalfN:
      switch (c.lcc_class) {
        case LccClass::One: return 2.0;
        case LccClass::HalfN: return 1.0;
        case LccClass::NOverJ: return 2.0 - 2.0 / jd;
        case LccClass::NMinusOne: return 2.0 / nd;
      }
      break;
    case MClass::NOverJ:
      switch (c.lcc_class) {
        case LccClass::One: return jd;
        case LccClass::HalfN: return jd / 2.0;
        case LccClass::NOverJ: return jd - 1.0;
        case LccClass::NMinusOne: return jd / nd;
      }
      break;
    case MClass::NMinusOne:
      switch (c.lcc_class) {
        case LccClass::One: return 1.0;
        case LccClass::HalfN: return 0.5;
        case LccClass::NOverJ: return 1.0 - 1.0 / jd;
        case LccClass::NMinusOne: return 1.0 / nd;
      }
      break;
    case MClass::N:
      switch (c.lcc_class) {
        case LccClass::One: return 1.0;  // (n-1)/(n-1), exact
        case LccClass::HalfN: return 0.5;
        case LccClass::NOverJ: return 1.0 - 1.0 / jd;
        case LccClass::NMinusOne: return 1.0 / nd;
      }
      break;
  }
  return 0;
}

void add_unique(std::vector<ConstraintId>& ids, ConstraintId id) {
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
}

}  // namespace

SApproxResult s_approx(const SApproxCase& c, std::size_t n) {
  if (c.j < 2) throw BadSpecError("class parameter j must be >= 2");
  if (n < 6) throw BadSpecError("class table needs n >= 6");

  const double nd = static_cast<double>(n);
  const double m_val = m_class_value(c.m_class, n, c.j);
  const double lcc_val = lcc_class_value(c.lcc_class, n, c.j);
  constexpr double eps = 1e-9;

  SApproxResult res;
  res.approx = closed_form(c, n);

  // the value the cell actually describes, for the s <= lcc check
  const double s_val = (nd - lcc_val) / (m_val - 1.0);
  if (s_val > lcc_val + eps) add_unique(res.violations, ConstraintId::C1_FragmentMean);

  const bool lcc_is_one = std::abs(lcc_val - 1.0) < eps;
  const bool m_is_n = std::abs(m_val - nd) < eps;
  if ((lcc_is_one && !m_is_n) || (m_is_n && !lcc_is_one))
    add_unique(res.violations, ConstraintId::C3_Singletons);

  if (c.lcc_class == LccClass::NMinusOne) {
    if (std::abs(m_val - 2.0) > eps) add_unique(res.violations, ConstraintId::C6_NearWhole);
  } else if (!lcc_is_one) {
    // a largest component of lcc plus singletons caps m at 1 + (n - lcc)
    const double m_max = 1.0 + (nd - lcc_val);
    if (m_val > m_max + eps) {
      add_unique(res.violations, c.lcc_class == LccClass::HalfN
                                     ? ConstraintId::C4_HalfMax
                                     : ConstraintId::C5_JthMax);
    }
  }
  return res;
}

MeanAggregates aggregates(double lcc_share, double mean_fragment, double beta) {
  if (lcc_share == 0.0) throw RatioUndefinedError();
  const double S = lcc_share;
  const double s = mean_fragment;
  MeanAggregates a;
  a.fscore = (S + s) > 0 ? 2.0 * S * s / (S + s) : 0.0;
  const double b2 = beta * beta;
  a.fscore_beta = (b2 * S + s) > 0 ? (1.0 + b2) * S * s / (b2 * S + s) : 0.0;
  a.arithmetic = (S + s) / 2.0;
  a.geometric = std::sqrt(S * s);
  a.quadratic = std::sqrt((S * S + s * s) / 2.0);
  a.ratio = s / S;
  a.share_pow_fragment = std::pow(S, s);
  a.fragment_pow_share = std::pow(s, S);
  return a;
}

FragmentListStats fragment_list_stats(const std::vector<std::size_t>& sizes) {
  FragmentListStats st;
  if (sizes.empty()) return st;
  const double k = static_cast<double>(sizes.size());

  std::vector<double> sorted(sizes.begin(), sizes.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  st.median = sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;

  double sum = 0, inv_sum = 0, log_sum = 0;
  for (double x : sorted) {
    sum += x;
    inv_sum += 1.0 / x;
    log_sum += std::log(x);
  }
  const double mean = sum / k;
  st.mean = mean;
  double sq = 0;
  for (double x : sorted) sq += (x - mean) * (x - mean);
  st.std_dev = std::sqrt(sq / k);
  st.harmonic_mean = k / inv_sum;
  st.geometric_mean = std::exp(log_sum / k);
  return st;
}

}  // namespace graphsiege
