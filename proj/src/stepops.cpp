#include "nltrace/stepops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "nltrace/errors.hpp"

namespace nltrace {

namespace {

constexpr double kCapSlack = 1e-12;
constexpr double kBoundaryTol = 1e-13;
constexpr std::size_t kSubsetLimit = 12;

void require_continuous(const ContinuousWeight& w, const char* op) {
  if (!w.is_continuous())
    throw HypothesisError(std::string(op) + " needs a continuous weight");
}

// Indices of the segments sorted by value descending, ties in input order.
std::vector<std::size_t> value_order(const std::vector<Segment>& s) {
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return s[i].value > s[j].value;
  });
  return idx;
}

std::vector<double> cumulative_ends(const std::vector<Segment>& s) {
  std::vector<double> ends;
  ends.reserve(s.size());
  double t = 0.0;
  for (const auto& seg : s) ends.push_back(t += seg.mass);
  return ends;
}

}  // namespace

// ---------------------------------------------------------------------------
// StepOperator

StepOperator::StepOperator(std::vector<Segment> segments,
                           std::optional<double> cap)
    : segs_(std::move(segments)), cap_(cap) {
  for (const auto& s : segs_) {
    if (!std::isfinite(s.value) || !std::isfinite(s.mass))
      throw InputError("step operator has non-finite entries");
    if (s.value < 0.0) throw InputError("step operator values must be >= 0");
    if (!(s.mass > 0.0)) throw InputError("step operator masses must be > 0");
  }
  if (cap_) {
    if (!std::isfinite(*cap_) || !(*cap_ > 0.0))
      throw InputError("step operator mass cap must be > 0");
    if (total_mass() > *cap_ * (1.0 + kCapSlack))
      throw InputError("step operator total mass exceeds its cap");
  }
}

StepOperator StepOperator::projection(double mass, double value,
                                      std::optional<double> cap) {
  return StepOperator({{value, mass}}, cap);
}

double StepOperator::total_mass() const noexcept {
  double t = 0.0;
  for (const auto& s : segs_) t += s.mass;
  return t;
}

double StepOperator::max_value() const noexcept {
  double m = 0.0;
  for (const auto& s : segs_) m = std::max(m, s.value);
  return m;
}

StepOperator StepOperator::map_values(
    const std::function<double(double)>& f) const {
  std::vector<Segment> out = segs_;
  for (auto& s : out) s.value = f(s.value);
  return StepOperator(std::move(out), cap_);
}

// ---------------------------------------------------------------------------
// Rearrangement

double RearrangedSpectrum::at(double t) const {
  if (std::isnan(t) || t < 0.0) throw DomainError("lambda_t needs t >= 0");
  const auto it = std::upper_bound(
      plateaus.begin(), plateaus.end(), t,
      [](double x, const Plateau& p) { return x < p.end; });
  return it == plateaus.end() ? 0.0 : it->value;
}

RearrangedSpectrum rearrange(const StepOperator& a) {
  const auto& s = a.segments();
  RearrangedSpectrum r;
  double t = 0.0;
  for (std::size_t i : value_order(s)) {
    const auto& seg = s[i];
    if (seg.value == 0.0) break;  // zeros sort last and carry no spectrum
    t += seg.mass;
    if (!r.plateaus.empty() && r.plateaus.back().value == seg.value) {
      r.plateaus.back().width += seg.mass;
      r.plateaus.back().end = t;
    } else {
      r.plateaus.push_back({seg.value, seg.mass, t});
    }
  }
  return r;
}

double lambda_t(const StepOperator& a, double t) { return rearrange(a).at(t); }

// ---------------------------------------------------------------------------
// Sums

std::vector<Segment> add_segments(const std::vector<Segment>& a,
                                  const std::vector<Segment>& b) {
  const auto ea = cumulative_ends(a);
  const auto eb = cumulative_ends(b);
  std::vector<double> pts;
  pts.reserve(ea.size() + eb.size());
  std::merge(ea.begin(), ea.end(), eb.begin(), eb.end(),
             std::back_inserter(pts));
  const double total = pts.empty() ? 0.0 : pts.back();
  const double tol = kBoundaryTol * std::max(1.0, total);

  std::vector<double> cuts;  // refined right ends
  for (double p : pts) {
    const double last = cuts.empty() ? 0.0 : cuts.back();
    if (p - last > tol) cuts.push_back(p);
    else if (!cuts.empty()) cuts.back() = std::max(cuts.back(), p);
  }

  std::vector<Segment> out;
  out.reserve(cuts.size());
  std::size_t ia = 0, ib = 0;
  double left = 0.0;
  for (double right : cuts) {
    const double mid = 0.5 * (left + right);
    while (ia < ea.size() && ea[ia] <= mid) ++ia;
    while (ib < eb.size() && eb[ib] <= mid) ++ib;
    const double va = ia < a.size() ? a[ia].value : 0.0;
    const double vb = ib < b.size() ? b[ib].value : 0.0;
    out.push_back({va + vb, right - left});
    left = right;
  }
  return out;
}

StepOperator add(const StepOperator& a, const StepOperator& b) {
  std::optional<double> cap;
  if (a.cap() || b.cap())
    cap = std::max(a.cap().value_or(0.0), b.cap().value_or(0.0));
  return StepOperator(add_segments(a.segments(), b.segments()), cap);
}

// ---------------------------------------------------------------------------
// Choquet type

double choquet_spectral(const StepOperator& a, const ContinuousWeight& w) {
  const auto r = rearrange(a);
  const auto& p = r.plateaus;
  double phi = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double next = i + 1 < p.size() ? p[i + 1].value : 0.0;
    phi += (p[i].value - next) * w.eval(p[i].end);
  }
  return phi;
}

double choquet_stieltjes(const StepOperator& a, const ContinuousWeight& w) {
  const auto r = rearrange(a);
  double phi = 0.0;
  double start = 0.0;
  for (const auto& p : r.plateaus) {
    phi += p.value * stieltjes_mass(w, start, p.end);
    start = p.end;
  }
  return phi;
}

double lorentz_norm(const StepOperator& a, const ContinuousWeight& w) {
  if (!is_concave(w)) throw HypothesisError("lorentz_norm needs a concave weight");
  return choquet_stieltjes(a.map_values([](double v) { return std::abs(v); }), w);
}

double lorentz_norm(const std::vector<Segment>& signed_segments,
                    const ContinuousWeight& w) {
  std::vector<Segment> abs_segments = signed_segments;
  for (auto& s : abs_segments) s.value = std::abs(s.value);
  return lorentz_norm(StepOperator(std::move(abs_segments)), w);
}

double partition_approx(const StepOperator& a, const ContinuousWeight& w,
                        std::size_t M) {
  if (M == 0) throw DomainError("partition_approx needs M >= 1");
  require_continuous(w, "partition_approx");
  if (a.total_mass() > 1.0 + kCapSlack)
    throw DomainError("partition_approx needs total mass <= 1");
  const auto r = rearrange(a);
  const auto& p = r.plateaus;
  const double m = static_cast<double>(M);
  double sum = 0.0;
  double prev = 0.0;  // alpha((i-1)/M)
  std::size_t k = 0;
  for (std::size_t i = 1; i <= M; ++i) {
    const double t = static_cast<double>(i - 1) / m;
    while (k < p.size() && p[k].end <= t) ++k;
    if (k == p.size()) break;  // lambda vanishes from here on
    const double cur = w.eval(static_cast<double>(i) / m);
    sum += p[k].value * (cur - prev);
    prev = cur;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Sugeno type

double sugeno_trace_step(const StepOperator& a, const ContinuousWeight& w) {
  require_continuous(w, "sugeno_trace_step");
  const auto r = rearrange(a);
  const auto& p = r.plateaus;
  // For s in [v_{k+1}, v_k) the mass above s is T_k, so min(s, alpha(T_k)) is
  // non-decreasing on the gap and its supremum is min(v_k, alpha(T_k)). The
  // crossing of s with alpha(T_k), if any, lies inside the gap and is
  // dominated by that endpoint. Above v_1 the mass is 0.
  double psi = 0.0;
  for (const auto& pl : p) psi = std::max(psi, std::min(pl.value, w.eval(pl.end)));
  return psi;
}

double max_type_value(const StepOperator& a, const ContinuousWeight& w) {
  require_continuous(w, "max_type_value");
  const auto& s = a.segments();
  const auto order = value_order(s);
  double best = 0.0;
  if (s.size() <= kSubsetLimit) {
    // Masses are summed in value order so that a prefix reproduces the
    // cumulative ends of rearrange bit for bit.
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      double mass = 0.0;
      double lo = 0.0;
      bool first = true;
      for (std::size_t i : order) {
        if (!(mask >> i & 1U)) continue;
        mass += s[i].mass;
        lo = first ? s[i].value : std::min(lo, s[i].value);
        first = false;
      }
      best = std::max(best, std::min(lo, w.eval(mass)));
    }
    return best;
  }
  double mass = 0.0;
  for (std::size_t i : order) {
    mass += s[i].mass;
    best = std::max(best, std::min(s[i].value, w.eval(mass)));
  }
  return best;
}

MinWitness min_witness(const StepOperator& a, const ContinuousWeight& w,
                       double eps) {
  if (!std::isfinite(eps) || !(eps > 0.0))
    throw DomainError("min_witness needs eps > 0");
  const double psi = sugeno_trace_step(a, w);
  const double level = psi + eps;
  const auto& s = a.segments();
  double q = 0.0;
  double rest_max = 0.0;
  for (std::size_t i : value_order(s)) {
    if (s[i].value > level) q += s[i].mass;
    else rest_max = std::max(rest_max, s[i].value);
  }
  const double alpha_q = w.eval(q);

  MinWitness out;
  out.mass = q;
  auto& r = out.checks;
  r.suite = "min_witness";
  r.metric = "slack";
  r.trials = 1;
  r.worst = level - alpha_q;
  r.passed = alpha_q < level && rest_max <= level;
  r.witness = Json{{"psi", psi}, {"eps", eps}, {"q_mass", q},
                   {"alpha_q", alpha_q}, {"rest_max", rest_max}};
  return out;
}

}  // namespace nltrace
