#include "meridian/numerics.hpp"

#include <algorithm>
#include <cstdio>

namespace meridian {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonPositiveRadius: return "NonPositiveRadius";
    case Err::DegenerateCurve: return "DegenerateCurve";
    case Err::OutOfDomain: return "OutOfDomain";
    case Err::StepTooLarge: return "StepTooLarge";
    case Err::ZeroArgument: return "ZeroArgument";
    case Err::AtZeroOfPrime: return "AtZeroOfPrime";
    case Err::CoincidentPoints: return "CoincidentPoints";
    case Err::OutOfWindow: return "OutOfWindow";
    case Err::NonPositiveProfile: return "NonPositiveProfile";
    case Err::DivergentArea: return "DivergentArea";
    case Err::NonHolomorphic: return "NonHolomorphic";
    case Err::DivergentConvolution: return "DivergentConvolution";
    case Err::BaseAtSingularPoint: return "BaseAtSingularPoint";
    case Err::AccuracyDegraded: return "AccuracyDegraded";
    case Err::UnsupportedShear: return "UnsupportedShear";
    case Err::InvalidSpec: return "InvalidSpec";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace meridian

namespace meridian::num {

// ------------------------------------------------------------------ quadrature

namespace {

// Gauss 7 / Kronrod 15 nodes and weights (positive half).
const double gk_x[8] = {0.0,
                        0.4058451513773971669066064,
                        0.7415311855993944398638648,
                        0.9491079123427585245261897,
                        0.2077849550078984676006894,
                        0.5860872354676911302941448,
                        0.8648644233597690727897128,
                        0.9914553711208126392068547};
const double gk_wg[4] = {0.4179591836734693877551020, 0.3818300505051189449503698,
                         0.2797053914892766679014678, 0.1294849661688696932706114};
const double gk_wk[8] = {0.2094821410847278280129992, 0.1903505780647854099132564,
                         0.1406532597155259187451896, 0.0630920926299785532907007,
                         0.2044329400752988924141620, 0.1690047266392679028265834,
                         0.1047900103222501838398763, 0.0229353220105292249637320};

struct Seg {
  double a, b, val, err;
};

Seg eval_gk(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double f0 = f(c);
  double g = gk_wg[0] * f0;
  double k = gk_wk[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * gk_x[i];
    const double s = f(c + dx) + f(c - dx);
    k += gk_wk[i] * s;
    if (i < 4) g += gk_wg[i] * s;
  }
  g *= h;
  k *= h;
  const double e = 200.0 * std::abs(g - k);
  return {a, b, k, (e < 1.0 ? e * std::sqrt(e) : e) + 1e-300};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_intervals) {
  if (a == b) return {0.0, 0.0, true};
  std::vector<Seg> heap;
  heap.push_back(eval_gk(f, a, b));
  auto cmp = [](const Seg& l, const Seg& r) { return l.err < r.err; };
  int evals = 1;
  while (evals < max_intervals) {
    double total_err = 0.0;
    for (const auto& s : heap) total_err += s.err;
    if (total_err <= abs_tol) break;
    std::pop_heap(heap.begin(), heap.end(), cmp);
    Seg worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted in doubles
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), cmp);
      break;
    }
    heap.push_back(eval_gk(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back(eval_gk(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), cmp);
    evals += 2;
  }
  QuadResult r;
  for (const auto& s : heap) {
    r.value += s.val;
    r.error += s.err;
  }
  r.converged = r.error <= std::max(abs_tol, 1e-14 * std::abs(r.value));
  return r;
}

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  QuadResult r = integrate_adaptive(f, a, b, abs_tol);
  if (!r.converged) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "integral did not settle: partial=%.17g err=%.3g", r.value,
                  r.error);
    fail(Err::DivergentArea, buf);
  }
  return r.value;
}

QuadResult integrate_tail_up(const std::function<double(double)>& f, double a, double abs_tol) {
  // x = a + atanh(u), dx = du/(1-u^2), u in [0,1)
  auto g = [&](double u) {
    const double x = a + std::atanh(u);
    return f(x) / (1.0 - u * u);
  };
  return integrate_adaptive(g, 0.0, 1.0 - 1e-12, abs_tol);
}

QuadResult integrate_tail_down(const std::function<double(double)>& f, double a, double abs_tol) {
  auto g = [&](double u) {
    const double x = a - std::atanh(u);
    return f(x) / (1.0 - u * u);
  };
  return integrate_adaptive(g, 0.0, 1.0 - 1e-12, abs_tol);
}

// --------------------------------------------------------------------- spline

CubicSpline CubicSpline::build(std::vector<double> x, std::vector<double> y, bool periodic) {
  const std::size_t n = x.size();
  if (n < 3 || y.size() != n) fail(Err::InvalidSpec, "spline needs >= 3 samples");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x[i] > x[i - 1])) fail(Err::InvalidSpec, "spline abscissae must increase");

  CubicSpline s;
  s.x_ = std::move(x);
  s.y_ = std::move(y);
  s.periodic_ = periodic;
  s.m_.assign(n, 0.0);

  const auto& X = s.x_;
  const auto& Y = s.y_;
  auto h = [&](std::size_t i) { return X[i + 1] - X[i]; };
  auto slope = [&](std::size_t i) { return (Y[i + 1] - Y[i]) / h(i); };

  if (!periodic) {
    // not-a-knot: tridiagonal in m_1..m_{n-2} plus end conditions eliminating m_0, m_{n-1}
    // Following the standard formulation with third-derivative continuity at x_1, x_{n-2}.
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
    b[0] = h(1);
    c[0] = X[2] - X[0];
    d[0] = ((h(0) + 2.0 * c[0]) * h(1) * slope(0) + h(0) * h(0) * slope(1)) / c[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      a[i] = h(i);
      b[i] = 2.0 * (h(i - 1) + h(i));
      c[i] = h(i - 1);
      d[i] = 3.0 * (h(i) * slope(i - 1) + h(i - 1) * slope(i));
    }
    a[n - 1] = X[n - 1] - X[n - 3];
    b[n - 1] = h(n - 3);
    d[n - 1] = (h(n - 2) * h(n - 2) * slope(n - 3) +
                (2.0 * a[n - 1] + h(n - 2)) * h(n - 3) * slope(n - 2)) /
               a[n - 1];
    // Solve for first derivatives t_i (Thomas), then convert to second derivatives.
    std::vector<double> t(n);
    for (std::size_t i = 1; i < n; ++i) {
      const double w = a[i] / b[i - 1];
      b[i] -= w * c[i - 1];
      d[i] -= w * d[i - 1];
    }
    t[n - 1] = d[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) t[i] = (d[i] - c[i] * t[i + 1]) / b[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double hi = h(i), sl = slope(i);
      s.m_[i] = (6.0 * sl - 4.0 * t[i] - 2.0 * t[i + 1]) / hi;
    }
    {
      const double hi = h(n - 2), sl = slope(n - 2);
      s.m_[n - 1] = (-6.0 * sl + 2.0 * t[n - 2] + 4.0 * t[n - 1]) / hi;
    }
  } else {
    // periodic: y[0]==y[n-1] assumed; unknowns m_0..m_{n-2} cyclic tridiagonal
    if (std::abs(Y.front() - Y.back()) > 1e-9 * (1.0 + std::abs(Y.front())))
      fail(Err::InvalidSpec, "periodic spline endpoints disagree");
    const std::size_t m = n - 1;
    std::vector<double> A(m, 0.0), B(m, 0.0), C(m, 0.0), D(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t im = (i + m - 1) % m;
      const double hi = h(i), him = h(im);
      A[i] = him;
      B[i] = 2.0 * (him + hi);
      C[i] = hi;
      const double sl_i = slope(i);
      const double sl_im = slope(im);
      D[i] = 6.0 * (sl_i - sl_im);
    }
    // Sherman-Morrison for the cyclic system; corners: beta = A[0] (row 0 couples
    // to M_{m-1}), alpha = C[m-1] (last row couples to M_0).
    const double gamma = -B[0];
    std::vector<double> Bm = B;
    Bm[0] -= gamma;
    Bm[m - 1] -= C[m - 1] * A[0] / gamma;
    auto thomas = [&](std::vector<double> rhs) {
      std::vector<double> bb = Bm, dd = std::move(rhs);
      for (std::size_t i = 1; i < m; ++i) {
        const double w = A[i] / bb[i - 1];
        bb[i] -= w * C[i - 1];
        dd[i] -= w * dd[i - 1];
      }
      std::vector<double> sol(m);
      sol[m - 1] = dd[m - 1] / bb[m - 1];
      for (std::size_t i = m - 1; i-- > 0;) sol[i] = (dd[i] - C[i] * sol[i + 1]) / bb[i];
      return sol;
    };
    // Note: the cyclic coupling uses A[0] (first row) and C[m-1] (last row).
    std::vector<double> rhs_u(m, 0.0);
    rhs_u[0] = gamma;
    rhs_u[m - 1] = C[m - 1];
    std::vector<double> y1 = thomas(D);
    std::vector<double> y2 = thomas(rhs_u);
    const double fact =
        (y1[0] + A[0] * y1[m - 1] / gamma) / (1.0 + y2[0] + A[0] * y2[m - 1] / gamma);
    for (std::size_t i = 0; i < m; ++i) s.m_[i] = y1[i] - fact * y2[i];
    s.m_[n - 1] = s.m_[0];
  }
  return s;
}

int CubicSpline::locate(double& x) const {
  if (periodic_) {
    const double period = x_.back() - x_.front();
    x = x_.front() + std::fmod(x - x_.front(), period);
    if (x < x_.front()) x += period;
  } else {
    x = std::clamp(x, x_.front(), x_.back());
  }
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  int i = int(it - x_.begin()) - 1;
  return std::clamp(i, 0, int(x_.size()) - 2);
}

double CubicSpline::value(double x) const {
  const int i = locate(x);
  const double h = x_[i + 1] - x_[i], A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
  return A * y_[i] + B * y_[i + 1] +
         ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::deriv(double x) const {
  const int i = locate(x);
  const double h = x_[i + 1] - x_[i], A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h +
         ((3.0 * B * B - 1.0) * m_[i + 1] - (3.0 * A * A - 1.0) * m_[i]) * h / 6.0;
}

double CubicSpline::deriv2(double x) const {
  const int i = locate(x);
  const double h = x_[i + 1] - x_[i], A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
  return A * m_[i] + B * m_[i + 1];
}

// ---------------------------------------------------------------------- Func1

struct Func1::Impl {
  std::function<double(double)> f, d1, d2;
  CubicSpline spline;
  bool use_spline = false;
  double lo = 0.0, hi = 0.0;
};

Func1 Func1::closed_form(std::function<double(double)> f, std::function<double(double)> d1,
                         std::function<double(double)> d2, double lo, double hi) {
  auto impl = std::make_shared<Impl>();
  impl->f = std::move(f);
  impl->d1 = std::move(d1);
  impl->d2 = std::move(d2);
  impl->lo = lo;
  impl->hi = hi;
  Func1 out;
  out.impl_ = std::move(impl);
  return out;
}

Func1 Func1::from_samples(const std::vector<double>& x, const std::vector<double>& y,
                          bool periodic) {
  auto impl = std::make_shared<Impl>();
  impl->spline = CubicSpline::build(x, y, periodic);
  impl->use_spline = true;
  impl->lo = x.front();
  impl->hi = x.back();
  Func1 out;
  out.impl_ = std::move(impl);
  return out;
}

double Func1::value(double x) const { return impl_->use_spline ? impl_->spline.value(x) : impl_->f(x); }
double Func1::deriv(double x) const { return impl_->use_spline ? impl_->spline.deriv(x) : impl_->d1(x); }
double Func1::deriv2(double x) const { return impl_->use_spline ? impl_->spline.deriv2(x) : impl_->d2(x); }
double Func1::lo() const { return impl_->lo; }
double Func1::hi() const { return impl_->hi; }

// ---------------------------------------------------------------- MonotoneMap

namespace {

struct March {
  std::vector<double> xs, ss;  // increments from the base, excluding the base node
  bool hit_end = false;
};

// March upward from s0 in uniform x-steps hx (partial final step at a domain
// end). Brackets each step by interval doubling with composite accumulation so
// domains stretching over many decades keep full quadrature accuracy.
March march_up(const std::function<double(double)>& g, double s0, double s_cap, double hx,
               double x_target) {
  March out;
  double s = s0, x = 0.0;
  auto near_cap = [&](double b) {
    return (s_cap - b) <= 1e-15 * std::max(1.0, std::abs(s_cap));
  };
  const double x_stop = x_target - 1e-12 * std::max(1.0, std::abs(x_target));
  while (x < x_stop && !near_cap(s)) {
    const double want = std::min(hx, x_target - x);
    double a = s, Qa = 0.0;
    double len = want / std::max(g(s), 1e-300);
    if (!std::isfinite(len) || len <= 0.0) len = 1e-8;
    double b = std::min(s + len, s_cap);
    double Qb = Qa + gauss12(g, a, b);
    bool hit = false;
    int guard = 0;
    while (Qb < want) {
      if (near_cap(b) || ++guard > 2000) {
        hit = true;
        break;
      }
      a = b;
      Qa = Qb;
      // double the stride but close on the cap geometrically, so a possible
      // boundary layer at the cap is resolved instead of stepped over
      const double grow = std::min(2.0 * (b - s) + 1e-300, 0.5 * (s_cap - b));
      b = (grow > 0.0) ? std::min(b + grow, s_cap) : s_cap;
      Qb = Qa + gauss12(g, a, b);
    }
    if (hit) {
      const double got = Qa + integrate_adaptive(g, a, s_cap, 1e-13).value;
      if (got > 1e-307) {
        out.xs.push_back(x + got);
        out.ss.push_back(s_cap);
      }
      out.hit_end = true;
      return out;
    }
    // root of Qa + int_a^t g = want inside [a, b]
    auto F = [&](double t) { return Qa + gauss12(g, a, t) - want; };
    double t = brent(F, a, b, 1e-15);
    for (int it = 0; it < 3; ++it) {
      const double r = Qa + gauss12(g, a, t) - want;
      const double gt = g(t);
      if (!(gt > 0.0)) break;
      t = std::clamp(t - r / gt, a, b);
    }
    x += want;
    s = t;
    out.xs.push_back(x);
    out.ss.push_back(s);
  }
  if (near_cap(s)) out.hit_end = true;
  return out;
}

}  // namespace

MonotoneMap MonotoneMap::build(std::function<double(double)> g, double s_base, double s_min,
                               double s_max, double hx, double x_lo_target, double x_hi_target) {
  if (!(s_min <= s_base && s_base <= s_max)) fail(Err::OutOfDomain, "map base outside domain");
  if (!(hx > 0.0)) fail(Err::InvalidSpec, "map step must be positive");
  MonotoneMap map;
  map.g_ = g;

  const March up = march_up(map.g_, s_base, s_max, hx, x_hi_target);
  auto gm = [g](double u) { return g(-u); };
  const March dn = march_up(gm, -s_base, -s_min, hx, x_lo_target);
  map.hit_hi_ = up.hit_end;
  map.hit_lo_ = dn.hit_end;

  map.xs_.reserve(dn.xs.size() + up.xs.size() + 1);
  map.ss_.reserve(dn.xs.size() + up.xs.size() + 1);
  for (std::size_t k = dn.xs.size(); k-- > 0;) {
    map.xs_.push_back(-dn.xs[k]);
    map.ss_.push_back(-dn.ss[k]);
  }
  map.xs_.push_back(0.0);
  map.ss_.push_back(s_base);
  for (std::size_t k = 0; k < up.xs.size(); ++k) {
    map.xs_.push_back(up.xs[k]);
    map.ss_.push_back(up.ss[k]);
  }
  if (map.xs_.size() < 2) fail(Err::OutOfDomain, "monotone map did not advance");
  return map;
}

namespace {

// wide intervals appear only as the final partial step toward a stretched
// domain end; plain gauss12 is not trustworthy across decades
bool wide_interval(double a, double b) { return (b - a) > 4.0 * std::max(1.0, std::abs(a)); }

double segment_integral(const std::function<double(double)>& g, double a, double b) {
  if (b <= a) return 0.0;
  if (!wide_interval(a, b)) return gauss12(g, a, b);
  return integrate_adaptive(g, a, b, 1e-13).value;
}

}  // namespace

double MonotoneMap::x_of_s(double s) const {
  if (s < ss_.front() - 1e-12 || s > ss_.back() + 1e-12)
    fail(Err::OutOfWindow, "s outside monotone map coverage");
  s = std::clamp(s, ss_.front(), ss_.back());
  auto it = std::upper_bound(ss_.begin(), ss_.end(), s);
  std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - ss_.begin() - 1, 0),
                                        ss_.size() - 2);
  return xs_[i] + segment_integral(g_, ss_[i], s);
}

double MonotoneMap::s_of_x(double x) const {
  if (x < xs_.front() - 1e-12 || x > xs_.back() + 1e-12)
    fail(Err::OutOfWindow, "x outside monotone map coverage");
  x = std::clamp(x, xs_.front(), xs_.back());
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - xs_.begin() - 1, 0),
                                        xs_.size() - 2);
  const double target = x - xs_[i];
  double s = ss_[i];
  const double s_hi = ss_[i + 1];
  // Newton with quadrature residual; bracket is [ss_[i], ss_[i+1]]
  double lo = ss_[i], hi = s_hi;
  s = std::min(s_hi, s + target / std::max(g_(s), 1e-300));
  for (int it2 = 0; it2 < 60; ++it2) {
    const double r = segment_integral(g_, ss_[i], s) - target;
    if (std::abs(r) < 1e-15 * (1.0 + std::abs(target))) break;
    if (r > 0)
      hi = s;
    else
      lo = s;
    const double gs = g_(s);
    double cand = s - r / std::max(gs, 1e-300);
    if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
    if (cand == s) break;
    s = cand;
  }
  return s;
}

// --------------------------------------------------------------- HermiteTable

HermiteTable HermiteTable::build(double x0, double h, std::vector<double> v,
                                 std::vector<double> d1, std::vector<double> d2) {
  if (v.size() < 2 || v.size() != d1.size() || v.size() != d2.size())
    fail(Err::InvalidSpec, "hermite table needs matched node arrays");
  if (!(h > 0.0)) fail(Err::InvalidSpec, "hermite table step must be positive");
  HermiteTable t;
  t.x0_ = x0;
  t.h_ = h;
  t.v_ = std::move(v);
  t.d1_ = std::move(d1);
  t.d2_ = std::move(d2);
  return t;
}

void HermiteTable::locate(double x, int& i, double& u) const {
  const double t = (x - x0_) / h_;
  i = std::clamp(int(std::floor(t)), 0, int(v_.size()) - 2);
  u = t - double(i);
}

double HermiteTable::value(double x) const {
  int i;
  double u;
  locate(x, i, u);
  const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
  const double H0 = 1.0 - 10.0 * u3 + 15.0 * u4 - 6.0 * u5;
  const double H1 = u - 6.0 * u3 + 8.0 * u4 - 3.0 * u5;
  const double H2 = 0.5 * u2 - 1.5 * u3 + 1.5 * u4 - 0.5 * u5;
  const double H3 = 10.0 * u3 - 15.0 * u4 + 6.0 * u5;
  const double H4 = -4.0 * u3 + 7.0 * u4 - 3.0 * u5;
  const double H5 = 0.5 * u3 - u4 + 0.5 * u5;
  return v_[i] * H0 + d1_[i] * h_ * H1 + d2_[i] * h_ * h_ * H2 + v_[i + 1] * H3 +
         d1_[i + 1] * h_ * H4 + d2_[i + 1] * h_ * h_ * H5;
}

double HermiteTable::deriv(double x) const {
  int i;
  double u;
  locate(x, i, u);
  const double u2 = u * u, u3 = u2 * u, u4 = u3 * u;
  const double G0 = -30.0 * u2 + 60.0 * u3 - 30.0 * u4;
  const double G1 = 1.0 - 18.0 * u2 + 32.0 * u3 - 15.0 * u4;
  const double G2 = u - 4.5 * u2 + 6.0 * u3 - 2.5 * u4;
  const double G3 = 30.0 * u2 - 60.0 * u3 + 30.0 * u4;
  const double G4 = -12.0 * u2 + 28.0 * u3 - 15.0 * u4;
  const double G5 = 1.5 * u2 - 4.0 * u3 + 2.5 * u4;
  return (v_[i] * G0 + d1_[i] * h_ * G1 + d2_[i] * h_ * h_ * G2 + v_[i + 1] * G3 +
          d1_[i + 1] * h_ * G4 + d2_[i + 1] * h_ * h_ * G5) /
         h_;
}

double HermiteTable::deriv2(double x) const {
  int i;
  double u;
  locate(x, i, u);
  const double u2 = u * u, u3 = u2 * u;
  const double F0 = -60.0 * u + 180.0 * u2 - 120.0 * u3;
  const double F1 = -36.0 * u + 96.0 * u2 - 60.0 * u3;
  const double F2 = 1.0 - 9.0 * u + 18.0 * u2 - 10.0 * u3;
  const double F3 = 60.0 * u - 180.0 * u2 + 120.0 * u3;
  const double F4 = -24.0 * u + 84.0 * u2 - 60.0 * u3;
  const double F5 = 3.0 * u - 12.0 * u2 + 10.0 * u3;
  return (v_[i] * F0 + d1_[i] * h_ * F1 + d2_[i] * h_ * h_ * F2 + v_[i + 1] * F3 +
          d1_[i + 1] * h_ * F4 + d2_[i + 1] * h_ * h_ * F5) /
         (h_ * h_);
}

// ------------------------------------------------------------------- rootfind

double brent(const std::function<double(double)>& f, double a, double b, double tol,
             int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) fail(Err::OutOfDomain, "brent: root not bracketed");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

// ------------------------------------------------------------------------ rng

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform(double a, double b) {
  const double u = double(next() >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

}  // namespace meridian::num
