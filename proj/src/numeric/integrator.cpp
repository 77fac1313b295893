#include "hardy/numeric/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/error.hpp"

namespace hardy::numeric {

namespace {

// Dormand–Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

// PI step-size control constants (Hairer–Wanner).
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - 0.75 * kBeta;
constexpr double kSafety = 0.9;
constexpr double kMaxShrink = 5.0;  // h_new >= h / 5
constexpr double kMaxGrow = 10.0;   // h_new <= 10 h

int sign_of(double v) { return (v > 0) - (v < 0); }

}  // namespace

double hermite(const Sample& a, const Sample& b, double t) {
  const double h = b.t - a.t;
  const double s = (t - a.t) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * a.y + (s3 - 2 * s2 + s) * h * a.yp + (-2 * s3 + 3 * s2) * b.y +
         (s3 - s2) * h * b.yp;
}

OdeStepper::OdeStepper(const Evaluator& q, double t0, std::vector<InitialValue> init, StepperOptions options)
    : q_(&q), opt_(options), t_(t0) {
  if (!(t0 > q.t_min())) {
    throw Error(ErrorCode::DomainError,
                "t0 = " + std::to_string(t0) + " is not above t_min = " + std::to_string(q.t_min()));
  }
  if (!(opt_.rtol > 0) || !(opt_.atol > 0)) {
    throw Error(ErrorCode::DomainError, "tolerances must be positive");
  }
  for (const auto& iv : init) {
    state_.push_back(iv.y);
    state_.push_back(iv.yp);
    last_sign_.push_back(sign_of(iv.y));
  }
  zeros_.resize(init.size());
  k1_.resize(state_.size());
  rhs(t_, state_, k1_);
}

void OdeStepper::rhs(double t, const std::vector<double>& s, std::vector<double>& out) const {
  const double q = q_->evaluate(t);
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    out[i] = s[i + 1];
    out[i + 1] = -q * s[i];
  }
}

double OdeStepper::initial_step(double t_end) const {
  const std::size_t n = state_.size();
  const double hmax = t_end - t_;
  double dnf = 0.0;
  double dny = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sk = opt_.atol + opt_.rtol * std::abs(state_[i]);
    dnf += (k1_[i] / sk) * (k1_[i] / sk);
    dny += (state_[i] / sk) * (state_[i] / sk);
  }
  double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : std::sqrt(dny / dnf) * 0.01;
  h = std::min(h, hmax);
  std::vector<double> y1(n);
  std::vector<double> f1(n);
  for (std::size_t i = 0; i < n; ++i) y1[i] = state_[i] + h * k1_[i];
  rhs(t_ + h, y1, f1);
  double der2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sk = opt_.atol + opt_.rtol * std::abs(state_[i]);
    der2 += ((f1[i] - k1_[i]) / sk) * ((f1[i] - k1_[i]) / sk);
  }
  der2 = std::sqrt(der2) / h;
  const double der12 = std::max(std::abs(der2), std::sqrt(dnf));
  const double h1 = der12 <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / der12, 0.2);
  return std::min({100 * h, h1, hmax});
}

void OdeStepper::track_zeros(double ta, const std::vector<double>& sa, double tb, const std::vector<double>& sb) {
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    const Sample a{ta, sa[2 * i], sa[2 * i + 1]};
    const Sample b{tb, sb[2 * i], sb[2 * i + 1]};
    const int s_b = sign_of(b.y);
    int& last = last_sign_[i];
    if (last == 0) {
      last = s_b;
      continue;
    }
    if (s_b == 0) {
      zeros_[i].push_back(tb);
      last = 0;
      continue;
    }
    if (s_b == last) continue;
    double lo = ta;
    double hi = tb;
    const double width = kZeroRelWidth * std::max(1.0, std::abs(tb));
    while (hi - lo > width) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sign_of(hermite(a, b, mid)) == last) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    zeros_[i].push_back(0.5 * (lo + hi));
    last = s_b;
  }
}

OdeStepper::Status OdeStepper::advance_to(double t_end, const Observer& observer) {
  const std::size_t n = state_.size();
  std::vector<double> k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y_new(n);
  if (h_ <= 0.0 && t_end > t_) h_ = initial_step(t_end);
  bool rejected_last = false;

  while (t_ < t_end) {
    if (steps_ >= opt_.max_steps) return Status::StepBudgetExhausted;
    double h = std::min(h_, t_end - t_);
    if (t_end - (t_ + h) < 1e-12 * std::abs(t_end)) h = t_end - t_;
    if (h < 16 * std::numeric_limits<double>::epsilon() * std::abs(t_)) {
      throw Error(ErrorCode::StepSizeUnderflow, "step size " + std::to_string(h) + " at t = " +
                                                   std::to_string(t_));
    }

    for (std::size_t i = 0; i < n; ++i) tmp[i] = state_[i] + h * a21 * k1_[i];
    rhs(t_ + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = state_[i] + h * (a31 * k1_[i] + a32 * k2[i]);
    rhs(t_ + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = state_[i] + h * (a41 * k1_[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t_ + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      tmp[i] = state_[i] + h * (a51 * k1_[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    }
    rhs(t_ + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < n; ++i) {
      tmp[i] = state_[i] + h * (a61 * k1_[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    }
    rhs(t_ + h, tmp, k6);
    for (std::size_t i = 0; i < n; ++i) {
      y_new[i] = state_[i] + h * (a71 * k1_[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    }
    rhs(t_ + h, y_new, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sk = opt_.atol + opt_.rtol * std::max(std::abs(state_[i]), std::abs(y_new[i]));
      const double ei = h * (e1 * k1_[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      err += (ei / sk) * (ei / sk);
    }
    err = std::sqrt(err / static_cast<double>(n));

    if (!std::isfinite(err)) {
      h_ = h / kMaxShrink;
      rejected_last = true;
      continue;
    }
    const double fac11 = std::pow(err, kExpo);
    if (err > 1.0) {
      h_ = h / std::min(kMaxShrink, fac11 / kSafety);
      rejected_last = true;
      continue;
    }

    track_zeros(t_, state_, t_ + h, y_new);
    t_ += h;
    state_.swap(y_new);
    k1_.swap(k7);
    ++steps_;

    double fac = fac11 / std::pow(err_old_, kBeta);
    fac = std::clamp(fac / kSafety, 1.0 / kMaxGrow, kMaxShrink);
    double h_next = h / fac;
    if (rejected_last) h_next = std::min(h_next, h);
    h_ = h_next;
    err_old_ = std::max(err, 1e-4);
    rejected_last = false;

    if (opt_.renormalize_above > 0) {
      for (std::size_t i = 0; i + 1 < n; i += 2) {
        if (std::max(std::abs(state_[i]), std::abs(state_[i + 1])) > opt_.renormalize_above) {
          const double s = 1.0 / opt_.renormalize_above;
          state_[i] *= s;
          state_[i + 1] *= s;
          k1_[i] *= s;
          k1_[i + 1] *= s;
        }
      }
    }
    for (double v : state_) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::DomainError, "solution overflowed at t = " + std::to_string(t_));
      }
    }
    if (observer && !observer(*this)) return Status::Stopped;
  }
  return Status::ReachedEnd;
}

namespace {

Trajectory empty_trajectory(double t0, double rtol, double atol) {
  Trajectory tr;
  tr.t0 = t0;
  tr.t1 = t0;
  tr.rtol = rtol;
  tr.atol = atol;
  return tr;
}

}  // namespace

Trajectory integrate(const Evaluator& q, double t0, double t1, double y0, double y0p, double rtol,
                     double atol) {
  OdeStepper stepper(q, t0, {{y0, y0p}}, StepperOptions{rtol, atol});
  Trajectory tr = empty_trajectory(t0, rtol, atol);
  tr.samples.push_back({t0, y0, y0p});
  const auto status = stepper.advance_to(t1, [&tr](const OdeStepper& s) {
    tr.samples.push_back({s.t(), s.y(0), s.yp(0)});
    return true;
  });
  tr.t1 = stepper.t();
  tr.zeros = stepper.zeros(0);
  tr.truncated = status == OdeStepper::Status::StepBudgetExhausted;
  return tr;
}

SolutionPair integrate_pair(const Evaluator& q, double t0, double t1, InitialValue a, InitialValue b,
                            double rtol, double atol) {
  OdeStepper stepper(q, t0, {a, b}, StepperOptions{rtol, atol});
  Trajectory y1 = empty_trajectory(t0, rtol, atol);
  Trajectory y2 = y1;
  y1.samples.push_back({t0, a.y, a.yp});
  y2.samples.push_back({t0, b.y, b.yp});
  const auto status = stepper.advance_to(t1, [&](const OdeStepper& s) {
    y1.samples.push_back({s.t(), s.y(0), s.yp(0)});
    y2.samples.push_back({s.t(), s.y(1), s.yp(1)});
    return true;
  });
  y1.t1 = y2.t1 = stepper.t();
  y1.zeros = stepper.zeros(0);
  y2.zeros = stepper.zeros(1);
  y1.truncated = y2.truncated = status == OdeStepper::Status::StepBudgetExhausted;
  return make_pair(std::move(y1), std::move(y2));
}

Trajectory second_solution(const Trajectory& y1) {
  if (!y1.zeros.empty()) {
    throw Error(ErrorCode::ZeroInRange, "y1 vanishes at t = " + std::to_string(y1.zeros.front()));
  }
  for (const auto& s : y1.samples) {
    if (s.y == 0.0) throw Error(ErrorCode::ZeroInRange, "y1 vanishes at t = " + std::to_string(s.t));
  }
  Trajectory y2 = y1;
  y2.zeros.clear();
  y2.samples.clear();
  double integral = 0.0;
  for (std::size_t i = 0; i < y1.samples.size(); ++i) {
    const Sample& b = y1.samples[i];
    if (i > 0) {
      const Sample& a = y1.samples[i - 1];
      const double ym = hermite(a, b, 0.5 * (a.t + b.t));
      const double h = b.t - a.t;
      integral += h / 6.0 * (1.0 / (a.y * a.y) + 4.0 / (ym * ym) + 1.0 / (b.y * b.y));
    }
    y2.samples.push_back({b.t, b.y * integral, b.yp * integral + 1.0 / b.y});
  }
  return y2;
}

SolutionPair make_pair(Trajectory y1, Trajectory y2) {
  SolutionPair pair{std::move(y1), std::move(y2), 0.0};
  const auto& s1 = pair.y1.samples;
  const auto& s2 = pair.y2.samples;
  if (s1.size() != s2.size() || s1.empty()) {
    throw Error(ErrorCode::DomainError, "solution pair must share a non-empty grid");
  }
  const double w0 = s1[0].y * s2[0].yp - s1[0].yp * s2[0].y;
  if (w0 == 0.0) {
    pair.wronskian_drift = std::numeric_limits<double>::infinity();
    return pair;
  }
  double drift = 0.0;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    const double w = s1[i].y * s2[i].yp - s1[i].yp * s2[i].y;
    drift = std::max(drift, std::abs(w - w0) / std::abs(w0));
  }
  pair.wronskian_drift = drift;
  return pair;
}

}  // namespace hardy::numeric
