#include "sgw/quadrature.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <string>
#include <vector>

#include "sgw/errors.hpp"

namespace sgw {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes, the
// last entry is the centre.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct LessError {
  bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_evaluations) {
  constexpr std::size_t kPerPanel = 15;
  const LessError cmp;
  std::vector<Panel> heap{gauss_kronrod(f, a, b)};
  std::size_t evaluations = kPerPanel;
  double error = heap.front().error;

  while (!(error <= abs_tol)) {
    if (!std::isfinite(error)) {
      throw NoConvergence("integrate_adaptive: non-finite integrand on [" + std::to_string(a) +
                          ", " + std::to_string(b) + "]");
    }
    if (evaluations + 2 * kPerPanel > max_evaluations) {
      throw NoConvergence("integrate_adaptive: tolerance " + std::to_string(abs_tol) +
                          " not reached within " + std::to_string(max_evaluations) +
                          " evaluations (estimate " + std::to_string(error) + ")");
    }
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    error -= worst.error;
    for (const Panel& half : {gauss_kronrod(f, worst.a, mid), gauss_kronrod(f, mid, worst.b)}) {
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end(), cmp);
      error += half.error;
    }
    evaluations += 2 * kPerPanel;
    // Re-sum periodically; the incremental update accumulates rounding.
    if (heap.size() % 256 == 0 || error <= abs_tol) {
      error = 0.0;
      for (const Panel& p : heap) error += p.error;
    }
  }

  double total = 0.0;
  for (const Panel& p : heap) total += p.value;
  return {total, error, evaluations};
}

}  // namespace sgw
