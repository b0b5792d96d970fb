#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "loggp/errors.hpp"

namespace loggp {

using Complex = std::complex<double>;

enum class Bc { Periodic, DirichletOdd, Free };

/// Uniform 1-D sampling grid. Sample i sits at x0 + i*dx.
///
/// Conventions per boundary condition:
///   Periodic:     n samples cover [x0, x0 + n*dx), right endpoint excluded.
///   DirichletOdd: cell-centered samples (i+1/2)*dx on [0, L], L = n*dx.
///                 The represented function is odd about x = 0 and even about
///                 x = L (vanishing derivative there), so its reflection
///                 extends it to a smooth 4L-periodic function.
///   Free:         n samples cover the closed interval [x0, x0 + (n-1)*dx].
struct Grid {
  double x0 = 0.0;
  double dx = 1.0;
  std::size_t n = 8;
  Bc bc = Bc::Free;

  Grid() = default;
  Grid(double x0, double dx, std::size_t n, Bc bc)
      : x0(x0), dx(dx), n(n), bc(bc) {
    if (!(dx > 0.0)) throw DomainError("Grid: dx must be > 0");
    if (n < 8) throw DomainError("Grid: need n >= 8");
  }

  static Grid periodic(double x0, double length, std::size_t n) {
    return Grid(x0, length / double(n), n, Bc::Periodic);
  }
  /// Symmetric free grid covering [-length/2, length/2] inclusive.
  static Grid free_symmetric(double length, std::size_t n) {
    double dx = length / double(n - 1);
    return Grid(-0.5 * length, dx, n, Bc::Free);
  }
  /// Cell-centered odd grid on [0, length].
  static Grid dirichlet_odd(double length, std::size_t n) {
    double dx = length / double(n);
    return Grid(0.5 * dx, dx, n, Bc::DirichletOdd);
  }

  double x(std::size_t i) const { return x0 + double(i) * dx; }
  /// Extent of the represented interval.
  double length() const {
    switch (bc) {
      case Bc::Periodic: return double(n) * dx;
      case Bc::DirichletOdd: return double(n) * dx;
      case Bc::Free: return double(n - 1) * dx;
    }
    return 0.0;
  }

  bool operator==(const Grid& o) const {
    return x0 == o.x0 && dx == o.dx && n == o.n && bc == o.bc;
  }
};

/// Sampled complex-valued function on a Grid. Immutable by convention after
/// construction: operations return fresh instances.
struct GridFunction {
  Grid grid;
  std::vector<Complex> values;

  GridFunction() = default;
  GridFunction(Grid g, std::vector<Complex> v)
      : grid(g), values(std::move(v)) {
    if (values.size() != grid.n)
      throw DomainError("GridFunction: sample count does not match grid");
    for (const auto& z : values)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("GridFunction: non-finite sample");
  }

  template <typename F>
  static GridFunction sample(const Grid& g, F&& f) {
    std::vector<Complex> v(g.n);
    for (std::size_t i = 0; i < g.n; ++i) v[i] = Complex(f(g.x(i)));
    return GridFunction(g, std::move(v));
  }

  std::size_t size() const { return values.size(); }
};

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 FFT, sign = -1 forward / +1 inverse
/// (inverse is unnormalized).
inline void fft_radix2(std::vector<Complex>& a, int sign) {
  const std::size_t n = a.size();
  if (!is_pow2(n))
    throw DomainError("fft: sample count must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = double(sign) * 2.0 * std::numbers::pi / double(len);
    Complex wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        Complex u = a[i + k];
        Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

inline void fft_forward(std::vector<Complex>& a) { fft_radix2(a, -1); }

inline void fft_inverse(std::vector<Complex>& a) {
  fft_radix2(a, +1);
  double s = 1.0 / double(a.size());
  for (auto& z : a) z *= s;
}

/// Signed wavenumber of bin j on an n-point periodic grid of length L.
inline double wavenumber(std::size_t j, std::size_t n, double L) {
  double k = 2.0 * std::numbers::pi / L;
  long jj = long(j) <= long(n) / 2 ? long(j) : long(j) - long(n);
  return k * double(jj);
}

}  // namespace detail

/// Smooth periodic extension of a DirichletOdd function: odd reflection about
/// x = 0 composed with even reflection about x = L, giving a 4L-periodic
/// function sampled on 4n cell-centered points of [-2L, 2L).
inline GridFunction odd_extension(const GridFunction& gf) {
  if (gf.grid.bc != Bc::DirichletOdd)
    throw DomainError("odd_extension: requires a DirichletOdd grid");
  const std::size_t n = gf.grid.n;
  const double dx = gf.grid.dx;
  const double L = double(n) * dx;
  std::vector<Complex> v(4 * n);
  auto half = [&](long m) -> Complex {
    // value at x = (m + 1/2)*dx for m in [0, 2n)
    return m < long(n) ? gf.values[std::size_t(m)]
                       : gf.values[std::size_t(2 * long(n) - 1 - m)];
  };
  for (std::size_t j = 0; j < 4 * n; ++j) {
    long m = long(j) - 2 * long(n);  // x = (m + 1/2)*dx
    v[j] = m >= 0 ? half(m) : -half(-m - 1);
  }
  Grid ext(-2.0 * L + 0.5 * dx, dx, 4 * n, Bc::Periodic);
  return GridFunction(ext, std::move(v));
}

/// Restriction inverse to odd_extension.
inline GridFunction odd_restrict(const GridFunction& ext, const Grid& g) {
  if (g.bc != Bc::DirichletOdd || ext.grid.n != 4 * g.n)
    throw DomainError("odd_restrict: grid mismatch");
  std::vector<Complex> v(g.n);
  for (std::size_t i = 0; i < g.n; ++i) v[i] = ext.values[i + 2 * g.n];
  return GridFunction(g, std::move(v));
}

namespace detail {

inline GridFunction derivative_periodic(const GridFunction& gf, int order) {
  const std::size_t n = gf.grid.n;
  const double L = gf.grid.length();
  std::vector<Complex> a = gf.values;
  fft_forward(a);
  for (std::size_t j = 0; j < n; ++j) {
    double k = wavenumber(j, n, L);
    if (order == 1) {
      // zero the Nyquist mode: its derivative has no consistent phase
      if (j == n / 2) a[j] = 0.0;
      else a[j] *= Complex(0.0, k);
    } else {
      a[j] *= -k * k;
    }
  }
  fft_inverse(a);
  return GridFunction(gf.grid, std::move(a));
}

inline GridFunction derivative_free(const GridFunction& gf, int order) {
  const std::size_t n = gf.grid.n;
  const double h = gf.grid.dx;
  const auto& u = gf.values;
  std::vector<Complex> d(n);
  if (order == 1) {
    for (std::size_t i = 2; i + 2 < n; ++i)
      d[i] = (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) /
             (12.0 * h);
    auto fwd = [&](std::size_t i, int s) {
      // 4th-order one-sided first derivative, s = +1 forward, -1 backward
      return double(s) *
             (-25.0 * u[i] + 48.0 * u[i + s] - 36.0 * u[i + 2 * s] +
              16.0 * u[i + 3 * s] - 3.0 * u[i + 4 * s]) /
             (12.0 * h);
    };
    auto fwd1 = [&](std::size_t i, int s) {
      // 4th-order offset stencil, one point inside
      return double(s) *
             (-3.0 * u[i - s] - 10.0 * u[i] + 18.0 * u[i + s] -
              6.0 * u[i + 2 * s] + u[i + 3 * s]) /
             (12.0 * h);
    };
    d[0] = fwd(0, +1);
    d[1] = fwd1(1, +1);
    d[n - 1] = fwd(n - 1, -1);
    d[n - 2] = fwd1(n - 2, -1);
  } else {
    const double h2 = h * h;
    for (std::size_t i = 2; i + 2 < n; ++i)
      d[i] = (-u[i - 2] + 16.0 * u[i - 1] - 30.0 * u[i] + 16.0 * u[i + 1] -
              u[i + 2]) /
             (12.0 * h2);
    auto fwd = [&](std::size_t i, int s) {
      // 4th-order one-sided second derivative (6 points)
      return (45.0 * u[i] - 154.0 * u[i + s] + 214.0 * u[i + 2 * s] -
              156.0 * u[i + 3 * s] + 61.0 * u[i + 4 * s] -
              10.0 * u[i + 5 * s]) /
             (12.0 * h2);
    };
    auto fwd1 = [&](std::size_t i, int s) {
      return (10.0 * u[i - s] - 15.0 * u[i] - 4.0 * u[i + s] +
              14.0 * u[i + 2 * s] - 6.0 * u[i + 3 * s] + u[i + 4 * s]) /
             (12.0 * h2);
    };
    d[0] = fwd(0, +1);
    d[1] = fwd1(1, +1);
    d[n - 1] = fwd(n - 1, -1);
    d[n - 2] = fwd1(n - 2, -1);
  }
  return GridFunction(gf.grid, std::move(d));
}

}  // namespace detail

/// Sampled derivative of the given order (1 or 2). Spectral on periodic
/// grids, 4th-order finite differences on free grids, and spectral through
/// the smooth odd extension on DirichletOdd grids.
inline GridFunction derivative(const GridFunction& gf, int order) {
  if (order != 1 && order != 2)
    throw DomainError("derivative: order must be 1 or 2");
  switch (gf.grid.bc) {
    case Bc::Periodic:
      return detail::derivative_periodic(gf, order);
    case Bc::Free:
      return detail::derivative_free(gf, order);
    case Bc::DirichletOdd: {
      GridFunction ext = detail::derivative_periodic(odd_extension(gf), order);
      return odd_restrict(ext, gf.grid);
    }
  }
  throw DomainError("derivative: unknown boundary condition");
}

/// Quadrature over the grid's interval: rectangle rule on periodic and
/// cell-centered odd grids, trapezoid on free grids.
inline Complex integrate(const GridFunction& gf) {
  const auto& v = gf.values;
  Complex s(0.0);
  if (gf.grid.bc == Bc::Free) {
    for (std::size_t i = 1; i + 1 < v.size(); ++i) s += v[i];
    s += 0.5 * (v.front() + v.back());
  } else {
    for (const auto& z : v) s += z;
  }
  return s * gf.grid.dx;
}

/// Real-valued quadrature of a pointwise map of the samples.
template <typename F>
double integrate_real(const GridFunction& gf, F&& f) {
  double s = 0.0;
  const auto& v = gf.values;
  if (gf.grid.bc == Bc::Free) {
    for (std::size_t i = 1; i + 1 < v.size(); ++i) s += f(v[i]);
    s += 0.5 * (f(v.front()) + f(v.back()));
  } else {
    for (const auto& z : v) s += f(z);
  }
  return s * gf.grid.dx;
}

/// Discrete L2 norm on the box, sqrt(integrate |u|^2).
inline double l2_norm(const GridFunction& gf) {
  return std::sqrt(integrate_real(gf, [](Complex z) { return std::norm(z); }));
}

inline double l2_distance(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid == b.grid)) throw DomainError("l2_distance: grid mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::norm(a.values[i] - b.values[i]);
  if (a.grid.bc == Bc::Free)
    s -= 0.5 * (std::norm(a.values.front() - b.values.front()) +
                std::norm(a.values.back() - b.values.back()));
  return std::sqrt(s * a.grid.dx);
}

}  // namespace loggp
