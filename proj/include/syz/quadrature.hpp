#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

struct QuadOptions {
  double rel_tol = 1e-8;
  std::int64_t max_cells = std::int64_t(1) << 20;
  bool parallel = true;  // OpenMP over cell batches; result independent of thread count
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  std::int64_t cells = 0;
};

struct QuadError : std::runtime_error {
  QuadResult achieved;
  QuadError(const std::string& msg, QuadResult got)
      : std::runtime_error(msg + " (achieved err_est " + std::to_string(got.err_est) + ")"),
        achieved(got) {}
};

struct Rect {
  double x0, x1, y0, y1;
};

namespace quad_detail {

// 8-point Gauss-Legendre on [-1, 1]
inline constexpr double kGlx[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
inline constexpr double kGlw[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

template <class F>
double gl8x8(const F& f, const Rect& c) {
  double hx = 0.5 * (c.x1 - c.x0), mx = 0.5 * (c.x1 + c.x0);
  double hy = 0.5 * (c.y1 - c.y0), my = 0.5 * (c.y1 + c.y0);
  double s = 0.0;
  for (int i = 0; i < 8; ++i) {
    double x = mx + hx * kGlx[i];
    double row = 0.0;
    for (int j = 0; j < 8; ++j) row += kGlw[j] * f(x, my + hy * kGlx[j]);
    s += kGlw[i] * row;
  }
  return s * hx * hy;
}

template <class F>
void coarse_fine(const F& f, const Rect& c, double& coarse, double& fine) {
  coarse = gl8x8(f, c);
  double mx = 0.5 * (c.x0 + c.x1), my = 0.5 * (c.y0 + c.y1);
  fine = gl8x8(f, Rect{c.x0, mx, c.y0, my}) + gl8x8(f, Rect{mx, c.x1, c.y0, my}) +
         gl8x8(f, Rect{c.x0, mx, my, c.y1}) + gl8x8(f, Rect{mx, c.x1, my, c.y1});
}

struct Cell {
  Rect r;
  double fine = 0.0;
  double err = 0.0;
};

}  // namespace quad_detail

// Wavefront-adaptive tensor Gauss-Legendre over an initial cell list.  Each
// sweep evaluates all pending cells (OpenMP-parallel when enabled), then the
// bookkeeping picks which cells to split.  Sums run in deterministic index
// order, so the result does not depend on the thread count.
template <class F>
QuadResult integrate_adaptive(const F& f, const std::vector<Rect>& init,
                              const QuadOptions& opt = {}) {
  using quad_detail::Cell;
  std::vector<Cell> active;
  active.reserve(init.size());
  for (const Rect& r : init) active.push_back({r, 0.0, 0.0});

  auto eval_range = [&](std::vector<Cell>& cells, std::size_t begin) {
    std::int64_t m = std::int64_t(cells.size()) - std::int64_t(begin);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (opt.parallel && m > 8)
#endif
    for (std::int64_t i = 0; i < m; ++i) {
      Cell& c = cells[begin + i];
      double coarse;
      quad_detail::coarse_fine(f, c.r, coarse, c.fine);
      c.err = std::abs(c.fine - coarse);
    }
  };

  eval_range(active, 0);
  double settled_val = 0.0, settled_err = 0.0;
  std::int64_t processed = std::int64_t(active.size());

  for (int sweep = 0;; ++sweep) {
    double total = settled_val, toterr = settled_err;
    for (const Cell& c : active) {
      total += c.fine;
      toterr += c.err;
    }
    double tol_abs = opt.rel_tol * std::max(std::abs(total), 1e-300);
    if (toterr <= tol_abs || active.empty())
      return {total, toterr, processed};
    if (processed > opt.max_cells)
      throw QuadError("quadrature budget exhausted", {total, toterr, processed});

    double thresh = tol_abs / (2.0 * double(active.size() + 1));
    std::vector<Cell> next;
    next.reserve(active.size());
    for (const Cell& c : active) {
      if (c.err <= thresh) {
        settled_val += c.fine;
        settled_err += c.err;
        continue;
      }
      double mx = 0.5 * (c.r.x0 + c.r.x1), my = 0.5 * (c.r.y0 + c.r.y1);
      next.push_back({{c.r.x0, mx, c.r.y0, my}, 0, 0});
      next.push_back({{mx, c.r.x1, c.r.y0, my}, 0, 0});
      next.push_back({{c.r.x0, mx, my, c.r.y1}, 0, 0});
      next.push_back({{mx, c.r.x1, my, c.r.y1}, 0, 0});
    }
    eval_range(next, 0);
    processed += std::int64_t(next.size());
    active = std::move(next);
  }
}

// Serial reference integrator (kept as the check against the parallel
// wavefront path; no OpenMP): classic greedy refinement splitting the
// worst-error cell until the global error budget is met.
template <class F>
QuadResult integrate_serial_reference(const F& f, const std::vector<Rect>& init,
                                      const QuadOptions& opt = {}) {
  using quad_detail::Cell;
  auto eval = [&f](const Rect& r) {
    Cell c{r, 0.0, 0.0};
    double coarse;
    quad_detail::coarse_fine(f, r, coarse, c.fine);
    c.err = std::abs(c.fine - coarse);
    return c;
  };

  auto worse = [](const Cell& a, const Cell& b) { return a.err < b.err; };
  std::vector<Cell> heap;
  double total = 0.0, toterr = 0.0;
  std::int64_t cells = 0;
  auto add_cell = [&](const Rect& r) {
    Cell c = eval(r);
    total += c.fine;
    toterr += c.err;
    ++cells;
    heap.push_back(c);
    std::push_heap(heap.begin(), heap.end(), worse);
  };
  for (const Rect& r : init) add_cell(r);

  while (true) {
    double tol_abs = opt.rel_tol * std::max(std::abs(total), 1e-300);
    if (toterr <= tol_abs) return {total, toterr, cells};
    if (cells > opt.max_cells)
      throw QuadError("serial quadrature budget exhausted", {total, toterr, cells});
    std::pop_heap(heap.begin(), heap.end(), worse);
    Cell c = heap.back();
    heap.pop_back();
    total -= c.fine;
    toterr -= c.err;
    double mx = 0.5 * (c.r.x0 + c.r.x1), my = 0.5 * (c.r.y0 + c.r.y1);
    for (const Rect& r : {Rect{c.r.x0, mx, c.r.y0, my}, Rect{mx, c.r.x1, c.r.y0, my},
                          Rect{c.r.x0, mx, my, c.r.y1}, Rect{mx, c.r.x1, my, c.r.y1}})
      add_cell(r);
  }
}

}  // namespace syz
