#include "kawahara/ffh.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "kawahara/error.hpp"

namespace kawahara {

namespace {

std::string dump_matrix(const Eigen::MatrixXcd& matrix, double mu) {
  std::ostringstream name;
  name << "kawahara_hill_" << std::hash<double>{}(mu) << ".txt";
  const auto path = std::filesystem::temp_directory_path() / name.str();
  std::ofstream out(path);
  out.precision(17);
  out << matrix << "\n";
  return path.string();
}

const cdouble* peak_near(const SpectrumSlice& slice, double center_im, double radius) {
  const cdouble* best = nullptr;
  const cdouble center(0.0, center_im);
  for (const auto& z : slice.eigenvalues) {
    if (std::abs(z - center) >= radius) continue;
    if (!best || z.real() > best->real()) best = &z;
  }
  return best;
}

// Golden-section maximization of max_growth_near over [lo, hi].
double refine_peak(const HillProblem& problem, double lo, double hi, double center_im, double radius) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  auto growth = [&](double mu) { return max_growth_near(spectrum_slice(problem, mu), center_im, radius); };
  double a = lo;
  double b = hi;
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = growth(x1);
  double f2 = growth(x2);
  for (int iter = 0; iter < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a)); ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = growth(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = growth(x1);
    }
  }
  return 0.5 * (a + b);
}

// Bisects between an inactive and an active exponent down to `tol`.
double bisect_boundary(const HillProblem& problem, double inactive, double active, double center_im,
                       double radius, double floor, double tol) {
  while (std::abs(active - inactive) > tol) {
    const double mid = 0.5 * (active + inactive);
    if (max_growth_near(spectrum_slice(problem, mid), center_im, radius) > floor) {
      active = mid;
    } else {
      inactive = mid;
    }
  }
  return 0.5 * (active + inactive);
}

}  // namespace

HillProblem HillProblem::make(const PhysicalParams& params, double eps, int modes) {
  if (modes < kMinModes) {
    std::ostringstream msg;
    msg << "truncation must keep at least " << kMinModes << " modes, got " << modes;
    throw Error(ErrorCode::invalid_argument, msg.str());
  }
  if (!std::isfinite(eps)) throw Error(ErrorCode::invalid_argument, "eps must be finite");
  return HillProblem{params, stokes_expansion(params), eps, modes};
}

Eigen::MatrixXcd hill_matrix(const HillProblem& problem, double mu) {
  if (!std::isfinite(mu)) throw Error(ErrorCode::invalid_argument, "Floquet exponent must be finite");
  const int N = problem.modes;
  const int size = 2 * N + 1;
  const double speed = problem.wave.speed(problem.eps);
  const double beta = problem.params.beta();
  const double sigma = problem.params.sigma();
  const std::array<double, 4> u = problem.wave.fourier(problem.eps);
  const cdouble i(0.0, 1.0);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(size, size);
  for (int j = -N; j <= N; ++j) {
    const double k = mu + j;
    const int row = j + N;
    a(row, row) = -i * omega_at_speed(k, speed, beta);
    for (int p = -3; p <= 3; ++p) {
      const int l = j - p;
      if (l < -N || l > N) continue;
      const double coeff = u[static_cast<std::size_t>(p < 0 ? -p : p)];
      if (coeff == 0.0) continue;
      a(row, l + N) += 2.0 * i * sigma * k * coeff;
    }
  }
  return a;
}

SpectrumSlice spectrum_slice(const HillProblem& problem, double mu) {
  const Eigen::MatrixXcd a = hill_matrix(problem, mu);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver failed at mu=" << mu << "; matrix written to " << dump_matrix(a, mu);
    throw Error(ErrorCode::numerical, msg.str());
  }
  SpectrumSlice slice;
  slice.mu = mu;
  slice.trunc_N = problem.modes;
  slice.eps = problem.eps;
  const auto& values = solver.eigenvalues();
  slice.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(slice.eigenvalues.begin(), slice.eigenvalues.end(), [](const cdouble& x, const cdouble& y) {
    return x.imag() != y.imag() ? x.imag() < y.imag() : x.real() < y.real();
  });
  return slice;
}

std::vector<SpectrumSlice> sweep(const HillProblem& problem, std::span<const double> mu_grid, unsigned threads) {
  std::vector<SpectrumSlice> slices(mu_grid.size());
  std::vector<std::exception_ptr> errors(mu_grid.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, mu_grid.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < mu_grid.size(); idx = next++) {
      try {
        slices[idx] = spectrum_slice(problem, mu_grid[idx]);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t idx = 0; idx < errors.size(); ++idx) {
    if (!errors[idx]) continue;
    try {
      std::rethrow_exception(errors[idx]);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "sweep failed at grid index " << idx << ": " << e.what();
      throw Error(e.code(), msg.str());
    }
  }
  return slices;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {0.5 * (lo + hi)};
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return grid;
}

double default_isola_radius(const IsolaModel& model) {
  return 10.0 * std::max(model.semi_major_a, model.semi_minor_b) + model.eps;
}

double max_growth_near(const SpectrumSlice& slice, double center_im, double radius) {
  const cdouble* best = peak_near(slice, center_im, radius);
  return best ? std::max(0.0, best->real()) : 0.0;
}

IsolaNumerics extract_isola(const HillProblem& problem, std::span<const SpectrumSlice> slices,
                            const CollisionSite& site, const ExtractOptions& options) {
  // eps = 0: nothing to gate, the spectrum is the imaginary-axis dispersion relation.
  if (!(options.isola_radius > 0.0) && problem.eps != 0.0) {
    throw Error(ErrorCode::invalid_argument, "isola radius must be positive");
  }
  const double center = site.lambda0_im;
  const double radius = problem.eps == 0.0 ? std::numeric_limits<double>::infinity() : options.isola_radius;
  const double floor = options.growth_floor;

  IsolaNumerics out;
  std::size_t first = slices.size();
  std::size_t last = 0;
  std::size_t peak = 0;
  double peak_growth = -1.0;
  for (std::size_t idx = 0; idx < slices.size(); ++idx) {
    const cdouble center_pt(0.0, center);
    for (const auto& z : slices[idx].eigenvalues) {
      if (z.real() > floor && std::abs(z - center_pt) < radius) {
        out.points.push_back({slices[idx].mu, z, +1});
      }
    }
    const double growth = max_growth_near(slices[idx], center, radius);
    if (growth <= floor) continue;
    first = std::min(first, idx);
    last = idx;
    if (growth > peak_growth) {
      peak_growth = growth;
      peak = idx;
    }
  }
  if (first == slices.size()) return out;

  out.empty = false;
  out.lo_clipped = first == 0;
  out.hi_clipped = last + 1 == slices.size();
  out.mu_lo = out.lo_clipped ? slices[first].mu
                             : bisect_boundary(problem, slices[first - 1].mu, slices[first].mu, center, radius,
                                               floor, options.mu_tol);
  out.mu_hi = out.hi_clipped ? slices[last].mu
                             : bisect_boundary(problem, slices[last + 1].mu, slices[last].mu, center, radius,
                                               floor, options.mu_tol);

  out.mu_star = slices[peak].mu;
  out.lambda_star = *peak_near(slices[peak], center, radius);
  if (options.refine_peak && peak > 0 && peak + 1 < slices.size()) {
    const double mu = refine_peak(problem, slices[peak - 1].mu, slices[peak + 1].mu, center, radius);
    const SpectrumSlice refined = spectrum_slice(problem, mu);
    const cdouble* z = peak_near(refined, center, radius);
    if (z && z->real() >= out.lambda_star.real()) {
      out.mu_star = mu;
      out.lambda_star = *z;
    }
  }
  return out;
}

}  // namespace kawahara
