#include "kawahara/kawahara.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kawahara/asymptotics.hpp"
#include "kawahara/collision.hpp"
#include "kawahara/dispersion.hpp"
#include "kawahara/error.hpp"
#include "kawahara/ffh.hpp"
#include "kawahara/higher_order.hpp"
#include "kawahara/stokes.hpp"

struct kw_spectrum {
  kawahara::HillProblem problem;
  std::vector<kawahara::SpectrumSlice> slices;
};

struct kw_isola {
  kawahara::IsolaNumerics numerics;
};

namespace {

using namespace kawahara;

thread_local std::string g_last_error;
thread_local int g_resonant_mode = 0;

struct BufferTooSmall {};

kw_status fail(kw_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

kw_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return KW_ERR_INVALID_ARGUMENT;
    case ErrorCode::resonant: return KW_ERR_RESONANT;
    case ErrorCode::inadmissible: return KW_ERR_INADMISSIBLE;
    case ErrorCode::degenerate: return KW_ERR_DEGENERATE;
    case ErrorCode::numerical: return KW_ERR_NUMERICAL;
  }
  return KW_ERR_INTERNAL;
}

// Runs body and translates exceptions into status codes.
template <class F>
kw_status guarded(F&& body) {
  try {
    g_resonant_mode = 0;
    body();
    return KW_OK;
  } catch (const BufferTooSmall&) {
    return fail(KW_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  } catch (const ResonanceError& e) {
    g_resonant_mode = e.mode();
    return fail(KW_ERR_RESONANT, e.what());
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KW_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* ptr, const char* name) {
  if (!ptr) throw Error(ErrorCode::invalid_argument, std::string(name) + " must not be NULL");
}

PhysicalParams make_params(kw_params p) { return PhysicalParams::make(p.beta, p.sigma); }

CollisionSite to_site(const kw_collision* c) {
  require(c, "site");
  CollisionSite s;
  s.delta_n = c->delta_n;
  s.n = c->n;
  s.m = c->m;
  s.mu0 = c->mu0;
  s.lambda0_im = c->lambda0_im;
  s.k_n = c->k_n;
  s.k_m = c->k_m;
  return s;
}

kw_collision from_site(const CollisionSite& s) {
  return {s.delta_n, s.n, s.m, s.mu0, s.lambda0_im, s.k_n, s.k_m};
}

kw_isola_model from_model(const IsolaModel& m) {
  return {m.delta_n,       m.order,        m.eps,          m.mu_interval.lo,     m.mu_interval.hi,
          m.mu_star,       m.lambda_star.real(), m.lambda_star.imag(), m.center_im, m.center_drift,
          m.semi_major_a,  m.semi_minor_b, m.strength,     m.im_tilt};
}

IsolaModel to_model(const kw_isola_model* p) {
  require(p, "model");
  IsolaModel m;
  m.delta_n = p->delta_n;
  m.order = p->order;
  m.eps = p->eps;
  m.mu_interval = {p->mu_lo, p->mu_hi};
  m.mu_star = p->mu_star;
  m.lambda_star = {p->lambda_star_re, p->lambda_star_im};
  m.center_im = p->center_im;
  m.center_drift = p->center_drift;
  m.semi_major_a = p->semi_major_a;
  m.semi_minor_b = p->semi_minor_b;
  m.strength = p->strength;
  m.im_tilt = p->im_tilt;
  return m;
}

Branch to_branch(int branch) {
  if (branch == 1) return Branch::plus;
  if (branch == -1) return Branch::minus;
  throw Error(ErrorCode::invalid_argument, "branch must be +1 or -1");
}

// Copies `items` into a caller buffer following the query/too-small convention.
template <class T, class Out, class Convert>
kw_status emit(const std::vector<T>& items, Out* out, size_t capacity, size_t* written, Convert convert) {
  if (!written) return fail(KW_ERR_INVALID_ARGUMENT, "written must not be NULL");
  *written = items.size();
  if (!out) return KW_OK;
  if (capacity < items.size()) return fail(KW_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  for (size_t i = 0; i < items.size(); ++i) out[i] = convert(items[i]);
  return KW_OK;
}

kw_curve_point to_point(const CurvePoint& p) { return {p.mu, p.lambda.real(), p.lambda.imag(), p.branch}; }

}  // namespace

extern "C" {

const char* kw_last_error(void) { return g_last_error.c_str(); }

int kw_last_resonant_mode(void) { return g_resonant_mode; }

const char* kw_version(void) { return "1.0.0"; }

const char* kw_status_name(kw_status status) {
  switch (status) {
    case KW_OK: return "ok";
    case KW_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case KW_ERR_RESONANT: return "resonant";
    case KW_ERR_INADMISSIBLE: return "inadmissible";
    case KW_ERR_DEGENERATE: return "degenerate";
    case KW_ERR_NUMERICAL: return "numerical";
    case KW_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case KW_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

kw_status kw_check_params(kw_params params) {
  return guarded([&] { make_params(params); });
}

kw_status kw_normalize(const kw_raw_params* raw, kw_params* out) {
  return guarded([&] {
    require(raw, "raw");
    require(out, "out");
    const PhysicalParams p = normalize({raw->alpha, raw->beta, raw->sigma, raw->period});
    *out = {p.beta(), p.sigma()};
  });
}

kw_status kw_normalize_speed(const kw_raw_params* raw, double c, double* out) {
  return guarded([&] {
    require(raw, "raw");
    require(out, "out");
    *out = normalize_speed(c, {raw->alpha, raw->beta, raw->sigma, raw->period});
  });
}

int kw_is_resonant(double beta) { return is_resonant(beta).value_or(0); }

double kw_omega(double k, double beta) { return omega_at_speed(k, 1.0 - beta, beta); }

double kw_group_velocity(double k, double beta) { return -(1.0 - beta) + 3.0 * k * k - 5.0 * beta * k * k * k * k; }

kw_status kw_stokes(kw_params params, kw_stokes_coeffs* out) {
  return guarded([&] {
    require(out, "out");
    const StokesExpansion w = stokes_expansion(make_params(params));
    *out = {w.c0, w.c2, w.u2_0, w.u2_2, w.u3_3};
  });
}

kw_status kw_stokes_eval(kw_params params, double eps, const double* x, double* u, size_t count) {
  return guarded([&] {
    if (count == 0) return;
    require(x, "x");
    require(u, "u");
    const StokesExpansion w = stokes_expansion(make_params(params));
    for (size_t i = 0; i < count; ++i) u[i] = eval_stokes(w, x[i], eps);
  });
}

kw_status kw_stokes_residual(kw_params params, double eps, size_t grid_points, double* out) {
  return guarded([&] {
    require(out, "out");
    if (grid_points == 0) throw Error(ErrorCode::invalid_argument, "grid_points must be positive");
    const PhysicalParams p = make_params(params);
    const std::vector<double> grid = periodic_grid(grid_points);
    *out = residual(stokes_expansion(p), p, eps, grid);
  });
}

kw_status kw_admissible_beta_range(int delta_n, kw_interval* out) {
  return guarded([&] {
    require(out, "out");
    const Interval r = admissible_beta_range(delta_n);
    *out = {r.lo, r.hi};
  });
}

kw_status kw_find_collision(kw_params params, int delta_n, kw_collision* out) {
  return guarded([&] {
    require(out, "out");
    *out = from_site(find_collision(delta_n, make_params(params)));
  });
}

kw_status kw_collision_polynomial(kw_params params, int delta_n, double coeffs[5]) {
  return guarded([&] {
    require(coeffs, "coeffs");
    const auto c = collision_polynomial(delta_n, make_params(params));
    for (int i = 0; i < 5; ++i) coeffs[i] = c[static_cast<size_t>(i)];
  });
}

kw_status kw_quartic_discriminant(kw_params params, int delta_n, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = quartic_discriminant(delta_n, make_params(params));
  });
}

kw_status kw_isola_model_build(kw_params params, const kw_collision* site, double eps, kw_isola_model* out) {
  return guarded([&] {
    require(out, "out");
    *out = from_model(isola_model(to_site(site), make_params(params), eps));
  });
}

kw_status kw_isola_curve(const kw_isola_model* model, size_t samples, kw_curve_point* out, size_t capacity,
                         size_t* written) {
  kw_status status = KW_OK;
  const kw_status guard = guarded([&] {
    const IsolaModel m = to_model(model);
    status = emit(m.sample(samples), out, capacity, written, to_point);
  });
  return guard != KW_OK ? guard : status;
}

kw_status kw_ellipse_residual(const kw_isola_model* model, double lambda_re, double lambda_im, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = to_model(model).ellipse_residual({lambda_re, lambda_im});
  });
}

kw_status kw_m1(kw_params params, const kw_collision* site, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = M1(to_site(site), make_params(params));
  });
}

kw_status kw_lambda1(kw_params params, const kw_collision* site, double mu1, int branch, double* re, double* im) {
  return guarded([&] {
    require(re, "re");
    require(im, "im");
    const Lambda1 l = lambda1(mu1, to_site(site), make_params(params));
    const cdouble z = to_branch(branch) == Branch::plus ? l.plus : l.minus;
    *re = z.real();
    *im = z.imag();
  });
}

kw_status kw_s2(kw_params params, const kw_collision* site, double* fourier, double* closed) {
  return guarded([&] {
    const PhysicalParams p = make_params(params);
    const CollisionSite s = to_site(site);
    const double value = S2(s, p);
    if (fourier) *fourier = value;
    if (closed) *closed = S2_closed_form(p);
  });
}

kw_status kw_s3(kw_params params, const kw_collision* site, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = S3(to_site(site), make_params(params));
  });
}

kw_status kw_center_drift(kw_params params, const kw_collision* site, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = center_drift(to_site(site), make_params(params));
  });
}

kw_status kw_second_order_build(kw_params params, const kw_collision* site, double eps, const double* mu2_override,
                                kw_second_order* out) {
  return guarded([&] {
    require(out, "out");
    std::optional<double> mu2;
    if (mu2_override) mu2 = *mu2_override;
    const SecondOrderModel m = second_order_model(to_site(site), make_params(params), eps, 0, mu2);
    *out = {m.eps,        m.mu2,     m.regular ? 1 : 0,      m.mu_interval.lo,      m.mu_interval.hi,
            m.mu_star_shift, m.mu_star, m.lambda_star.real(), m.lambda_star.imag()};
  });
}

kw_status kw_second_order_curve(kw_params params, const kw_collision* site, double eps, size_t samples,
                                const double* mu2_override, kw_curve_point* out, size_t capacity,
                                size_t* written) {
  kw_status status = KW_OK;
  const kw_status guard = guarded([&] {
    std::optional<double> mu2;
    if (mu2_override) mu2 = *mu2_override;
    const SecondOrderModel m = second_order_model(to_site(site), make_params(params), eps, samples, mu2);
    status = emit(m.curve, out, capacity, written, to_point);
  });
  return guard != KW_OK ? guard : status;
}

kw_status kw_lambda2(kw_params params, const kw_collision* site, double mu1, double mu2, int branch, double* re,
                     double* im) {
  return guarded([&] {
    require(re, "re");
    require(im, "im");
    const cdouble z = lambda2(mu1, mu2, to_site(site), make_params(params), to_branch(branch));
    *re = z.real();
    *im = z.imag();
  });
}

kw_status kw_regular_curve_mu2(kw_params params, const kw_collision* site, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = regular_curve_mu2(to_site(site), make_params(params));
  });
}

kw_status kw_critical_point_quartic(kw_params params, const kw_collision* site, double eps, double coeffs[5]) {
  return guarded([&] {
    require(coeffs, "coeffs");
    const auto c = critical_point_quartic(to_site(site), make_params(params), eps);
    for (int i = 0; i < 5; ++i) coeffs[i] = c[static_cast<size_t>(i)];
  });
}

kw_status kw_hill_matrix(kw_params params, double eps, int modes, double mu, double* out, size_t capacity,
                         size_t* written) {
  return guarded([&] {
    require(written, "written");
    const HillProblem problem = HillProblem::make(make_params(params), eps, modes);
    const size_t size = static_cast<size_t>(2 * modes + 1);
    *written = 2 * size * size;
    if (!out) return;
    if (capacity < *written) throw BufferTooSmall{};
    const Eigen::MatrixXcd a = hill_matrix(problem, mu);
    for (size_t r = 0; r < size; ++r) {
      for (size_t c = 0; c < size; ++c) {
        const auto z = a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        out[2 * (r * size + c)] = z.real();
        out[2 * (r * size + c) + 1] = z.imag();
      }
    }
  });
}

kw_status kw_sweep(kw_params params, double eps, int modes, const double* mu, size_t count, unsigned threads,
                   kw_spectrum** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (count > 0) require(mu, "mu");
    for (size_t i = 0; i < count; ++i) {
      if (!std::isfinite(mu[i])) throw Error(ErrorCode::invalid_argument, "mu grid must be finite");
    }
    auto spectrum = std::make_unique<kw_spectrum>(kw_spectrum{HillProblem::make(make_params(params), eps, modes), {}});
    spectrum->slices = sweep(spectrum->problem, std::span<const double>(mu, count), threads);
    *out = spectrum.release();
  });
}

void kw_spectrum_destroy(kw_spectrum* spectrum) { delete spectrum; }

size_t kw_spectrum_slice_count(const kw_spectrum* spectrum) { return spectrum ? spectrum->slices.size() : 0; }

kw_status kw_spectrum_slice(const kw_spectrum* spectrum, size_t index, double* mu, double* re, double* im,
                            size_t capacity, size_t* written) {
  return guarded([&] {
    require(spectrum, "spectrum");
    require(written, "written");
    if (index >= spectrum->slices.size()) throw Error(ErrorCode::invalid_argument, "slice index out of range");
    const SpectrumSlice& slice = spectrum->slices[index];
    if (mu) *mu = slice.mu;
    *written = slice.eigenvalues.size();
    if (!re && !im) return;
    if (capacity < slice.eigenvalues.size()) throw BufferTooSmall{};
    for (size_t i = 0; i < slice.eigenvalues.size(); ++i) {
      if (re) re[i] = slice.eigenvalues[i].real();
      if (im) im[i] = slice.eigenvalues[i].imag();
    }
  });
}

void kw_extract_options_default(kw_extract_options* out) {
  if (!out) return;
  *out = {kDefaultGrowthFloor, 0.0, kDefaultMuTol, 1};
}

double kw_default_isola_radius(const kw_isola_model* model) {
  if (!model) return 0.0;
  return default_isola_radius(to_model(model));
}

kw_status kw_extract_isola(const kw_spectrum* spectrum, const kw_collision* site, const kw_extract_options* options,
                           kw_isola** out) {
  return guarded([&] {
    require(spectrum, "spectrum");
    require(options, "options");
    require(out, "out");
    *out = nullptr;
    ExtractOptions opts;
    opts.growth_floor = options->growth_floor;
    opts.isola_radius = options->isola_radius;
    opts.mu_tol = options->mu_tol;
    opts.refine_peak = options->refine_peak != 0;
    if (!(opts.mu_tol > 0.0)) throw Error(ErrorCode::invalid_argument, "mu_tol must be positive");
    auto isola = std::make_unique<kw_isola>();
    isola->numerics = extract_isola(spectrum->problem, spectrum->slices, to_site(site), opts);
    *out = isola.release();
  });
}

void kw_isola_destroy(kw_isola* isola) { delete isola; }

kw_status kw_isola_summary(const kw_isola* isola, kw_isola_numerics* out) {
  return guarded([&] {
    require(isola, "isola");
    require(out, "out");
    const IsolaNumerics& n = isola->numerics;
    *out = {n.empty ? 1 : 0,       n.mu_lo,      n.mu_hi,          n.mu_star,          n.lambda_star.real(),
            n.lambda_star.imag(),  n.lo_clipped ? 1 : 0, n.hi_clipped ? 1 : 0, n.points.size()};
  });
}

kw_status kw_isola_points(const kw_isola* isola, kw_curve_point* out, size_t capacity, size_t* written) {
  kw_status status = KW_OK;
  const kw_status guard = guarded([&] {
    require(isola, "isola");
    status = emit(isola->numerics.points, out, capacity, written, to_point);
  });
  return guard != KW_OK ? guard : status;
}

}  // extern "C"
