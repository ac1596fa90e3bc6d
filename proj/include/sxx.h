/* sxx - exact thermodynamics and entanglement detection for the XX spin-1/2
 * chain in a staggered magnetic field
 *
 *   H = -sum_l [ (J/2)(sx_l sx_{l+1} + sy_l sy_{l+1}) + (B + (-1)^l b) sz_l ]
 *
 * C API of the shared library. All functions are pure computations, return a
 * status code, and write results through out-pointers; they never touch
 * global state and are safe to call concurrently. The only stateful object
 * is the opaque sxx_oracle handle, which is immutable after creation and may
 * be shared across threads.
 *
 * Temperature convention: every `t` argument takes t > 0 for a thermal state
 * and t == 0.0 for the exact zero-temperature (ground state) limit. T = 0 is
 * handled symbolically, never as a large-beta stand-in.
 *
 * Units: energies in units of the exchange coupling scale; W is
 * dimensionless; entropies are in bits.
 */

#ifndef SXX_H
#define SXX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sxx_status {
  SXX_OK = 0,
  SXX_INVALID_ARGUMENT = 1,
  SXX_FINITE_T_REQUIRED = 2,       /* operation diverges / undefined at T = 0 */
  SXX_ZERO_T_REQUIRED = 3,         /* operation defined at T = 0 only */
  SXX_DEGENERATE_GROUND_STATE = 4, /* pure-state quantity, degenerate level */
  SXX_NO_SOLUTION = 5,
  SXX_INTERNAL_ERROR = 6
} sxx_status;

typedef enum sxx_parity {
  SXX_SITE_EVEN = 0, /* (-1)^l = +1, local field B + b */
  SXX_SITE_ODD = 1   /* (-1)^l = -1, local field B - b */
} sxx_parity;

const char* sxx_version(void);
const char* sxx_status_message(sxx_status status);

/* ---- closed forms -------------------------------------------------- */

/* Zero-temperature cutoff angle in [0, pi/2]: pi/2 for |B| < |b|,
 * acos(sqrt(B^2-b^2)/J) for |b| <= |B| <= sqrt(J^2+b^2), 0 beyond. */
sxx_status sxx_omega_cutoff(double J, double B, double b, double* omega);

/* lambda(omega) = 2B +/- 2 sqrt(J^2 cos^2 omega + b^2). */
sxx_status sxx_dispersion_cont(double J, double B, double b, double omega,
                               double* lambda_plus, double* lambda_minus);

/* Mode k of the open n-site chain (n even, k = 1..n/2):
 * dispersion at omega = pi k/(n+1). */
sxx_status sxx_dispersion_finite(double J, double B, double b, int n_sites, int k,
                                 double* lambda_plus, double* lambda_minus);

/* Bogoliubov angle theta_k, tan(2 theta_k) = b/[J cos(pi k/(n+1))],
 * 2 theta_k in [0, pi). */
sxx_status sxx_bogoliubov_angle(double J, double B, double b, int n_sites, int k,
                                double* theta);

/* ---- finite chain, analytic free-fermion route ---------------------- */

/* Fills lambda_plus/lambda_minus/theta (each of length n_sites/2) for
 * k = 1..n_sites/2. Any of the three pointers may be NULL to skip it. */
sxx_status sxx_mode_spectrum(double J, double B, double b, int n_sites,
                             double* lambda_plus, double* lambda_minus,
                             double* theta);

sxx_status sxx_ground_energy_finite(double J, double B, double b, int n_sites,
                                    double* energy);

/* ln Z of the n-site chain; t > 0 required. */
sxx_status sxx_log_partition_finite(double J, double B, double b, int n_sites,
                                    double t, double* ln_z);

/* Witness W = (2/(beta N)) d ln Z/dJ, evaluated analytically. |W| <= 1 on
 * every separable state; W > 1 certifies entanglement. */
sxx_status sxx_witness_finite(double J, double B, double b, int n_sites,
                              double t, double* witness);

/* Total magnetization sum_l <sz_l> and staggered sum_l (-1)^l <sz_l>. */
sxx_status sxx_magnetization_finite(double J, double B, double b, int n_sites,
                                    double t, double* magnetization);
sxx_status sxx_staggered_magnetization_finite(double J, double B, double b,
                                              int n_sites, double t,
                                              double* staggered);

/* ---- thermodynamic limit (per-site densities) ----------------------- */

/* Per-site ln Z; t > 0 required. */
sxx_status sxx_log_partition_density(double J, double B, double b, double t,
                                     double* density);

sxx_status sxx_witness_thermo(double J, double B, double b, double t,
                              double* witness);

sxx_status sxx_magnetization_density(double J, double B, double b, double t,
                                     double* magnetization);

sxx_status sxx_staggered_magnetization_density(double J, double B, double b,
                                               double t, double* staggered);

/* Sublattice occupation eta = (1 + m + (-1)^l m_s)/2 in [0,1]. Finite t is
 * computed from the same combination of finite-T densities; only the t = 0
 * value carries the pure-state entanglement meaning. */
sxx_status sxx_site_occupation(double J, double B, double b, sxx_parity parity,
                               double t, double* eta);

/* Single-site entanglement entropy (bits) of the T = 0 ground state.
 * Returns SXX_ZERO_T_REQUIRED for t > 0; eta may be NULL. */
sxx_status sxx_site_entropy(double J, double B, double b, sxx_parity parity,
                            double t, double* eta, double* entropy);

/* ---- phase-boundary and feature extraction -------------------------- */

/* Outermost B >= 0 with W(J, B, b, t) = 1. *found is 0/1; B_star and
 * bracket (final bisection width, <= 1e-8) are written only when found.
 * Either of B_star/bracket may be NULL. */
sxx_status sxx_witness_boundary_field(double J, double b, double t, int* found,
                                      double* B_star, double* bracket);

/* Critical staggered field: W(J, B=0, b_c, T=0) = 1; b_c ~ 0.56 J.
 * tol >= 1e-8 is the bisection width in b. */
sxx_status sxx_critical_staggered_field(double J, double tol, double* b_c);

/* Field B_peak(b) where the odd-site T = 0 entropy reaches 1, with
 * epsilon = B_peak - b > 0 and b < B_peak <= sqrt(J^2 + b^2). With b = 0 the
 * peak degenerates to B = 0 and *degenerate is set. Even parity with b > 0
 * returns SXX_NO_SOLUTION. epsilon/degenerate may be NULL. */
sxx_status sxx_max_entropy_field(double J, double b, sxx_parity parity,
                                 double* B_peak, double* epsilon,
                                 int* degenerate);

/* *witnessed = 1 iff W > 1 (entanglement certified). 0 means the witness is
 * silent, which is NOT a separability statement. */
sxx_status sxx_classify_point(double J, double B, double b, double t,
                              int* witnessed);

/* ---- dense exact-diagonalization oracle (n_sites <= 12) ------------- */

typedef struct sxx_oracle sxx_oracle;

/* Builds the 2^n Hamiltonian and diagonalizes it. Free with
 * sxx_oracle_free(). */
sxx_status sxx_oracle_create(double J, double B, double b, int n_sites,
                             sxx_oracle** out);
void sxx_oracle_free(sxx_oracle* oracle);

sxx_status sxx_oracle_dim(const sxx_oracle* oracle, int* dim);

/* Copies the full ascending spectrum; capacity must be >= dim. */
sxx_status sxx_oracle_eigenvalues(const sxx_oracle* oracle, double* out,
                                  int capacity);

sxx_status sxx_oracle_ground_energy(const sxx_oracle* oracle, double* energy);
sxx_status sxx_oracle_log_partition(const sxx_oracle* oracle, double t,
                                    double* ln_z);

/* Thermal-state witness from raw correlators; at t == 0 the average over the
 * (near-)degenerate ground eigenspace. */
sxx_status sxx_oracle_witness(const sxx_oracle* oracle, double t,
                              double* witness);

/* <sz> at site 1..n. */
sxx_status sxx_oracle_site_magnetization(const sxx_oracle* oracle, double t,
                                         int site, double* sz);

/* Ground-state single-site entropy; SXX_DEGENERATE_GROUND_STATE when the
 * ground level is degenerate (gap < 1e-10). */
sxx_status sxx_oracle_ground_site_entropy(const sxx_oracle* oracle, int site,
                                          double* entropy);

#ifdef __cplusplus
}
#endif

#endif /* SXX_H */
