#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace capflow::symm {

/// Principal curvatures kappa_1..kappa_n of a point on a hypersurface.
struct CurvatureVector {
  std::vector<double> kappa;

  CurvatureVector() = default;
  explicit CurvatureVector(std::vector<double> k) : kappa(std::move(k)) {}
  CurvatureVector(std::initializer_list<double> k) : kappa(k) {}

  int n() const { return static_cast<int>(kappa.size()); }

  /// Throws std::domain_error unless n >= 2 and all entries are finite.
  void validate() const;
};

/// Largest k such that H_1,...,H_k are all strictly positive (0 if H_1 <= 0).
/// Nesting holds by construction: membership in the k-th cone implies all
/// lower ones.
struct ConeClass {
  int max_k = 0;
};

/// Value and diagonal derivatives of F = H_k^{1/k} at a diagonal Weingarten
/// matrix. Off-diagonal derivatives are never materialized; every caller
/// diagonalizes first.
struct SymmDerivatives {
  double F_value = 0.0;
  std::vector<double> F_diag; // dF/dkappa_i
};

/// Cone precondition failure; carries the classification of the offending
/// curvature vector.
class ConeError : public std::runtime_error {
public:
  ConeError(const std::string& msg, ConeClass cone, int node = -1)
      : std::runtime_error(msg), cone(cone), node(node) {}
  ConeClass cone;
  int node; // grid node index when raised by a field evaluation, else -1
};

/// Binomial coefficient as a double (exact for the small arguments used here).
double binomial(int n, int k);

/// All elementary symmetric polynomials e_0..e_kmax of the given values,
/// by the one-value-at-a-time recurrence e_j += x * e_{j-1}. O(n*kmax).
std::vector<double> elementary_all(std::span<const double> values, int kmax);

/// k-th elementary symmetric polynomial; sigma_0 = 1.
/// Throws std::domain_error unless 0 <= k <= n.
double sigma_k(const CurvatureVector& kv, int k);

/// sigma_k with entry i removed, recomputed by the recurrence on the reduced
/// list (never by dividing out, which fails when kappa_i = 0).
double sigma_k_excluding(const CurvatureVector& kv, int k, int i);

/// Normalized mean curvature H_k = sigma_k / C(n,k).
double normalized_hk(const CurvatureVector& kv, int k);

ConeClass cone_class(const CurvatureVector& kv);

/// F = H_k^{1/k} and its diagonal derivatives
///   F_diag[i] = (1/k) H_k^{1/k-1} sigma_{k-1}(kappa|i) / C(n,k).
/// Requires kappa in the k-th cone; throws ConeError otherwise.
SymmDerivatives f_and_derivatives(const CurvatureVector& kv, int k);

/// Residuals and inequality gaps for the symmetric-function lemmas at one
/// curvature vector. Identity residuals are relative; gap signs follow the
/// convention "gap >= 0 means the inequality holds".
struct LemmaReport {
  int k = 0;
  ConeClass cone;
  bool in_gamma_k = false;
  bool in_gamma_n = false;

  // identity residuals, max over i where applicable
  double identity_split = 0.0;      // sigma_k = sigma_k(|i) + kappa_i sigma_{k-1}(|i)
  double identity_count = 0.0;      // sum sigma_k(|i) = (n-k) sigma_k
  double identity_euler = 0.0;      // sum kappa_i sigma_{k-1}(|i) = k sigma_k
  double identity_square = 0.0;     // sum kappa_i^2 sigma_{k-1}(|i) = sigma_1 sigma_k - (k+1) sigma_{k+1}

  // Newton-MacLaurin chain gaps H_{j-1}^{1/(j-1)} - H_j^{1/j}, j = 2..k
  // (needs the k-th cone)
  std::vector<double> nm_chain_gaps;

  // sum F^ii kappa_i^2 - F^2 (needs the positive cone)
  std::optional<double> speed_bound_gap;

  // max over i of (kappa_1 - kappa_i)(F^ii/kappa_1^2 - F^11/kappa_i^2),
  // must be <= 0 (needs the positive cone)
  std::optional<double> pinch_bound_max;
};

LemmaReport lemma_checks(const CurvatureVector& kv, int k);

} // namespace capflow::symm
