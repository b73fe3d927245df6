#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lerchsum/complex_core.hpp"
#include "lerchsum/numtheory.hpp"

namespace lerchsum {

enum class IdentityId { theorem, tan_sum, product_ex2, product_ex3, product_ex4, catalan, recurrence };

std::string_view to_string(IdentityId id) noexcept;
// Throws a validation Error for unknown names.
IdentityId identity_from_string(std::string_view name);

enum class ProductCase { ex2, ex3, ex4 };

IdentityId to_identity(ProductCase c) noexcept;

// evaluated:      both sides computed from strict-valid parameters
// invalid:        parameters rejected by validation, nothing computed
// known_suspect:  n = 2; both sides computed and recorded, never asserted
// error:          evaluation raised (pole proximity, non-convergence, ...)
enum class ReportStatus { evaluated, invalid, known_suspect, error };

std::string_view to_string(ReportStatus status) noexcept;

struct IdentityReport {
  IdentityId identity_id = IdentityId::theorem;
  std::vector<std::pair<std::string, std::string>> params;  // name -> complex literal
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  ReportStatus status = ReportStatus::evaluated;
  std::string notes;
};

/// Fills residuals and `pass`: relative residual against max(|lhs|, |rhs|),
/// falling back to the absolute residual when both sides are below 1.
void score(IdentityReport& report);

// --- Prime-indexed sum of Lerch functions --------------------------------
//
//   sum_{p<n} [ log^k(a) - i^k 2^{k+1} e^{2i(mn + pi p q)/n}
//               Phi(-e^{2i(m + p pi q/n)}, -k, 1 - (i/2) log a) ]
//     = n [ log^k(a) - 2^{k+1} (in)^k e^{2imn} Phi(-e^{2imn}, -k, 1 - i log(a)/(2n)) ]

Complex theorem_lhs(const TheoremParams& p, double tol);
Complex theorem_rhs(const TheoremParams& p, double tol);
IdentityReport check_theorem(const TheoremParams& p, double tol, ValidationMode mode = ValidationMode::strict);

/// sum_{p<n} tan(m + pi p q / n) = n tan(m n)
IdentityReport check_tan_sum(Complex m, std::int64_t n, std::int64_t q, double tol);

struct ProductArgs {
  Complex x;  // ex2, ex3
  Complex m;  // ex4
  Complex r;  // ex4
};

struct ProductSides {
  Complex lhs;
  Complex rhs;
};

/// Both sides of the trigonometric product identities; throws a pole Error
/// when a secant or tangent argument is within 1e-6 of a cosine zero.
ProductSides product_sides(ProductCase which, const ProductArgs& args, std::int64_t n, std::int64_t q);
IdentityReport check_product_identity(ProductCase which, const ProductArgs& args, std::int64_t n, std::int64_t q,
                                      double tol);

/// Catalan's constant by the alternating defining series with
/// Cohen-Rodriguez Villegas-Zagier acceleration; absolute error < tol.
double catalan_constant(double tol);

/// sum_{p<n} n e^{2i(pi p q + pi)/n} Phi(-e^{2i(p pi q/n + pi/n)}, 2, 1 - n/2) = 4K
Complex catalan_sum_lhs(std::int64_t n, std::int64_t q, double tol);
IdentityReport check_catalan_sum(std::int64_t n, std::int64_t q, double tol);

struct RecurrenceParams {
  Complex z;
  Complex s;
  Complex a;
  std::int64_t q = 1;
};

/// Phi(z,s,a) = -w Phi(w z,s,a) - w^2 Phi(w^2 z,s,a) + 3^{1-s} z^2 Phi(z^3,s,(a+2)/3),
/// w = e^{2 i pi q / 3}. All four values come from the series.
IdentityReport check_recurrence(const RecurrenceParams& p, double tol);

/// sum_{p<n} e^{2 pi i p q (j+1) / n}: n when n | q(j+1), else 0.
Complex roots_of_unity_sum(std::int64_t n, std::int64_t q, std::int64_t j);

}  // namespace lerchsum
