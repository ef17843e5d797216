#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ghyp/random.hpp"

namespace ghyp::dist {

// Signals a moment that does not exist for the given parameter case.
class undefined_moment : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class GigCase {
  General,          // delta > 0, gamma > 0
  Gamma,            // delta = 0 limit (lambda > 0)
  ReciprocalGamma,  // gamma = 0 limit (lambda < 0)
};

// Parameters of the generalized inverse Gaussian law with density
// proportional to w^{lambda-1} exp(-(delta^2/w + gamma^2 w)/2) on w > 0.
// Domain: lambda < 0 requires delta > 0, gamma >= 0; lambda = 0 requires
// delta > 0, gamma > 0; lambda > 0 requires delta >= 0, gamma > 0.
class GigParams {
 public:
  GigParams(double lambda, double delta, double gamma);

  double lambda() const { return lambda_; }
  double delta() const { return delta_; }
  double gamma() const { return gamma_; }
  GigCase boundary_case() const { return case_; }

  bool operator==(const GigParams&) const = default;

 private:
  double lambda_, delta_, gamma_;
  GigCase case_;
};

double gig_logpdf(const GigParams& p, double w);
double gig_pdf(const GigParams& p, double w);

// E[W^k]; throws undefined_moment when the moment does not exist
// (gamma = 0 needs k < -lambda, delta = 0 needs k > -lambda).
double gig_moment(const GigParams& p, int k);

// One draw / n i.i.d. draws.  Boundary cases use exact gamma and
// reciprocal-gamma transforms; the interior case uses rejection from a
// three-piece envelope of the log-concave density of log W.
double gig_sample(const GigParams& p, RandomStream& rng);
std::vector<double> gig_sample(const GigParams& p, RandomStream& rng,
                               std::size_t n);

}  // namespace ghyp::dist
