// Purity of the A2 cocycles sigma_lambda: is some H-linear gauge of sigma an
// exponential e^eta of an invariant Hochschild cocycle?
#pragma once

#include <array>
#include <optional>
#include <string>

#include "hopflab/hochschild.hpp"

namespace hopflab {

struct PurityVerdict {
  enum class Tag { Pure, Exponential, Trivial };
  Tag tag = Tag::Pure;
  // Exponential / Trivial: witnesses with alpha -> sigma = e^eta.
  EtaCoeffs eta;
  Functional alpha;
  std::optional<Rational> t;
  bool witness_verified = false;
  // Pure: the first Cbar condition the forced family violates.
  std::string violated;

  bool fast_pure = false;   // Cbar conditions on the forced family
  CommonRoot solve;         // all entries of alpha_t -> sigma - e^(eta_t) in t
  Scalar alpha_top;         // alpha_t(top) solved from one entry, as a polynomial in t
  bool alpha_matches_closed_form = false;  // alpha_t(top) = eta212 - lambda12
  bool paths_agree = false;
};

std::string tag_name(PurityVerdict::Tag tag);

// Forced family eta_t: eta1 = l1, eta2 = l2, eta121 = t,
// eta212 = l12 + 2 q12 l1 l2 - t, in the space {t}.
EtaCoeffs forced_eta(const std::array<Rational, 3>& lambda, const Rational& q12, const SpacePtr& space_t);

// sigma_lambda must be the numeric cocycle of the A2 example at `lambda`.
PurityVerdict purity_decide(const BraidedBialgebra& b, const Tables& t, const Functional& sigma_lambda,
                            const std::array<Rational, 3>& lambda, Exec exec = Exec::Parallel);

}  // namespace hopflab
