#pragma once

// Numerics on the Enriques quotient Y = X / theta. Intersection numbers of
// classes pulled back along the etale double cover are twice those on Y, and
// Riemann-Roch on Y reads chi(D) = 1 + D^2 / 2. K_Y is tracked numerically
// only (2K_Y = 0, K_Y.D = 0).

#include "ulrich/exactalg/scalar.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulrich {

struct EnriquesClass {
  std::string name;
  Integer selfIntersection;
  Integer dotWithH;
};

/// chi(O_Y(D)) = 1 + D^2 / 2; D^2 is even on an Enriques surface.
inline Integer chiEnriques(const EnriquesClass& d) {
  if (d.selfIntersection % 2 != 0)
    throw std::domain_error("odd self-intersection " + d.selfIntersection.str() + " for " + d.name +
                            " is impossible on an Enriques surface");
  return 1 + d.selfIntersection / 2;
}

/// Pairing on Y from the pairing of pullbacks on X.
inline Integer halve(const Integer& xPairing) {
  if (xPairing % 2 != 0)
    throw std::domain_error("odd pairing " + xPairing.str() + " does not descend to the Enriques quotient");
  return xPairing / 2;
}

/// Keys of the facts an uncomputed inference may rest on.
inline constexpr std::array<std::string_view, 9> kCitations = {
    "ulrich-certificate",           // M is H_X-Ulrich on the K3 cover
    "invariant-classes-descend",    // theta*-invariant classes are pullbacks from Y
    "finite-pushforward-ulrich",    // E is H-Ulrich iff phi_*E is Ulrich for finite phi
    "etale-pushforward-splitting",  // sigma_* sigma^* N = N + N(K_Y)
    "ample-pullback",               // D ample on Y iff sigma^*D ample on X
    "effective-doubling",           // |D| nonempty implies |2D| nonempty
    "exceptional-twist",            // (-2)-curves with D.E < 0 are fixed components of |D|
    "semicontinuity",               // h^0 over F_p bounds h^0 in characteristic 0
    "doubled-section-tangency",     // a doubled curve in Q.X forces Q tangent to X along it
};

inline bool isWhitelistedCitation(std::string_view c) {
  return std::find(kCitations.begin(), kCitations.end(), c) != kCitations.end();
}

/// One uncomputed logical step recorded in a certificate.
struct DescentInference {
  std::string premise;
  std::string conclusion;
  std::string citation;

  DescentInference(std::string p, std::string c, std::string cite)
      : premise(std::move(p)), conclusion(std::move(c)), citation(std::move(cite)) {
    if (!isWhitelistedCitation(citation)) throw std::invalid_argument("unknown citation '" + citation + "'");
  }
};

using CitedInference = DescentInference;

struct TransferResult {
  bool complete = false;
  std::vector<DescentInference> steps;
  std::string failedPremise;  // empty when complete
};

/// Pullback invariance, then pushforward Ulrich, then the summand N.
inline TransferResult ulrichTransfer(bool certified, bool invariant) {
  TransferResult r;
  if (!certified) {
    r.failedPremise = "M is H_X-Ulrich (certificate not established)";
    return r;
  }
  if (!invariant) {
    r.failedPremise = "M and H_X are theta*-invariant (required for M = sigma^*N, H_X = sigma^*H_Y)";
    return r;
  }
  r.steps.emplace_back("M and H_X are theta*-invariant", "M = sigma^*N and H_X = sigma^*H_Y for line bundles N, H_Y on Y",
                       "invariant-classes-descend");
  r.steps.emplace_back("M is H_X-Ulrich and sigma is finite with H_X = sigma^*H_Y",
                       "F = sigma_*M = N + N(K_Y) is H_Y-Ulrich", "finite-pushforward-ulrich");
  r.steps.emplace_back("F = N + N(K_Y) is H_Y-Ulrich", "N is H_Y-Ulrich (and so is N(K_Y))",
                       "etale-pushforward-splitting");
  r.complete = true;
  return r;
}

struct EnriquesReport {
  Integer hY2;     // H_Y^2
  Integer nDotH;   // N.H_Y
  Integer n2;      // N^2
  Integer chiHY;   // chi(H_Y) = h^0(H_Y) = h^0(K_Y + H_Y)
  Integer h0HY;
  Integer chiN;
  Integer chiNK;  // chi(N + K_Y), numerically equal to chi(N)
  TransferResult transfer;
  std::vector<DescentInference> supporting;
  std::string conclusion;
};

/// Y-side numbers from the X-side pairings H_X^2, M.H_X, M^2.
inline EnriquesReport enriquesNumerics(const Integer& hx2, const Integer& mDotH, const Integer& m2, bool certified,
                                       bool invariant) {
  EnriquesReport r;
  r.hY2 = halve(hx2);
  r.nDotH = halve(mDotH);
  r.n2 = halve(m2);
  r.chiHY = chiEnriques({"H_Y", r.hY2, r.hY2});
  // H_Y is ample, so h^1 = h^2 = 0 by Kodaira vanishing (H_Y - K_Y ample).
  r.h0HY = r.chiHY;
  r.chiN = chiEnriques({"N", r.n2, r.nDotH});
  r.chiNK = chiEnriques({"N+K_Y", r.n2, r.nDotH});
  r.transfer = ulrichTransfer(certified, invariant);
  if (r.transfer.complete)
    r.supporting.emplace_back("H_X = sigma^*H_Y is ample", "H_Y is ample", "ample-pullback");
  r.conclusion = r.transfer.complete ? "N is H_Y-Ulrich" : "no descent: " + r.transfer.failedPremise;
  return r;
}

}  // namespace ulrich
