#pragma once

// Command layer behind tools/ulrich. Each command writes a plain-text summary
// to `out`, diagnostics to `err`, and returns a stable exit code.

#include "ulrich/abstractlattice.hpp"
#include "ulrich/app/config.hpp"
#include "ulrich/cohomology.hpp"
#include "ulrich/polyring/parse.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace ulrich::app {

inline constexpr const char* kToolName = "ulrich";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kNodeFailure = 3,
  kRefutedNumerical = 4,
  kRefutedInvariance = 5,
  kRefutedEvenEight = 6,
  kRefutedEffectivity = 7,
  kIntegrityError = 8,
  kUncertifiedInput = 9,
  kUndecided = 10,
  kUnsupportedShape = 11,
};

inline int exitCodeFor(Verdict v) {
  switch (v) {
    case Verdict::Certified: return kOk;
    case Verdict::RefutedNumerical: return kRefutedNumerical;
    case Verdict::RefutedEvenEight: return kRefutedEvenEight;
    case Verdict::RefutedInvariance: return kRefutedInvariance;
    case Verdict::RefutedEffectivity: return kRefutedEffectivity;
    case Verdict::UndecidedEffectivity: return kUndecided;
  }
  return kCheckFailed;
}

/// Write via a temporary file in the same directory, then rename over path.
inline void writeFileAtomically(const std::filesystem::path& path, const std::string& data) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw InputError("cannot write " + tmp.string());
    o << data;
    if (!o.flush()) throw InputError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

inline std::string utcTimestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

/// {header: {tool, version, timestamp, body_sha256}, body}.
inline nlohmann::ordered_json wrapWithHeader(const nlohmann::ordered_json& body) {
  nlohmann::ordered_json doc;
  doc["header"] = {{"tool", kToolName},
                   {"version", kToolVersion},
                   {"timestamp", utcTimestamp()},
                   {"body_sha256", sha256Hex(body.dump())}};
  doc["body"] = body;
  return doc;
}

/// Parsed document whose body digest matches its header.
inline nlohmann::ordered_json readVerifiedDocument(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw InputError("no such file: " + path.string());
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(readFile(path));
  } catch (const nlohmann::json::exception& e) {
    throw IntegrityError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("header") || !doc.contains("body") || !doc["header"].contains("body_sha256"))
    throw IntegrityError("document lacks header.body_sha256 or body");
  const std::string expected = doc["header"]["body_sha256"].is_string() ? doc["header"]["body_sha256"].get<std::string>() : "";
  const std::string actual = sha256Hex(doc["body"].dump());
  if (expected != actual) throw IntegrityError("body digest mismatch: header says " + expected + ", body hashes to " + actual);
  return doc;
}

struct Surface {
  Genus2Curve curve;
  PrimeField field;
  KummerQuartic<PrimeField> quartic;
};

inline Surface loadSurface(const RunConfig& c) {
  try {
    Genus2Curve curve(c.roots);
    PrimeField field(c.prime);
    auto ring = makeRing(field);
    KummerQuartic<PrimeField> q(parsePolynomial(ring, quarticText(c)));
    return {std::move(curve), field, std::move(q)};
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
}

// ---------------------------------------------------------------------------

inline int cmdNodes(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Surface s = loadSurface(c);
  const auto report = verifySixteenNodes(s.quartic, s.curve);
  nlohmann::ordered_json body;
  body["prime"] = c.prime;
  auto rows = nlohmann::ordered_json::array();
  out << "label  point                 singular\n";
  for (const auto& n : report.nodes) {
    out << std::left << std::setw(6) << n.label.name() << " " << std::setw(21) << n.point.toString() << " "
        << (n.singular ? "yes" : "NO") << "\n";
    rows.push_back({{"label", n.label.name()}, {"point", n.point.toString()}, {"singular", n.singular}});
  }
  body["nodes"] = std::move(rows);
  body["pairwise_distinct"] = report.pairwiseDistinct;
  if (report.hilbert) {
    body["singular_locus"] = {{"codimension", report.hilbert->codimension},
                              {"degree", report.hilbert->degree.str()},
                              {"groebner_basis_size", report.groebnerSize}};
    out << "singular locus: codim " << report.hilbert->codimension << ", degree " << report.hilbert->degree
        << " (" << report.groebnerSize << " Groebner generators, " << report.stats.pairsConsidered << " S-pairs considered)\n";
  }
  body["passed"] = report.passed;
  if (!report.passed) body["failure"] = report.failure;
  if (!c.outputPath.empty()) writeFileAtomically(c.outputPath, wrapWithHeader(body).dump(2) + "\n");
  if (!report.passed) {
    err << "node verification failed: " << report.failure << "\n";
    return kNodeFailure;
  }
  out << "all 16 nodes verified\n";
  return kOk;
}

inline void printCertificateSummary(const UlrichCertificate& cert, std::ostream& out) {
  for (const auto& k : cert.checks) {
    std::string v = k.value.is_string() ? k.value.get<std::string>() : "";
    if (k.value.is_object() && k.value.contains("h0")) v = "h0 = " + k.value["h0"].dump();
    if (k.value.is_object() && k.value.contains("codimension"))
      v = "codim " + k.value["codimension"].dump() + ", degree " + k.value["degree"].dump();
    if (k.value.is_object() && k.value.contains("even_eight")) v = k.value["even_eight"].get<bool>() ? "even eight" : "not even";
    out << (k.pass ? "  pass  " : "  FAIL  ") << std::left << std::setw(22) << k.name << " " << v << "\n";
  }
  out << "verdict: " << verdictName(cert.verdict) << " (" << cert.reason << ")\n";
}

inline int cmdCertify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Surface s = loadSurface(c);
  UlrichCertificate cert;
  try {
    cert = certifyUlrich(s.curve, s.quartic, mRecipe(c));
  } catch (const NodeVerificationError& e) {
    err << "node verification failed: " << e.what() << "\n";
    return kNodeFailure;
  } catch (const UnsupportedShapeError& e) {
    err << "unsupported class shape: " << e.what() << "\n";
    return kUnsupportedShape;
  }
  out << "M = " << cert.m.toString() << "\n";
  printCertificateSummary(cert, out);
  if (cert.enriques) out << "enriques: " << cert.enriques->conclusion << "\n";
  if (!c.outputPath.empty()) {
    writeFileAtomically(c.outputPath, wrapWithHeader(certificateBody(cert)).dump(2) + "\n");
    out << "certificate written to " << c.outputPath << "\n";
  }
  return exitCodeFor(cert.verdict);
}

inline int cmdDescend(const std::filesystem::path& certPath, const std::string& outPath, std::ostream& out,
                      std::ostream& err) {
  UlrichCertificate cert;
  try {
    cert = certificateFromBody(readVerifiedDocument(certPath)["body"]);
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kIntegrityError;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kUncertifiedInput;
  } catch (const std::invalid_argument& e) {
    err << "integrity error: " << e.what() << "\n";
    return kIntegrityError;
  }
  EnriquesReport r;
  try {
    r = descendToEnriques(cert);
  } catch (const DescentError& e) {
    err << "no descent: " << e.what() << "\n";
    return kUncertifiedInput;
  }
  out << "H_Y^2 = " << r.hY2 << "\nN.H_Y = " << r.nDotH << "\nN^2 = " << r.n2 << "\nchi(H_Y) = " << r.chiHY
      << "\nh0(H_Y) = h0(K_Y + H_Y) = " << r.h0HY << "\nchi(N) = chi(N + K_Y) = " << r.chiN << "\n";
  for (const auto& st : r.transfer.steps) out << "  [" << st.citation << "] " << st.conclusion << "\n";
  out << r.conclusion << "\n";
  if (!outPath.empty()) writeFileAtomically(outPath, wrapWithHeader(enriquesJson(r)).dump(2) + "\n");
  return kOk;
}

// ---------------------------------------------------------------------------
// lattice subcommands

inline LatticeGram corpusK3Lattice() {
  const auto dir = corpusDir();
  LatticeGram u(parseIntegerMatrix(readFile(dir / "U.gram")), {"v1", "v2"});
  LatticeGram e8(parseIntegerMatrix(readFile(dir / "E8m1.gram")), {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"});
  return k3Lattice(u, e8);
}

inline int latticeThetaCheck(std::ostream& out) {
  const Involution theta = buildThetaStar();
  const bool inv = theta.squaresToIdentity();
  const std::size_t pairs = theta.preservedPairs();
  bool tropes = true;
  for (const auto& t : allTropeLabels()) tropes &= selfIntersection(trope(t)) == -2;
  const bool h = isInvariant(theta, polarizationClass());
  const bool m = isInvariant(theta, threeLMinusNodes(referenceUlrichNodes()));
  out << "theta*^2 = id: " << (inv ? "yes" : "NO") << "\n"
      << "pairings preserved: " << pairs << " / " << kPicardRank * (kPicardRank + 1) / 2 << "\n"
      << "all tropes have square -2: " << (tropes ? "yes" : "NO") << "\n"
      << "theta* H_X = H_X: " << (h ? "yes" : "NO") << "\n"
      << "theta* M = M: " << (m ? "yes" : "NO") << "\n";
  return inv && theta.isIsometry() && tropes && h && m ? kOk : kCheckFailed;
}

inline int latticeIncidence(std::ostream& out) {
  const IncidenceTable t = incidenceConfiguration();
  out << "      ";
  for (const auto& tl : t.tropes) out << std::setw(5) << tl.name();
  out << "\n";
  for (std::size_t a = 0; a < 16; ++a) {
    out << std::left << std::setw(6) << allNodeLabels()[a].name() << std::right;
    for (std::size_t b = 0; b < 16; ++b) out << std::setw(5) << t.entries[a][b].str();
    out << "\n";
  }
  const bool ok = t.isSixteenSixConfiguration();
  out << "(16)_6 configuration: " << (ok ? "yes" : "NO") << "\n";
  return ok ? kOk : kCheckFailed;
}

inline int latticeEvenEights(std::ostream& out) {
  const auto sweep = sweepEvenEights(DivisorLattice(defaultPicGenerators()));
  for (const auto& e : sweep.evenEights) {
    for (const auto& l : e) out << l.name() << " ";
    out << "\n";
  }
  out << "subsets tested: " << sweep.subsetsTested << ", even eights: " << sweep.evenEights.size()
      << ", closed under complement: " << (sweep.closedUnderComplement ? "yes" : "NO") << "\n";
  return sweep.closedUnderComplement ? kOk : kCheckFailed;
}

inline int latticeHorikawa(std::ostream& out) {
  const LatticeGram lambda = corpusK3Lattice();
  const auto inv = invariantSublattice(lambda, buildVartheta());
  const auto sig = inv.lattice.signature();
  const Integer det = inv.lattice.determinant();
  const auto lsig = lambda.signature();
  out << "Lambda: rank " << lambda.rank() << ", det " << lambda.determinant() << ", signature (" << lsig.positive << ","
      << lsig.negative << ")\n";
  out << "invariant sublattice: rank " << inv.lattice.rank() << ", det " << det << ", signature (" << sig.positive << ","
      << sig.negative << "), all entries even: " << (inv.lattice.allEntriesEven() ? "yes" : "no") << "\n";
  out << "Gram matrix:\n" << inv.lattice.gram.toString();
  const bool ok = inv.lattice.rank() == 10 && det == -1024 && sig.positive == 1 && sig.negative == 9 &&
                  inv.lattice.allEntriesEven();
  return ok ? kOk : kCheckFailed;
}

inline int cmdLattice(const std::string& sub, std::ostream& out, std::ostream& err) {
  if (sub == "theta-check") return latticeThetaCheck(out);
  if (sub == "incidence") return latticeIncidence(out);
  if (sub == "even-eights") return latticeEvenEights(out);
  if (sub == "horikawa") return latticeHorikawa(out);
  err << "unknown lattice subcommand '" << sub << "'\n";
  return kConfigError;
}

// ---------------------------------------------------------------------------

inline int runMain(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Ulrich line bundle certificates for a Kummer quartic and its Enriques quotient"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string configPath, outPath;
  bool paper = false;
  std::optional<std::uint32_t> prime;
  app.add_option("--config", configPath, "INI run configuration");
  app.add_flag("--paper-defaults", paper, "use the reference curve, quartic and M");
  app.add_option("--prime", prime, "override the prime");
  app.add_option("--out", outPath, "write the JSON report here");

  auto* nodes = app.add_subcommand("nodes", "list and verify the 16 nodes");
  auto* certify = app.add_subcommand("certify", "run the Ulrich certificate chain");
  auto* lattice = app.add_subcommand("lattice", "lattice checks that need no geometry");
  std::string latticeSub;
  lattice->add_option("check", latticeSub, "theta-check | incidence | even-eights | horikawa")
      ->required()
      ->check(CLI::IsMember({"theta-check", "incidence", "even-eights", "horikawa"}));
  auto* descend = app.add_subcommand("descend", "Enriques report from a certified certificate");
  std::string certPath;
  descend->add_option("certificate", certPath, "certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*lattice) return cmdLattice(latticeSub, out, err);
    if (*descend) return cmdDescend(certPath, outPath, out, err);

    if (configPath.empty() == !paper) {
      err << "give exactly one of --config <path> or --paper-defaults\n";
      return kConfigError;
    }
    RunConfig c = paper ? paperDefaults() : loadConfig(configPath);
    if (prime) c.prime = *prime;
    if (!outPath.empty()) c.outputPath = outPath;
    validate(c);
    if (*nodes) return cmdNodes(c, out, err);
    if (*certify) return cmdCertify(c, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kUncertifiedInput;
  }
  return kConfigError;
}

}  // namespace ulrich::app
