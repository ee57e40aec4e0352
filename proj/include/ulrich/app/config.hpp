#pragma once

// Run configuration: an INI file with sections
//
//   [curve]    roots = 1, -1, 2, -2, 3, -3     prime = 32003
//   [quartic]  source = corpus:kummer_quartic | inline     text = <polynomial>
//   [ulrich]   m_nodes = E0 E16 ... (twelve labels)  or  m_class = <expression>
//   [output]   path = certificate.json

#include "ulrich/kummer.hpp"
#include "ulrich/piclattice.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef ULRICH_DEFAULT_CORPUS_DIR
#define ULRICH_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace ulrich::app {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or unreadable input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCorpusPrefix = "corpus:";

struct RunConfig {
  std::uint32_t prime = kDefaultPrime;
  std::array<Rational, 6> roots = Genus2Curve::reference().roots();
  std::string quarticSource = "corpus:kummer_quartic";
  std::string quarticInline;  // used when quarticSource == "inline"
  std::vector<NodeLabel> mNodes = referenceUlrichNodes();
  std::optional<std::string> mClass;  // overrides mNodes when set
  std::string outputPath;
};

inline RunConfig paperDefaults() { return RunConfig{}; }

inline std::filesystem::path corpusDir() {
  if (const char* env = std::getenv("ULRICH_CORPUS_DIR"); env && *env) return env;
  return ULRICH_DEFAULT_CORPUS_DIR;
}

inline std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace detail {

inline std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace detail

/// Checks that do not need any computation: prime, distinct roots, a recipe
/// of twelve distinct node labels or a parseable class.
inline void validate(const RunConfig& c) {
  try {
    PrimeField check(c.prime);
    (void)check;
    Genus2Curve curve(c.roots);
    (void)curve;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.mClass) {
    try {
      (void)parseDivisorClass(*c.mClass);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("m_class: ") + e.what());
    }
  } else {
    if (c.mNodes.size() != 12)
      throw ConfigError("m_nodes must list 12 node labels, got " + std::to_string(c.mNodes.size()));
    for (std::size_t a = 0; a < c.mNodes.size(); ++a)
      for (std::size_t b = a + 1; b < c.mNodes.size(); ++b)
        if (c.mNodes[a] == c.mNodes[b]) throw ConfigError("m_nodes repeats " + c.mNodes[a].name());
  }
  if (c.quarticSource != "inline" && c.quarticSource.rfind(kCorpusPrefix, 0) != 0)
    throw ConfigError("quartic source must be 'inline' or 'corpus:<name>', got '" + c.quarticSource + "'");
  if (c.quarticSource == "inline" && c.quarticInline.empty()) throw ConfigError("inline quartic has no text");
}

inline RunConfig parseConfig(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  RunConfig c = paperDefaults();
  try {
    if (auto roots = tree.get_optional<std::string>("curve.roots")) {
      auto parts = detail::splitList(*roots);
      if (parts.size() != 6) throw ConfigError("curve.roots needs six values, got " + std::to_string(parts.size()));
      for (std::size_t i = 0; i < 6; ++i) c.roots[i] = Rational(parts[i]);
    }
    if (auto p = tree.get_optional<long long>("curve.prime")) {
      if (*p < 0 || *p > 0xFFFFFFFFLL) throw ConfigError("curve.prime out of range");
      c.prime = static_cast<std::uint32_t>(*p);
    }
    if (auto s = tree.get_optional<std::string>("quartic.source")) c.quarticSource = *s;
    if (auto t = tree.get_optional<std::string>("quartic.text")) c.quarticInline = *t;
    const auto nodes = tree.get_optional<std::string>("ulrich.m_nodes");
    const auto cls = tree.get_optional<std::string>("ulrich.m_class");
    if (nodes && cls) throw ConfigError("give either ulrich.m_nodes or ulrich.m_class, not both");
    if (nodes) {
      c.mNodes.clear();
      for (const auto& s : detail::splitList(*nodes)) c.mNodes.push_back(NodeLabel::parse(s));
    }
    if (cls) c.mClass = *cls;
    if (auto o = tree.get_optional<std::string>("output.path")) c.outputPath = *o;
  } catch (const ConfigError&) {
    throw;
  } catch (const pt::ptree_error& e) {
    throw ConfigError(std::string("config value: ") + e.what());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config value: ") + e.what());
  }
  validate(c);
  return c;
}

inline RunConfig loadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return parseConfig(in);
}

inline DivisorClass mRecipe(const RunConfig& c) {
  return c.mClass ? parseDivisorClass(*c.mClass) : threeLMinusNodes(c.mNodes);
}

inline std::string quarticText(const RunConfig& c) {
  if (c.quarticSource == "inline") return c.quarticInline;
  const std::string name = c.quarticSource.substr(std::string(kCorpusPrefix).size());
  if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos)
    throw ConfigError("bad corpus name '" + name + "'");
  return readFile(corpusDir() / (name + ".txt"));
}

}  // namespace ulrich::app
