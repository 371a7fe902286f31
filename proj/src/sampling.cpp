#include "hawkdove/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hawkdove {
namespace {

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  const int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("SampleDistribution: bad integer '" + s + "'");
  return v;
}

Real parse_real(const std::string& s) {
  std::size_t pos = 0;
  const Real v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("SampleDistribution: bad number '" + s + "'");
  return v;
}

}  // namespace

SampleDistribution::SampleDistribution(const std::map<int, Real>& atoms) {
  if (atoms.empty()) throw std::invalid_argument("SampleDistribution: no atoms");
  Real total = 0.0;
  atoms_.reserve(atoms.size());
  for (const auto& [k, mass] : atoms) {
    if (k < 1) throw std::invalid_argument("SampleDistribution: sample sizes must be >= 1");
    if (!(mass > 0.0)) throw std::invalid_argument("SampleDistribution: masses must be > 0");
    atoms_.push_back({k, mass});
    total += mass;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("SampleDistribution: masses must sum to 1 (got " +
                                std::to_string(total) + ")");
}

SampleDistribution SampleDistribution::degenerate(int k) {
  return SampleDistribution({{k, 1.0}});
}

SampleDistribution SampleDistribution::uniform(int k) {
  std::map<int, Real> atoms;
  for (int i = 1; i <= k; ++i) atoms[i] = 1.0 / k;
  return SampleDistribution(atoms);
}

SampleDistribution SampleDistribution::biased1(Real q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("SampleDistribution: biased1 share must be in (0,1)");
  std::map<int, Real> atoms;
  atoms[1] = (1.0 - q) / 10.0 + q;
  for (int k = 2; k <= 10; ++k) atoms[k] = (1.0 - q) / 10.0;
  return SampleDistribution(atoms);
}

SampleDistribution SampleDistribution::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    if (head == "degenerate") return degenerate(parse_int(text.substr(colon + 1)));
    if (head == "uniform") return uniform(parse_int(text.substr(colon + 1)));
    if (head == "biased1") return biased1(parse_real(text.substr(colon + 1)));
  }
  std::map<int, Real> atoms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto sep = item.find(':');
    if (sep == std::string::npos)
      throw std::invalid_argument("SampleDistribution: expected 'k:mass' in '" + item + "'");
    const int k = parse_int(item.substr(0, sep));
    const Real mass = parse_real(item.substr(sep + 1));
    if (atoms.count(k)) throw std::invalid_argument("SampleDistribution: duplicate size");
    atoms[k] = mass;
  }
  return SampleDistribution(atoms);
}

Real SampleDistribution::mass(int k) const {
  for (const auto& a : atoms_)
    if (a.k == k) return a.mass;
  return 0.0;
}

Real SampleDistribution::mean() const {
  Real m = 0.0;
  for (const auto& a : atoms_) m += a.mass * a.k;
  return m;
}

std::string SampleDistribution::to_string() const {
  std::ostringstream out;
  out.precision(12);
  bool first = true;
  for (const auto& a : atoms_) {
    if (!first) out << ",";
    out << a.k << ":" << a.mass;
    first = false;
  }
  return out.str();
}

}  // namespace hawkdove
