#include "translim/bonding.hpp"

#include <stdexcept>

namespace translim {

namespace {

void require_member(const Point& x, const Ordinal& a, const char* who) {
  if (!is_member(x, a)) {
    throw std::invalid_argument(std::string(who) + ": point " + x.str() +
                                " has index " + x.index().str() + ", not " +
                                a.str());
  }
}

}  // namespace

MapSpec::MapSpec(Ordinal source, Ordinal target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (compare(target_, source_) == Comparison::GT) {
    throw std::invalid_argument("bonding map target " + target_.str() +
                                " exceeds source " + source_.str());
  }
}

Point project(const MapSpec& spec, const Point& x) {
  require_member(x, spec.source(), "project");
  const std::vector<Ordinal>& e = x.entries();
  const Ordinal& target = spec.target();

  // Case I: target <= a1.
  if (compare(target, e[0]) != Comparison::GT) {
    return Point::make({target, e[1]});
  }

  // Case II: splice the target in at the least pair position whose odd
  // entry reaches it.  One exists because target <= index = a(2n-1).
  const std::size_t n = x.length();
  for (std::size_t j = 1; j < n; ++j) {
    if (compare(target, e[2 * j]) != Comparison::GT) {
      std::vector<Ordinal> out(e.begin(), e.begin() + 2 * j);
      out.push_back(target);
      out.push_back(e[2 * j + 1]);
      return Point::make(std::move(out));
    }
  }
  throw std::logic_error("project: no splice position despite target <= index");
}

Point section(const Ordinal& alpha, const Ordinal& beta, const Point& x,
              const std::optional<Ordinal>& gamma) {
  require_member(x, alpha, "section");
  if (compare(beta, alpha) == Comparison::LT) {
    throw std::invalid_argument("section: beta " + beta.str() +
                                " is below alpha " + alpha.str());
  }
  const Ordinal witness = gamma.value_or(successor(beta));
  if (compare(witness, beta) != Comparison::GT) {
    throw std::invalid_argument("section: gamma " + witness.str() +
                                " must exceed beta " + beta.str());
  }
  if (compare(beta, alpha) == Comparison::EQ) return x;

  std::vector<Ordinal> lifted = x.entries();
  lifted.push_back(beta);
  lifted.push_back(witness);
  return Point::make(std::move(lifted));
}

bool check_identity(const Ordinal& alpha, const Point& x) {
  require_member(x, alpha, "check_identity");
  return project(MapSpec(alpha, alpha), x) == x;
}

bool check_composition(const Ordinal& alpha, const Ordinal& beta,
                       const Ordinal& gamma, const Point& x) {
  if (compare(alpha, beta) == Comparison::GT ||
      compare(beta, gamma) == Comparison::GT) {
    throw std::invalid_argument("check_composition: need alpha <= beta <= gamma");
  }
  require_member(x, gamma, "check_composition");
  const Point via = project(MapSpec(beta, alpha), project(MapSpec(gamma, beta), x));
  const Point direct = project(MapSpec(gamma, alpha), x);
  return via == direct;
}

}  // namespace translim
