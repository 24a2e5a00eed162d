#include "rowmotion/birational.hpp"

namespace rowmotion {

namespace {

void require_symbolic_size(const Poset& p) {
  if (p.hat_size() > kMaxVars)
    throw std::invalid_argument("symbolic mode supports at most " + std::to_string(kMaxVars - 2) + " elements");
}

}  // namespace

VarTable symbolic_vars(const Poset& p, const std::string& prefix) {
  require_symbolic_size(p);
  std::vector<std::string> names;
  for (int v = 0; v < p.size(); ++v) names.push_back(prefix + std::to_string(v));
  names.push_back("A");
  names.push_back("B");
  return VarTable(std::move(names));
}

Labeling<RatFun> symbolic_labeling(const Poset& p) {
  require_symbolic_size(p);
  Labeling<RatFun> F;
  for (int i = 0; i < p.hat_size(); ++i) F.push_back(RatFun::variable(i));
  return F;
}

std::vector<RatFun> x_in_terms_of_z(const Poset& p) {
  require_symbolic_size(p);
  std::vector<RatFun> X(static_cast<std::size_t>(p.hat_size()));
  for (int v : p.linear_extension()) {
    auto lo = p.lower_covers(v);
    if (lo.empty()) {
      X[static_cast<std::size_t>(v)] = RatFun::variable(v);
      continue;
    }
    RatFun s;
    for (int w : lo) s += X[static_cast<std::size_t>(w)];
    X[static_cast<std::size_t>(v)] = RatFun::variable(v) * s;
  }
  X[static_cast<std::size_t>(p.top())] = RatFun::variable(p.top());
  X[static_cast<std::size_t>(p.bottom())] = RatFun::variable(p.bottom());
  return X;
}

std::vector<RatFun> z_in_terms_of_x(const Poset& p) {
  require_symbolic_size(p);
  std::vector<RatFun> Z(static_cast<std::size_t>(p.hat_size()));
  for (int v = 0; v < p.size(); ++v) {
    auto lo = p.lower_covers(v);
    if (lo.empty()) {
      Z[static_cast<std::size_t>(v)] = RatFun::variable(v);
      continue;
    }
    RatFun s;
    for (int w : lo) s += RatFun::variable(w);
    Z[static_cast<std::size_t>(v)] = RatFun::variable(v) / s;
  }
  Z[static_cast<std::size_t>(p.top())] = RatFun::variable(p.top());
  Z[static_cast<std::size_t>(p.bottom())] = RatFun::variable(p.bottom());
  return Z;
}

Labeling<RatFun> symbolic_labeling_z(const Poset& p) { return x_in_terms_of_z(p); }

}  // namespace rowmotion
