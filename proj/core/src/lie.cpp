#include "rowmotion/lie.hpp"

#include <utility>

namespace rowmotion {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw CatalogError("unknown Lie family '" + s + "'");
}

std::string to_string(const LieType& lie) {
  return std::string(1, family_letter(lie.family)) + std::to_string(lie.n) + " w" +
         std::to_string(lie.weight);
}

bool is_legal(const LieType& lie) {
  const int n = lie.n, r = lie.weight;
  switch (lie.family) {
    case Family::A: return n >= 1 && r >= 1 && r <= n;
    case Family::B: return n >= 2 && r == n;
    case Family::C: return n >= 2 && r == 1;
    case Family::D: return n >= 3 && (r == 1 || r == n - 1 || r == n);
    case Family::E: return (n == 6 && (r == 1 || r == 6)) || (n == 7 && r == 7);
  }
  return false;
}

void require_legal(const LieType& lie) {
  if (!is_legal(lie))
    throw CatalogError(to_string(lie) +
                       " is not a minuscule weight (legal: A_n any r; B_n r=n; C_n r=1; "
                       "D_n r in {1,n-1,n}; E6 r in {1,6}; E7 r=7)");
}

std::vector<LieType> legal_lie_types(int max_rank) {
  std::vector<LieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = 1; n <= max_rank; ++n)
      for (int r = 1; r <= n; ++r)
        if (is_legal({f, n, r})) out.push_back({f, n, r});
  }
  if (max_rank >= 6) {
    out.push_back({Family::E, 6, 1});
    out.push_back({Family::E, 6, 6});
  }
  if (max_rank >= 7) out.push_back({Family::E, 7, 7});
  return out;
}

int coxeter_number(const LieType& lie) {
  switch (lie.family) {
    case Family::A: return lie.n + 1;
    case Family::B:
    case Family::C: return 2 * lie.n;
    case Family::D: return 2 * lie.n - 2;
    case Family::E: return lie.n == 6 ? 12 : (lie.n == 7 ? 18 : 30);
  }
  return 0;
}

namespace {

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw ArithmeticError("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    Rational d = m[col][col];
    for (auto& x : m[col]) x /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

CartanData::CartanData(Family family, int n) : family_(family), n_(n) {
  if (n < 1) throw CatalogError("rank must be positive");
  if (family == Family::E && n != 6 && n != 7 && n != 8)
    throw CatalogError("type E needs rank 6, 7 or 8");
  a_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto set = [&](int i, int j, int v) { a_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v; };
  auto link = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  for (int i = 1; i <= n; ++i) set(i, i, 2);

  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) {  // alpha_n short
        set(n - 1, n, -1);
        set(n, n - 1, -2);
      }
      break;
    case Family::C:
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) {  // alpha_n long
        set(n - 1, n, -2);
        set(n, n - 1, -1);
      }
      break;
    case Family::D:
      if (n < 3) throw CatalogError("type D needs rank >= 3");
      for (int i = 1; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
  }
  inv_ = invert(a_);

  w0_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w0_[static_cast<std::size_t>(i - 1)] = i;
  switch (family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) w0_[static_cast<std::size_t>(i - 1)] = n + 1 - i;
      break;
    case Family::D:
      if (n % 2 == 1) std::swap(w0_[static_cast<std::size_t>(n - 2)], w0_[static_cast<std::size_t>(n - 1)]);
      break;
    case Family::E:
      if (n == 6) {
        std::swap(w0_[0], w0_[5]);
        std::swap(w0_[2], w0_[4]);
      }
      break;
    default: break;
  }
}

std::vector<int> CartanData::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

std::vector<int> CartanData::bipartition() const {
  std::vector<int> part(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{1};
  part[0] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : neighbors(i)) {
      auto& pj = part[static_cast<std::size_t>(j - 1)];
      const int want = 3 - part[static_cast<std::size_t>(i - 1)];
      if (pj == 0) {
        pj = want;
        stack.push_back(j);
      } else if (pj != want) {
        throw CatalogError("Dynkin diagram is not bipartite");
      }
    }
  }
  return part;
}

PairingData pairing_data(const LieType& lie) {
  require_legal(lie);
  PairingData out{CartanData(lie.family, lie.n), coxeter_number(lie), {}, {}, {}, {}};
  const int r = lie.weight;
  const int r_dual = out.cartan.minus_w0(r);
  for (int alpha = 1; alpha <= lie.n; ++alpha) {
    out.lambda.push_back(out.cartan.inverse_cartan(alpha, r));
    out.minus_w0_lambda.push_back(out.cartan.inverse_cartan(alpha, r_dual));
  }
  for (std::size_t i = 0; i < out.lambda.size(); ++i) {
    Rational b = out.lambda[i] * out.h;
    Rational a = out.minus_w0_lambda[i] * out.h;
    if (b.get_den() != 1 || a.get_den() != 1 || b < 0 || a < 0)
      throw ArithmeticError("homomesy exponent is not a nonnegative integer");
    out.b_exponent.push_back(b.get_num());
    out.a_exponent.push_back(a.get_num());
  }
  return out;
}

}  // namespace rowmotion
