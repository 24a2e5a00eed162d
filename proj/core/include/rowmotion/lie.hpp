#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rowmotion/numeric.hpp"

namespace rowmotion {

/// Illegal (family, rank, weight) triple or other catalog misuse.
class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// E6 and E7 share the family tag E and are told apart by n.
enum class Family { A, B, C, D, E };

char family_letter(Family f);
Family parse_family(const std::string& s);

struct LieType {
  Family family = Family::A;
  int n = 1;
  int weight = 1;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// "A7 w3", "E6 w6" and so on.
std::string to_string(const LieType& lie);

/// Only minuscule weights are legal; see `legal_lie_types`.
bool is_legal(const LieType& lie);
void require_legal(const LieType& lie);

/// Every legal triple with rank between 1 and max_rank, in catalog order.
std::vector<LieType> legal_lie_types(int max_rank);

int coxeter_number(const LieType& lie);

/// Root-system data with Bourbaki numbering. Root labels are 1-based in
/// every accessor.
class CartanData {
 public:
  CartanData(Family family, int n);

  int rank() const noexcept { return n_; }
  Family family() const noexcept { return family_; }

  /// <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return a_.at(i - 1).at(j - 1); }
  const Rational& inverse_cartan(int i, int j) const { return inv_.at(i - 1).at(j - 1); }
  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }
  std::vector<int> neighbors(int i) const;

  /// alpha_i -> -w0(alpha_i), as an index.
  int minus_w0(int i) const { return w0_.at(i - 1); }

  /// 2-coloring of the Dynkin tree, alpha_1 in part 1. Values are 1 or 2.
  std::vector<int> bipartition() const;

 private:
  Family family_;
  int n_;
  std::vector<std::vector<int>> a_;
  std::vector<std::vector<Rational>> inv_;
  std::vector<int> w0_;
};

/// Coweight pairings for the fundamental weight of a legal LieType.
struct PairingData {
  CartanData cartan;
  int h = 0;
  std::vector<Rational> lambda;           // <varpi_alpha^vee, lambda>, index alpha-1
  std::vector<Rational> minus_w0_lambda;  // <varpi_alpha^vee, -w0 lambda>
  std::vector<Integer> b_exponent;        // h * lambda pairing
  std::vector<Integer> a_exponent;        // h * (-w0 lambda) pairing
};

PairingData pairing_data(const LieType& lie);

}  // namespace rowmotion
