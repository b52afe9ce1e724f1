#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nsalpha/laurent_matrix.hpp"

namespace nsalpha {

/// Presentation of a virtually cyclic group G as an extension
///   1 -> Z -> G -> Q -> 1
/// with |Q| = n.  Q is given by its multiplication table, the conjugation
/// action of Q on Z by signs, and a normalized 2-cocycle c: Q x Q -> Z.
/// Elements of G are pairs (k, q) with k in Z and q in Q, multiplying as
///   (k, q)(k', q') = (k + sign(q)*k' + c(q, q'), q*q').
/// Q indices are 0-based internally; index 0 is the identity.
struct VCGroupSpec {
  int n = 1;
  std::vector<std::vector<int>> q_mult;  // n x n, values in 0..n-1
  std::vector<int> action;               // +1 or -1 per Q element
  std::vector<std::vector<long>> cocycle;

  int mul_q(int a, int b) const { return q_mult[a][b]; }
  int inv_q(int a) const;

  static VCGroupSpec Z();
  static VCGroupSpec Dinf();
  static VCGroupSpec ZxZ2();
  static VCGroupSpec ZxZ3();
  /// Named spec lookup ("Z", "Dinf", "ZxZ2", "ZxZ3"); throws on unknown name.
  static VCGroupSpec named(const std::string& name);

  nlohmann::json to_json() const;  // 1-based Q indices on the wire
  static VCGroupSpec from_json(const nlohmann::json& j);
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks the group axioms for Q, that the action is a homomorphism to {+-1},
/// the cocycle identity, cocycle normalization, and associativity of the
/// element product on a window of k values.
ValidationReport validate_group(const VCGroupSpec& spec);

/// Throws std::invalid_argument with the violation list when invalid.
void require_valid_group(const VCGroupSpec& spec);

struct GroupElement {
  long k = 0;
  int q = 0;
  bool operator==(const GroupElement& o) const { return k == o.k && q == o.q; }
  bool operator<(const GroupElement& o) const {
    return k != o.k ? k < o.k : q < o.q;
  }
};

GroupElement group_mul(const VCGroupSpec& spec, GroupElement a, GroupElement b);
GroupElement group_inv(const VCGroupSpec& spec, GroupElement a);

/// Element of Q(i)[G]: finite support map G -> Q(i).
class GroupRingElement {
 public:
  GroupRingElement() = default;

  bool is_zero() const { return coeffs_.empty(); }
  GaussianRational coeff(GroupElement g) const;
  void set(GroupElement g, GaussianRational c);
  void add(const VCGroupSpec&, GroupElement g, const GaussianRational& c);
  const std::map<GroupElement, GaussianRational>& terms() const { return coeffs_; }

 private:
  std::map<GroupElement, GaussianRational> coeffs_;
};

/// Dense r x s matrix over Q(i)[G].
class GroupRingMatrix {
 public:
  GroupRingMatrix(VCGroupSpec spec, int rows, int cols);

  const VCGroupSpec& spec() const { return spec_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GroupRingElement& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const GroupRingElement& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  /// Embed a Laurent matrix via z -> (1, e); requires the spec of G and uses
  /// only the Z part.
  static GroupRingMatrix from_laurent(const VCGroupSpec& spec, const LaurentMatrix& A);

  nlohmann::json to_json() const;
  static GroupRingMatrix from_json(VCGroupSpec spec, const nlohmann::json& j);

 private:
  VCGroupSpec spec_;
  int rows_, cols_;
  std::vector<GroupRingElement> entries_;
};

/// Restriction along Z <= G with coset representatives g_u = (0, u):
/// an r x s matrix over Q(i)[G] becomes an rn x sn matrix over Q(i)[z, z^-1].
/// Block (p, q), position (u, v), exponent m holds the coefficient of
/// g_u^-1 (m, e) g_v in the (p, q) entry.
LaurentMatrix restrict_to_Z(const GroupRingMatrix& A);

/// The x + t example over D_infinity = Z x| Z/2 (t the order-2 generator).
GroupRingMatrix dinf_xt();

}  // namespace nsalpha
