#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spincount/caps.hpp"
#include "spincount/function.hpp"

namespace spincount {

struct Constraint {
  std::string function;
  std::vector<std::string> scope;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct NamedTable {
  std::string name;
  SignedTable table;
};

/// Variables, a function registry and constraints over them.
class CspInstance {
 public:
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<NamedTable>& functions() const { return functions_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  bool has_variable(const std::string& name) const;
  bool has_function(const std::string& name) const;
  int variable_index(const std::string& name) const;

  /// No-op if the variable already exists.
  void add_variable(const std::string& name);
  /// Replaces nothing: a second definition under the same name must be identical.
  void add_function(const std::string& name, const SignedTable& table);
  /// Declares unseen scope variables in order of appearance.
  void add_constraint(const std::string& function, const std::vector<std::string>& scope);

  const SignedTable& table(const std::string& name) const;
  /// The named function, checked to be nonnegative.
  PBFunction as_pb(const std::string& name) const;
  bool is_nonnegative() const;

  /// Number of scope slots each variable occupies, in variable order.
  std::vector<int> degrees() const;
  /// A name not yet used by any variable: base, or base with a numeric suffix.
  std::string fresh_variable(const std::string& base) const;
  std::string fresh_function(const std::string& base) const;

  friend bool operator==(const CspInstance& a, const CspInstance& b);

 private:
  std::vector<std::string> variables_;
  std::vector<NamedTable> functions_;
  std::vector<Constraint> constraints_;
};

/// Line format: `fun <name> <arity> <values>`, `con <name> <vars>`,
/// `var <vars>` for explicit declarations, `#` comments.
CspInstance parse_instance(std::string_view text);
std::string serialize(const CspInstance& inst);

/// Exhaustive sum over all assignments; signed tables allowed.
Rational z_exact(const CspInstance& inst, const Caps& caps = default_caps());

/// Polynomial-time evaluation when every function is product type.
Rational z_product_type(const CspInstance& inst);

/// Every variable occurs in exactly two scope slots.
bool is_holant(const CspInstance& inst);

struct HolantInstance {
  CspInstance instance;
};

/// Checks the two-occurrence property.
HolantInstance as_holant(const CspInstance& inst);

/// Rewrites variables of degree other than 2 with EQ3 junctions; Z is unchanged.
HolantInstance to_holant(const CspInstance& inst);

struct Matrix2 {
  Rational a, b, c, d;  // [[a, b], [c, d]]
};

/// Replaces every function f by (M x ... x M) f. Requires M M^T = c I with c != 0.
HolantInstance holographic_transform(const HolantInstance& h, const Matrix2& m);

/// Sum over variable pairs {u, v} of Z with u and v each split by a NEQ.
Rational near_assignment_total(const HolantInstance& h, const Caps& caps = default_caps());

}  // namespace spincount
